"""
.. automodule:: src.verification.oracles
    :members:
.. automodule:: src.verification.suite
    :members:
"""
from .oracles import enumerate_expected_update, unbiasedness_gap, naive_bias_gaps, lipschitz_ratios, second_moment, \
    cocoercivity_gap, min_cocoercivity_gap
from .suite import Check, VerificationReport, run_verification, tiny_problems, bias_instance
