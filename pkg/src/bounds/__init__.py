"""
.. automodule:: src.bounds.constants
    :members:
.. automodule:: src.bounds.reports
    :members:
"""
from .constants import compute_mu, compute_lg, instance_lipschitz, compute_g, compute_g_lemma_form, compute_g_star
from .reports import BoundsReport, StepPlan, fixed_step_report, theorem1_bound, theorem2_bound, lemma2_bound, \
    corollary_plan, remark_plan
