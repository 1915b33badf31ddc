"""
.. automodule:: src.experiments.problem
    :members:
.. automodule:: src.experiments.generators
    :members:
.. automodule:: src.experiments.imputation
    :members:
.. automodule:: src.experiments.trials
    :members:
.. automodule:: src.experiments.comparison
    :members:
.. automodule:: src.experiments.presets
    :members:
"""
from src.solver.engine import TrialTrace
from .problem import Problem, solve_problem
from .generators import gen_gaussian_consistent, gen_gaussian_inconsistent, gen_correlated_consistent
from .imputation import ImputationStrategy, Imputed, impute
from .trials import AggregateTrace, run_trials, sweep_p, TRACE_COLUMNS
from .comparison import compare_imputation, masked_corpus, METHOD_NAMES
from .presets import PRESETS, preset_shape
