"""
.. automodule:: src.solver.schedules
    :members:
.. automodule:: src.solver.projection
    :members:
.. automodule:: src.solver.gradients
    :members:
.. automodule:: src.solver.engine
    :members:
"""
from .schedules import Schedule, Fixed, InverseDecay, GeometricStaged, step_size
from .projection import ProjectionDomain, project
from .gradients import msgd_gradient, sgd_gradient, naive_gradient, naive_scaled_gradient
from .engine import SolverState, TrialTrace, init_state, step, checkpoint_iterations, iterate_lanes, run_batch, run
