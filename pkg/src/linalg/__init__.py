"""
.. automodule:: src.linalg.dense
    :members:
"""
from .dense import LsqSolution, as_matrix, as_vector, row_norm_sq, row_norms_sq, sigma_min_sq, least_squares, \
    nullspace_residual, objective, full_gradient, CONSISTENCY_RTOL
