""" The iteration loop: uniform row choice, masked row, update step, projection.

Several independent runs ("lanes") advance together. Each lane owns its generator streams, so the iterates of a lane
do not depend on how many other lanes share the loop.
"""

from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from src.masking.masks import MaskSampler, sample_masked_row
from src.solver.gradients import msgd_gradient, sgd_gradient
from src.solver.projection import project
from src.solver.schedules import step_size
from src.utils.exceptions import ConfigError
from src.utils.hashing import config_digest
from src.utils.logger import get_logger
from src.utils.seeding import ROW_STREAM, stream

logger = get_logger(__name__)

# rows, masks and step sizes are drawn this many iterations at a time
BLOCK_SIZE = 4096
METHODS = ("msgd", "sgd")


@dataclass
class SolverState:
    """ State of a single run between iterations.

    Attributes:
        x (array): Current iterate, inside the projection domain.
        k (int): Number of iterations taken.
        rng (numpy.random.Generator): Row choice stream.
        sampler (MaskSampler): Mask source of the run.
    """
    x: np.ndarray
    k: int
    rng: np.random.Generator
    sampler: MaskSampler


def init_state(x0, seed, sampler):
    """ Fresh state at iteration 0 with the row stream of ``seed``.
    """
    return SolverState(x=np.array(x0, dtype=float), k=0, rng=stream(seed, ROW_STREAM), sampler=sampler)


def step(state, A, b, schedule, domain, method="msgd"):
    """ One iteration of the loop.

        Args:
            state (SolverState): State before the iteration.
            A (array): Full matrix.
            b (array): Right hand side.
            schedule (Schedule): Step size regime.
            domain (ProjectionDomain): Ball the iterates are projected onto.
            method (str): ``msgd`` or ``sgd`` (classical SGD on the full rows).

        Returns:
            SolverState: State after the iteration.
    """
    A = np.asarray(A, dtype=float)
    i = int(state.rng.integers(A.shape[0]))
    k = state.k + 1
    if method == "sgd":
        direction = sgd_gradient(A[i], b[i], state.x)
    else:
        model = state.sampler.model
        direction = msgd_gradient(sample_masked_row(A, i, model, state.sampler), b[i], state.x, model.p)
    x = project(state.x - step_size(schedule, k) * direction, domain)
    return SolverState(x=x, k=k, rng=state.rng, sampler=state.sampler)


@dataclass
class TrialTrace:
    """ Squared error to x_star of a single run at its checkpoints.

    Attributes:
        seed (int): Run seed.
        iterations (array): Checkpoint iterations, strictly increasing, starting at 0.
        sq_errors (array): ||x_k - x_star||^2 at the checkpoints.
        iterate_norms (array): ||x_k|| at the checkpoints.
        config_digest (str): Digest of the configuration that produced the run.
        final_x (array): Last iterate.
    """
    seed: int
    iterations: np.ndarray
    sq_errors: np.ndarray
    iterate_norms: np.ndarray
    config_digest: str
    final_x: np.ndarray = field(repr=False)

    @property
    def checkpoints(self):
        """ List of (iteration, sq_error) pairs.
        """
        return [(int(k), float(error)) for k, error in zip(self.iterations, self.sq_errors)]


def checkpoint_iterations(iterations, record_every):
    """ Iterations at which errors are recorded: 0, every ``record_every`` and the last one.
    """
    if record_every < 1:
        raise ConfigError("record_every must be at least 1, got {}".format(record_every))
    return np.unique(np.append(np.arange(0, iterations + 1, record_every), iterations))


def _unit_scale_sgd(values, b_i, x, scale):
    return sgd_gradient(values, b_i, x)


def iterate_lanes(matrices, rhs, scales, draw_rows, schedule, domain, x0, x_star, iterations, record_every=1,
                  draw_masks=None, method="msgd", progress=False, desc="iterations"):
    """ Advance several lanes of the loop together.

        Args:
            matrices (array): Rows to draw from, shape (N, n) shared by all lanes or (lanes, N, n).
            rhs (array): Right hand side entries of the N rows.
            scales (array): Observation probability used in the update of every lane; 1 gives the SGD step.
            draw_rows (function): Maps a block length to row indices of shape (lanes, length).
            schedule (Schedule): Step size regime.
            domain (ProjectionDomain): Ball the iterates are projected onto.
            x0 (array): Starting point of every lane.
            x_star (array): Reference solution the errors are measured against.
            iterations (int): Number of iterations.
            record_every (int): Checkpoint spacing.
            draw_masks (function): Maps row indices to observation masks of shape (lanes, length, n), or None.
            method (str): ``msgd`` or ``sgd``.
            progress (bool): Show a progress bar.
            desc (str): Progress bar label.

        Returns:
            tuple: Checkpoint iterations, squared errors (lanes, checkpoints), iterate norms (lanes, checkpoints)
            and final iterates (lanes, n).
    """
    if iterations < 1:
        raise ConfigError("iterations must be at least 1, got {}".format(iterations))
    if method not in METHODS:
        raise ConfigError("method must be one of {}, got {!r}".format(METHODS, method))
    if not domain.contains(x0):
        raise ConfigError("starting point with norm {:g} lies outside the projection ball of radius {:g}".format(
            np.linalg.norm(x0), domain.radius))
    direction = msgd_gradient if method == "msgd" else _unit_scale_sgd
    scales = np.asarray(scales, dtype=float)
    lanes = scales.shape[0]
    shared = np.ndim(matrices) == 2
    lane_index = np.arange(lanes)[:, None]

    recorded = checkpoint_iterations(iterations, record_every)
    sq_errors = np.empty((lanes, recorded.shape[0]))
    norms = np.empty((lanes, recorded.shape[0]))
    x = np.tile(np.asarray(x0, dtype=float), (lanes, 1))

    def record(column):
        sq_errors[:, column] = np.sum((x - x_star) ** 2, axis=1)
        norms[:, column] = np.linalg.norm(x, axis=1)

    record(0)
    column = 1
    k = 0
    with tqdm(total=iterations, desc=desc, disable=not progress) as bar:
        while k < iterations:
            length = min(BLOCK_SIZE, iterations - k)
            rows = draw_rows(length)
            values = matrices[rows] if shared else matrices[lane_index, rows]
            if draw_masks is not None:
                values = np.where(draw_masks(rows), values, 0.0)
            targets = rhs[rows]
            alphas = schedule.steps(np.arange(k + 1, k + length + 1))
            for j in range(length):
                x = project(x - alphas[j] * direction(values[:, j], targets[:, j], x, scales), domain)
                k += 1
                if k == recorded[column]:
                    record(column)
                    column += 1
            bar.update(length)
    if not np.all(np.isfinite(sq_errors)):
        logger.warning("non-finite squared errors recorded")
    return recorded, sq_errors, norms, x


def run_batch(problem, model, schedule, domain, seeds, x0=None, iterations=1, record_every=1, method="msgd",
              progress=False, digest=None):
    """ Independent runs, one per seed, advanced together.

        Args:
            problem (Problem): Problem with a known x_star.
            model (MaskModel): Missingness model.
            schedule (Schedule): Step size regime.
            domain (ProjectionDomain): Projection ball.
            seeds (list): Run seeds.
            x0 (array): Starting point, zero vector if None.
            iterations (int): Number of iterations.
            record_every (int): Checkpoint spacing.
            method (str): ``msgd`` or ``sgd``.
            progress (bool): Show a progress bar.
            digest (str): Configuration digest stored in the traces; derived from the arguments if None.

        Returns:
            list: One TrialTrace per seed.
    """
    if getattr(problem, "x_star", None) is None:
        raise ConfigError("problem has no reference solution x_star; errors cannot be measured")
    A = np.asarray(problem.A, dtype=float)
    b = np.asarray(problem.b, dtype=float)
    m, n = A.shape
    x0 = np.zeros(n) if x0 is None else np.asarray(x0, dtype=float)
    seeds = [int(seed) for seed in seeds]
    row_streams = [stream(seed, ROW_STREAM) for seed in seeds]
    samplers = [MaskSampler(model, n, seed) for seed in seeds]

    def draw_rows(length):
        return np.stack([rng.integers(m, size=length) for rng in row_streams])

    def draw_masks(rows):
        return np.stack([sampler.block(lane_rows) for sampler, lane_rows in zip(samplers, rows)])

    masked = method == "msgd" and model.p < 1.0
    scales = np.full(len(seeds), model.p if method == "msgd" else 1.0)
    recorded, sq_errors, norms, final = iterate_lanes(
        A, b, scales, draw_rows, schedule, domain, x0, problem.x_star, iterations, record_every=record_every,
        draw_masks=draw_masks if masked else None, method=method, progress=progress, desc="{} p={:g}".format(
            method, model.p))
    traces = []
    for lane, seed in enumerate(seeds):
        lane_digest = digest
        if lane_digest is None:
            lane_digest = config_digest({
                "A": A, "b": b, "x0": x0, "p": model.p, "mask_mode": model.mode.value,
                "schedule": schedule.describe(), "radius": domain.radius, "iterations": iterations,
                "record_every": record_every, "method": method, "seed": seed})
        traces.append(TrialTrace(seed=seed, iterations=recorded, sq_errors=sq_errors[lane],
                                 iterate_norms=norms[lane], config_digest=lane_digest, final_x=final[lane]))
    return traces


def run(problem, model, schedule, domain, x0=None, iterations=1, seed=0, record_every=1, method="msgd",
        progress=False, digest=None):
    """ Single run of the loop.

        Args:
            problem (Problem): Problem with a known x_star.
            model (MaskModel): Missingness model.
            schedule (Schedule): Step size regime.
            domain (ProjectionDomain): Projection ball, must contain x0.
            x0 (array): Starting point, zero vector if None.
            iterations (int): Number of iterations, at least 1.
            seed (int): Run seed.
            record_every (int): Checkpoint spacing.
            method (str): ``msgd``, or ``sgd`` for classical SGD on the full rows.
            progress (bool): Show a progress bar.
            digest (str): Configuration digest stored in the trace.

        Returns:
            TrialTrace: Squared errors at the checkpoints.
    """
    return run_batch(problem, model, schedule, domain, [seed], x0=x0, iterations=iterations,
                     record_every=record_every, method=method, progress=progress, digest=digest)[0]
