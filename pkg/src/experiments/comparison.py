""" mSGD against SGD on imputed matrices.

Every trial draws a corpus of rows uniformly from A and gives each corpus row one frozen mask. mSGD iterates over the
masked corpus; each baseline runs classical SGD over the corpus with the missing entries imputed. All four methods of
a trial visit the same corpus rows in the same order.
"""

import numpy as np

from src.experiments.imputation import ImputationStrategy, impute
from src.experiments.trials import AggregateTrace
from src.solver.engine import TrialTrace, iterate_lanes
from src.utils.exceptions import ConfigError
from src.utils.logger import get_logger
from src.utils.seeding import CORPUS_STREAM, FROZEN_STREAM, ROW_STREAM, derive_seed, stream
from src.utils.timer import timer

logger = get_logger(__name__)

MSGD = "msgd"
METHOD_NAMES = (MSGD,) + tuple(strategy.value for strategy in ImputationStrategy)


def masked_corpus(problem, p, size, seed):
    """ Rows drawn uniformly from A with one frozen mask each.

        Args:
            problem (Problem): Problem.
            p (float): Observation probability.
            size (int): Number of corpus rows.
            seed (int): Trial seed.

        Returns:
            tuple: Corpus rows (size, n), their right hand sides and their masks.
    """
    m, n = problem.A.shape
    rows = stream(seed, CORPUS_STREAM).integers(m, size=size)
    mask = stream(seed, FROZEN_STREAM).random((size, n)) < p
    return problem.A[rows], problem.b[rows], mask


@timer
def compare_imputation(problem, p, schedule, domain, iterations, trial_count, root_seed, record_every=1,
                       corpus_size=None, x0=None, progress=False, config_digest=""):
    """ Run mSGD and the three imputation baselines on matched masked corpora.

        Args:
            problem (Problem): Problem with a known x_star.
            p (float): Observation probability in (0, 1].
            schedule (Schedule): Step size regime shared by all methods.
            domain (ProjectionDomain): Projection ball.
            iterations (int): Iterations per trial.
            trial_count (int): Number of trials.
            root_seed (int): Root seed.
            record_every (int): Checkpoint spacing.
            corpus_size (int): Corpus rows per trial, ``iterations`` if None.
            x0 (array): Starting point, zero vector if None.
            progress (bool): Show a progress bar.
            config_digest (str): Digest stored in the traces.

        Returns:
            dict: ``msgd``, ``zero``, ``row_mean`` and ``col_mean`` mapped to their AggregateTrace.
    """
    if not 0.0 < p <= 1.0:
        raise ConfigError("observation probability p must lie in (0, 1], got {}".format(p))
    if trial_count < 1:
        raise ConfigError("trial_count must be at least 1, got {}".format(trial_count))
    if problem.x_star is None:
        raise ConfigError("problem has no reference solution x_star; errors cannot be measured")
    size = iterations if corpus_size is None else int(corpus_size)
    if size < 1:
        raise ConfigError("corpus_size must be at least 1, got {}".format(size))
    n = problem.A.shape[1]
    x0 = np.zeros(n) if x0 is None else np.asarray(x0, dtype=float)
    scales = np.array([p] + [1.0] * len(ImputationStrategy))
    traces = {name: [] for name in METHOD_NAMES}
    empty_total = 0
    for trial in range(trial_count):
        seed = derive_seed(root_seed, trial)
        rows, rhs, mask = masked_corpus(problem, p, size, seed)
        matrices = [np.where(mask, rows, 0.0)]
        for strategy in ImputationStrategy:
            imputed = impute(rows, mask, strategy)
            matrices.append(imputed.values)
            empty_total += imputed.empty_count
        row_stream = stream(seed, ROW_STREAM)

        def draw_rows(length):
            return np.broadcast_to(row_stream.integers(size, size=length), (len(METHOD_NAMES), length))

        recorded, sq_errors, norms, final = iterate_lanes(
            np.stack(matrices), rhs, scales, draw_rows, schedule, domain, x0, problem.x_star, iterations,
            record_every=record_every, progress=progress, desc="trial {}".format(trial))
        for lane, name in enumerate(METHOD_NAMES):
            traces[name].append(TrialTrace(seed=seed, iterations=recorded, sq_errors=sq_errors[lane],
                                           iterate_norms=norms[lane], config_digest=config_digest,
                                           final_x=final[lane]))
    if empty_total:
        logger.warning("imputation left %d empty rows or columns filled with 0 over %d trials", empty_total,
                       trial_count)
    results = {name: AggregateTrace.from_traces(method_traces, config_digest=config_digest)
               for name, method_traces in traces.items()}
    logger.info("final mean squared errors: %s",
                ", ".join("{}={:.4g}".format(name, trace.final_mean) for name, trace in results.items()))
    return results
