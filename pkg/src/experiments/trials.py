""" Multi-trial runner and trace aggregation.
"""

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from src.masking.masks import MaskModel
from src.solver.engine import run_batch
from src.utils.exceptions import ConfigError
from src.utils.logger import get_logger
from src.utils.seeding import derive_seed
from src.utils.timer import timer

logger = get_logger(__name__)

TRACE_COLUMNS = ["iteration", "mean_sq_error", "trial_count"]


@dataclass
class AggregateTrace:
    """ Squared errors of several trials at aligned checkpoints.

    Attributes:
        iterations (array): Checkpoint iterations.
        sq_errors (array): Per-trial squared errors, shape (trial_count, checkpoints).
        config_digest (str): Digest of the configuration.
        iterate_norms (array): Per-trial iterate norms, same shape as sq_errors.
    """
    iterations: np.ndarray
    sq_errors: np.ndarray = field(repr=False)
    config_digest: str = ""
    iterate_norms: np.ndarray = field(default=None, repr=False)

    @classmethod
    def from_traces(cls, traces, config_digest=None):
        """ Aggregate trial traces recorded at the same checkpoints.

            Args:
                traces (list): TrialTrace objects.
                config_digest (str): Digest of the aggregate, the first trace's digest if None.

            Returns:
                AggregateTrace: Aggregate over all traces.
        """
        if not traces:
            raise ConfigError("cannot aggregate zero traces")
        iterations = traces[0].iterations
        for trace in traces[1:]:
            if not np.array_equal(trace.iterations, iterations):
                raise ValueError("trial traces are recorded at different checkpoints")
        return cls(iterations=np.asarray(iterations),
                   sq_errors=np.stack([trace.sq_errors for trace in traces]),
                   config_digest=traces[0].config_digest if config_digest is None else config_digest,
                   iterate_norms=np.stack([trace.iterate_norms for trace in traces]))

    @property
    def trial_count(self):
        return self.sq_errors.shape[0]

    @property
    def mean_sq_error(self):
        return self.sq_errors.mean(axis=0)

    @property
    def std_sq_error(self):
        """ Sample standard deviation across trials, zero for a single trial.
        """
        if self.trial_count < 2:
            return np.zeros(self.iterations.shape[0])
        return self.sq_errors.std(axis=0, ddof=1)

    @property
    def checkpoints(self):
        """ List of (iteration, mean_sq_error, trial_count) triples.
        """
        return [(int(k), float(error), self.trial_count) for k, error in zip(self.iterations, self.mean_sq_error)]

    @property
    def final_mean(self):
        return float(self.mean_sq_error[-1])

    def tail(self, fraction=0.1):
        """ Mean squared error over the last ``fraction`` of the checkpoints and its standard error across trials.

            Args:
                fraction (float): Share of checkpoints in the tail.

            Returns:
                tuple: Tail mean and its standard error.
        """
        count = max(1, int(np.ceil(fraction * self.iterations.shape[0])))
        per_trial = self.sq_errors[:, -count:].mean(axis=1)
        if self.trial_count < 2:
            return float(per_trial[0]), 0.0
        return float(per_trial.mean()), float(per_trial.std(ddof=1) / np.sqrt(self.trial_count))

    def to_frame(self):
        """ Trace as a data frame with the CSV columns.
        """
        return pd.DataFrame({"iteration": self.iterations.astype(np.int64), "mean_sq_error": self.mean_sq_error,
                             "trial_count": self.trial_count}, columns=TRACE_COLUMNS)

    def to_csv(self, path):
        """ Write the trace as ``iteration,mean_sq_error,trial_count`` CSV with round-trip float precision.
        """
        self.to_frame().to_csv(path, index=False, float_format="%.17g", lineterminator="\n")


@timer
def run_trials(problem, model, schedule, domain, iterations, trial_count, root_seed, record_every=1, x0=None,
               method="msgd", progress=False, config_digest=None):
    """ Independent trials with seeds derived from a root seed, aggregated checkpoint by checkpoint.

        Args:
            problem (Problem): Problem with a known x_star.
            model (MaskModel): Missingness model.
            schedule (Schedule): Step size regime.
            domain (ProjectionDomain): Projection ball.
            iterations (int): Iterations per trial.
            trial_count (int): Number of trials, at least 1.
            root_seed (int): Root seed; trial t runs with derive_seed(root_seed, t).
            record_every (int): Checkpoint spacing.
            x0 (array): Starting point, zero vector if None.
            method (str): ``msgd`` or ``sgd``.
            progress (bool): Show a progress bar.
            config_digest (str): Digest stored in the traces.

        Returns:
            AggregateTrace: Aggregated trace.
    """
    if trial_count < 1:
        raise ConfigError("trial_count must be at least 1, got {}".format(trial_count))
    seeds = [derive_seed(root_seed, trial) for trial in range(trial_count)]
    traces = run_batch(problem, model, schedule, domain, seeds, x0=x0, iterations=iterations,
                       record_every=record_every, method=method, progress=progress, digest=config_digest)
    aggregate = AggregateTrace.from_traces(traces, config_digest=config_digest)
    logger.info("%d trials of %d iterations at p=%g: final mean squared error %.6g", trial_count, iterations,
                model.p, aggregate.final_mean)
    return aggregate


def sweep_p(problem, ps, schedule, domain, iterations, trial_count, root_seed, record_every=1, mode="resample",
            progress=False):
    """ :func:`run_trials` for every observation probability of a grid.

        Returns:
            dict: Observation probability to AggregateTrace, in grid order.
    """
    return {p: run_trials(problem, MaskModel(p, mode), schedule, domain, iterations, trial_count, root_seed,
                          record_every=record_every, progress=progress) for p in ps}
