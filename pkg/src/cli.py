""" Command line interface: ``python -m src <command>``.
"""

import functools
import json
import sys

import click
import numpy as np

from src.bounds.reports import corollary_plan, fixed_step_report
from src.config import build_domain, build_model, build_problem, build_schedule, load_config, resolved_digest
from src.data.export_data import suffixed_path, write_problem, write_trace
from src.experiments.comparison import compare_imputation
from src.experiments.generators import gen_correlated_consistent, gen_gaussian_consistent, \
    gen_gaussian_inconsistent
from src.experiments.presets import CORRELATION, PRESETS, RESIDUAL_SCALE, preset_shape
from src.experiments.trials import run_trials
from src.solver.schedules import Fixed
from src.utils.exceptions import ConfigError, MsgdError, VerificationError
from src.utils.logger import get_logger, set_verbosity
from src.verification.suite import MONTE_CARLO_SAMPLES, run_verification

logger = get_logger(__name__)


def handle_errors(command):
    """ Turn package errors into a one-line message on stderr and the error's exit status.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except MsgdError as error:
            click.echo("error: {}".format(error), err=True)
            sys.exit(error.exit_code)

    return wrapper


def _dump(content):
    click.echo(json.dumps(content, indent=2, sort_keys=True))


@click.group()
@click.option("--progress", is_flag=True, help="Show progress bars.")
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages.")
@click.pass_context
def cli(ctx, progress, verbose):
    """ mSGD experiments on linear systems with missing entries.
    """
    set_verbosity(verbose)
    ctx.obj = {"progress": progress}


@cli.command()
@click.option("--kind", type=click.Choice(["gaussian", "inconsistent", "correlated"]), default="gaussian",
              show_default=True)
@click.option("-m", "rows", type=int, default=None, help="Number of rows.")
@click.option("-n", "columns", type=int, default=None, help="Number of columns.")
@click.option("--preset", type=click.Choice(sorted(PRESETS)), default="desk", show_default=True,
              help="Shape used when -m/-n are not given.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--residual-scale", type=float, default=None,
              help="Residual norm relative to ||A x_star||; {:g} for the inconsistent kind, 0 for gaussian.".format(
                  RESIDUAL_SCALE))
@click.option("--correlation", type=float, default=CORRELATION, show_default=True, help="Correlated kind only.")
@click.option("--output", "-o", type=click.Path(file_okay=False), required=True, help="Output directory.")
@handle_errors
def generate(kind, rows, columns, preset, seed, residual_scale, correlation, output):
    """ Write a synthetic problem as A.csv, b.csv and problem.json.
    """
    m, n = preset_shape(preset)
    m = m if rows is None else rows
    n = n if columns is None else columns
    if residual_scale is None:
        residual_scale = RESIDUAL_SCALE if kind == "inconsistent" else 0.0
    if kind == "correlated":
        problem = gen_correlated_consistent(m, n, correlation, seed)
    elif residual_scale != 0:
        problem = gen_gaussian_inconsistent(m, n, residual_scale, seed)
    elif kind == "inconsistent":
        raise ConfigError("--residual-scale must be positive for the inconsistent kind")
    else:
        problem = gen_gaussian_consistent(m, n, seed)
    for path in write_problem(problem, output):
        click.echo(path)


def _setup(config_path):
    config = load_config(config_path)
    problem = build_problem(config)
    schedule = build_schedule(config, problem)
    domain = build_domain(config, problem)
    return config, problem, schedule, domain, resolved_digest(config, problem, schedule, domain)


@cli.command()
@click.argument("config_path", type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def solve(ctx, config_path):
    """ Run the trials of a configuration and write the aggregate trace CSV.
    """
    config, problem, schedule, domain, digest = _setup(config_path)
    trace = run_trials(problem, build_model(config), schedule, domain, config.iterations, config.trial_count,
                       config.root_seed, record_every=config.record_every, method=config.method,
                       progress=ctx.obj["progress"], config_digest=digest)
    click.echo(write_trace(trace, config.output, config=config.to_dict()))


@cli.command()
@click.argument("config_path", type=click.Path(dir_okay=False))
@click.option("--alpha", type=float, default=None, help="Fixed step; defaults to the config's fixed schedule.")
@click.option("--epsilon", type=float, default=None, help="Target squared error for the step and budget plan.")
@handle_errors
def bounds(config_path, alpha, epsilon):
    """ Print the bounds report of a configuration as JSON.
    """
    config, problem, schedule, domain, _ = _setup(config_path)
    if alpha is None:
        if not isinstance(schedule, Fixed):
            raise ConfigError("config.schedule: bounds need a fixed step, pass --alpha")
        alpha = schedule.alpha
    report = fixed_step_report(problem.A, problem.b, problem.x_star, problem.residual, config.p, alpha,
                               domain.b_domain)
    content = report.to_dict()
    if epsilon is not None:
        epsilon0 = float(np.sum(problem.x_star ** 2))
        plan = corollary_plan(epsilon, epsilon0, report.l_g, report.g_star, report.mu)
        content["corollary"] = {"epsilon": epsilon, "epsilon0": epsilon0, "alpha_star": plan.alpha_star,
                                "k_budget": plan.k_budget, "target_met": plan.target_met}
    _dump(content)


@cli.command("compare-imputation")
@click.argument("config_path", type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def compare_imputation_command(ctx, config_path):
    """ Run mSGD and the imputation baselines; write one trace CSV per method.
    """
    config, problem, schedule, domain, digest = _setup(config_path)
    traces = compare_imputation(problem, config.p, schedule, domain, config.iterations, config.trial_count,
                                config.root_seed, record_every=config.record_every, corpus_size=config.corpus_size,
                                progress=ctx.obj["progress"], config_digest=digest)
    for name, trace in traces.items():
        click.echo(write_trace(trace, suffixed_path(config.output, name), config=config.to_dict()))


@cli.command()
@click.option("--samples", type=int, default=MONTE_CARLO_SAMPLES, show_default=True,
              help="Monte Carlo samples per second moment estimate.")
@click.option("--seed", type=int, default=0, show_default=True)
@handle_errors
def verify(samples, seed):
    """ Run the exact enumeration and bound containment checks; exit 4 on any failure.
    """
    report = run_verification(samples=samples, seed=seed)
    for check in report.checks:
        click.echo("{} {}".format("PASS" if check.passed else "FAIL", check.name))
    if not report.passed:
        raise VerificationError("{} of {} checks failed".format(len(report.failures()), len(report.checks)))


def main():
    cli(prog_name="msgd")


if __name__ == "__main__":
    main()
