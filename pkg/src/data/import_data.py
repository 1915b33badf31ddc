""" Functions to import matrices, right hand sides and stored problems from CSV files.

Matrix files hold comma separated numbers without a header (``header=True`` skips the first line). No scaling or
centering is applied to the data.
"""

import json
import os
import re

import numpy as np
import pandas as pd

from src.experiments.problem import Problem, solve_problem
from src.utils.exceptions import DataFormatError
from src.utils.logger import get_logger
from src.utils.timer import timer

logger = get_logger(__name__)

MATRIX_FILE = "A.csv"
RHS_FILE = "b.csv"
PROBLEM_FILE = "problem.json"

# C parser message for a row longer than the first one
FIELD_COUNT_ERROR = re.compile(r"Expected (\d+) fields in line (\d+), saw (\d+)")


def read_matrix_csv(path, header=False):
    """ Read a rectangular numeric CSV file.

        Tokenizing (quoting, CRLF line ends) is left to pandas. Empty fields, short rows and blank lines come back as
        missing cells and are reported with their line number; a trailing empty field cannot be told apart from a
        missing one.

        Args:
            path (string): Path of the CSV file.
            header (bool): Skip the first line.

        Returns:
            array: Matrix with one row per line.
    """
    if not os.path.isfile(path):
        raise DataFormatError("file not found: {}".format(path))
    first = 2 if header else 1
    try:
        frame = pd.read_csv(path, header=None, skiprows=first - 1, dtype=str, skip_blank_lines=False,
                            keep_default_na=False, na_values=[""], encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise DataFormatError("{} contains no data".format(path))
    except pd.errors.ParserError as error:
        match = FIELD_COUNT_ERROR.search(str(error))
        if match is None:
            raise DataFormatError("{}: {}".format(path, str(error).strip()))
        expected, line, found = match.groups()
        raise DataFormatError("{}: line {} has {} fields, expected {}".format(path, line, found, expected))
    if frame.empty:
        raise DataFormatError("{} contains no data".format(path))
    cells = frame.apply(lambda column: column.str.strip())
    missing = cells.isna().to_numpy()
    for row in np.flatnonzero(missing.any(axis=1)):
        if missing[row].all():
            raise DataFormatError("{}: line {} is blank".format(path, row + first))
        present = np.flatnonzero(~missing[row])
        if missing[row, present[-1]:].sum() == missing[row].sum():
            raise DataFormatError("{}: line {} has {} fields, expected {}".format(
                path, row + first, present[-1] + 1, frame.shape[1]))
    numeric = cells.apply(pd.to_numeric, errors="coerce").to_numpy(dtype=float)
    invalid = ~np.isfinite(numeric)
    if invalid.any():
        row, column = np.argwhere(invalid)[0]
        value = cells.iat[row, column]
        raise DataFormatError("{}: line {}, column {}: {!r} is not a finite number".format(
            path, row + first, column + 1, "" if pd.isna(value) else value))
    return numeric


def read_vector_csv(path, header=False):
    """ Read a vector stored as one number per line.
    """
    values = read_matrix_csv(path, header=header)
    if values.shape[1] != 1:
        raise DataFormatError("{}: expected a single column, got {}".format(path, values.shape[1]))
    return values[:, 0]


@timer
def load_csv_problem(matrix_path, rhs_path=None, rhs_column=None, header=False):
    """ Build a problem from a matrix CSV and either a separate right hand side file or one of its columns.

        Args:
            matrix_path (string): Path of the matrix CSV.
            rhs_path (string): Path of the right hand side CSV.
            rhs_column (int): 0-based column of the matrix file holding b; the remaining columns form A.
            header (bool): Skip the first line of every file.

        Returns:
            Problem: Problem with x_star and residual from a least squares solve.
    """
    if (rhs_path is None) == (rhs_column is None):
        raise DataFormatError("give exactly one of a right hand side file or a right hand side column")
    values = read_matrix_csv(matrix_path, header=header)
    if rhs_column is not None:
        if not 0 <= rhs_column < values.shape[1]:
            raise DataFormatError("right hand side column {} out of range for {} columns".format(
                rhs_column, values.shape[1]))
        if values.shape[1] < 2:
            raise DataFormatError("{}: splitting off column {} leaves no matrix columns".format(
                matrix_path, rhs_column))
        A = np.delete(values, rhs_column, axis=1)
        b = values[:, rhs_column]
    else:
        A = values
        b = read_vector_csv(rhs_path, header=header)
        if b.shape[0] != A.shape[0]:
            raise DataFormatError("right hand side has {} entries but the matrix has {} rows".format(
                b.shape[0], A.shape[0]))
    logger.info("loaded %d x %d matrix from %s", A.shape[0], A.shape[1], matrix_path)
    return solve_problem(A, b, metadata={"matrix": os.path.abspath(matrix_path), "rhs_column": rhs_column,
                                         "rhs": None if rhs_path is None else os.path.abspath(rhs_path)})


def read_problem(directory):
    """ Load a problem written by :func:`src.data.export_data.write_problem`.

        Args:
            directory (string): Directory holding ``A.csv``, ``b.csv`` and ``problem.json``.

        Returns:
            Problem: Problem with the stored x_star, residual and metadata.
    """
    A = read_matrix_csv(os.path.join(directory, MATRIX_FILE))
    b = read_vector_csv(os.path.join(directory, RHS_FILE))
    with open(os.path.join(directory, PROBLEM_FILE), encoding="utf-8") as file:
        sidecar = json.load(file)
    return Problem(A=A, b=b, x_star=np.array(sidecar["x_star"]), residual=np.array(sidecar["residual"]),
                   consistent=sidecar["consistent"], metadata=sidecar.get("metadata", {}))
