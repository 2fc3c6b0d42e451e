"""
Census
Differential verification of every closed-form count against exhaustive enumeration,
with range sweeps and CSV reports
"""

import logging
import os
import time
from dataclasses import dataclass, field

import pandas as pd
from sympy import divisor_sigma

from .config import CENSUS_RANGES, check_budget
from .decomp import count_all_vectors, count_primitive_vectors, squarefree_decompose
from .errors import CubiqError, InvalidInput
from .gaussian import two_square_representations
from .hurwitz import hq_enumerate_norm, sigma_odd
from .lattice import enumerate_norm_vectors, icubes_containing, norm_census, orbit_representatives
from .pythagoras import brute_force_params, euler_param, quadruples_with_d
from .twins import (
    conjectured_twin_complete,
    definitional_twin_complete,
    is_twin_complete,
    lift_witness,
    max_cubic_lattice,
    ordered_twin_pairs,
    twin_count,
    twins_of,
)

logger = logging.getLogger(__name__)

DEFAULT_CSV = "data/census.csv"
CSV_COLUMNS = ["check_name", "input", "formula_value", "oracle_value", "match"]


@dataclass(frozen=True)
class CensusRow:
    input: object
    formula_value: object
    oracle_value: object
    match: bool


@dataclass
class CensusReport:
    """
    Outcome of one check over the range lo..hi

    Args:
        check_name: registry name of the check
        lo, hi: inclusive input range
        rows: one CensusRow per comparison
        elapsed: wall time in seconds
        error: message when the check aborted
    """

    check_name: str
    lo: int
    hi: int
    rows: list = field(default_factory=list)
    elapsed: float = 0.0
    error: str = None

    @property
    def mismatches(self):
        return [(r.input, r.formula_value, r.oracle_value) for r in self.rows if not r.match]

    @property
    def passed(self):
        return self.error is None and not self.mismatches

    def to_frame(self):
        return pd.DataFrame(
            [(self.check_name, str(r.input), r.formula_value, r.oracle_value, r.match) for r in self.rows],
            columns=CSV_COLUMNS,
        )

    def summary(self):
        status = "ok" if self.passed else f"{len(self.mismatches)} mismatches"
        if self.error:
            status = f"error: {self.error}"
        return f"{self.check_name} [{self.lo}..{self.hi}]: {len(self.rows)} rows, {status} ({self.elapsed:.2f}s)"


def resolve_range(name, value=None):
    """Default upper bound of a check, or the override after validating it against the ceiling."""
    if name not in CENSUS_RANGES:
        raise InvalidInput(f"unknown census check {name!r}; choose from {sorted(CENSUS_RANGES)}")
    default, ceiling = CENSUS_RANGES[name]
    if value is None:
        return default
    if value < 1:
        raise InvalidInput(f"{name} range must be positive, got {value}")
    check_budget(value, ceiling, f"{name} range")
    return value


def _report(name, hi, rows, started):
    return CensusReport(name, 1, hi, rows, time.perf_counter() - started)


def jacobi_count(n):
    """Number of (a, b, c, d) in Z^4 with a^2 + b^2 + c^2 + d^2 = n: 8*sigma(n) for odd n, else 24*sigma_odd(n)."""
    if n % 2:
        return 8 * int(divisor_sigma(n))
    return 24 * sigma_odd(n)


def four_square_counts(n_max):
    """Four-square representation counts for 0..n_max, by convolving two-square solution lists."""
    r2 = [len(two_square_representations(k)) if k else 1 for k in range(n_max + 1)]
    return [sum(r2[k] * r2[n - k] for k in range(n + 1)) for n in range(n_max + 1)]


def check_jacobi(n_max=None):
    n_max = resolve_range("jacobi", n_max)
    started = time.perf_counter()
    oracle = four_square_counts(n_max)
    rows = []
    for n in range(1, n_max + 1):
        formula = jacobi_count(n)
        rows.append(CensusRow(n, formula, oracle[n], formula == oracle[n]))
    return _report("jacobi", n_max, rows, started)


def check_twin_counts(M_max=None):
    M_max = resolve_range("twin_counts", M_max)
    started = time.perf_counter()
    rows = []
    for M in range(1, M_max + 1):
        formula, oracle = twin_count(M), ordered_twin_pairs(M)
        rows.append(CensusRow(M, formula, oracle, formula == oracle))
    return _report("twin_counts", M_max, rows, started)


def check_vector_counts(M_max=None):
    """Rows "s(M)" compare all vectors, rows "p(M)" primitive vectors."""
    M_max = resolve_range("vector_counts", M_max)
    started = time.perf_counter()
    all_counts, primitive_counts = norm_census(M_max)
    rows = []
    for M in range(1, M_max + 1):
        n, m = squarefree_decompose(M)
        s, p = count_all_vectors(M), count_primitive_vectors(n, m)
        rows.append(CensusRow(f"s({M})", s, all_counts[M], s == all_counts[M]))
        rows.append(CensusRow(f"p({M})", p, primitive_counts[M], p == primitive_counts[M]))
    return _report("vector_counts", M_max, rows, started)


def check_hurwitz_counts(n_max=None):
    n_max = resolve_range("hurwitz_counts", n_max)
    started = time.perf_counter()
    rows = []
    for n in range(1, n_max + 1):
        formula = 24 * sigma_odd(n)
        oracle = len(hq_enumerate_norm(n))
        rows.append(CensusRow(n, formula, oracle, formula == oracle))
    return _report("hurwitz_counts", n_max, rows, started)


def check_twin_completeness(limit=None):
    """
    Formula verdicts against the definition, plus the accepted set against the known list

    A rejection certificate counts only when its lifted witness really has no twin.
    """
    limit = resolve_range("twin_completeness", limit)
    started = time.perf_counter()
    rows = []
    accepted = []
    for N in range(1, limit + 1):
        result = is_twin_complete(N)
        oracle = definitional_twin_complete(N)
        match = result.verdict == oracle
        if result.witness is not None:
            match = match and not twins_of(lift_witness(result.witness, N))
        if result.verdict:
            accepted.append(N)
        rows.append(CensusRow(N, result.verdict, oracle, match))
    expected = conjectured_twin_complete(limit)
    rows.append(CensusRow("accepted set", len(accepted), len(expected), accepted == expected))
    return _report("twin_completeness", limit, rows, started)


def check_pythagorean_params(d_max=None):
    """Each normal-form quadruple with odd d <= d_max has the four parameterizations found by search."""
    d_max = resolve_range("pythagorean_params", d_max)
    started = time.perf_counter()
    rows = []
    for d in range(1, d_max + 1, 2):
        for q in quadruples_with_d(d, verify=False):
            params = sorted(euler_param(q))
            oracle = brute_force_params(q)
            rows.append(CensusRow(str(q), len(params), len(oracle), len(params) == 4 and params == oracle))
    return _report("pythagorean_params", d_max, rows, started)


def check_max_lattices(norm_max=None):
    """
    The maximal cubic lattice of each primitive x is the only icube lattice of its edge containing x

    Signed permutations carry icubes to icubes, so orbit representatives cover every x.
    """
    norm_max = resolve_range("max_lattices", norm_max)
    started = time.perf_counter()
    vectors_by_edge = {}
    rows = []
    for N in range(1, norm_max + 1):
        _, m = squarefree_decompose(N)
        for x in orbit_representatives(N):
            if not x.is_primitive():
                continue
            lattice = max_cubic_lattice(x)
            if m not in vectors_by_edge:
                vectors_by_edge[m] = enumerate_norm_vectors(m * m)
            found = icubes_containing(x, m * m, vectors_by_edge[m])
            match = lattice.edge == m and lattice.contains(x) and found == {lattice.signed_basis()}
            rows.append(CensusRow(str(x), lattice.edge, len(found), match))
    return _report("max_lattices", norm_max, rows, started)


CHECKS = {
    "jacobi": check_jacobi,
    "twin_counts": check_twin_counts,
    "vector_counts": check_vector_counts,
    "hurwitz_counts": check_hurwitz_counts,
    "twin_completeness": check_twin_completeness,
    "pythagorean_params": check_pythagorean_params,
    "max_lattices": check_max_lattices,
}


def run_sweep(names=None, overrides=None):
    """
    Run census checks in registry order

    Args:
        names: check names to run; all when None
        overrides: name -> upper bound replacing the default range

    Returns:
        list of CensusReport; a check that raises is reported with its error
    """
    names = list(CHECKS) if names is None else list(names)
    overrides = overrides or {}
    for name in names:
        if name not in CHECKS:
            raise InvalidInput(f"unknown census check {name!r}; choose from {sorted(CHECKS)}")
    # Validate every range before doing any work
    for name in names:
        resolve_range(name, overrides.get(name))

    logger.info("=" * 60)
    logger.info("CENSUS SWEEP: %s", ", ".join(names))
    logger.info("=" * 60)
    reports = []
    for step, name in enumerate(names, 1):
        logger.info("%d. %s...", step, name.upper())
        started = time.perf_counter()
        try:
            report = CHECKS[name](overrides.get(name))
        except CubiqError as e:
            logger.error("%s aborted: %s", name, e)
            hi = resolve_range(name, overrides.get(name))
            report = CensusReport(name, 1, hi, elapsed=time.perf_counter() - started, error=str(e))
        for mismatch in report.mismatches:
            logger.warning("%s mismatch at %s: formula %s, oracle %s", name, *mismatch)
        logger.info(report.summary())
        reports.append(report)
    failed = [r.check_name for r in reports if not r.passed]
    logger.info("Sweep finished: %d passed, %d failed %s", len(reports) - len(failed), len(failed), failed or "")
    return reports


def save_csv(reports, filename=DEFAULT_CSV):
    """
    Write every row of the reports to one CSV file

    Args:
        reports: CensusReport list
        filename: output path; parent directories are created

    Returns:
        the path written
    """
    frames = [report.to_frame() for report in reports]
    df = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(columns=CSV_COLUMNS)
    directory = os.path.dirname(filename)
    if directory:
        os.makedirs(directory, exist_ok=True)
    df.to_csv(filename, index=False)
    logger.info("Census saved to CSV: %s", filename)
    return filename
