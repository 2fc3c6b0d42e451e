"""
Configuration
Enumeration budgets, scaled by the optional CUBIQ_BUDGET environment variable
"""

import os

from dotenv import load_dotenv

from .errors import BudgetExceeded, ConfigError

# Load environment variables
load_dotenv()

BUDGET_ENV = "CUBIQ_BUDGET"

# Base limits before scaling
NORM_VECTOR_BUDGETS = {3: 10_000, 5: 200, 7: 80}
HURWITZ_NORM_BUDGET = 10_000
TWINS_SEARCH_BUDGET = 10_000

# Census sweep defaults and ceilings: name -> (default, ceiling)
CENSUS_RANGES = {
    "jacobi": (200, 500),
    "twin_counts": (200, 200),
    "vector_counts": (2000, 2000),
    "hurwitz_counts": (100, 100),
    "twin_completeness": (1000, 1000),
    "pythagorean_params": (99, 99),
    "max_lattices": (500, 500),
}


def budget_scale():
    """
    Read the budget multiplier from the environment

    Returns:
        Positive integer multiplier, 1 when CUBIQ_BUDGET is unset
    """
    raw = os.getenv(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        scale = int(raw)
    except ValueError:
        raise ConfigError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}") from None
    if scale < 1:
        raise ConfigError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
    return scale


def limit(base):
    """Scale a base budget by the configured multiplier."""
    return base * budget_scale()


def check_budget(value, base, what):
    """
    Raise BudgetExceeded when value is above the scaled budget

    Args:
        value: requested size
        base: unscaled budget
        what: label used in the error message
    """
    cap = limit(base)
    if value > cap:
        raise BudgetExceeded(f"{what} {value} exceeds budget {cap} (raise {BUDGET_ENV} to allow more)")
