import pytest

from cubiq.config import BUDGET_ENV, budget_scale, check_budget, limit
from cubiq.errors import BudgetExceeded, ConfigError


@pytest.fixture
def no_budget(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV, raising=False)


def test_default_scale(no_budget):
    assert budget_scale() == 1
    assert limit(80) == 80


def test_scaled_budget(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "3")
    assert budget_scale() == 3
    assert limit(200) == 600
    check_budget(600, 200, "norm")


def test_blank_value_means_default(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "  ")
    assert budget_scale() == 1


@pytest.mark.parametrize("raw", ["abc", "0", "-2", "1.5"])
def test_malformed_budget(monkeypatch, raw):
    monkeypatch.setenv(BUDGET_ENV, raw)
    with pytest.raises(ConfigError):
        budget_scale()


def test_check_budget(no_budget):
    check_budget(100, 100, "norm")
    with pytest.raises(BudgetExceeded, match=BUDGET_ENV):
        check_budget(101, 100, "norm")
