import pytest

from liarlab import config
from liarlab.errors import BudgetExceeded
from liarlab.utils.budget import StepBudget


def test_settings_are_cached():
    assert config.get_settings() is config.get_settings()


def test_settings_defaults_are_sane():
    s = config.get_settings()
    assert s.ledger_cap >= 0
    assert s.qe_node_cap >= 0
    assert s.log_level in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def test_int_env(monkeypatch):
    monkeypatch.setenv("LIARLAB_TEST_CAP", "17")
    assert config._int_env("LIARLAB_TEST_CAP", 3) == 17
    monkeypatch.setenv("LIARLAB_TEST_CAP", "")
    assert config._int_env("LIARLAB_TEST_CAP", 3) == 3
    monkeypatch.delenv("LIARLAB_TEST_CAP")
    assert config._int_env("LIARLAB_TEST_CAP", 3) == 3


class TestStepBudget:
    def test_counts_down(self):
        budget = StepBudget(3, "test")
        assert budget.allow()
        assert budget.allow(2)
        assert budget.remaining == 0
        assert not budget.allow()

    def test_charge_raises(self):
        budget = StepBudget(1, "test")
        budget.charge()
        with pytest.raises(BudgetExceeded) as err:
            budget.charge()
        assert err.value.limit == 1

    @pytest.mark.parametrize("capacity", [0, None])
    def test_unlimited(self, capacity):
        budget = StepBudget(capacity)
        assert budget.unlimited
        for _ in range(1000):
            budget.charge()
        assert budget.remaining is None
        assert budget.spent == 1000
