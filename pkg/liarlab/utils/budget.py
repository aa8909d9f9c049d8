from liarlab.errors import BudgetExceeded


class StepBudget:
    """Counts work units against a fixed capacity.

    A capacity of ``0`` or ``None`` never runs out.
    """

    def __init__(self, capacity: int | None, what: str = "step"):
        self.capacity = capacity or 0
        self.what = what
        self.spent = 0

    @property
    def unlimited(self) -> bool:
        return self.capacity <= 0

    @property
    def remaining(self) -> int | None:
        if self.unlimited:
            return None
        return max(self.capacity - self.spent, 0)

    def allow(self, cost: int = 1) -> bool:
        """Spend ``cost`` units; False once the capacity is gone."""
        if self.unlimited:
            self.spent += cost
            return True
        if self.spent + cost > self.capacity:
            return False
        self.spent += cost
        return True

    def charge(self, cost: int = 1) -> None:
        if not self.allow(cost):
            raise BudgetExceeded(self.what, self.capacity)
