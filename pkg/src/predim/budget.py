"""Step budgets for the exhaustive searches.

Long-running enumerations tick a shared budget; exhaustion raises instead of
silently returning a wrong verdict.  A budget of None means unbounded.
"""

from .errors import BudgetExhausted


class Budget:
    def __init__(self, steps=None):
        if steps is not None and steps < 0:
            raise ValueError("budget must be non-negative")
        self.limit = steps
        self.spent = 0

    def tick(self, n=1):
        self.spent += n
        if self.limit is not None and self.spent > self.limit:
            raise BudgetExhausted(spent=self.spent)

    def remaining(self):
        if self.limit is None:
            return None
        return max(self.limit - self.spent, 0)


def ensure_budget(budget):
    """Accept None, an int, or a Budget; return a Budget."""
    if budget is None:
        return Budget(None)
    if isinstance(budget, Budget):
        return budget
    return Budget(int(budget))
