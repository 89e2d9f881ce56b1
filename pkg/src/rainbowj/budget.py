"""Search budgets.  Running out of budget is never a verdict."""

from __future__ import annotations

import os
import time

DEFAULT_BUDGET_MS = 60_000
ENV_VAR = "RAINBOWJ_BUDGET_MS"


class BudgetExceeded(RuntimeError):
    """An exact search gave up before reaching a conclusion."""


def default_budget_ms() -> float:
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            return float(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be a number of milliseconds, got {raw!r}")
    return DEFAULT_BUDGET_MS


def deadline(budget_ms: float | None = None) -> float:
    """Absolute ``time.monotonic()`` deadline for a budget in milliseconds."""
    if budget_ms is None:
        budget_ms = default_budget_ms()
    return time.monotonic() + budget_ms / 1000.0
