"""Node and wall-clock limits for the exhaustive searches."""

from __future__ import annotations

import time
from dataclasses import dataclass

DEFAULT_NODES = 1_000_000


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = DEFAULT_NODES
    time_limit: float | None = None

    def meter(self) -> "Meter":
        return Meter(self)


UNLIMITED = Budget(max_nodes=None, time_limit=None)


class Meter:
    """Per-search counter; each search gets its own so results stay deterministic."""

    __slots__ = ("budget", "nodes", "exhausted", "_deadline")

    def __init__(self, budget: Budget):
        self.budget = budget
        self.nodes = 0
        self.exhausted = False
        self._deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def tick(self) -> bool:
        """Count one node; False once any limit is hit."""
        self.nodes += 1
        cap = self.budget.max_nodes
        if cap is not None and self.nodes > cap:
            self.exhausted = True
        elif self._deadline is not None and (self.nodes & 0xFF) == 0 and time.monotonic() > self._deadline:
            self.exhausted = True
        return not self.exhausted
