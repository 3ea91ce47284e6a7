"""Resource limits shared by the exact searches."""

from __future__ import annotations

import time
from dataclasses import dataclass, replace


class BudgetExceeded(RuntimeError):
    """A search hit a size or time limit before finishing."""


@dataclass(frozen=True)
class Budget:
    orpower_vertices: int = 200_000
    partition_edges: int = 14
    partition_edges_injective: int = 12
    core_vertices: int = 10
    strong_size: int = 6
    multipartite_vertices: int = 9
    biclique_vertices: int = 16
    cover_edges: int = 16
    particity_vertices: int = 12
    deadline: float | None = None  # absolute time.monotonic() value

    @classmethod
    def with_time_limit(cls, seconds: float | None, **overrides) -> "Budget":
        deadline = None if seconds is None else time.monotonic() + seconds
        return cls(deadline=deadline, **overrides)

    def override(self, **changes) -> "Budget":
        return replace(self, **changes)

    def check_time(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("time limit exceeded")


DEFAULT_BUDGET = Budget()
