"""Resource bounds shared by the engine, the graph builder and the CLI.

Exceeding a bound raises :class:`BoundExceeded`; no routine ever returns a
guessed answer instead.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


class BoundExceeded(RuntimeError):
    def __init__(self, name: str, limit: int, needed: int | None = None):
        self.name = name
        self.limit = limit
        self.needed = needed
        msg = f"{name} bound {limit} exceeded"
        if needed is not None:
            msg += f" (needed {needed})"
        super().__init__(msg)


@dataclass(frozen=True)
class Limits:
    enumeration: int = 10**6
    backtrack_nodes: int = 10**8
    coset_action: int = 10**5
    vertices: int = 10**5
    edges: int = 5 * 10**5

    def with_(self, **kw) -> Limits:
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


DEFAULT_LIMITS = Limits()
