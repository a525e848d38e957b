"""Permutations of a finite point set.

Points are 0-based inside Python; every text format (cycle notation,
generator files) is 1-based. The conversion happens only in
:func:`parse_permutation` and :meth:`Permutation.__str__`.

Products act on the right: ``(a * b)(p) == b(a(p))``.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence


class PermutationError(ValueError):
    pass


class Permutation:
    """An immutable bijection of ``range(degree)``."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int], *, check: bool = True):
        img = tuple(images)
        if check and sorted(img) != list(range(len(img))):
            raise PermutationError("images do not form a bijection")
        if not img:
            raise PermutationError("degree must be positive")
        self._img = img
        self._hash = None

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from 0-based disjoint cycles."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for p in cyc:
                if not 0 <= p < degree:
                    raise PermutationError(f"point {p + 1} out of range 1..{degree}")
                if p in seen:
                    raise PermutationError(f"point {p + 1} repeated")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:]):
                img[a] = b
            if cyc:
                img[cyc[-1]] = cyc[0]
        return cls(img, check=False)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return self._img

    def __call__(self, point: int) -> int:
        return self._img[point]

    def __getitem__(self, point: int) -> int:
        return self._img[point]

    def __len__(self) -> int:
        return len(self._img)

    def __iter__(self):
        return iter(self._img)

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self._img == other._img
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return inverse(self) ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles (0-based), each starting at its least point,
        sorted by least point."""
        img = self._img
        seen = [False] * len(img)
        out = []
        for start in range(len(img)):
            if seen[start] or img[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            j = img[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = img[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted lengths of all cycles, fixed points included."""
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed, reverse=True))

    def order(self) -> int:
        return element_order(self)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def support(self) -> list[int]:
        return [i for i, p in enumerate(self._img) if i != p]

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: apply ``a`` first, then ``b``."""
    if a.degree != b.degree:
        raise PermutationError(f"degree mismatch: {a.degree} vs {b.degree}")
    bi = b._img
    return Permutation([bi[i] for i in a._img], check=False)


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, j in enumerate(a._img):
        inv[j] = i
    return Permutation(inv, check=False)


def element_order(a: Permutation) -> int:
    return math.lcm(*(len(c) for c in a.cycles()))


def format_permutation(a: Permutation) -> str:
    """Disjoint cycles, 1-based, sorted by least moved point; ``()`` for the
    identity."""
    cyc = a.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation such as ``"(1 2 3)(4 5)"``.

    Points may be separated by whitespace or commas. ``"()"`` and the empty
    string denote the identity.
    """
    if degree < 1:
        raise PermutationError("degree must be positive")
    s = text.strip()
    pos = 0
    cycles = []
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(s, pos)
        if m is None:
            raise PermutationError(f"malformed cycle notation near {s[pos:pos + 12]!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(tok) for tok in body]
        except ValueError:
            raise PermutationError(f"non-integer point in {m.group(0)!r}") from None
        for p in pts:
            if not 1 <= p <= degree:
                raise PermutationError(f"point {p} out of range 1..{degree}")
        cycles.append([p - 1 for p in pts])
        pos = m.end()
    return Permutation.from_cycles(cycles, degree)


def random_permutation(degree: int, rng) -> Permutation:
    img = list(range(degree))
    rng.shuffle(img)
    return Permutation(img, check=False)
