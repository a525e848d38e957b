"""Finite fields GF(p^f) and the projective line over them.

Field model: polynomials over GF(p) modulo the lexicographically least
monic irreducible of degree ``f``, coefficients compared from the leading
term down (so GF(8) uses x^3+x+1 and GF(9) uses x^2+1). The element
``c_0 + c_1 x + ... + c_{f-1} x^{f-1}`` is encoded as the integer
``c_0 + c_1 p + ... + c_{f-1} p^{f-1}``. The distinguished primitive element
is the least encoded element of multiplicative order ``q - 1``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .numtheory import factorize, prime_power
from .perm import Permutation


def _poly_mod(num, den, p):
    """Remainder of ``num`` by monic ``den``; lists are low-degree first."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return [c % p for c in num[:dd]] + [0] * max(0, dd - len(num))


def _is_irreducible(poly, p):
    f = len(poly) - 1
    for d in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            cand = list(tail) + [1]
            if not any(_poly_mod(poly, cand, p)):
                return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the least monic irreducible."""
    if f == 1:
        return (0, 1)
    # descending-degree lexicographic order: c_{f-1} varies slowest
    for desc in itertools.product(range(p), repeat=f):
        poly = list(reversed(desc)) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field with ``q`` elements, using log tables."""

    def __init__(self, q: int):
        pf = prime_power(q)
        if pf is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.f = pf
        self.modulus = least_irreducible(self.p, self.f)
        self._digits = [self._to_digits(x) for x in range(q)]
        self.primitive = self._find_primitive()
        self.exp = [1] * (q - 1)
        for i in range(1, q - 1):
            self.exp[i] = self._slow_mul(self.exp[i - 1], self.primitive)
        self.log = {v: i for i, v in enumerate(self.exp)}
        self._add = [[self._from_digits([(a + b) % self.p for a, b in zip(da, db)])
                      for db in self._digits] for da in self._digits]

    def _to_digits(self, x):
        out = []
        for _ in range(self.f):
            out.append(x % self.p)
            x //= self.p
        return out

    def _from_digits(self, ds):
        x = 0
        for c in reversed(ds):
            x = x * self.p + c
        return x

    def _slow_mul(self, a, b):
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * self.f - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._from_digits(_poly_mod(prod, self.modulus, self.p))

    def _find_primitive(self):
        n = self.q - 1
        if n == 1:
            return 1
        ps = list(factorize(n))
        for g in range(2, self.q):
            if all(self._slow_pow(g, n // r) != 1 for r in ps):
                return g
        raise AssertionError("no primitive element")

    def _slow_pow(self, a, k):
        r = 1
        while k:
            if k & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            k >>= 1
        return r

    # -- arithmetic on encoded elements

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self._from_digits([(-c) % self.p for c in self._digits[a]])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a, k):
        if a == 0:
            return 0 if k else 1
        return self.exp[(self.log[a] * k) % (self.q - 1)]

    def frobenius(self, a):
        return self.pow(a, self.p)

    def is_square(self, a):
        return a == 0 or self.p == 2 or self.log[a] % 2 == 0


def projective_map(F: GF, a, b, c, d, frob: int = 0) -> Permutation:
    """The map ``x -> (a x^s + b) / (c x^s + d)`` on the q+1 points of the
    projective line (point ``q`` is infinity), ``s = p^frob``."""
    q = F.q
    if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
        raise ValueError("singular matrix")

    def phi(x):
        for _ in range(frob):
            x = F.frobenius(x)
        return x

    img = []
    for x in range(q + 1):
        if x == q:
            num, den = a, c
        else:
            y = phi(x)
            num = F.add(F.mul(a, y), b)
            den = F.add(F.mul(c, y), d)
        img.append(q if den == 0 else F.mul(num, F.inv(den)))
    return Permutation(img)


def _translate_scale_invert(q, scale):
    F = GF(q)
    one, zero = 1, 0
    return [
        projective_map(F, one, one, zero, one),
        projective_map(F, scale(F), zero, zero, one),
        projective_map(F, zero, F.neg(one), one, zero),
    ]


def psl2_generators(q: int) -> list[Permutation]:
    """``x+1``, ``l^2 x`` and ``-1/x`` on the projective line over GF(q);
    they generate PSL(2, q)."""
    if q <= 3:
        raise ValueError("q must exceed 3")
    return _translate_scale_invert(q, lambda F: F.mul(F.primitive, F.primitive))


def pgl2_generators(q: int) -> list[Permutation]:
    """``x+1``, ``l x`` and ``-1/x``: generators of PGL(2, q)."""
    if q <= 3:
        raise ValueError("q must exceed 3")
    return _translate_scale_invert(q, lambda F: F.primitive)


def frobenius_generator(q: int) -> Permutation:
    """``x -> x^p`` on the projective line."""
    F = GF(q)
    return projective_map(F, 1, 0, 0, 1, frob=1)


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // (1 if q % 2 == 0 else 2)
