"""Integer arithmetic: primality, factorization, p-parts and Zsigmondy primes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .config import BoundExceeded

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases.

    Deterministic below 3.3e24; beyond that a composite passing all bases is
    not known to exist.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, budget: int) -> int | None:
    """A nontrivial factor of composite ``n`` (Brent's variant) or None
    when ``budget`` iterations run out."""
    if n % 2 == 0:
        return 2
    spent = 0
    for c in range(1, 50):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
                spent += 128
                if spent > budget:
                    return None
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


def factorize(n: int, *, trial_limit: int = 10**6, rho_budget: int = 10**7) -> dict[int, int]:
    """Prime factorization ``{prime: exponent}`` of a positive integer.

    Trial division by primes up to ``trial_limit``, then Pollard rho on the
    cofactor. Raises :class:`BoundExceeded` when rho runs out of budget.
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in _primes_upto(min(trial_limit, math.isqrt(n) + 1)):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _pollard_rho(m, rho_budget)
        if f is None:
            raise BoundExceeded("factorization", rho_budget, None)
        stack += [f, m // f]
    return dict(sorted(out.items()))


_SIEVE: list[int] = []
_SIEVE_LIMIT = 1


def _primes_upto(n: int) -> list[int]:
    global _SIEVE, _SIEVE_LIMIT
    if n > _SIEVE_LIMIT:
        flags = bytearray([1]) * (n + 1)
        flags[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(n) + 1):
            if flags[i]:
                flags[i * i::i] = bytearray(len(flags[i * i::i]))
        _SIEVE = [i for i, f in enumerate(flags) if f]
        _SIEVE_LIMIT = n
    return _SIEVE


def prime_factors(n: int) -> list[int]:
    return list(factorize(n))


def p_part(n: int, p: int) -> int:
    """Largest power of the prime ``p`` dividing ``n``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("p_part expects a positive integer")
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, f)`` with ``q = p^f``, or None."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    ((p, f),) = fac.items()
    return p, f


def _mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def cyclotomic_value(f: int, a: int) -> int:
    """The cyclotomic polynomial of index ``f`` evaluated at ``a``."""
    num, den = 1, 1
    for d in range(1, f + 1):
        if f % d:
            continue
        mu = _mobius(f // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    return num // den


# -------------------------------------------------------------- Zsigmondy

EXC_NONE = "none"
EXC_64 = "a_f_is_64"
EXC_MERSENNE = "f2_mersenne"

MAX_BASE = 2**16
MAX_EXPONENT = 64


@dataclass(frozen=True)
class PpdResult:
    a: int
    f: int
    primes: frozenset = field(default_factory=frozenset)
    is_exception: bool = False
    exception_kind: str = EXC_NONE

    def describe(self) -> str:
        if self.primes:
            return " ".join(str(r) for r in sorted(self.primes))
        if self.exception_kind == EXC_64:
            return "no primitive prime (exception 2^6)"
        if self.exception_kind == EXC_MERSENNE:
            t = (self.a + 1).bit_length() - 1
            return f"no primitive prime (exception f=2, {self.a} = 2^{t}-1)"
        return "no primitive prime"


def multiplicative_order(a: int, r: int) -> int:
    """Order of ``a`` modulo the prime ``r`` (``a`` coprime to ``r``)."""
    n = r - 1
    order = n
    for p in factorize(n):
        while order % p == 0 and pow(a, order // p, r) == 1:
            order //= p
    return order


def primitive_prime_divisors(a: int, f: int) -> PpdResult:
    """Primes dividing ``a^f - 1`` but no ``a^e - 1`` with ``e < f``.

    Every such prime divides the cyclotomic value at index ``f``, so only
    that number is factored; each candidate is then screened directly
    against ``a^e - 1`` for all smaller ``e``.
    """
    if a < 2 or f < 1:
        raise ValueError("need a >= 2 and f >= 1")
    if a > MAX_BASE:
        raise BoundExceeded("zsigmondy base", MAX_BASE, a)
    if f > MAX_EXPONENT:
        raise BoundExceeded("zsigmondy exponent", MAX_EXPONENT, f)
    primes = set()
    for r in factorize(cyclotomic_value(f, a)):
        if all(pow(a, e, r) != 1 for e in range(1, f)):
            primes.add(r)
    kind = EXC_NONE
    if not primes and f > 1:
        if (a, f) == (2, 6):
            kind = EXC_64
        elif f == 2 and (a + 1) & a == 0:
            kind = EXC_MERSENNE
        else:
            raise AssertionError(f"no primitive prime for ({a}, {f}) outside the known exceptions")
    return PpdResult(a, f, frozenset(primes), kind != EXC_NONE, kind)


def ppd_divisibility(a: int, f: int, f2: int) -> bool:
    """Whether ``f`` divides ``f2``, confirmed by checking that every
    primitive prime of ``a^f - 1`` divides ``a^f2 - 1`` exactly then."""
    res = primitive_prime_divisors(a, f)
    if not res.primes:
        raise ValueError(f"a^f - 1 has no primitive prime divisor for (a, f) = ({a}, {f})")
    expected = f2 % f == 0
    for r in res.primes:
        if (pow(a, f2, r) == 1) != expected:
            raise AssertionError(f"prime {r}: divisibility of {a}^{f2}-1 disagrees with {f} | {f2}")
    return expected


def ppd_order_property(a: int, f: int) -> bool:
    """Every primitive prime ``r`` of ``a^f - 1`` satisfies ``r = 1 mod f``."""
    return all((r - 1) % f == 0 for r in primitive_prime_divisors(a, f).primes)


def __getattr__(name):
    # projective-line generators live with the field code, which imports us
    if name in ("psl2_generators", "pgl2_generators", "psl2_order"):
        from . import fields
        return getattr(fields, name)
    raise AttributeError(name)
