"""Permutation groups backed by a deterministic Schreier-Sims stabilizer chain.

Internally group elements are plain tuples of 0-based images; the public
API accepts and returns :class:`~edgeprim.perm.Permutation` objects.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .config import DEFAULT_LIMITS, BoundExceeded, Limits
from .numtheory import is_prime, p_part
from .perm import Permutation, PermutationError, parse_permutation


class GroupError(ValueError):
    pass


# ---------------------------------------------------------------- tuple helpers

def _mul(a, b):
    """Apply ``a`` then ``b``."""
    return tuple(map(b.__getitem__, a))


def _inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def _least_moved(a):
    for i, j in enumerate(a):
        if i != j:
            return i
    return -1


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _as_tuple(g, degree: int | None = None):
    t = g.images if isinstance(g, Permutation) else tuple(g)
    if degree is not None and len(t) != degree:
        raise GroupError(f"degree mismatch: {len(t)} vs {degree}")
    return t


# ---------------------------------------------------------------- chain

class StabilizerChain:
    """Base and strong generating set.

    Level ``i`` stores the strong generators fixing ``base[:i]``, the
    fundamental orbit of ``base[i]`` (in discovery order) and a transversal
    mapping ``base[i]`` to each orbit point.
    """

    def __init__(self, degree: int, generators: Iterable = (), *,
                 base_prefix: Sequence[int] = (), known_order: int | None = None):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base: list[int] = []
        self.gens: list[list[tuple]] = []
        self.orbits: list[list[int]] = []
        self.trans: list[dict[int, tuple]] = []
        self._tinv: list[dict[int, tuple]] = []
        self._checked: list[set] = []
        for b in base_prefix:
            self._new_level(b)
        gens = []
        seen = set()
        for g in generators:
            t = _as_tuple(g, degree)
            if t != self.identity and t not in seen:
                seen.add(t)
                gens.append(t)
        self._known_order = known_order
        if gens:
            self._add_strong(gens)

    # -- construction

    def _new_level(self, point):
        self.base.append(point)
        self.gens.append([])
        self.orbits.append([point])
        self.trans.append({point: self.identity})
        self._tinv.append({point: self.identity})
        self._checked.append(set())

    def _extend_orbit(self, level, new_gens):
        orbit = self.orbits[level]
        trans = self.trans[level]
        gens = self.gens[level]
        old = len(orbit)
        for i in range(old):
            x = orbit[i]
            u = trans[x]
            for s in new_gens:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(u, s)
                    orbit.append(y)
        i = old
        while i < len(orbit):
            x = orbit[i]
            u = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(u, s)
                    orbit.append(y)
            i += 1

    def _uinv(self, level, point):
        d = self._tinv[level]
        v = d.get(point)
        if v is None:
            v = _inv(self.trans[level][point])
            d[point] = v
        return v

    def sift(self, g, start: int = 0):
        """Return ``(residue, level)`` where sifting stopped."""
        base = self.base
        for lvl in range(start, len(base)):
            pt = g[base[lvl]]
            if pt not in self.trans[lvl]:
                return g, lvl
            if pt != base[lvl]:
                g = _mul(g, self._uinv(lvl, pt))
        return g, len(base)

    def _install(self, h, upto):
        """Add strong generator ``h`` to levels ``0..upto``."""
        if upto == len(self.base):
            self._new_level(_least_moved(h))
        for lvl in range(upto + 1):
            self.gens[lvl].append(h)
            self._extend_orbit(lvl, [h])

    def _add_strong(self, gens):
        """Insert generators and restore the strong generation property."""
        lowest = None
        for g in gens:
            h, j = self.sift(g)
            if h == self.identity:
                continue
            if all(h[b] == b for b in self.base):
                j = len(self.base)
            self._install(h, j)
            lowest = j if lowest is None else max(lowest, j)
        if lowest is None:
            return
        self._complete(len(self.base) - 1)

    def _done_by_order(self):
        return self._known_order is not None and self.order() == self._known_order

    def _complete(self, i):
        ident = self.identity
        while i >= 0:
            if self._done_by_order():
                return
            restart = False
            orbit = self.orbits[i]
            trans = self.trans[i]
            checked = self._checked[i]
            gens = self.gens[i]
            pos = 0
            while pos < len(orbit) and not restart:
                beta = orbit[pos]
                u = trans[beta]
                for si in range(len(gens)):
                    key = (beta, si)
                    if key in checked:
                        continue
                    checked.add(key)
                    s = gens[si]
                    us = _mul(u, s)
                    gamma = s[beta]
                    if us == trans[gamma]:
                        continue
                    h = _mul(us, self._uinv(i, gamma))
                    h, j = self.sift(h, i + 1)
                    if h == ident:
                        continue
                    self._install(h, j)
                    if self._done_by_order():
                        return
                    i = j if j < len(self.base) else len(self.base) - 1
                    restart = True
                    break
                pos += 1
            if not restart:
                i -= 1

    def add_generators(self, gens: Iterable) -> bool:
        """Extend the group; returns True if it grew."""
        before = self.order()
        self._known_order = None
        self._add_strong([_as_tuple(g, self.degree) for g in gens])
        return self.order() != before

    def copy(self) -> StabilizerChain:
        c = StabilizerChain.__new__(StabilizerChain)
        c.degree = self.degree
        c.identity = self.identity
        c.base = list(self.base)
        c.gens = [list(x) for x in self.gens]
        c.orbits = [list(x) for x in self.orbits]
        c.trans = [dict(x) for x in self.trans]
        c._tinv = [dict(x) for x in self._tinv]
        c._checked = [set(x) for x in self._checked]
        c._known_order = None
        return c

    def subchain(self, level: int) -> StabilizerChain:
        """Chain of the stabilizer of ``base[:level]`` (shares no state)."""
        c = StabilizerChain.__new__(StabilizerChain)
        c.degree = self.degree
        c.identity = self.identity
        c.base = list(self.base[level:])
        c.gens = [list(x) for x in self.gens[level:]]
        c.orbits = [list(x) for x in self.orbits[level:]]
        c.trans = [dict(x) for x in self.trans[level:]]
        c._tinv = [dict(x) for x in self._tinv[level:]]
        c._checked = [set(x) for x in self._checked[level:]]
        c._known_order = None
        return c

    # -- queries

    def order(self) -> int:
        return math.prod(len(o) for o in self.orbits)

    def contains(self, g) -> bool:
        h, _ = self.sift(g)
        return h == self.identity

    def strong_generators(self) -> list[tuple]:
        return list(self.gens[0]) if self.gens else []

    def level_generators(self, level: int) -> list[tuple]:
        if level >= len(self.base):
            return []
        return list(self.gens[level])

    def elements(self) -> Iterator[tuple]:
        """Every element once, as products ``u_{k-1} ... u_0``."""
        k = len(self.base)
        if k == 0:
            yield self.identity
            return
        reps = [[self.trans[i][p] for p in self.orbits[i]] for i in range(k)]

        def rec(level, acc):
            if level < 0:
                yield acc
                return
            for u in reps[level]:
                yield from rec(level - 1, _mul(acc, u))

        yield from rec(k - 1, self.identity)

    def random_element(self, rng):
        g = self.identity
        for i in reversed(range(len(self.base))):
            g = _mul(g, self.trans[i][rng.choice(self.orbits[i])])
        return g

    def canonical_coset_rep(self, x):
        """Minimal-image representative of the right coset ``H x``, where
        this chain belongs to ``H``.

        Descending the chain, at each level the element of the current
        basic orbit whose image under ``x`` is least is moved onto the base
        point. Two elements give the same result iff their cosets agree.
        """
        for lvl in range(len(self.base)):
            orbit = self.orbits[lvl]
            best = min(orbit, key=x.__getitem__)
            if best != self.base[lvl]:
                x = _mul(self.trans[lvl][best], x)
        return x


# ---------------------------------------------------------------- groups

class PermGroup:
    """A permutation group given by generators; chain built on demand."""

    def __init__(self, generators: Iterable = (), degree: int | None = None, *,
                 order: int | None = None, base: Sequence[int] = (),
                 chain: StabilizerChain | None = None):
        gens = []
        seen = set()
        for g in generators:
            t = _as_tuple(g)
            if degree is None:
                degree = len(t)
            if len(t) != degree:
                raise GroupError(f"generator degree {len(t)} differs from {degree}")
            if t not in seen and any(i != j for i, j in enumerate(t)):
                seen.add(t)
                gens.append(t)
        if degree is None:
            if chain is None:
                raise GroupError("degree required for a group without generators")
            degree = chain.degree
        self.degree = degree
        self._gens = gens
        self._known_order = order
        self._base_prefix = tuple(base)
        self._chain = chain
        self._base_chains: dict[tuple, StabilizerChain] = {}

    # -- basics

    @property
    def generators(self) -> list[Permutation]:
        return [Permutation(g, check=False) for g in self._gens]

    @property
    def gens(self) -> list[tuple]:
        return list(self._gens)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self._gens,
                                          base_prefix=self._base_prefix,
                                          known_order=self._known_order)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def __len__(self):
        return self.order()

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return not self._gens

    def contains(self, a) -> bool:
        t = _as_tuple(a)
        if len(t) != self.degree:
            raise GroupError(f"degree mismatch: {len(t)} vs {self.degree}")
        return self.chain.contains(t)

    __contains__ = contains

    def random_element(self, rng) -> Permutation:
        return Permutation(self.chain.random_element(rng), check=False)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self._gens)})"

    # -- orbits

    def orbit(self, p: int) -> list[int]:
        return list(self.orbit_transversal(p))

    def orbit_transversal(self, p: int) -> dict[int, Permutation]:
        """Map each orbit point ``q`` to some ``t`` with ``p^t = q``."""
        if not 0 <= p < self.degree:
            raise GroupError(f"point {p} out of range")
        ident = tuple(range(self.degree))
        trans = {p: ident}
        queue = [p]
        for x in queue:
            u = trans[x]
            for s in self._gens:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(u, s)
                    queue.append(y)
        return {q: Permutation(t, check=False) for q, t in trans.items()}

    def orbits(self) -> list[list[int]]:
        from . import kernels

        labels = kernels.orbit_labels(self._gens, self.degree)
        out: dict[int, list[int]] = {}
        for x, lab in enumerate(labels):
            out.setdefault(lab, []).append(x)
        return list(out.values())

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    # -- base change and stabilizers

    def chain_with_base(self, prefix: Sequence[int]) -> StabilizerChain:
        """A chain whose base starts with ``prefix`` (cached)."""
        prefix = tuple(prefix)
        ch = self.chain
        if tuple(ch.base[:len(prefix)]) == prefix:
            return ch
        got = self._base_chains.get(prefix)
        if got is None:
            got = StabilizerChain(self.degree, ch.strong_generators(),
                                  base_prefix=prefix, known_order=ch.order())
            self._base_chains[prefix] = got
        return got

    def pointwise_stabilizer(self, points: Sequence[int]) -> PermGroup:
        points = list(dict.fromkeys(points))
        for p in points:
            if not 0 <= p < self.degree:
                raise GroupError(f"point {p} out of range")
        if not points:
            return self
        ch = self.chain_with_base(points)
        sub = ch.subchain(len(points))
        return PermGroup(sub.strong_generators(), self.degree, chain=sub)

    def point_stabilizer(self, p: int) -> PermGroup:
        return self.pointwise_stabilizer([p])

    def setwise_stabilizer_pair(self, u: int, v: int) -> PermGroup:
        """Stabilizer of the unordered pair ``{u, v}``.

        The arc stabilizer plus, when one exists, an element swapping the
        two points: with ``u^t = v`` and ``w = u^(t^-1)``, any ``h`` in the
        stabilizer of ``u`` sending ``v`` to ``w`` gives the swap ``h t``.
        """
        if u == v:
            raise GroupError("pair points must differ")
        arc = self.pointwise_stabilizer([u, v])
        orb_u = self.orbit_transversal(u)
        if v not in orb_u:
            return arc
        t = orb_u[v].images
        w = _inv(t)[u]
        gu = self.point_stabilizer(u)
        orb = gu.orbit_transversal(v)
        if w not in orb:
            return arc
        swap = _mul(orb[w].images, t)
        return PermGroup(arc.gens + [swap], self.degree,
                         order=2 * arc.order())

    def setwise_stabilizer(self, points: Sequence[int]) -> PermGroup:
        """Setwise stabilizer by backtrack; for small sets only."""
        target = frozenset(points)
        return self.subgroup_search(
            prefix_ok=lambda pairs: all((b in target) == (g in target)
                                        for b, g in pairs),
            element_ok=lambda g: all(g[p] in target for p in target),
            base=sorted(target),
        )

    # -- subgroup relations

    def is_subgroup(self, H: PermGroup) -> bool:
        """Is ``H`` a subgroup of this group?"""
        if H.degree != self.degree:
            return False
        return all(self.chain.contains(g) for g in H._gens)

    def _require_sub(self, H):
        if not self.is_subgroup(H):
            raise GroupError("subgroup is not contained in the group")

    def index(self, H: PermGroup) -> int:
        self._require_sub(H)
        return self.order() // H.order()

    def is_normal(self, H: PermGroup) -> bool:
        self._require_sub(H)
        hc = H.chain
        for h in H._gens:
            for g in self._gens:
                if not hc.contains(_mul(_mul(_inv(g), h), g)):
                    return False
        return True

    def conjugate(self, g) -> PermGroup:
        """``g^-1 G g``."""
        t = _as_tuple(g, self.degree)
        ti = _inv(t)
        return PermGroup([_mul(_mul(ti, s), t) for s in self._gens], self.degree,
                         order=self._chain.order() if self._chain else None)

    def join(self, other: PermGroup) -> PermGroup:
        return PermGroup(self._gens + other._gens, self.degree)

    # -- closures and series

    def normal_closure(self, S: Iterable) -> PermGroup:
        """Smallest normal subgroup of this group containing ``S``."""
        elems = [_as_tuple(s, self.degree) for s in S]
        for s in elems:
            if not self.chain.contains(s):
                raise GroupError("element is not in the group")
        return PermGroup(self._closure_gens(elems), self.degree)

    def _closure_gens(self, elems, chain: StabilizerChain | None = None):
        ident = tuple(range(self.degree))
        if chain is None:
            chain = StabilizerChain(self.degree)
        gens = []
        queue = []
        for s in elems:
            if s != ident and not chain.contains(s):
                chain.add_generators([s])
                gens.append(s)
                queue.append(s)
        ginv = [_inv(g) for g in self._gens]
        while queue:
            x = queue.pop()
            for g, gi in zip(self._gens, ginv):
                c = _mul(_mul(gi, x), g)
                if not chain.contains(c):
                    chain.add_generators([c])
                    gens.append(c)
                    queue.append(c)
        return gens

    def derived_subgroup(self) -> PermGroup:
        comms = []
        gs = self._gens
        for i, a in enumerate(gs):
            ai = _inv(a)
            for b in gs[i + 1:]:
                bi = _inv(b)
                comms.append(_mul(_mul(ai, bi), _mul(a, b)))
        return PermGroup(self._closure_gens(comms), self.degree)

    def derived_series(self) -> list[PermGroup]:
        series = [self]
        while True:
            cur = series[-1]
            if cur.order() == 1:
                return series
            nxt = cur.derived_subgroup()
            if nxt.order() == cur.order():
                return series
            series.append(nxt)

    def is_soluble(self) -> bool:
        return self.derived_series()[-1].order() == 1

    def is_abelian(self) -> bool:
        gs = self._gens
        return all(_mul(a, b) == _mul(b, a) for i, a in enumerate(gs) for b in gs[i + 1:])

    # -- enumeration, cores

    def enumerate_elements(self, bound: int | None = None) -> Iterator[Permutation]:
        for t in self._elements(bound):
            yield Permutation(t, check=False)

    def _elements(self, bound=None):
        bound = DEFAULT_LIMITS.enumeration if bound is None else bound
        n = self.order()
        if n > bound:
            raise BoundExceeded("enumeration", bound, n)
        return self.chain.elements()

    def _conjugacy_class_capped(self, g, cap):
        """The class of ``g`` and whether it was complete (size at most ``cap``)."""
        cls = {g}
        queue = [g]
        ginv = [_inv(s) for s in self._gens]
        for x in queue:
            for s, si in zip(self._gens, ginv):
                c = _mul(_mul(si, x), s)
                if c not in cls:
                    cls.add(c)
                    if len(cls) > cap:
                        return cls, False
                    queue.append(c)
        return cls, True

    def p_core(self, p: int, bound: int | None = None) -> PermGroup:
        """Largest normal p-subgroup.

        A p-element lies in it exactly when its normal closure is a p-group;
        the candidates come from a full element enumeration.
        """
        if not is_prime(p):
            raise GroupError(f"{p} is not prime")
        order = self.order()
        pa = p_part(order, p)
        if pa == 1:
            return PermGroup([], self.degree)
        ident = self.chain.identity
        core = StabilizerChain(self.degree)
        gens: list[tuple] = []
        rejected: set = set()
        for g in self._elements(bound):
            if g == ident or g in rejected or core.contains(g):
                continue
            if not _is_p_power(Permutation(g, check=False).order(), p):
                continue
            cls, complete = self._conjugacy_class_capped(g, pa)
            if not complete:
                rejected |= cls
                continue
            trial = core.copy()
            ok = True
            added = []
            for c in cls:
                if not trial.contains(c):
                    trial.add_generators([c])
                    added.append(c)
                    if not _is_p_power(trial.order(), p) or trial.order() > pa:
                        ok = False
                        break
            if ok:
                core = trial
                gens.extend(added)
                if core.order() == pa:
                    break
            else:
                rejected |= cls
        result = PermGroup(gens, self.degree, chain=core)
        if not (_is_p_power(result.order(), p) and self.is_normal(result)):
            raise AssertionError("p-core certification failed")
        return result

    def fitting_subgroup(self, bound: int | None = None) -> PermGroup:
        from .numtheory import prime_factors

        gens = []
        for r in sorted(prime_factors(self.order())):
            gens.extend(self.p_core(r, bound)._gens)
        return PermGroup(gens, self.degree)

    def normal_sylow_lift_check(self, H: PermGroup, p: int) -> bool:
        """Given ``H`` with a normal Sylow p-subgroup ``P``, report whether
        ``P`` is also Sylow in this group (orders only)."""
        P = H.p_core(p)
        if P.order() != p_part(H.order(), p) or P.order() == 1:
            raise GroupError(f"subgroup has no nontrivial normal Sylow {p}-subgroup")
        return p_part(self.order(), p) == P.order()

    # -- backtrack

    def subgroup_search(self, prefix_ok, element_ok, base: Sequence[int] = (),
                        node_budget: int | None = None) -> PermGroup:
        """Subgroup ``{g : element_ok(g)}`` by backtrack over the chain.

        ``prefix_ok`` receives the partial base image as ``[(b_i, g_i)...]``
        and must return False only when no element with that prefix has the
        property. The property must define a subgroup.
        """
        budget = DEFAULT_LIMITS.backtrack_nodes if node_budget is None else node_budget
        ch = self.chain_with_base(tuple(base)) if base else self.chain
        k = len(ch.base)
        ident = ch.identity
        found: list[tuple] = []
        nodes = 0

        def dfs(level, acc, pairs):
            # acc = x_{level-1} ... x_l; images so far are in pairs
            nonlocal nodes
            if level == k:
                return acc if element_ok(acc) else None
            b = ch.base[level]
            for delta in ch.orbits[level]:
                nodes += 1
                if nodes > budget:
                    raise BoundExceeded("backtrack_nodes", budget)
                gamma = acc[delta]
                np_ = pairs + [(b, gamma)]
                if not prefix_ok(np_):
                    continue
                res = dfs(level + 1, _mul(ch.trans[level][delta], acc), np_)
                if res is not None:
                    return res
            return None

        for level in reversed(range(k)):
            b = ch.base[level]
            fixed = [(ch.base[i], ch.base[i]) for i in range(level)]
            orbit_r = {b}

            def grow():
                queue = list(orbit_r)
                for x in queue:
                    for s in found:
                        y = s[x]
                        if y not in orbit_r:
                            orbit_r.add(y)
                            queue.append(y)

            grow()
            for delta in ch.orbits[level]:
                if delta in orbit_r:
                    continue
                pairs = fixed + [(b, delta)]
                nodes += 1
                if not prefix_ok(pairs):
                    continue
                g = dfs(level + 1, ch.trans[level][delta], pairs)
                if g is not None and g != ident:
                    found.append(g)
                    grow()
        return PermGroup(found, self.degree)

    def intersection(self, other: PermGroup, node_budget: int | None = None) -> PermGroup:
        """Exact intersection with ``other`` by backtrack, pruned by partial
        membership in ``other``."""
        if other.degree != self.degree:
            raise GroupError("degree mismatch")
        if self.is_subgroup(other):
            return other
        if other.is_subgroup(self):
            return self
        base = tuple(self.chain.base)
        oc = other.chain_with_base(base)

        def prefix_ok(pairs):
            m = None
            for i, (_, gamma) in enumerate(pairs):
                t = gamma if m is None else m[gamma]
                tr = oc.trans[i]
                if t not in tr:
                    return False
                if t != oc.base[i]:
                    ui = oc._uinv(i, t)
                    m = ui if m is None else _mul(m, ui)
            return True

        return self.subgroup_search(prefix_ok, oc.contains, base=base,
                                    node_budget=node_budget)


def build_chain(generators: Sequence) -> PermGroup:
    """Group generated by a nonempty list of equal-degree permutations."""
    gens = list(generators)
    if not gens:
        raise GroupError("empty generator list")
    degs = {len(_as_tuple(g)) for g in gens}
    if len(degs) != 1:
        raise GroupError("generators have different degrees")
    G = PermGroup(gens, degs.pop())
    G.chain
    return G


# ---------------------------------------------------------------- generator files

def parse_generator_text(text: str) -> tuple[int, list[Permutation]]:
    degree = None
    perms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            key, _, val = line.partition(":")
            if key.strip() != "degree" or not val.strip().isdigit():
                raise GroupError(f"line {lineno}: expected 'degree: N'")
            degree = int(val)
            if degree < 1:
                raise GroupError(f"line {lineno}: degree must be positive")
            continue
        try:
            perms.append(parse_permutation(line, degree))
        except PermutationError as exc:
            raise GroupError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise GroupError("missing 'degree: N' line")
    return degree, perms


def read_generators(path) -> PermGroup:
    degree, perms = parse_generator_text(Path(path).read_text())
    return PermGroup(perms, degree)


def format_generators(G: PermGroup, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"degree: {G.degree}")
    lines.extend(str(g) for g in G.generators)
    return "\n".join(lines) + "\n"


def write_generators(path, G: PermGroup, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_generators(G, comments))


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([], 1)
    gens = [Permutation.from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(n))], n))
    return PermGroup(gens, n)


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([], n)
    gens = [Permutation.from_cycles([(i, i + 1, i + 2)], n) for i in range(n - 2)]
    return PermGroup(gens, n)


def cyclic_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([], 1)
    return PermGroup([Permutation.from_cycles([tuple(range(n))], n)], n)


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of an n-gon (order 2n) acting on its n vertices."""
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, ref], n)
