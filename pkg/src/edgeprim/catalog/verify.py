"""Certify a catalog triple ``(G, H, K)`` end to end.

Every check runs on its own and records one of four statuses:

* ``pass`` / ``fail``;
* ``skipped``: a resource bound or an unmet precondition prevented the check;
* ``blocked``: a check it depends on failed, so it was not attempted.

A report passes when no check failed or was blocked.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .. import cosetgraph as cg
from ..actions import coset_action, extend_by_orbits, is_2_transitive
from ..config import DEFAULT_LIMITS, BoundExceeded, Limits
from ..fields import pgl2_generators, psl2_generators
from ..groups import GroupError, PermGroup, _mul, read_generators
from ..numtheory import factorize, p_part, prime_power
from .manifest import CatalogEntry, load_catalog

PASS, FAIL, SKIPPED, BLOCKED = "pass", "fail", "skipped", "blocked"

CHECKS = ("orders", "index2", "core_free", "connected", "valency", "counts", "shape",
          "local_2transitive", "edge_stab_order", "edge_primitive", "s_exact",
          "local_orders", "solubility", "prime_cores", "fitting", "sylow_lift")


@dataclass
class CheckResult:
    status: str
    detail: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    entry_id: str
    checks: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    seconds: float = 0.0
    error: str | None = None

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return "error"
        if all(c.status in (PASS, SKIPPED) for c in self.checks.values()):
            return PASS
        return FAIL

    @property
    def failed(self) -> list[str]:
        return [k for k, c in self.checks.items() if c.status in (FAIL, BLOCKED)]

    def without_timings(self) -> VerificationReport:
        checks = {k: CheckResult(c.status, c.detail, 0.0) for k, c in self.checks.items()}
        values = {k: v for k, v in self.values.items() if not k.endswith("_seconds")}
        return VerificationReport(self.entry_id, checks, values, 0.0, self.error)


class _Skip(Exception):
    pass


class _Runner:
    def __init__(self, report: VerificationReport):
        self.report = report

    def status(self, name):
        c = self.report.checks.get(name)
        return None if c is None else c.status

    def run(self, name, fn, needs=()):
        for dep in needs:
            st = self.status(dep)
            if st in (FAIL, BLOCKED):
                self.report.checks[name] = CheckResult(BLOCKED, f"needs {dep}")
                return
            if st == SKIPPED:
                self.report.checks[name] = CheckResult(SKIPPED, f"needs {dep}")
                return
        t = time.perf_counter()
        try:
            ok, detail = fn()
            status = PASS if ok else FAIL
        except BoundExceeded as exc:
            status, detail = SKIPPED, str(exc)
        except _Skip as exc:
            status, detail = SKIPPED, str(exc)
        except (cg.GraphError, GroupError, AssertionError) as exc:
            status, detail = FAIL, f"{type(exc).__name__}: {exc}"
        self.report.checks[name] = CheckResult(status, detail, round(time.perf_counter() - t, 4))


def _expect(detail, got, want):
    if want is None:
        return True, detail
    if got != want:
        return False, f"{detail} (expected {want})"
    return True, detail


def verify_triple(G: PermGroup, H: PermGroup, K: PermGroup,
                  expect: CatalogEntry | None = None, *, entry_id: str | None = None,
                  limits: Limits = DEFAULT_LIMITS, s_max: int = 5) -> VerificationReport:
    """Run every check on ``(G, H, K)``, comparing with ``expect`` where it
    records a value."""
    exp = expect if expect is not None else CatalogEntry(id=entry_id or "triple", tier="1")
    report = VerificationReport(entry_id or exp.id)
    vals = report.values
    run = _Runner(report)
    state: dict = {}
    t0 = time.perf_counter()

    def orders():
        vals.update(group_order=G.order(), h_order=H.order(), k_order=K.order())
        if not (G.is_subgroup(H) and G.is_subgroup(K)):
            return False, "H or K is not a subgroup of G"
        got = (G.order(), H.order(), K.order())
        want = (exp.expected_group_order, exp.expected_h_order, exp.expected_k_order)
        detail = "|G|={} |H|={} |K|={}".format(*got)
        if any(w is not None and w != x for x, w in zip(got, want)):
            return False, detail + " (expected {} {} {})".format(*want)
        return True, detail

    def index2():
        if not (G.is_subgroup(H) and G.is_subgroup(K)):
            return False, "H or K is not a subgroup of G"
        # the orbit of the coset H under K has length |K : H & K|
        hc = H.chain
        start = hc.canonical_coset_rep(G.chain.identity)
        ext = extend_by_orbits(K, [start], lambda c, g: hc.canonical_coset_rep(_mul(c, g)))
        n = len(ext.objects)
        vals["k_over_hk"] = n
        return n == 2, f"|K : H & K| = {n}"

    run.run("orders", orders)
    run.run("index2", index2)
    if run.status("index2") == PASS:
        t = time.perf_counter()
        try:
            state["g"] = cg.build(G, H, K, limits)
        except BoundExceeded as exc:
            report.error = str(exc)
        vals["build_seconds"] = round(time.perf_counter() - t, 4)
    g = state.get("g")

    if g is None:
        status, why = (SKIPPED, "graph not built") if report.error else (BLOCKED, "needs index2")
        for name in CHECKS:
            report.checks.setdefault(name, CheckResult(status, why))
        report.seconds = round(time.perf_counter() - t0, 4)
        return report
    report.checks["graph"] = CheckResult(PASS, f"{g.vertex_count} vertices, {g.edge_count} edges",
                                         vals["build_seconds"])

    def core_free():
        ok = cg.is_core_free(g)
        return ok, "H is core-free" if ok else "H contains a normal subgroup of G"

    def connected():
        bfs = cg.is_connected(g)
        gen = cg.generated_by_h_and_k(g)
        vals["connected"] = bfs
        if bfs != gen:
            return False, f"BFS says {bfs}, <H, K> = G says {gen}"
        if not bfs:
            sizes = sorted(len(c) for c in cg.components(g))
            return False, f"{len(sizes)} components of sizes {sizes[:8]}"
        return True, "connected"

    def valency():
        d = cg.valency(g)
        vals["valency"] = d
        hk = H.order() // g.h_cap_k.order()
        if d != hk:
            return False, f"d={d} but |H : H & K| = {hk}"
        if d < 3:
            return False, f"d={d} below 3"
        return _expect(f"d={d}", d, exp.expected_valency_d)

    def counts():
        nv, ne, d = g.vertex_count, g.edge_count, cg.valency(g)
        vals.update(vertex_count=nv, edge_count=ne)
        detail = f"|V|={nv} |E|={ne}"
        if nv != G.order() // H.order() or ne != G.order() // K.order():
            return False, detail + " (not |G:H|, |G:K|)"
        if nv * d != 2 * ne:
            return False, detail + " (handshake fails)"
        ok1, _ = _expect("", nv, exp.expected_vertex_count)
        ok2, _ = _expect("", ne, exp.expected_edge_count)
        if not (ok1 and ok2):
            return False, f"{detail} (expected |V|={exp.expected_vertex_count} |E|={exp.expected_edge_count})"
        return True, detail

    def shape():
        sh = cg.classify_shape(g)
        bip = cg.is_bipartite(g)
        vals.update(shape=str(sh), bipartite=bip)
        detail = f"{sh}{', bipartite' if bip else ''}"
        if exp.expected_shape is not None and cg.Shape.parse(exp.expected_shape) != sh:
            return False, f"{detail} (expected {exp.expected_shape})"
        if exp.expected_bipartite is not None and bip != exp.expected_bipartite:
            return False, f"{detail} (expected bipartite={exp.expected_bipartite})"
        return True, detail

    run.run("core_free", core_free)
    run.run("connected", connected)
    run.run("valency", valency)
    run.run("counts", counts, needs=("valency",))
    run.run("shape", shape, needs=("valency",))

    def edge_stab():
        E = cg.edge_stabilizer(g)
        state["E"] = E
        vals["edge_stab_order"] = E.order()
        u, v = g.base_edge
        for k in K.gens:
            if {g.vertex_image(u, k), g.vertex_image(v, k)} != {u, v}:
                return False, "a generator of K moves the base edge"
        if E.order() != K.order():
            return False, f"|G_{{u,v}}|={E.order()} but |K|={K.order()}"
        return _expect(f"|G_{{u,v}}|={E.order()}", E.order(), exp.expected_k_order)

    def edge_primitive():
        ok = cg.is_edge_primitive(g)
        vals["edge_primitive"] = ok
        return ok, "edge action primitive" if ok else "edge action imprimitive"

    def s_exact():
        s = cg.max_arc_transitivity(g, s_max)
        vals["s"] = s
        if exp.expected_s is not None:
            return s == exp.expected_s, f"s={s} (expected {exp.expected_s})"
        return s >= exp.expected_s_min, f"s={s} (expected at least {exp.expected_s_min})"

    run.run("edge_stab_order", edge_stab)
    run.run("edge_primitive", edge_primitive)
    run.run("s_exact", s_exact, needs=("connected", "valency"))

    def local():
        ls = cg.local_structure(g, bound=limits.enumeration, edge_stab=state.get("E"))
        state["ls"] = ls
        vals.update(vertex_stab_order=ls.vertex_stab_order, local_group_order=ls.local_group_order,
                    kernel_order=ls.kernel_order, arc_kernel_order=ls.arc_kernel_order,
                    edge_over_arc_index=ls.edge_over_arc_index)
        msgs = []
        if not ls.first_isomorphism_holds:
            msgs.append("|G_v| != |G_v^[1]| |G_v^Gamma(v)|")
        if ls.edge_over_arc_index != 2:
            msgs.append(f"|G_{{u,v}} : G_uv| = {ls.edge_over_arc_index}")
        detail = (f"|G_v|={ls.vertex_stab_order} = {ls.kernel_order} x {ls.local_group_order}, "
                  f"|G_{{u,v}} : G_uv| = {ls.edge_over_arc_index}")
        return not msgs, "; ".join(msgs) if msgs else detail

    run.run("local_orders", local, needs=("edge_stab_order",))

    def local_2trans():
        ls = state.get("ls")
        if ls is None:
            raise _Skip("local structure unavailable")
        act = coset_action(H, g.h_cap_k)
        cond2 = is_2_transitive(act)
        vals["local_2transitive"] = cond2
        if cond2 != ls.local_2transitive:
            return False, (f"H on [H : H & K] 2-transitive={cond2}, "
                           f"G_v on Gamma(v) 2-transitive={ls.local_2transitive}")
        return cond2, "2-transitive" if cond2 else "not 2-transitive"

    def solubility():
        ls = state["ls"]
        vals.update(edge_stab_soluble=ls.soluble_edge_stab, vertex_stab_soluble=ls.soluble_vertex_stab)
        pairs = [("G_{u,v}", ls.soluble_edge_stab, "(G_v^Gamma(v))_u", ls.soluble_local_point_stab),
                 ("G_v", ls.soluble_vertex_stab, "G_v^Gamma(v)", ls.soluble_local_group)]
        bad = [f"{a} soluble={x} vs {b} soluble={y}" for a, x, b, y in pairs if x != y]
        if bad:
            return False, "; ".join(bad)
        if ls.soluble_edge_stab != exp.expected_edge_stab_soluble:
            return False, f"G_{{u,v}} soluble={ls.soluble_edge_stab}"
        return True, f"G_{{u,v}} soluble={ls.soluble_edge_stab}, G_v soluble={ls.soluble_vertex_stab}"

    def prime_cores():
        ls = state["ls"]
        held = cg.prime_cores_hold(ls)
        parts = []
        for r, rep in sorted(ls.p_core_reports.items()):
            parts.append(f"r={r}: " + " ".join(f"{k}={rep.get(k)}" for k in ("kernel", "arc", "vertex")))
        detail = "; ".join(parts)
        if held is None:
            raise _Skip(f"stabilizer above enumeration bound {limits.enumeration}")
        return held, detail

    def fitting():
        ls = state["ls"]
        pf = prime_power(ls.d - 1) if ls.d > 2 else None
        if pf is None:
            raise _Skip(f"d - 1 = {ls.d - 1} is not a prime power")
        if ls.arc_kernel_order != 1:
            raise _Skip("arc kernel is not trivial")
        rep = cg.fitting_check(g, pf[0], bound=limits.enumeration, local=ls, edge_stab=state["E"])
        return rep.holds, (f"p={rep.p}: |Fit(G_uv)|={rep.fit_arc} |O_p(G_uv)|={rep.op_arc} "
                           f"|Fit(G_{{u,v}})|={rep.fit_edge} |O_p(G_{{u,v}})|={rep.op_edge}")

    def sylow_lift():
        E = state["E"]
        if E.order() > limits.enumeration:
            raise BoundExceeded("enumeration", limits.enumeration, E.order())
        parts, ok = [], True
        for p in factorize(E.order()):
            P = E.p_core(p, limits.enumeration)
            if P.order() != p_part(E.order(), p):
                continue
            lifted = G.normal_sylow_lift_check(E, p)
            ok = ok and lifted
            parts.append(f"p={p}: {P.order()} vs {p_part(G.order(), p)}")
        if not parts:
            raise _Skip("edge stabilizer has no normal Sylow subgroup")
        return ok, "; ".join(parts)

    run.run("local_2transitive", local_2trans, needs=("local_orders",))
    run.run("solubility", solubility, needs=("local_orders",))
    run.run("prime_cores", prime_cores, needs=("local_orders",))
    run.run("fitting", fitting, needs=("local_orders",))
    run.run("sylow_lift", sylow_lift, needs=("edge_stab_order", "edge_primitive"))
    report.checks = {k: report.checks[k] for k in ("graph",) + CHECKS if k in report.checks}
    report.seconds = round(time.perf_counter() - t0, 4)
    return report


def load_triple(entry: CatalogEntry):
    G = read_generators(entry.path("group"))
    H = read_generators(entry.path("h"))
    K = read_generators(entry.path("k"))
    if not (G.degree == H.degree == K.degree):
        raise GroupError("generator files have different degrees")
    return G, H, K


class OutOfScope(ValueError):
    pass


def verify_entry(entry: CatalogEntry, limits: Limits = DEFAULT_LIMITS,
                 s_max: int = 5) -> VerificationReport:
    if not entry.runnable:
        raise OutOfScope(f"{entry.id}: out-of-scope tier")
    t = time.perf_counter()
    try:
        G, H, K = load_triple(entry)
    except (OSError, ValueError) as exc:
        return VerificationReport(entry.id, error=f"{type(exc).__name__}: {exc}",
                                  seconds=round(time.perf_counter() - t, 4))
    return verify_triple(G, H, K, entry, limits=limits, s_max=s_max)


# ------------------------------------------------------------------ projective-line family

def family_triple(q: int):
    """``PSL(2,q)`` for even ``q`` and ``PGL(2,q)`` for odd ``q`` on the
    projective line, the stabilizer of infinity and the setwise stabilizer
    of ``{0, infinity}``."""
    if prime_power(q) is None or q <= 4:
        raise ValueError(f"q = {q} must be a prime power above 4")
    gens = psl2_generators(q) if q % 2 == 0 else pgl2_generators(q)
    G = PermGroup(gens, q + 1)
    return G, G.point_stabilizer(q), G.setwise_stabilizer_pair(0, q)


def family_entry(q: int) -> CatalogEntry:
    """Expected values: |PGL(2,q)| = q(q^2-1), vertices = q+1 points,
    |G_v| = q(q-1), |G_{0,inf}| = 2(q-1), edges = q(q+1)/2."""
    return CatalogEntry(
        id=f"PSL2({q})-family", tier="1",
        expected_group_order=q * (q * q - 1), expected_h_order=q * (q - 1),
        expected_k_order=2 * (q - 1), expected_vertex_count=q + 1, expected_valency_d=q,
        expected_edge_count=q * (q + 1) // 2, expected_s=2, expected_shape=f"complete({q + 1})",
        notes="projective-line family; odd q uses PGL(2,q)")


def verify_family_member(q: int, limits: Limits = DEFAULT_LIMITS, s_max: int = 5):
    G, H, K = family_triple(q)
    return verify_triple(G, H, K, family_entry(q), limits=limits, s_max=s_max)


def verify_family_psl2(q_list, limits: Limits = DEFAULT_LIMITS, s_max: int = 5,
                       jobs: int = 1) -> list[VerificationReport]:
    return _pool_map(_family_job, [(q, limits, s_max) for q in q_list], jobs)


FAMILY_Q_RANGE = tuple(q for q in range(7, 65) if prime_power(q))


# ------------------------------------------------------------------ whole catalog

def _entry_job(args):
    entry, limits, s_max = args
    return verify_entry(entry, limits, s_max)


def _family_job(args):
    q, limits, s_max = args
    return verify_family_member(q, limits, s_max)


def _pool_map(fn, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _tier_rank(tier: str) -> int:
    return int(tier) if tier.isdigit() else 10**9


def verify_all(tier_max: int = 1, jobs: int = 1, limits: Limits = DEFAULT_LIMITS,
               s_max: int = 5, entries=None, family: bool = True) -> list[VerificationReport]:
    """Reports for every runnable entry with tier at most ``tier_max``, in
    catalog order, followed by the projective-line family members with
    valency at least 6. Output order does not depend on ``jobs``."""
    entries = load_catalog() if entries is None else list(entries)
    chosen = [e for e in entries if e.runnable and _tier_rank(e.tier) <= tier_max]
    reports = _pool_map(_entry_job, [(e, limits, s_max) for e in chosen], jobs)
    if family and tier_max >= 1 and entries:
        reports += verify_family_psl2(FAMILY_Q_RANGE, limits, s_max, jobs)
    return reports
