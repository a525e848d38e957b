"""Command-line entry point.

Exit codes: 0 when every executed check passes, 1 when a check fails,
2 for usage, parse, data and resource errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .catalog import (OutOfScope, find_entry, format_report, format_summary, to_machine,
                      verify_all, verify_entry, verify_triple)
from .catalog.manifest import ManifestError
from .config import DEFAULT_LIMITS, BoundExceeded, Limits
from .groups import GroupError, read_generators
from .numtheory import primitive_prime_divisors
from .perm import PermutationError

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    command: str
    paths: tuple = ()
    s_max: int = 5
    tier_max: int | None = None
    jobs: int = 1
    output: str = "table"
    limits: Limits = DEFAULT_LIMITS

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> CliConfig:
        limits = DEFAULT_LIMITS.with_(enumeration=ns.enumeration_bound,
                                      vertices=ns.vertex_bound, edges=ns.edge_bound)
        paths = tuple(p for p in (getattr(ns, k, None) for k in ("g", "h", "k")) if p)
        return cls(ns.command, paths, ns.s_max, getattr(ns, "tier", None),
                   getattr(ns, "jobs", 1), ns.format, limits)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n <= 0:
        raise argparse.ArgumentTypeError(f"{n} is not positive")
    return n


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s-max", type=_positive, default=5,
                   help="largest s tried for s-arc-transitivity (default 5)")
    p.add_argument("--format", choices=("table", "machine"), default="table")
    p.add_argument("--enumeration-bound", type=_positive, default=None,
                   help=f"largest group enumerated element by element (default {DEFAULT_LIMITS.enumeration})")
    p.add_argument("--vertex-bound", type=_positive, default=None,
                   help=f"largest vertex count built (default {DEFAULT_LIMITS.vertices})")
    p.add_argument("--edge-bound", type=_positive, default=None,
                   help=f"largest edge count built (default {DEFAULT_LIMITS.edges})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgeprim",
                                     description="Build and certify edge-primitive coset graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph", help="check one triple (G, H, K) given as generator files")
    g.add_argument("--g", required=True, metavar="FILE")
    g.add_argument("--h", required=True, metavar="FILE")
    g.add_argument("--k", required=True, metavar="FILE")
    _add_run_flags(g)

    v = sub.add_parser("verify", help="verify catalog entries")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--entry", metavar="ID")
    which.add_argument("--all", action="store_true")
    v.add_argument("--tier", type=_positive, default=None, help="highest tier run with --all")
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--no-family", action="store_true",
                   help="leave out the projective-line family with --all")
    _add_run_flags(v)

    z = sub.add_parser("zsigmondy", help="primitive prime divisors of a^f - 1")
    z.add_argument("a", type=int)
    z.add_argument("f", type=int)
    return parser


def _exit_code(reports) -> int:
    if any(r.error for r in reports):
        return EXIT_ERROR
    return EXIT_PASS if all(r.verdict == "pass" for r in reports) else EXIT_FAIL


def _emit(reports, cfg: CliConfig, full: bool) -> None:
    if cfg.output == "machine":
        sys.stdout.write(to_machine(reports))
    elif full:
        sys.stdout.write("".join(format_report(r) for r in reports))
    else:
        sys.stdout.write(format_summary(reports))


def cmd_graph(cfg: CliConfig) -> int:
    G, H, K = (read_generators(p) for p in cfg.paths)
    if not (G.degree == H.degree == K.degree):
        raise GroupError("generator files have different degrees")
    report = verify_triple(G, H, K, entry_id="triple", limits=cfg.limits, s_max=cfg.s_max)
    _emit([report], cfg, full=True)
    if report.error:
        print(f"edgeprim: {report.error}", file=sys.stderr)
    return _exit_code([report])


def cmd_verify(cfg: CliConfig, entry_id: str | None, no_family: bool) -> int:
    if entry_id is not None:
        try:
            entry = find_entry(entry_id)
        except KeyError:
            raise ManifestError(f"no catalog entry {entry_id!r}") from None
        reports = [verify_entry(entry, cfg.limits, cfg.s_max)]
        _emit(reports, cfg, full=True)
    else:
        if cfg.tier_max is None:
            raise ManifestError("--all needs --tier N")
        reports = verify_all(cfg.tier_max, cfg.jobs, cfg.limits, cfg.s_max, family=not no_family)
        if cfg.output == "table":
            for r in reports:
                print(f"{r.entry_id}: {r.verdict} ({r.seconds:.2f}s)")
        _emit(reports, cfg, full=False)
    for r in reports:
        if r.error:
            print(f"edgeprim: {r.entry_id}: {r.error}", file=sys.stderr)
    return _exit_code(reports)


def cmd_zsigmondy(a: int, f: int) -> int:
    res = primitive_prime_divisors(a, f)
    print(res.describe())
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "zsigmondy":
            return cmd_zsigmondy(ns.a, ns.f)
        cfg = CliConfig.from_args(ns)
        if ns.command == "graph":
            return cmd_graph(cfg)
        return cmd_verify(cfg, ns.entry, ns.no_family)
    except OutOfScope as exc:
        print(f"edgeprim: {exc}", file=sys.stderr)
    except BoundExceeded as exc:
        print(f"edgeprim: resource bound: {exc}", file=sys.stderr)
    except (OSError, ValueError, GroupError, PermutationError, ManifestError) as exc:
        print(f"edgeprim: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
