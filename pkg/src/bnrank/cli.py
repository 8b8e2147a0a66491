"""Command-line front end.

Every subcommand prints ``key = value`` lines on stdout.  Exit status is 0
on success, 1 for domain errors (bad files, failed checks) and 2 for usage
errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from itertools import permutations, product
from typing import List, Sequence, Tuple

from bnrank.divisor import is_effective_class, reduce_with_firing, verify_certificate
from bnrank.graph import Multigraph, canonical_divisor, genus, picard_structure, spanning_tree_count
from bnrank.io import format_certificate, format_vector, parse_divisor, parse_divisor_tokens, parse_graph, read_text
from bnrank.rank import RankResult, TraceEntry, rank, rank_binary_search, rank_geometric
from bnrank.suites import SUITES, run_suite


class DomainError(Exception):
    pass


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be a decimal integer, got {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/3, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _load_graph(path: str) -> Multigraph:
    return parse_graph(read_text(path), source=path)


def _load_divisor(args, g: Multigraph) -> Tuple[int, ...]:
    if args.divisor is not None:
        d = parse_divisor_tokens(args.divisor.split(), source="--divisor")
    else:
        d = parse_divisor(read_text(args.divisor_file), source=args.divisor_file)
    if len(d) != g.vertex_count:
        raise DomainError(f"divisor has {len(d)} entries but the graph has {g.vertex_count} vertices")
    return d


def _witness_line(result: RankResult) -> List[str]:
    w = result.witness
    if w is None:
        return []
    return [f"witness = pi={format_vector(w.permutation)} q={format_vector(w.q)} degplus={w.degplus}"]


def _trace_line(entry: TraceEntry) -> str:
    s = entry.solution
    return (
        f"trace = pi={format_vector(entry.permutation)} nu={format_vector(entry.nu)} "
        f"value={s.value} x={format_vector(s.x)} q={format_vector(s.q)}"
    )


def cmd_rank(args) -> List[str]:
    g = _load_graph(args.graph)
    d = _load_divisor(args, g)
    gen = genus(g)
    deg = sum(d)
    lines = [f"degree = {deg}", f"genus = {gen}"]
    in_range = 0 <= deg <= gen - 1
    trace: List[TraceEntry] | None = [] if args.trace and in_range and args.method != "bruteforce" else None

    if args.method == "bruteforce":
        result = rank(g, d, "bruteforce")
    elif trace is not None:
        result = rank_geometric(g, d, args.parallel, trace)
    else:
        result = rank(g, d, "geometric", args.parallel)
    lines.append(f"rank = {result.rank}")
    lines.append(f"method = {result.method}")
    lines += _witness_line(result)
    if args.method == "both":
        other = rank(g, d, "bruteforce")
        lines.append(f"bruteforce = {other.rank}")
        lines.append(f"agreement = {_bool(other.rank == result.rank)}")
    if args.binary_search:
        if in_range:
            lines.append(f"binary_search = {rank_binary_search(g, d).rank}")
        else:
            lines.append("binary_search = skipped (degree dispatched)")
    if trace is not None:
        lines += [_trace_line(e) for e in trace]
    return lines


def cmd_reduce(args) -> List[str]:
    g = _load_graph(args.graph)
    d = _load_divisor(args, g)
    if not 0 <= args.base < g.vertex_count:
        raise DomainError(f"base {args.base} is not a vertex of the graph")
    reduced, firing = reduce_with_firing(g, d, args.base)
    return [
        f"base = {args.base}",
        f"reduced = {' '.join(map(str, reduced))}",
        f"firing = {' '.join(map(str, firing))}",
    ]


def cmd_effective(args) -> List[str]:
    g = _load_graph(args.graph)
    d = _load_divisor(args, g)
    ok, cert = is_effective_class(g, d)
    return [
        f"effective = {_bool(ok)}",
        f"certificate = {format_certificate(cert)}",
        f"verified = {_bool(verify_certificate(g, d, cert))}",
    ]


def cmd_invariants(args) -> List[str]:
    g = _load_graph(args.graph)
    pic = picard_structure(g)
    return [
        f"vertices = {g.vertex_count}",
        f"edges = {sum(m for _, _, m in g.edges)}",
        f"genus = {genus(g)}",
        f"trees = {spanning_tree_count(g)}",
        f"picard = {format_vector(pic.invariant_factors) or '1'}",
        f"canonical = {' '.join(map(str, canonical_divisor(g)))}",
    ]


def cmd_crit(args) -> List[str]:
    from bnrank.geometry.crit import covering_radius, crit_classes, crit_points

    g = _load_graph(args.graph)
    points = crit_points(g)
    classes = crit_classes(g)
    lines = [
        f"points = {len(points)}",
        f"classes = {len(classes)}",
        f"covering_radius = {covering_radius(g)}",
    ]
    lines += [f"crit = pi={format_vector(perm)} c={format_vector(c)}" for perm, c in points]
    return lines


def cmd_duality(args) -> List[str]:
    from bnrank.geometry.duality import duality_tiling_check

    g = _load_graph(args.graph)
    report = duality_tiling_check(g, args.t, args.samples, args.seed)
    return [
        f"t = {report.t}",
        f"covering_radius = {report.cov}",
        f"checked = {report.checked}",
        f"in_a = {report.in_a}",
        f"in_b = {report.in_b}",
        f"boundary = {report.boundary}",
        f"violations = {report.violations}",
    ]


def _parse_alphas(text: str, n: int) -> List[List[int]]:
    """Rows separated by ';', entries by ','; row ``i`` lists ``alpha[i][0..i-1]``."""
    rows = [r for r in text.split(";")] if text else []
    alphas = [[0] * n for _ in range(n)]
    if len(rows) != n:
        raise DomainError(f"--alphas needs {n} rows separated by ';'")
    for i, row in enumerate(rows):
        entries = [int(x) for x in row.split(",") if x.strip()]
        if len(entries) != i:
            raise DomainError(f"row {i} of --alphas needs {i} entries")
        alphas[i][:i] = entries
    return alphas


def cmd_autocheck(args) -> Tuple[List[str], bool]:
    from bnrank.geometry.automorphism import complete_graph, complete_graph_automorphism, verify_critical_automorphism

    size = args.size
    if size < 2:
        raise DomainError("--size must be at least 2")
    n = size - 1
    g = complete_graph(size)
    if args.pi is not None:
        pis = [tuple(int(x) for x in args.pi.split(","))]
    else:
        pis = list(permutations(range(size)))
    heights = args.h if args.h else [h for h in range(1, n + 1) if n % h == 0]
    if args.alphas is not None:
        alpha_sets = [_parse_alphas(args.alphas, n)]
    else:
        slots = [(i, j) for i in range(n) for j in range(i)]
        alpha_sets = []
        for values in product((-1, 0, 1), repeat=len(slots)):
            a = [[0] * n for _ in range(n)]
            for (i, j), v in zip(slots, values):
                a[i][j] = v
            alpha_sets.append(a)
    checked = failures = 0
    first_failure = None
    for pi in pis:
        for h in heights:
            for alphas in alpha_sets:
                m = complete_graph_automorphism(size, pi, h, alphas)
                checked += 1
                if not verify_critical_automorphism(g, m):
                    failures += 1
                    if first_failure is None:
                        first_failure = (pi, h, alphas)
    lines = [
        f"size = {size}",
        f"heights = {format_vector(heights)}",
        f"checked = {checked}",
        f"failures = {failures}",
    ]
    if first_failure is not None:
        pi, h, alphas = first_failure
        rows = ";".join(",".join(map(str, alphas[i][:i])) for i in range(n))
        lines.append(f"first_failure = pi={format_vector(pi)} h={h} alphas={rows}")
    return lines, failures == 0


def cmd_verify(args) -> Tuple[List[str], bool]:
    report = run_suite(args.suite, args.seed)
    lines = [f"suite = {report.name}", f"checked = {report.checked}", f"failures = {report.failures}"]
    lines += [f"{k} = {v}" for k, v in report.extra]
    lines += [f"failed = {case}" for case in report.failed_cases[:20]]
    return lines, report.ok


def _add_divisor_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--divisor", help='inline divisor, e.g. "1 0 -1"')
    p.add_argument("--divisor-file", help="file holding a 'div ...' line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bnrank", description="Baker-Norine rank of divisors on multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank of a divisor")
    _add_divisor_args(p)
    p.add_argument("--method", choices=("geometric", "bruteforce", "both"), default="geometric")
    p.add_argument("--trace", action="store_true", help="print the per-permutation coset minima")
    p.add_argument("--binary-search", action="store_true", help="also decide the rank by bisection on polytope membership")
    p.add_argument("--parallel", type=_positive, default=1, help="worker processes for the permutation sweep")
    p.set_defaults(func=cmd_rank, needs_divisor=True)

    p = sub.add_parser("reduce", help="reduced divisor at a base vertex")
    _add_divisor_args(p)
    p.add_argument("--base", type=int, default=0, help="base vertex (default 0)")
    p.set_defaults(func=cmd_reduce, needs_divisor=True)

    p = sub.add_parser("effective", help="effectivity test with a certificate")
    _add_divisor_args(p)
    p.set_defaults(func=cmd_effective, needs_divisor=True)

    p = sub.add_parser("invariants", help="genus, tree count, Picard group, canonical divisor")
    p.add_argument("--graph", required=True, help="graph file")
    p.set_defaults(func=cmd_invariants, needs_divisor=False)

    p = sub.add_parser("crit", help="Crit points and the covering radius")
    p.add_argument("--graph", required=True, help="graph file")
    p.set_defaults(func=cmd_crit, needs_divisor=False)

    p = sub.add_parser("duality-check", help="sampled tiling check")
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--t", type=_rational, required=True, help="radius t in [0, covering radius], e.g. 1/3")
    p.add_argument("--samples", type=_positive, default=1000)
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_duality, needs_divisor=False)

    p = sub.add_parser("autocheck", help="verify critical automorphisms of a complete graph")
    p.add_argument("--size", type=int, required=True, help="number of vertices n+1")
    p.add_argument("--pi", help="single permutation, comma separated (default: all)")
    p.add_argument("--h", type=_positive, action="append", help="height; repeatable (default: divisors of n)")
    p.add_argument("--alphas", help="rows 'a10;a20,a21;...' with row 0 empty (default: all in {-1,0,1})")
    p.set_defaults(func=cmd_autocheck, needs_divisor=False)

    p = sub.add_parser("verify", help="run a corpus verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--seed", type=_seed, default=None, help="relabelling / sampling seed")
    p.set_defaults(func=cmd_verify, needs_divisor=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.needs_divisor and (args.divisor is None) == (args.divisor_file is None):
        parser.error("give exactly one of --divisor and --divisor-file")
    try:
        out = args.func(args)
    except (DomainError, ValueError, OSError) as exc:
        print(f"bnrank: error: {exc}", file=sys.stderr)
        return 1
    lines, ok = out if isinstance(out, tuple) else (out, True)
    print("\n".join(lines))
    if not ok:
        print("bnrank: check failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
