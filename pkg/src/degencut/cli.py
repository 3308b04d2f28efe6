"""Command-line front end.

Subcommands:
  analyze            per-graph JSON summary (n, m, min_degree, degeneracy, kappa)
  find-cut --k K     search for a k-degenerate vertex cut (--minimum restricts
                     the search to cuts of minimum size)
  min-cuts           enumerate every minimum vertex cut with certificates
  construct          emit an extremal construction as graph6 (ring | join)
  verify WHICH       scan a graph source against one of the built-in targets
  enumerate --n N    stream labeled graphs as graph6

Graph input is graph6, one per line, from stdin or --input FILE. Results go
to stdout (JSON, or graph6 for construct/enumerate); diagnostics to stderr.
Exit status: 0 success or PASS, 2 counterexample found or no cut exists,
1 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .connectivity import minimum_cuts, vertex_connectivity
from .constructions import RingSpec, join_extremal, random_ring_spec, ring_of_cliques
from .cut_search import find_degenerate_cut, find_min_degenerate_cut
from .degeneracy import degeneracy
from .enumeration import EnumerationSpec, enumerate_labeled, partition_prefixes
from .graph import random_graph
from .graph6 import Graph6Error, iter_graph6, to_graph6
from .verify import THEOREMS, verify_theorem, verify_theorem_exhaustive


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage, but 2 is reserved here for mathematical
    # outcomes (counterexample / none exists), so usage errors remap to 1
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="degencut",
        description="Degeneracy, vertex cuts, and edge-count bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="summarize order, size, degeneracy, kappa")
    p.add_argument("--input", metavar="FILE", help="graph6 file (default: stdin)")

    p = sub.add_parser("find-cut", help="search for a k-degenerate vertex cut")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--minimum", action="store_true", help="minimum cuts only")
    p.add_argument("--input", metavar="FILE")
    p.add_argument("--quiet", action="store_true", help="print found/none only")

    p = sub.add_parser("min-cuts", help="enumerate all minimum vertex cuts")
    p.add_argument("--input", metavar="FILE")

    p = sub.add_parser("construct", help="emit an extremal construction as graph6")
    fam = p.add_subparsers(dest="family", required=True)
    c = fam.add_parser("ring", help="ring of cliques under one apex vertex")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--s", type=int, required=True, help="number of cliques")
    c.add_argument("--perm-seed", type=int, help="randomize interface matchings")
    c = fam.add_parser("join", help="join of a clique with an independent set")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True, help="total order")

    p = sub.add_parser("verify", help="verify a bound or cut guarantee")
    p.add_argument("which", choices=THEOREMS, help="verification target")
    p.add_argument("--k", type=int, help="degeneracy parameter (thm2 fixes 2)")
    p.add_argument("--n", type=int, help="order for --exhaustive / --sample")
    p.add_argument("--exhaustive", action="store_true", help="scan all labeled graphs of order n")
    p.add_argument("--min-deg", type=int, help="exhaustive: minimum degree")
    p.add_argument("--max-edges", type=int, help="exhaustive: edge cap")
    p.add_argument("--connected", action="store_true", help="exhaustive: connected only")
    p.add_argument("--input", metavar="FILE", help="verify graphs from a graph6 file")
    p.add_argument("--sample", type=int, metavar="COUNT", help="verify random graphs")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--quiet", action="store_true", help="print PASS/FAIL only")

    p = sub.add_parser("enumerate", help="stream labeled graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-deg", type=int, help="minimum degree")
    p.add_argument("--max-edges", type=int, help="edge cap")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    return parser


def _graphs_from(path: str | None):
    if path is None:
        yield from (g for _, g in iter_graph6(sys.stdin))
        return
    with open(path) as fh:
        yield from (g for _, g in iter_graph6(fh))


def _cmd_analyze(args: argparse.Namespace) -> int:
    for g in _graphs_from(args.input):
        print(
            json.dumps(
                {
                    "n": g.n,
                    "m": g.m,
                    "min_degree": g.min_degree() if g.n else None,
                    "degeneracy": degeneracy(g),
                    "kappa": vertex_connectivity(g) if g.n >= 2 else None,
                }
            )
        )
    return 0


def _cmd_find_cut(args: argparse.Namespace) -> int:
    missing = False
    search = find_min_degenerate_cut if args.minimum else find_degenerate_cut
    for g in _graphs_from(args.input):
        cert = search(g, args.k)
        if cert is None:
            missing = True
            print("none" if args.quiet else json.dumps({"found": False}))
        elif args.quiet:
            print("found")
        else:
            print(json.dumps({"found": True, **cert.to_json_dict()}))
    return 2 if missing else 0


def _cmd_min_cuts(args: argparse.Namespace) -> int:
    for g in _graphs_from(args.input):
        cuts = minimum_cuts(g)
        print(
            json.dumps(
                {
                    "kappa": len(cuts[0].cut),
                    "count": len(cuts),
                    "cuts": [c.to_json_dict() for c in cuts],
                }
            )
        )
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "ring":
        if args.perm_seed is None:
            spec = RingSpec(args.k, args.s)
        else:
            spec = random_ring_spec(args.k, args.s, args.perm_seed)
        g = ring_of_cliques(spec)
    else:
        g = join_extremal(args.k, args.n)
    print(to_graph6(g))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    k = args.k
    if args.which == "thm2":
        if k is None:
            k = 2
    elif k is None:
        raise ValueError(f"--k is required for {args.which}")
    sources = [args.exhaustive, args.input is not None, args.sample is not None]
    if sum(sources) != 1:
        raise ValueError("choose exactly one of --exhaustive, --input, --sample")
    if (args.exhaustive or args.sample is not None) and args.n is None:
        raise ValueError("--n is required with --exhaustive / --sample")
    if args.exhaustive:
        spec = EnumerationSpec(
            n=args.n,
            edge_range=None if args.max_edges is None else (0, args.max_edges),
            min_degree=args.min_deg,
            connected_only=args.connected,
        )
        report = verify_theorem_exhaustive(args.which, k, spec, jobs=args.jobs)
    elif args.input is not None:
        report = verify_theorem(args.which, k, _graphs_from(args.input))
    else:
        rng = random.Random(args.seed)
        stream = (random_graph(args.n, rng) for _ in range(args.sample))
        report = verify_theorem(args.which, k, stream)
    if args.quiet:
        print("PASS" if report.passed else "FAIL")
    else:
        print(json.dumps(report.to_json_dict()))
    return 0 if report.passed else 2


def _enumerate_task(task: tuple[EnumerationSpec, tuple[int, ...]]) -> list[str]:
    spec, prefix = task
    return [to_graph6(g) for g in enumerate_labeled(spec, prefix)]


def _cmd_enumerate(args: argparse.Namespace) -> int:
    spec = EnumerationSpec(
        n=args.n,
        edge_range=None if args.max_edges is None else (0, args.max_edges),
        min_degree=args.min_deg,
        connected_only=args.connected,
    )
    out = sys.stdout
    if args.jobs <= 1:
        for g in enumerate_labeled(spec):
            out.write(to_graph6(g) + "\n")
        return 0
    # prefix streams concatenate to exactly the sequential order, so the
    # worker count never changes the bytes emitted
    prefixes = partition_prefixes(spec, 4 * args.jobs)
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        for chunk in pool.map(_enumerate_task, [(spec, p) for p in prefixes]):
            if chunk:
                out.write("\n".join(chunk) + "\n")
    return 0


_HANDLERS = {
    "analyze": _cmd_analyze,
    "find-cut": _cmd_find_cut,
    "min-cuts": _cmd_min_cuts,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except BrokenPipeError:
        return 1
    except (ValueError, OSError) as exc:
        print(f"degencut: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
