"""Command-line front end: ``sepsys {gen,construct,verify,exact,bounds,bench}``.

Exit codes: 0 ok/valid, 1 invalid certificate, 2 usage or input error,
3 resource cap hit, 4 internal self-check failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Sequence

from sepsys import constructions as cons
from sepsys import tree_systems
from sepsys.errors import (
    BadParams,
    IncompatibleMethod,
    NotATree,
    NotMaximalOuterplanar,
    OracleTimeout,
    SelfCheckFailed,
    SepSysError,
    TooLarge,
)
from sepsys.graph_core import (
    Graph,
    center_radius,
    enumerate_trees,
    gen_family,
    gen_random_maximal_outerplanar,
    gen_random_tree,
    graph_from_text,
    graph_to_text,
    inner_dual,
    outer_cycle,
)
from sepsys.oracle import DEFAULT_BUDGET, min_separating_system
from sepsys.separation import (
    Certificate,
    certificate_to_text,
    clog2,
    known_bounds,
    read_certificate,
    verify,
)

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_CAP, EXIT_SELFCHECK = 0, 1, 2, 3, 4

GEN_CLASSES = (
    "path", "cycle", "complete", "biclique", "grid", "hypercube", "fan", "star",
    "binary-tree", "tight-tree", "outerplanar", "tree",
)


class BenchViolation(SepSysError):
    """A bench row broke lower <= oracle <= construction <= upper."""


# -- graphs and methods -------------------------------------------------------


def parse_params(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise BadParams(f"--params must be comma-separated integers, got {text!r}") from None


def generate(cls: str, params: Sequence[int], seed: int = 0) -> Graph:
    tag = cls.replace("_", "-")
    if tag not in GEN_CLASSES:
        raise BadParams(f"unknown class {cls!r}; choose from {', '.join(GEN_CLASSES)}")
    if tag in ("outerplanar", "tree"):
        if len(params) != 1:
            raise BadParams(f"{tag} takes one parameter (n)")
        if tag == "tree":
            return gen_random_tree(params[0], seed)
        return gen_random_maximal_outerplanar(params[0], seed)[0]
    return gen_family(tag, params)


def _inner2(g: Graph) -> Certificate:
    emb = outer_cycle(g)
    return cons.inner2_system(emb, inner_dual(emb))


# Methods that only need the graph itself.
GRAPH_METHODS: dict[str, Callable[[Graph], Certificate]] = {
    "radius-tree": tree_systems.radius_tree_system,
    "centroid-tree": tree_systems.centroid_tree_system,
    "graph-tree": tree_systems.graph_tree_system,
    "outerplanar": cons.outerplanar_system,
    "inner2": _inner2,
}

# Methods tied to a generated family: (class, builder from params).
FAMILY_METHODS: dict[str, tuple[str, Callable[..., Certificate]]] = {
    "interval": ("path", lambda n: cons.interval_system(n)),
    "interval-cycle": ("cycle", lambda n: cons.interval_system(n, on_cycle=True)),
    "complete": ("complete", cons.complete_system),
    "hypercube": ("hypercube", cons.hypercube_system),
    "biclique": ("biclique", cons.biclique_system),
    "grid": ("grid", cons.grid_system),
    "fan": ("fan", cons.fan_system),
    "tight-tree": ("tight-tree", cons.tight_tree_system),
}

DEFAULT_METHOD = {
    "path": "interval",
    "cycle": "interval-cycle",
    "complete": "complete",
    "hypercube": "hypercube",
    "biclique": "biclique",
    "grid": "grid",
    "fan": "fan",
    "tight-tree": "tight-tree",
    "outerplanar": "outerplanar",
    "tree": "radius-tree",
    "star": "radius-tree",
    "binary-tree": "radius-tree",
}


def construct(
    method: str | None,
    *,
    cls: str | None = None,
    params: Sequence[int] = (),
    graph: Graph | None = None,
    seed: int = 0,
) -> Certificate:
    """Run a construction on a generated class instance or on a given graph.

    Raises:
        IncompatibleMethod: the method does not apply to the input.
    """
    if cls is not None:
        cls = cls.replace("_", "-")
    if method is None:
        if cls is None:
            raise IncompatibleMethod("--method is required with --graph")
        method = DEFAULT_METHOD.get(cls)
        if method is None:
            raise IncompatibleMethod(f"no default method for class {cls!r}")
    if method in FAMILY_METHODS:
        need, build = FAMILY_METHODS[method]
        if cls != need:
            raise IncompatibleMethod(f"method {method} needs --class {need}")
        try:
            return build(*params)
        except TypeError:
            raise BadParams(f"wrong number of parameters for {method}") from None
    if method not in GRAPH_METHODS:
        known = sorted(FAMILY_METHODS) + sorted(GRAPH_METHODS)
        raise IncompatibleMethod(f"unknown method {method!r}; choose from {', '.join(known)}")
    if graph is None:
        if cls is None:
            raise IncompatibleMethod("give --class or --graph")
        graph = generate(cls, params, seed)
    try:
        return GRAPH_METHODS[method](graph)
    except (NotATree, NotMaximalOuterplanar) as exc:
        raise IncompatibleMethod(f"{method}: {exc}") from exc


# -- bench ---------------------------------------------------------------------


@dataclass(frozen=True)
class BenchRow:
    cls: str
    params: str
    method: str
    n: int
    construction: int | None
    lower: int | None
    upper: int | None
    oracle: int | None
    ms: float

    HEADER = ("class", "params", "method", "n", "construction", "lower", "upper", "oracle", "ms")

    def check(self) -> None:
        chain = [x for x in (self.lower, self.oracle, self.construction, self.upper) if x is not None]
        if any(a > b for a, b in zip(chain, chain[1:])):
            raise BenchViolation(f"order violated on row {self.tsv()}")

    def tsv(self) -> str:
        cells = [self.cls, self.params, self.method, self.n, self.construction,
                 self.lower, self.upper, self.oracle, f"{self.ms:.1f}"]
        return "\t".join("" if c is None else str(c) for c in cells)


ORACLE_MAX_N = {"path": 8, "tree": 9}


def _oracle(g: Graph, kind: str, max_n: int | None = None) -> int | None:
    if g.n > (ORACLE_MAX_N[kind] if max_n is None else max_n):
        return None
    try:
        return min_separating_system(g, kind).optimum  # type: ignore[arg-type]
    except (TooLarge, OracleTimeout):
        return None


def _timed(build: Callable[[], Certificate]) -> tuple[Certificate, float]:
    start = time.perf_counter()
    cert = build()
    return cert, (time.perf_counter() - start) * 1000


def _sizes(max_n: int, start: int) -> list[int]:
    out, n = [], start
    while n <= max_n:
        out.append(n)
        n *= 2
    return out


def _bench_table1(max_n: int, seed: int) -> Iterator[BenchRow]:
    instances: list[tuple[str, tuple[int, ...]]] = []
    for n in sorted(set(range(3, min(max_n, 8) + 1)) | set(_sizes(max_n, 4))):
        instances += [("path", (n,)), ("cycle", (n,)), ("complete", (n,))]
    for n in sorted(set(range(6, min(max_n, 12) + 1)) | set(_sizes(max_n, 16))):
        instances.append(("fan", (n,)))
    for d in range(1, 13):
        if 2**d <= max_n:
            instances.append(("hypercube", (d,)))
    for m in (2, 3, 4, 8, 16, 32):
        for n in (m, 2 * m, 4 * m):
            if m * n <= max_n:
                instances.append(("grid", (m, n)))
    for m in (1, 2, 4, 8):
        for n in (m, 2 * m, 8 * m):
            if m + n <= max_n:
                instances.append(("biclique", (m, n)))
    for cls, params in instances:
        cert, ms = _timed(lambda: construct(None, cls=cls, params=params))
        bounds = known_bounds(cls, params)
        yield BenchRow(
            cls, ",".join(map(str, params)), DEFAULT_METHOD[cls], cert.graph.n, cert.size,
            bounds.lower, bounds.upper, _oracle(cert.graph, "path"), ms,
        )


def _bench_trees(max_n: int, seed: int) -> Iterator[BenchRow]:
    for n in range(4, min(max_n, 12) + 1):
        for idx, t in enumerate(enumerate_trees(n)):
            start = time.perf_counter()
            opt = _oracle(t, "path", max_n=9)
            ms = (time.perf_counter() - start) * 1000
            yield BenchRow("tree", f"{n}#{idx}", "exact", n, None, known_bounds("tree", [n]).lower, None, opt, ms)


def _bench_outerplanar(max_n: int, seed: int) -> Iterator[BenchRow]:
    for n in [x for x in (8, 20, 50, 100, 200, 500, 1000, 2000) if x <= max_n]:
        for s in range(seed, seed + 5):
            g, _ = gen_random_maximal_outerplanar(n, s)
            cert, ms = _timed(lambda: cons.outerplanar_system(g))
            yield BenchRow(
                "outerplanar", f"{n},{s}", "outerplanar", n, cert.size,
                known_bounds("outerplanar", [n]).lower, None, _oracle(g, "path"), ms,
            )


def _bench_tree_systems(max_n: int, seed: int) -> Iterator[BenchRow]:
    for n in [x for x in (8, 9, 30, 100, 300, 1000, 2000, 5000) if x <= max_n]:
        for s in range(seed, seed + 3):
            t = gen_random_tree(n, s)
            opt = _oracle(t, "tree")
            _, r = center_radius(t)
            for method in ("radius-tree", "centroid-tree"):
                cert, ms = _timed(lambda: GRAPH_METHODS[method](t))
                yield BenchRow(
                    "tree", f"{n},{s}", method, n, cert.size,
                    max(r, clog2(n)), cert.claimed_bound, opt, ms,
                )


SUITES = {
    "table1": (_bench_table1, 64),
    "trees": (_bench_trees, 9),
    "outerplanar": (_bench_outerplanar, 200),
    "tree-systems": (_bench_tree_systems, 1000),
}


def bench_rows(suite: str, max_n: int | None = None, seed: int = 0) -> Iterator[BenchRow]:
    if suite not in SUITES:
        raise BadParams(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    runner, default_n = SUITES[suite]
    for row in runner(default_n if max_n is None else max_n, seed):
        row.check()
        yield row


# -- commands --------------------------------------------------------------------


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_graph(path: str) -> Graph:
    return graph_from_text(Path(path).read_text())


def cmd_gen(args: argparse.Namespace) -> int:
    g = generate(args.cls, parse_params(args.params), args.seed)
    _emit(graph_to_text(g), args.out)
    print(f"n={g.n} m={g.m}", file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    if (args.cls is None) == (args.graph is None):
        raise IncompatibleMethod("give exactly one of --class and --graph")
    graph = _load_graph(args.graph) if args.graph else None
    cert = construct(args.method, cls=args.cls, params=parse_params(args.params), graph=graph, seed=args.seed)
    _emit(certificate_to_text(cert), args.out)
    bound = "" if cert.claimed_bound is None else f" bound={cert.claimed_bound}"
    msg = f"{cert.system.provenance['construction']}: n={cert.graph.n} size={cert.size}{bound}"
    print(msg, file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cert = read_certificate(args.certificate)
    report = verify(cert, allow_trivial=args.allow_trivial, require_cover=args.require_cover, max_pairs=10)
    over = cert.claimed_bound is not None and cert.size > cert.claimed_bound
    if report.valid and not over:
        print(f"valid: {cert.size} {cert.system.kind} element(s) on {cert.graph.n} vertices")
        return EXIT_OK
    print(report.summary() if not report.valid else "invalid")
    if over:
        print(f"size {cert.size} exceeds claimed bound {cert.claimed_bound}")
    if report.bad_elements:
        print("bad elements: " + " ".join(map(str, report.bad_elements[:10])))
    for u, v in report.unseparated[:10]:
        print(f"unseparated: {u} {v}")
    if report.uncovered:
        print("uncovered: " + " ".join(map(str, report.uncovered[:10])))
    return EXIT_INVALID


def cmd_exact(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    res = min_separating_system(
        g, args.kind, allow_trivial=not args.no_trivial, require_cover=args.require_cover, budget=args.budget
    )
    print(res.optimum)
    if args.out:
        Path(args.out).write_text(certificate_to_text(res.certificate(g)))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    sys.stdout.write(known_bounds(args.cls, parse_params(args.params)).render())
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        print("\t".join(BenchRow.HEADER), file=sink, flush=True)
        for row in bench_rows(args.suite, args.max_n, args.seed):
            print(row.tsv(), file=sink, flush=True)
    finally:
        if args.out:
            sink.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sepsys", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph file")
    p.add_argument("--class", dest="cls", required=True, choices=GEN_CLASSES)
    p.add_argument("--params", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", help="build and self-verify a separating system")
    p.add_argument("--class", dest="cls")
    p.add_argument("--params", default="")
    p.add_argument("--graph")
    p.add_argument("--method")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("certificate")
    p.add_argument("--require-cover", action="store_true")
    p.add_argument("--allow-trivial", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="optimum by exhaustive search (small graphs)")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=("path", "tree"), default="path")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--require-cover", action="store_true")
    p.add_argument("--no-trivial", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bounds", help="print table bounds for a class instance")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--params", default="")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("bench", help="TSV table of construction sizes against bounds")
    p.add_argument("--suite", required=True, choices=tuple(SUITES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--format", choices=("tsv",), default="tsv")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SelfCheckFailed, BenchViolation) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_SELFCHECK
    except (TooLarge, OracleTimeout) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SepSysError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
