"""Command-line interface for ytc.

Exit codes: 0 on success, 1 for usage errors, undefined requests and failed
verification, 2 when an enumeration cap is exceeded. Results go to stdout,
diagnostics to stderr.
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

import structlog

from ..__version__ import __version__
from ..complexes import SimplicialComplex, alexander_dual, helly_number
from ..core.base import VerifyBounds
from ..core.config import CLIConfig, configure, get_config
from ..core.logging import setup_logging
from ..decomp import is_shellable, is_vertex_decomposable
from ..exceptions import CapacityError, DomainError, PartitionParseError, YTCError
from ..formulas import helly_formula, krull_formula, leray_formula, pd_formula
from ..homology import Field, leray_oracle, pd_oracle, reduced_betti
from ..homotopy import build_reduction_graph, young_homotopy
from ..pathideal import (
    PathIdealSpec,
    dual_complex,
    krull_height_oracle,
    squarefree_power_generators,
    stanley_reisner_complex,
)
from ..serialization import dumps
from ..young import Partition, parse_partition, young_complex, young_filling
from .verify import verify_suite

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CAPACITY = 2


class UsageError(YTCError):
    """Raised for malformed command lines."""

    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _face_lines(complex_: SimplicialComplex) -> str:
    if complex_.is_void:
        return "void"
    if complex_.is_irrelevant:
        return "irrelevant"
    return "\n".join("{" + ",".join(map(str, facet)) + "}" for facet in complex_.facets)


def _spec(args: argparse.Namespace) -> PathIdealSpec:
    return PathIdealSpec.of(args.n, args.t, args.k)


def cmd_young(args: argparse.Namespace) -> str:
    complex_ = young_complex(args.shape, args.t)
    return dumps(complex_) if args.json else _face_lines(complex_)


def cmd_homotopy(args: argparse.Namespace) -> str:
    homotopy = young_homotopy(args.shape, args.t)
    return dumps(homotopy) if args.json else str(homotopy)


def cmd_homology(args: argparse.Namespace) -> str:
    if args.shape is not None:
        complex_ = young_complex(args.shape, args.t)
    elif args.n is not None and args.k is not None:
        complex_ = dual_complex(_spec(args))
    else:
        raise UsageError("homology needs --lambda, or -n and -k for the dual complex")
    betti = reduced_betti(complex_, Field(args.field))
    return dumps(betti) if args.json else str(betti)


def cmd_dual(args: argparse.Namespace) -> str:
    complex_ = dual_complex(_spec(args), oracle=args.oracle)
    return dumps(complex_) if args.json else _face_lines(complex_)


def cmd_pathideal(args: argparse.Namespace) -> str:
    generators = squarefree_power_generators(_spec(args))
    if args.json:
        return dumps(generators)
    return "\n".join(" ".join(map(str, s)) for s in generators.supports)


def cmd_pd(args: argparse.Namespace) -> str:
    spec = _spec(args)
    if args.oracle:
        spec.require_nonzero()
        return str(pd_oracle(stanley_reisner_complex(spec), spec.vertices))
    return str(pd_formula(spec.n, spec.k, spec.t))


def cmd_dim(args: argparse.Namespace) -> str:
    spec = _spec(args)
    if args.oracle:
        return str(krull_height_oracle(spec).dimension)
    return str(krull_formula(spec.n, spec.k, spec.t))


def cmd_helly(args: argparse.Namespace) -> str:
    if args.oracle:
        universe = young_filling(args.shape, args.t).universe
        dual = alexander_dual(young_complex(args.shape, args.t), universe)
        value = helly_number(dual, universe)
    else:
        value = helly_formula(args.shape, args.t)
    return "simplex" if value < 0 else str(value)


def cmd_leray(args: argparse.Namespace) -> str:
    spec = _spec(args)
    if args.oracle:
        if spec.n < spec.k * spec.t:
            raise DomainError(f"n={spec.n} < kt={spec.k * spec.t}: the dual complex is void")
        return str(leray_oracle(dual_complex(spec), spec.vertices))
    return str(leray_formula(spec.n, spec.k, spec.t))


def cmd_graph(args: argparse.Namespace) -> str:
    graph = build_reduction_graph(args.n, args.k, args.t)
    if args.dot:
        return graph.to_dot().rstrip("\n")
    if args.json:
        return dumps(graph)
    lines = []
    for edge in graph.edges:
        (m, j), (m2, j2) = edge.source, edge.target
        lines.append(f"{m},{j} -> {m2},{j2} {edge.kind.value}:{edge.label}")
    lines.extend(
        f"N({p.leaf[0]},{p.leaf[1]},{p.label_sum}) = {p.count}" for p in graph.path_label_counts()
    )
    return "\n".join(lines)


def cmd_decomp(args: argparse.Namespace) -> str:
    complex_ = young_complex(args.shape, args.t)
    check = is_vertex_decomposable if args.kind == "vd" else is_shellable
    certificate = check(complex_)
    if args.json:
        return dumps(certificate)
    return "true" if certificate.verdict else "false"


def cmd_verify(args: argparse.Namespace) -> str:
    bounds = VerifyBounds(
        max_n=args.max_n,
        max_n_t1=args.max_n_t1,
        max_t=args.max_t,
        max_k=args.max_k,
        max_cells=args.max_cells,
    )
    report = verify_suite(bounds, workers=args.workers, timings=args.timings)
    args.failed = not report.passed
    if args.json:
        return dumps(report)
    lines = []
    for result in report.checks:
        status = "PASS" if result.passed else "FAIL"
        line = f"{status} {result.name} cases={result.cases} failures={result.failures}"
        if result.seconds is not None:
            line += f" seconds={result.seconds:.3f}"
        if result.capacity_error:
            line += f" capacity: {result.capacity_error}"
        elif result.first_counterexample:
            line += f" first: {result.first_counterexample}"
        lines.append(line)
    passed = sum(r.passed for r in report.checks)
    lines.append(f"{passed}/{len(report.checks)} checks passed")
    return "\n".join(lines)


COMMANDS: Dict[str, Callable[[argparse.Namespace], str]] = {
    "young": cmd_young,
    "homotopy": cmd_homotopy,
    "homology": cmd_homology,
    "dual": cmd_dual,
    "pathideal": cmd_pathideal,
    "pd": cmd_pd,
    "dim": cmd_dim,
    "helly": cmd_helly,
    "leray": cmd_leray,
    "graph": cmd_graph,
    "decomp": cmd_decomp,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ytc", description="t-Young complexes and squarefree path-ideal powers")
    parser.add_argument("--version", action="version", version=f"ytc {__version__}")
    parser.add_argument("--log-level", default="WARNING", help="Diagnostic level on stderr")
    parser.add_argument("--log-json", action="store_true", help="Diagnostics as JSON lines")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def shape_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument(
            "--lambda",
            dest="shape",
            type=_partition,
            required=required,
            help="Partition, e.g. 5,4,2",
        )
        p.add_argument("-t", type=int, required=True, help="Row offset t")

    def ideal_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("-n", type=int, required=True, help="Path length n")
        p.add_argument("-t", type=int, required=True, help="Vertices per path t")
        p.add_argument("-k", type=int, required=True, help="Squarefree power k")

    def oracle_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--oracle", action="store_true", help="Use the brute-force computation")

    def json_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="Print JSON")

    p = sub.add_parser("young", help="Facets of a t-Young complex")
    shape_flags(p)
    json_flag(p)

    p = sub.add_parser("homotopy", help="Homotopy type of a t-Young complex")
    shape_flags(p)
    json_flag(p)

    p = sub.add_parser("homology", help="Reduced Betti numbers")
    shape_flags(p, required=False)
    p.add_argument("-n", type=int, help="Path length n (dual complex)")
    p.add_argument("-k", type=int, help="Squarefree power k (dual complex)")
    p.add_argument("--field", choices=[f.value for f in Field], default=Field.RATIONALS.value)
    json_flag(p)

    p = sub.add_parser("dual", help="Alexander dual of the Stanley-Reisner complex")
    ideal_flags(p)
    oracle_flag(p)
    json_flag(p)

    p = sub.add_parser("pathideal", help="Generators of the squarefree power")
    ideal_flags(p)
    json_flag(p)

    for name, text in (
        ("pd", "Projective dimension"),
        ("dim", "Krull dimension"),
        ("leray", "Leray number of the dual complex"),
    ):
        p = sub.add_parser(name, help=text)
        ideal_flags(p)
        oracle_flag(p)

    p = sub.add_parser("helly", help="Helly number of the dual of a t-Young complex")
    shape_flags(p)
    oracle_flag(p)

    p = sub.add_parser("graph", help="Reduction graph of the dual complex")
    ideal_flags(p)
    output = p.add_mutually_exclusive_group()
    output.add_argument("--dot", action="store_true", help="Print GraphViz source")
    output.add_argument("--json", action="store_true", help="Print JSON")

    p = sub.add_parser("decomp", help="Vertex decomposability or shellability certificate")
    shape_flags(p)
    p.add_argument("--kind", choices=["vd", "shelling"], default="vd")
    json_flag(p)

    p = sub.add_parser("verify", help="Run the cross-check suite")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-n-t1", type=int, default=10, help="Largest n when t = 1")
    p.add_argument("--max-t", type=int, default=3)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--max-cells", type=int, default=10)
    p.add_argument("--workers", type=int, default=1, help="Worker processes")
    p.add_argument("--timings", action="store_true", help="Report seconds per check")
    json_flag(p)

    return parser


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run one command and return its exit status."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    args_list: List[str] = list(sys.argv[1:] if argv is None else argv)
    previous = get_config()
    try:
        args = build_parser().parse_args(args_list)
        config = CLIConfig(logging={"level": args.log_level, "json_logs": args.log_json})
        configure(config)
        setup_logging(config.logging.level, config.logging.json_logs)
        args.failed = False
        output = COMMANDS[args.command](args)
        print(output, file=out)
        return EXIT_DOMAIN if args.failed else EXIT_OK
    except CapacityError as e:
        print(f"ytc: capacity exceeded: {e}", file=err)
        return EXIT_CAPACITY
    except (DomainError, UsageError) as e:
        print(f"ytc: error: {e}", file=err)
        return EXIT_DOMAIN
    except YTCError as e:
        logger.error("internal error", error=str(e))
        print(f"ytc: internal error: {e}", file=err)
        return EXIT_DOMAIN
    except ValueError as e:
        print(f"ytc: error: {e}", file=err)
        return EXIT_DOMAIN
    except SystemExit as e:
        return int(e.code or 0)
    finally:
        configure(previous)


def main() -> None:
    sys.exit(run())
