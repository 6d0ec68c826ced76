# Copyright 2026 The semidom Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import NoReturn

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from semidom import __version__
from semidom.errors import Error, FormatError, GraphError, VerificationError
from semidom.families import FamilyId, construct_for_tree, generate_family, recognize
from semidom.formats import (
    emit_report,
    encode_edgelist,
    encode_graph6,
    export_catalog,
    parse_edgelist,
    read_graph6_stream,
)
from semidom.graph import Edge, Graph, subdivide_edge
from semidom.solvers import DominationVariant, domination_numbers, min_set
from semidom.subdivision import DEFAULT_K_MAX, TreeClass, class_census, msd_semitotal
from semidom.verify import CLAIMS, Bounds, ClaimId, Verdict, resolve_claim, run_verification

_console = Console(file=sys.stderr)
logging.basicConfig(
    format="%(message)s", datefmt="[%X]", handlers=[RichHandler(console=_console)]
)
_logger = logging.getLogger(__name__)

# NOTE: We configure the top package logger, rather than the root logger,
# to avoid overly verbose logging in third-party code by default.
_package_logger = logging.getLogger("semidom")
_package_logger.setLevel(os.environ.get("SEMIDOM_LOGLEVEL", "INFO").upper())

_ALL_PARAMS = "all"
_ALL_CLAIMS = "all"


def _invalid_arguments(args: argparse.Namespace, message: str) -> NoReturn:
    """
    An `argparse` helper that fixes up the type hints on our use of
    `ArgumentParser.error`.
    """
    args._parser.error(message)
    raise ValueError("unreachable")


def _int_env(envvar: str, default: int) -> int:
    """
    An `argparse` helper for reading an integer default from the environment.
    """
    val = os.getenv(envvar)
    if val is None:
        return default
    try:
        return int(val)
    except ValueError:
        raise ValueError(f"can't coerce '{val}' from {envvar} to an integer") from None


def _edge(arg: str) -> Edge:
    """
    An `argparse` type for `u,v` edge arguments.
    """
    try:
        u, v = (int(part) for part in arg.split(","))
        return Edge.of(u, v)
    except (ValueError, GraphError):
        raise argparse.ArgumentTypeError(f"expected an edge as 'u,v', got {arg!r}") from None


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--input",
        metavar="FILE",
        type=Path,
        required=True,
        help="The graph to read; `-` reads from standard input",
    )
    parser.add_argument(
        "--format",
        choices=["edgelist", "graph6"],
        default="edgelist",
        help="The input format",
    )


def _parser() -> argparse.ArgumentParser:
    # Arguments in parent_parser can be used for both commands and subcommands
    parent_parser = argparse.ArgumentParser(add_help=False)
    parent_parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="run with additional debug logging; supply multiple times to increase verbosity",
    )

    parser = argparse.ArgumentParser(
        prog="semidom",
        description="domination, semitotal domination and multisubdivision numbers of graphs",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    parser.add_argument("-V", "--version", action="version", version=f"semidom {__version__}")

    subcommands = parser.add_subparsers(
        required=True,
        dest="subcommand",
        metavar="COMMAND",
        help="the operation to perform",
    )

    # `semidom compute`
    compute = subcommands.add_parser(
        "compute",
        help="compute a domination parameter with a witness set",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    compute.add_argument(
        "--param",
        choices=[*(v.value for v in DominationVariant), _ALL_PARAMS],
        default=DominationVariant.SEMITOTAL.value,
        help="The parameter to compute",
    )
    _add_input_options(compute)

    # `semidom msd`
    msd = subcommands.add_parser(
        "msd",
        help="compute the semitotal domination multisubdivision number",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    _add_input_options(msd)
    msd.add_argument(
        "--k-max",
        metavar="K",
        type=int,
        default=argparse.SUPPRESS,
        help=f"The largest subdivision count to try (default: $SEMIDOM_K_MAX or {DEFAULT_K_MAX})",
    )

    # `semidom subdivide`
    subdivide = subcommands.add_parser(
        "subdivide",
        help="subdivide one edge and print the resulting graph",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    _add_input_options(subdivide)
    subdivide.add_argument(
        "--edge", metavar="U,V", type=_edge, required=True, help="The edge to subdivide"
    )
    subdivide.add_argument(
        "--times", metavar="K", type=int, default=1, help="The number of new vertices"
    )

    # `semidom generate`
    generate = subcommands.add_parser(
        "generate",
        help="export a family catalog up to an order bound",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    generate.add_argument(
        "--family", choices=[f.value for f in FamilyId], required=True, help="The family"
    )
    generate.add_argument(
        "--max-n", metavar="N", type=int, required=True, help="The largest order to include"
    )
    generate.add_argument(
        "--out",
        metavar="FILE",
        type=Path,
        help="Write the catalog here instead of standard output",
    )

    # `semidom recognize`
    recognize_ = subcommands.add_parser(
        "recognize",
        help="find a family labeling of a tree",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    recognize_.add_argument(
        "--family", choices=[f.value for f in FamilyId], required=True, help="The family"
    )
    _add_input_options(recognize_)
    recognize_.add_argument(
        "--n-cap", metavar="N", type=int, default=16, help="The largest order accepted"
    )

    # `semidom almost-sds`
    almost = subcommands.add_parser(
        "almost-sds",
        help="construct an almost semitotal dominating set of a family U tree",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    _add_input_options(almost)
    almost.add_argument(
        "--vertex", metavar="X", type=int, required=True, help="The exempt vertex"
    )

    # `semidom verify`
    verify = subcommands.add_parser(
        "verify",
        help="verify a claim over every instance up to a bound",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    verify.add_argument(
        "--claim",
        metavar="ID",
        required=True,
        help=f"The claim to check, or `{_ALL_CLAIMS}`; one of "
        + ", ".join(c.value for c in ClaimId),
    )
    verify.add_argument(
        "--min-n", metavar="N", type=int, help="Override the claim's smallest order"
    )
    verify.add_argument(
        "--max-n", metavar="N", type=int, help="Override the claim's largest order"
    )
    verify.add_argument(
        "--graphs",
        metavar="G6FILE",
        type=Path,
        help="A graph6 stream of additional graphs for claims that accept them",
    )
    verify.add_argument(
        "--jobs",
        metavar="J",
        type=int,
        default=1,
        help="Worker processes; the SEMIDOM_JOBS environment variable takes precedence",
    )

    # `semidom census`
    census = subcommands.add_parser(
        "census",
        help="count the trees of each order by class",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[parent_parser],
    )
    census.add_argument(
        "--max-n", metavar="N", type=int, required=True, help="The largest order"
    )

    return parser


def main(args: list[str] | None = None) -> None:
    if not args:
        args = sys.argv[1:]

    parser = _parser()
    args = parser.parse_args(args)

    # Configure logging upfront, so that we don't miss anything.
    if args.verbose >= 1:
        _package_logger.setLevel("DEBUG")
    if args.verbose >= 2:
        logging.getLogger().setLevel("DEBUG")

    _logger.debug(f"parsed arguments {args}")

    # Stuff the parser back into our namespace, so that we can use it for
    # error handling later.
    args._parser = parser

    try:
        if args.subcommand == "compute":
            _compute(args)
        elif args.subcommand == "msd":
            _msd(args)
        elif args.subcommand == "subdivide":
            _subdivide(args)
        elif args.subcommand == "generate":
            _generate(args)
        elif args.subcommand == "recognize":
            _recognize(args)
        elif args.subcommand == "almost-sds":
            _almost_sds(args)
        elif args.subcommand == "verify":
            _verify(args)
        elif args.subcommand == "census":
            _census(args)
        else:
            _invalid_arguments(args, f"Unknown subcommand: {args.subcommand}")
    except Error as e:
        e.log_and_exit(_logger, args.verbose >= 1)


def _read_text(args: argparse.Namespace, path: Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    if not path.is_file():
        _invalid_arguments(args, f"Input must be a file: {path}")
    return path.read_text()


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    """
    Reads every graph from `--input`: one for edge lists, one per record for
    graph6 streams.
    """
    text = _read_text(args, args.input)
    if args.format == "graph6":
        graphs = list(read_graph6_stream(text.splitlines()))
        if not graphs:
            raise FormatError("the graph6 stream contains no records")
        return graphs
    return [parse_edgelist(text)]


def _read_graph(args: argparse.Namespace) -> Graph:
    graphs = _read_graphs(args)
    if len(graphs) != 1:
        raise FormatError(f"expected a single graph, got {len(graphs)} graph6 records")
    return graphs[0]


def _compute(args: argparse.Namespace) -> None:
    for graph in _read_graphs(args):
        if args.param == _ALL_PARAMS:
            print(emit_report(domination_numbers(graph)))
        else:
            print(emit_report(min_set(graph, DominationVariant(args.param))))


def _msd(args: argparse.Namespace) -> None:
    k_max = getattr(args, "k_max", None)
    if k_max is None:
        try:
            k_max = _int_env("SEMIDOM_K_MAX", DEFAULT_K_MAX)
        except ValueError as e:
            _invalid_arguments(args, str(e))

    graph = _read_graph(args)
    print(emit_report(msd_semitotal(graph, k_max)))


def _subdivide(args: argparse.Namespace) -> None:
    graph = subdivide_edge(_read_graph(args), args.edge, args.times)
    if args.format == "graph6":
        print(encode_graph6(graph))
    else:
        print(encode_edgelist(graph), end="")


def _generate(args: argparse.Namespace) -> None:
    catalog = generate_family(FamilyId(args.family), args.max_n)
    text = export_catalog(catalog)
    if args.out is None:
        print(text, end="")
    else:
        args.out.write_text(text)
        _logger.info(f"wrote {len(catalog)} member(s) to {args.out}")


def _recognize(args: argparse.Namespace) -> None:
    family = FamilyId(args.family)
    recognition = recognize(family, _read_graph(args), args.n_cap)
    if recognition is None:
        _logger.error(f"no labeling places this tree in family {family.value}")
        sys.exit(1)
    print(emit_report(recognition.report()))


def _almost_sds(args: argparse.Namespace) -> None:
    built = construct_for_tree(_read_graph(args), args.vertex)
    if built.used_fallback:
        _logger.warning("the step-by-step construction failed; the set came from the solver")
    print(emit_report(built))


def _bounds_for(args: argparse.Namespace, claim: ClaimId, clamp: bool) -> Bounds | None:
    check = CLAIMS[claim]
    max_n = check.default_bounds.max_n if args.max_n is None else args.max_n
    min_n = check.default_bounds.min_n if args.min_n is None else args.min_n
    if clamp and max_n > check.budget:
        _logger.warning(f"{claim}: clamping --max-n {max_n} to its budget {check.budget}")
        max_n = check.budget
    if clamp and min_n > max_n:
        _logger.warning(f"{claim}: skipped, no orders between {min_n} and {max_n}")
        return None
    try:
        return Bounds(min_n=min_n, max_n=max_n)
    except ValidationError:
        raise VerificationError(
            f"invalid bounds for {claim}", min_n=min_n, max_n=max_n
        ) from None


def _verify(args: argparse.Namespace) -> None:
    try:
        jobs = _int_env("SEMIDOM_JOBS", args.jobs)
    except ValueError as e:
        _invalid_arguments(args, str(e))
    if jobs < 1:
        _invalid_arguments(args, f"--jobs must be positive, got {jobs}")

    graphs: list[Graph] = []
    if args.graphs is not None:
        graphs = list(read_graph6_stream(_read_text(args, args.graphs).splitlines()))
        _logger.info(f"read {len(graphs)} graph(s) from {args.graphs}")

    if args.claim == _ALL_CLAIMS:
        claims = list(ClaimId)
    else:
        claims = [resolve_claim(args.claim)]

    failed = []
    for claim in claims:
        bounds = _bounds_for(args, claim, clamp=len(claims) > 1)
        if bounds is None:
            continue
        report = run_verification(claim, bounds, graphs, jobs=jobs)
        print(emit_report(report))
        if report.verdict is Verdict.FAIL:
            failed.append(claim.value)

    if failed:
        _logger.error(f"FAIL: {', '.join(failed)}")
        sys.exit(1)


def _census(args: argparse.Namespace) -> None:
    if args.max_n < 3:
        _invalid_arguments(args, f"--max-n must be at least 3, got {args.max_n}")

    census = class_census(args.max_n)
    table = Table(title="Trees by class")
    table.add_column("n", justify="right")
    for tree_class in TreeClass:
        table.add_column(f"Class {tree_class.value}", justify="right")
    table.add_column("total", justify="right")
    for n, counts in census.items():
        table.add_row(
            str(n), *(str(counts[c]) for c in TreeClass), str(sum(counts.values()))
        )
    Console().print(table)
