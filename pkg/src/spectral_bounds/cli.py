"""Command-line interface.

Subcommands: mu (spectral radius), report (all bounds as JSON), turan
(characteristic-equation root vs eigensolver), gen (family generators as
graph6), verify (run a campaign, JSON record, exit 1 on violations).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import graphs
from .bounds import full_report
from .harness import CampaignConfig, run_campaign
from .spectra import spectral_radius, turan_spectral_radius

_FAMILIES = {
    "complete": (graphs.complete, ("n",)),
    "complete-minus-edge": (graphs.complete_minus_edge, ("n",)),
    "matching-complement": (graphs.matching_complement, ("n",)),
    "star": (graphs.star, ("n",)),
    "friendship": (graphs.friendship, ("t",)),
    "complete-bipartite": (graphs.complete_bipartite, ("a", "b")),
    "cycle": (graphs.cycle, ("n",)),
    "path": (graphs.path, ("n",)),
    "wheel": (graphs.wheel, ("rim",)),
    "turan": (graphs.turan_graph, ("r", "n")),
}


def _add_graph_input(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("graph6", nargs="?", help="graph6 string")
    sub.add_argument("--edges", metavar="PATH",
                     help="edge-list file: an 'n' header line, then 'u v' lines")


def _graph_from_args(parser: argparse.ArgumentParser, args) -> graphs.Graph:
    if (args.graph6 is None) == (args.edges is None):
        parser.error("supply exactly one of a graph6 string or --edges PATH")
    if args.graph6 is not None:
        return graphs.from_graph6(args.graph6)
    return graphs.read_edge_list(args.edges)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-bounds",
        description="Spectral radius bounds and exhaustive verification for simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mu = sub.add_parser("mu", help="print the spectral radius of a graph")
    _add_graph_input(p_mu)

    p_report = sub.add_parser("report", help="print a JSON report of every bound")
    _add_graph_input(p_report)
    p_report.add_argument("--r", type=int, help="clique-number parameter")
    p_report.add_argument("--k", type=int, help="book parameter")
    p_report.add_argument("--l", type=int, help="biclique parameter")

    p_turan = sub.add_parser(
        "turan",
        help="spectral radius of the balanced complete r-partite graph, "
        "via its characteristic equation and via the eigensolver",
    )
    p_turan.add_argument("--r", type=int, required=True)
    p_turan.add_argument("--n", type=int, required=True)

    p_gen = sub.add_parser("gen", help="emit a named graph family as graph6")
    p_gen.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--t", type=int)
    p_gen.add_argument("--a", type=int)
    p_gen.add_argument("--b", type=int)
    p_gen.add_argument("--r", type=int)
    p_gen.add_argument("--rim", type=int)

    p_verify = sub.add_parser("verify", help="run a verification campaign")
    p_verify.add_argument("--theorem", type=int, required=True, choices=(1, 2, 3))
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--l", type=int)
    p_verify.add_argument("--n-min", type=int, default=1)
    p_verify.add_argument("--n-max", type=int, default=6)
    p_verify.add_argument("--graph6", metavar="PATH",
                          help="verify a graph6 catalog instead of enumerating")
    p_verify.add_argument("--tolerance", type=float, default=1e-9)
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.add_argument("--out", metavar="PATH", help="write the JSON record here")
    return parser


def _cmd_mu(parser, args) -> int:
    g = _graph_from_args(parser, args)
    print(f"{spectral_radius(g):.12g}")
    return 0


def _cmd_report(parser, args) -> int:
    g = _graph_from_args(parser, args)
    report = full_report(g, r=args.r, k=args.k, l=args.l)
    print(json.dumps(report.to_dict(), indent=2))
    return 0


def _cmd_turan(args) -> int:
    print(f"{turan_spectral_radius(args.r, args.n):.12f}")
    print(f"{spectral_radius(graphs.turan_graph(args.r, args.n)):.12f}")
    return 0


def _cmd_gen(parser, args) -> int:
    fn, names = _FAMILIES[args.family]
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            parser.error(f"--family {args.family} requires --{name}")
        values.append(value)
    print(graphs.to_graph6(fn(*values)))
    return 0


def _cmd_verify(args) -> int:
    config = CampaignConfig(
        theorem=args.theorem,
        r=args.r,
        k=args.k,
        l=args.l,
        n_min=args.n_min,
        n_max=args.n_max,
        source=args.graph6 if args.graph6 else "enumeration",
        tolerance=args.tolerance,
        parallelism=args.threads,
    )
    record = run_campaign(config)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(record.to_json() + "\n")
    else:
        print(record.to_json())
    return 0 if record.passed else 1


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "mu":
            return _cmd_mu(parser, args)
        if args.command == "report":
            return _cmd_report(parser, args)
        if args.command == "turan":
            return _cmd_turan(args)
        if args.command == "gen":
            return _cmd_gen(parser, args)
        return _cmd_verify(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
