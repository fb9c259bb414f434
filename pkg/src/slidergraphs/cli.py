"""Command line interface: ``slidergraphs <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import lamplighter as lp
from .digraph import Digraph, cycle_digraph, tensor_product
from .export import export
from .groups import load_group, parse_subset
from .slider import (
    cayley_slider,
    collatz_slider,
    factorial_slider,
    full_debruijn,
    kautz,
    periodic_slider,
    trans_markov_slider,
)
from .specfile import Substitution, load_spec
from .symbolic import Explicit, FiniteWord, Tmc, circular_admissible, factors, substitution_fixed_point
from .theorems import (
    count_debruijn_sequences,
    debruijn_sequence,
    minimal_connecting_step,
    verify_thm_sch,
    verify_thm_schC,
    verify_thm_spider,
)
from .words import Alphabet

GRAPH_COMMANDS = (
    "debruijn",
    "kautz",
    "rauzy",
    "factorial",
    "periodic",
    "trans-markov",
    "cayley-slider",
    "lamplighter-cayley",
    "lamplighter-schreier",
    "collatz",
)

DEFAULT_PREFIX_LENGTH = 4096


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output", metavar="FILE")


def _span(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", "--n", dest="n", type=int, required=True, metavar="N")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="slidergraphs", description="Build circular slider graphs and check their structure.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("debruijn", "kautz"):
        p = sub.add_parser(name)
        p.add_argument("-m", type=int, required=True, help="alphabet size")
        _span(p)
        _output_options(p)

    p = sub.add_parser("rauzy", help="Rauzy graph of a finite word or substitution fixed point")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--substitution", metavar="FILE")
    p.add_argument("--alphabet", help="space separated letters (default: letters of --word)")
    p.add_argument("--prefix-length", type=int, default=DEFAULT_PREFIX_LENGTH)
    _span(p)
    _output_options(p)

    for name in ("factorial", "periodic"):
        p = sub.add_parser(name)
        p.add_argument("--spec", required=True, metavar="FILE")
        _span(p)
        _output_options(p)

    p = sub.add_parser("trans-markov")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--restrict", metavar="admissible|circular|FILE")
    _span(p)
    _output_options(p)

    p = sub.add_parser("cayley-slider")
    p.add_argument("--group", required=True, metavar="zM|FILE")
    p.add_argument("--k", required=True, metavar="LIST")
    _span(p)
    _output_options(p)

    for name in ("lamplighter-cayley", "lamplighter-schreier"):
        p = sub.add_parser(name)
        _span(p)
        p.add_argument("--group", required=True, metavar="zM|FILE")
        p.add_argument("--gens", choices=sorted(lp.FAMILIES), default="wrs")
        p.add_argument("--k", default="all", metavar="LIST")
        _output_options(p)

    p = sub.add_parser("collatz")
    _span(p)
    _output_options(p)

    p = sub.add_parser("spider", help="tensor a directed cycle with another graph")
    p.add_argument("--cycle", type=int, required=True, metavar="K")
    p.add_argument("graph", nargs=argparse.REMAINDER, help="graph subcommand and its options")

    p = sub.add_parser("verify")
    p.add_argument("theorem", choices=("sch", "schc", "spider"))
    _span(p)
    p.add_argument("--group", required=True, metavar="zM|FILE")
    p.add_argument("--k", default="all", metavar="LIST")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("min-step")
    p.add_argument("--spec", required=True, metavar="FILE")
    _span(p)
    p.add_argument("--mode", choices=("weak", "strong"), default="weak")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sequence")
    p.add_argument("-m", type=int, required=True)
    _span(p)
    p.add_argument("--count", action="store_true")
    return parser


def _subshift(path: str):
    spec = load_spec(path)
    if isinstance(spec, Substitution):
        raise ValueError("a substitution file does not define a subshift")
    return spec


def _rauzy(args) -> Digraph:
    if args.word is not None:
        letters = args.alphabet.split() if args.alphabet else sorted(set(args.word))
        alphabet = Alphabet.from_labels(letters)
        word = alphabet.parse(args.word)
    else:
        sub = load_spec(args.substitution)
        if not isinstance(sub, Substitution):
            raise ValueError("--substitution expects a 'kind = substitution' file")
        alphabet = sub.alphabet
        word = substitution_fixed_point(sub.rules, sub.seed, args.prefix_length)
    return factorial_slider(FiniteWord(alphabet, word), args.n).renamed(f"Rauzy^{args.n}")


def _trans_markov(args) -> Digraph:
    spec = _subshift(args.spec)
    if not isinstance(spec, Tmc):
        raise ValueError("trans-markov needs a 'kind = tmc' spec")
    restrict = None
    if args.restrict == "admissible":
        restrict = factors(spec, args.n)
    elif args.restrict == "circular":
        restrict = circular_admissible(spec, args.n)
    elif args.restrict is not None:
        other = load_spec(args.restrict)
        if not isinstance(other, Explicit):
            raise ValueError("--restrict FILE expects a 'kind = explicit' spec")
        if other.alphabet != spec.alphabet:
            raise ValueError("restriction file uses a different alphabet")
        restrict = other.words
    return trans_markov_slider(spec, args.n, restrict)


def _lamplighter(args) -> Digraph:
    b = load_group(args.group)
    fam = lp.FAMILIES[args.gens](parse_subset(b, args.k))
    if args.command == "lamplighter-cayley":
        return lp.cayley_digraph(args.n, b, fam)
    return lp.schreier_digraph(args.n, b, fam)


def build_graph(args) -> Digraph:
    cmd = args.command
    if cmd == "debruijn":
        return full_debruijn(args.m, args.n)
    if cmd == "kautz":
        return kautz(args.m, args.n)
    if cmd == "rauzy":
        return _rauzy(args)
    if cmd == "factorial":
        return factorial_slider(load_spec(args.spec), args.n)
    if cmd == "periodic":
        return periodic_slider(_subshift(args.spec), args.n)
    if cmd == "trans-markov":
        return _trans_markov(args)
    if cmd == "cayley-slider":
        b = load_group(args.group)
        return cayley_slider(b, parse_subset(b, args.k), args.n)
    if cmd in ("lamplighter-cayley", "lamplighter-schreier"):
        return _lamplighter(args)
    if cmd == "collatz":
        return collatz_slider(args.n)
    raise UsageError(f"{cmd} does not build a graph")


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _run(argv: Sequence[str]) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    cmd = args.command

    if cmd in GRAPH_COMMANDS:
        _emit(export(build_graph(args), args.format), args.output)
        return 0

    if cmd == "spider":
        if not args.graph or args.graph[0] not in GRAPH_COMMANDS:
            raise UsageError(f"spider: expected one of {', '.join(GRAPH_COMMANDS)} after --cycle")
        inner = parser.parse_args(args.graph)
        g = tensor_product(cycle_digraph(args.cycle), build_graph(inner))
        _emit(export(g, inner.format), inner.output)
        return 0

    if cmd == "verify":
        b = load_group(args.group)
        if args.theorem == "sch":
            report = verify_thm_sch(args.n, b)
        elif args.theorem == "schc":
            report = verify_thm_schC(args.n, b, parse_subset(b, args.k))
        else:
            report = verify_thm_spider(args.n, b, parse_subset(b, args.k))
        sys.stdout.write(report.to_json() if args.json else report.to_text())
        return 0 if report.passed else 1

    if cmd == "min-step":
        result = minimal_connecting_step(_subshift(args.spec), args.n, args.mode)
        if args.json:
            sys.stdout.write(json.dumps(result.__dict__, indent=2) + "\n")
        else:
            sys.stdout.write(result.to_text())
        return 0

    if cmd == "sequence":
        if args.count:
            sys.stdout.write(f"{count_debruijn_sequences(args.m, args.n)}\n")
        else:
            sys.stdout.write(Alphabet(args.m).format(debruijn_sequence(args.m, args.n)) + "\n")
        return 0

    raise UsageError(f"unknown command {cmd}")


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        return _run(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, TypeError) as exc:
        print(f"slidergraphs: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
