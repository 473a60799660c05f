"""Command line front end.

Exit codes: 0 success (or the model qualifies), 1 check failed, 2 parse
error, 3 enumeration limit exceeded, 4 usage or precondition error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import horn, stable
from .core import check_limit, classify, enumerate_models, format_set, interp, sat_program, subsets
from .errors import LimitExceeded, McaError, ParseError
from .interop import (
    ca_sat_program,
    ca_supported_models,
    ca_to_mca,
    dlp_possible_models,
    dlp_to_mca,
    lp_gl_reduct,
    lp_least_model,
    lp_models,
    lp_sat,
    lp_to_mca,
    lp_tp,
    mca_to_ca,
    nss_is_stable,
    nss_stable_models,
)
from .textio import DIALECTS, dialect_of, parse, serialize

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT, EXIT_USAGE = 0, 1, 2, 3, 4
SEMANTICS = ("classical", "supported", "stable", "derivable", "possible")
HSET_LIMIT = 20
UNIVERSE_LIMIT = 16


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="mcalp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file")
        p.add_argument("--format", choices=DIALECTS, help="dialect (default: from extension)")
        p.add_argument("--max-atoms", type=int, help="enumeration guard on atom count")

    p = sub.add_parser("models", help="print all models under a semantics")
    common(p)
    p.add_argument("--semantics", choices=SEMANTICS, default="stable")
    p.add_argument("--limit", type=int, help="print at most N models")

    p = sub.add_parser("check", help="decide whether a set of atoms is a model")
    common(p)
    p.add_argument("--model", required=True, help='comma separated atoms, e.g. "a,b"')
    p.add_argument("--semantics", choices=SEMANTICS, default="stable")
    p.add_argument("--witness", action="store_true", help="print a quasi-computation (stable only)")

    p = sub.add_parser("compute", help="print a computation of a Horn mca-program")
    common(p)
    how = p.add_mutually_exclusive_group()
    how.add_argument("--seed", type=int)
    how.add_argument("--greedy", action="store_true")
    how.add_argument("--canonical", metavar="MODEL")

    p = sub.add_parser("translate", help="translate a program to another dialect")
    common(p)
    p.add_argument("--to", choices=("mca", "ca"), required=True)
    return parser


def _load(args):
    dialect = args.format or dialect_of(args.file)
    if dialect is None:
        raise UsageError(f"cannot infer the dialect of {args.file}; use --format")
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return dialect, parse(text, dialect)


def _parse_model(text: str) -> frozenset:
    return interp(a.strip() for a in text.split(",") if a.strip())


def _as_mca(dialect: str, program):
    if dialect == "mca":
        return program
    if dialect == "lp":
        return lp_to_mca(program)
    if dialect == "ca":
        return ca_to_mca(program)
    return dlp_to_mca(program)


def _require_horn_mca(dialect: str, program):
    if dialect != "mca" or not classify(program).is_horn:
        raise UsageError("derivable models need a Horn mca-program")
    return program


def find_models(dialect: str, program, semantics: str, hset_limit: int, universe_limit: int):
    if semantics == "possible":
        if dialect != "dlp":
            raise UsageError("possible models are defined for disjunctive programs only")
        return dlp_possible_models(program, universe_limit)
    if semantics == "derivable":
        return horn.derivable_models(_require_horn_mca(dialect, program), hset_limit)
    if dialect == "lp":
        return lp_models(program, semantics, universe_limit)
    if dialect == "ca":
        if semantics == "stable":
            return nss_stable_models(program, universe_limit)
        if semantics == "supported":
            return ca_supported_models(program, hset_limit)
        universe = program.atoms()
        check_limit(len(universe), universe_limit, "universe atoms")
        return [m for m in subsets(universe) if ca_sat_program(m, program)]
    mca = _as_mca(dialect, program)
    if semantics == "classical":
        return enumerate_models(mca, limit=universe_limit)
    if semantics == "supported":
        return stable.supported_models(mca, hset_limit)
    return stable.stable_models(mca, hset_limit)


def check_model(dialect: str, program, semantics: str, m: frozenset, limit: int) -> bool:
    if semantics == "possible":
        if dialect != "dlp":
            raise UsageError("possible models are defined for disjunctive programs only")
        return m in dlp_possible_models(program, limit)
    if semantics == "derivable":
        return horn.is_derivable(_require_horn_mca(dialect, program), m)
    if dialect == "lp":
        if semantics == "classical":
            return lp_sat(m, program)
        if semantics == "supported":
            return lp_sat(m, program) and lp_tp(program, m) == m
        return lp_least_model(lp_gl_reduct(program, m)) == m
    if dialect == "ca":
        if semantics == "classical":
            return ca_sat_program(m, program)
        if semantics == "stable":
            return nss_is_stable(program, m)
    mca = _as_mca(dialect, program)
    if semantics == "classical":
        return sat_program(m, mca)
    if semantics == "supported":
        return stable.is_supported(mca, m)
    return stable.is_stable(mca, m)


def _translate(dialect: str, program, target: str):
    mca = _as_mca(dialect, program)
    if target == "mca":
        return mca
    if dialect == "ca":
        return program
    return mca_to_ca(mca)


def _run(args) -> int:
    dialect, program = _load(args)
    hset_limit = args.max_atoms if args.max_atoms is not None else HSET_LIMIT
    universe_limit = args.max_atoms if args.max_atoms is not None else UNIVERSE_LIMIT

    if args.command == "models":
        models = find_models(dialect, program, args.semantics, hset_limit, universe_limit)
        if args.limit is not None:
            models = models[: args.limit]
        for m in models:
            print(format_set(m))
        return EXIT_OK

    if args.command == "check":
        m = _parse_model(args.model)
        ok = check_model(dialect, program, args.semantics, m, universe_limit)
        print("yes" if ok else "no")
        if args.witness:
            if args.semantics != "stable":
                raise UsageError("--witness is available for stable checks only")
            trace = stable.find_quasi_computation(_as_mca(dialect, program), m, universe_limit)
            if trace is not None:
                for line in trace.render().splitlines():
                    print(line)
        return EXIT_OK if ok else EXIT_FAIL

    if args.command == "compute":
        if dialect != "mca":
            raise UsageError("compute needs an mca-program")
        if args.canonical is not None:
            trace = horn.canonical_computation(program, _parse_model(args.canonical))
        elif args.seed is not None:
            trace = horn.random_computation(program, args.seed, hset_limit)
        else:
            trace = horn.greedy_computation(program)
        print(trace.render())
        return EXIT_OK

    sys.stdout.write(serialize(_translate(dialect, program, args.to)))
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _run(args)
    except ParseError as exc:
        print(f"{args.file}:{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
        return EXIT_PARSE
    except LimitExceeded as exc:
        print(f"mcalp: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, McaError) as exc:
        print(f"mcalp: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
