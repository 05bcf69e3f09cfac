"""Command-line front end: ``isocover classify | verify | map``.

Structured output is JSON on stdout.  Exit status: 0 when every check
passes, 1 on an invariant failure, 2 on bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import maps
from .errors import (
    DegenerateError,
    InvariantViolation,
    IsocoverError,
    NoConjugatorError,
    ReducibleError,
)
from .orbifold import INFORMATIONAL, UNEXPECTED, enumerate_candidates
from .reps import FivePuncturedRep, GenusTwoRep, TorusTwoRep, TorusTwoRepC, validate
from .scalar import set_epsilon
from .serialize import (
    DecodeError,
    dumps,
    entry_to_json,
    informational_to_json,
    loads_rep,
    rep_to_json,
)
from .verify import SUITES, Failure, RunReport, run_suite

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2

DEFAULT_TRIALS = {"fricke": 1000, "involution": 1000, "r0": 500, "two-to-one": 200,
                  "bielliptic": 300, "words": 100}

# name -> (input type, function, output encoder)
MAPS = {
    "phi1-pullback": (FivePuncturedRep, maps.phi1_pullback, rep_to_json),
    "phi1-descend": (TorusTwoRep, maps.phi1_descend, rep_to_json),
    "pi-pullback": (TorusTwoRepC, maps.pi_pullback, rep_to_json),
    "pi-descend": (GenusTwoRep, maps.pi_descend, rep_to_json),
    "five-to-genus2": (FivePuncturedRep, maps.five_to_genus2, rep_to_json),
    "fiber": (TorusTwoRep, maps.phi1_fiber, lambda f: {
        "type": "fiber",
        "points": [rep_to_json(p) for p in f.points],
        "projectively_equivalent": f.projectively_equivalent,
    }),
}


def _default_seed() -> int:
    raw = os.environ.get("ISOCOVER_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"isocover: ISOCOVER_SEED must be an integer, got {raw!r}")


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj, indent=2) + "\n")


def _fail_input(message: str) -> int:
    sys.stderr.write(f"isocover: {message}\n")
    _emit({"error": message, "exit_code": EXIT_INPUT})
    return EXIT_INPUT


# -- classify ----------------------------------------------------------------------


def _table(entries) -> str:
    header = f"{'d':>2} {'g':>2} {'orders':<22} {'g~':>3} {'n~':>3} {'b':>2}  label"
    lines = [header, "-" * len(header)]
    for e in entries:
        c = e.candidate
        orders = ",".join(map(str, c.base.orders))
        lines.append(f"{c.degree:>2} {c.base.genus:>2} {orders:<22} {c.cover_genus:>3} "
                     f"{c.cover_orbifold_count:>3} {c.branch_count:>2}  {e.label}")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    if args.dmax < 2:
        return _fail_input(f"--dmax must be at least 2, got {args.dmax}")
    start = time.perf_counter()
    entries = enumerate_candidates(args.dmax, pruning=not args.no_pruning)
    report = RunReport(f"classify --dmax {args.dmax}" + (" --no-pruning" if args.no_pruning else ""),
                       seed=0, trials=len(entries))
    for i, e in enumerate(entries):
        if e.label == UNEXPECTED:
            report.failures.append(Failure(i, "candidate outside the known list", entry_to_json(e)))
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    if args.format == "table":
        print(_table(entries))
        for info in INFORMATIONAL:
            print(f"\nnot hyperbolic: {info.signature}  {info.note}")
    else:
        _emit({
            "report": report.to_json(),
            "entries": [entry_to_json(e) for e in entries],
            "informational": [informational_to_json(x) for x in INFORMATIONAL],
        })
    return EXIT_OK if report.ok else EXIT_FAILURE


# -- verify ------------------------------------------------------------------------


def cmd_verify(args) -> int:
    trials = args.trials if args.trials is not None else DEFAULT_TRIALS[args.theorem]
    if trials < 1:
        return _fail_input(f"--trials must be at least 1, got {trials}")
    if args.backend == "exact" and args.theorem != "fricke":
        sys.stderr.write(f"isocover: {args.theorem} samples in floating point; --backend exact ignored\n")
    seed = args.seed if args.seed is not None else _default_seed()
    report = run_suite(args.theorem, trials, seed, args.backend)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_FAILURE


# -- map ---------------------------------------------------------------------------


def cmd_map(args) -> int:
    in_type, fn, encode = MAPS[args.name]
    try:
        rep = loads_rep(Path(args.input).read_text())
    except OSError as exc:
        return _fail_input(f"cannot read {args.input}: {exc}")
    except DecodeError as exc:
        return _fail_input(str(exc))
    if not isinstance(rep, in_type):
        return _fail_input(f"{args.name} expects a {in_type.kind!r} representation, got {rep.kind!r}")
    problems = validate(rep)
    if problems:
        return _fail_input("input does not satisfy its relations: " + "; ".join(problems))
    start = time.perf_counter()
    report = RunReport(f"map {args.name}", seed=0, trials=1)
    try:
        result = fn(rep)
    except InvariantViolation as exc:
        report.failures.append(Failure(0, str(exc), rep_to_json(rep)))
        result = None
    except (ReducibleError, DegenerateError, NoConjugatorError) as exc:
        return _fail_input(f"{type(exc).__name__}: {exc}")
    if result is not None:
        outputs = result.points if args.name == "fiber" else [result]
        for out in outputs:
            for p in validate(out):
                report.failures.append(Failure(0, f"output: {p}", rep_to_json(rep)))
        Path(args.output).write_text(dumps(encode(result), indent=2) + "\n")
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_FAILURE


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isocover", description=__doc__.splitlines()[0])
    p.add_argument("--epsilon", type=float, default=None,
                   help="tolerance for floating-point equality checks (default 1e-9)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="enumerate admissible orbifold covers")
    c.add_argument("--dmax", type=int, required=True)
    c.add_argument("--no-pruning", action="store_true",
                   help="brute force over wider bounds, normalizing afterwards")
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="run a randomized property suite")
    v.add_argument("theorem", choices=sorted(SUITES))
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--seed", type=int, default=None, help="default: $ISOCOVER_SEED or 0")
    v.add_argument("--backend", choices=("float", "exact"), default="float")
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("map", help="apply a map to a representation file")
    m.add_argument("name", choices=sorted(MAPS))
    m.add_argument("input")
    m.add_argument("output")
    m.set_defaults(func=cmd_map)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.epsilon is not None:
        if not args.epsilon > 0:
            parser.error("--epsilon must be positive")
        set_epsilon(args.epsilon)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        sys.stderr.write(f"isocover: invariant violated: {exc}\n")
        return EXIT_FAILURE
    except IsocoverError as exc:
        return _fail_input(f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
