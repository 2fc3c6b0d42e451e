"""
Command-line interface
Every library operation behind one argparse command, with text or JSON output
and an optional brute-force cross-check
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Callable

from .census import CHECKS, DEFAULT_CSV, run_sweep, save_csv
from .config import budget_scale
from .decomp import count_all_vectors, count_primitive_vectors, squarefree_decompose
from .errors import CubiqError
from .gaussian import format_gint
from .hurwitz import format_hquat
from .lattice import enumerate_norm_vectors, explore_twin_conjecture, has_twin, icubes_containing, parse_ivec
from .pythagoras import PythQuadruple, brute_force_params, euler_param, quadruples_with_d
from .twins import (
    TwinPair,
    definitional_twin_complete,
    extend_to_icube,
    is_twin_complete,
    make_twins,
    max_cubic_lattice,
    ordered_twin_pairs,
    parameterize_twins,
    twin_count,
    twins_of,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


@dataclass
class Outcome:
    """
    What a command produced

    Args:
        input: parsed arguments as JSON values
        result: primary result as JSON values
        text: human-readable rendering of result
        oracle: callable returning (oracle_value, oracle_text, match), run only with --verify
        failed: the command ran but its result is a failure (census mismatches)
    """

    input: dict
    result: object
    text: str
    oracle: Callable = None
    failed: bool = False


def vector(text):
    return parse_ivec(text)


def _lines(vectors):
    return "\n".join(str(v) for v in vectors)


def _twins(args):
    x = args.vector
    if args.partner is not None:
        y = args.partner
        param = parameterize_twins(x, y)
        result = {"alpha": format_hquat(param.alpha), "z": format_gint(param.z)}

        def oracle():
            pair = make_twins(param.alpha, param.z)
            rebuilt = [list(pair.theta), list(pair.eta)]
            return rebuilt, f"{pair.theta} {pair.eta}", pair == TwinPair(x, y)

        text = f"alpha = {result['alpha']}\nz = {result['z']}"
        return Outcome({"x": list(x), "y": list(y)}, result, text, oracle)

    twins = twins_of(x)

    def oracle():
        found = [y for y in enumerate_norm_vectors(x.norm) if x.dot(y) == 0]
        return [list(y) for y in found], _lines(found) or "no twins", sorted(found, key=lambda v: v.coords) == twins

    return Outcome({"x": list(x)}, [list(y) for y in twins], _lines(twins) or "no twins", oracle)


def _extend(args):
    x, y = args.x, args.y
    z = extend_to_icube(x, y)

    def oracle():
        found = [w for w in enumerate_norm_vectors(x.norm) if x.dot(w) == 0 and y.dot(w) == 0]
        return [list(w) for w in found], _lines(found), z in found

    return Outcome({"x": list(x), "y": list(y)}, list(z), str(z), oracle)


def _lattice(args):
    x = args.vector
    lattice = max_cubic_lattice(x)
    result = {
        "edge": lattice.edge,
        "basis": [list(b) for b in lattice.basis],
        "generator": format_hquat(lattice.generator),
        "coordinates": list(lattice.coordinates_of(x)),
    }
    text = "\n".join([
        f"edge: {lattice.edge}",
        f"basis: {' '.join(str(b) for b in lattice.basis)}",
        f"generator: {result['generator']}",
        f"coordinates: {','.join(str(c) for c in result['coordinates'])}",
    ])

    def oracle():
        found = icubes_containing(x, lattice.edge_norm)
        return len(found), f"{len(found)} icube lattice(s) of edge {lattice.edge} contain {x}", found == {
            lattice.signed_basis()
        }

    return Outcome({"x": list(x)}, result, text, oracle)


def _param(args):
    q = PythQuadruple(args.a, args.b, args.c, args.d)
    params = euler_param(q)

    def oracle():
        found = brute_force_params(q)
        return [list(p) for p in found], "\n".join(" ".join(map(str, p)) for p in found), found == sorted(params)

    text = "\n".join(" ".join(map(str, p)) for p in params)
    return Outcome({"quadruple": list(q.as_tuple())}, [list(p) for p in params], text, oracle)


def _count_twins(args):
    count = twin_count(args.M)

    def oracle():
        found = ordered_twin_pairs(args.M)
        return found, str(found), found == count

    return Outcome({"M": args.M}, count, str(count), oracle)


def _count_vectors(args):
    M = args.M
    n, m = squarefree_decompose(M)
    result = {"all": count_all_vectors(M), "primitive": count_primitive_vectors(n, m)}

    def oracle():
        vectors = enumerate_norm_vectors(M)
        found = {"all": len(vectors), "primitive": sum(1 for v in vectors if v.is_primitive())}
        return found, f"all: {found['all']}\nprimitive: {found['primitive']}", found == result

    return Outcome({"M": M}, result, f"all: {result['all']}\nprimitive: {result['primitive']}", oracle)


def _twin_complete(args):
    N = args.N
    verdict = is_twin_complete(N)
    result = {
        "verdict": verdict.verdict,
        "squarefree_part": verdict.squarefree_part,
        "representation": list(verdict.representation) if verdict.representation else None,
        "witness": list(verdict.witness) if verdict.witness else None,
        "reason": verdict.reason,
    }
    if verdict.verdict:
        a, b = verdict.representation
        text = f"twin-complete: {verdict.squarefree_part} = {a}^2 + {b}^2 ({verdict.reason})"
    elif verdict.witness is not None:
        text = f"not twin-complete: {verdict.reason}, witness {verdict.witness}"
    else:
        text = f"not twin-complete: {verdict.reason}"

    def oracle():
        found = definitional_twin_complete(N)
        return found, "every vector has a twin" if found else "some vector has no twin", found == verdict.verdict

    return Outcome({"N": N}, result, text, oracle)


def _pyth(args):
    quadruples = quadruples_with_d(args.d)

    def oracle():
        counts = [len(brute_force_params(q)) for q in quadruples]
        return counts, " ".join(map(str, counts)), all(c == 4 for c in counts)

    return Outcome({"d": args.d}, [list(q.as_tuple()) for q in quadruples], _lines(quadruples), oracle)


def _census(args):
    names = args.check or list(CHECKS)
    overrides = {name: args.max for name in names} if args.max is not None else {}
    reports = run_sweep(names, overrides)
    path = save_csv(reports, args.csv)
    result = {
        "csv": path,
        "reports": [
            {
                "check_name": r.check_name,
                "range": [r.lo, r.hi],
                "rows": len(r.rows),
                "mismatches": [list(map(str, m)) for m in r.mismatches],
                "elapsed": round(r.elapsed, 3),
                "error": r.error,
            }
            for r in reports
        ],
    }
    passed = all(r.passed for r in reports)
    text = "\n".join([r.summary() for r in reports] + [f"csv: {path}"])

    def oracle():
        # every census row already pairs a formula with its oracle
        return passed, "all checks agree" if passed else "some checks disagree", passed

    return Outcome({"checks": names, "max": args.max, "csv": args.csv}, result, text, oracle, not passed)


def _explore(args):
    found = explore_twin_conjecture(args.dim, args.max)
    text = _lines(found) or f"no counterexamples in dimension {args.dim} up to norm {args.max}"

    def oracle():
        confirmed = [v for v in found if not has_twin(v)]
        return [list(v) for v in confirmed], f"{len(confirmed)} confirmed", len(confirmed) == len(found)

    return Outcome({"dim": args.dim, "max": args.max}, [list(v) for v in found], text, oracle)


def _output_flags(parser, default):
    parser.add_argument("--json", action="store_true", default=default, help="print one JSON object")
    parser.add_argument("--verify", action="store_true", default=default, help="also run the brute-force oracle")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cubiq",
        description="Exact lattice and quaternion arithmetic for twin vectors, icubes and Pythagorean quadruples",
        epilog="Vectors are written x,y,z; put -- before a vector that starts with a minus sign.",
    )
    _output_flags(parser, False)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        # SUPPRESS keeps flags given before the command name
        _output_flags(p, argparse.SUPPRESS)
        p.set_defaults(handler=handler)
        return p

    p = command("twins", _twins, "all twins of a vector, or the parameterization of a twin pair")
    p.add_argument("vector", type=vector)
    p.add_argument("partner", type=vector, nargs="?")

    p = command("extend", _extend, "third edge of the icube on two twins")
    p.add_argument("x", type=vector)
    p.add_argument("y", type=vector)

    p = command("lattice", _lattice, "maximal cubic lattice of a primitive vector")
    p.add_argument("vector", type=vector)

    p = command("param", _param, "the four Euler parameterizations of a quadruple")
    for name in "abcd":
        p.add_argument(name, type=int)

    p = command("count-twins", _count_twins, "number of ordered twin pairs of norm M")
    p.add_argument("M", type=int)

    p = command("count-vectors", _count_vectors, "number of all and primitive vectors of norm M")
    p.add_argument("M", type=int)

    p = command("twin-complete", _twin_complete, "decide whether every vector of norm N has a twin")
    p.add_argument("N", type=int)

    p = command("pyth", _pyth, "normal-form Pythagorean quadruples with a given odd d")
    p.add_argument("d", type=int)

    p = command("census", _census, "compare closed-form counts with enumeration")
    p.add_argument("--check", action="append", choices=list(CHECKS), help="check to run (repeatable; default all)")
    p.add_argument("--max", type=int, help="upper bound replacing each check's default range")
    p.add_argument("--csv", default=DEFAULT_CSV, help=f"report path (default {DEFAULT_CSV})")

    p = command("explore", _explore, "search for twinless non-odd vectors in dimension 5 or 7")
    p.add_argument("--dim", type=int, choices=(5, 7), required=True)
    p.add_argument("--max", type=int, required=True)

    return parser


def _set_verbosity(level):
    logging.getLogger("cubiq").setLevel(
        logging.DEBUG if level >= 2 else logging.INFO if level == 1 else logging.WARNING
    )


def run(argv):
    """
    Parse and dispatch one command

    Args:
        argv: arguments without the program name

    Returns:
        (exit_code, output text); errors go to standard error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage or help
        return (EXIT_OK if e.code == 0 else EXIT_USAGE), ""
    _set_verbosity(args.verbose)

    try:
        budget_scale()
        outcome = args.handler(args)
    except CubiqError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR, ""
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR, ""

    oracle = None
    if args.verify and outcome.oracle:
        try:
            oracle = outcome.oracle()
        except CubiqError as e:
            # the primary result stands; only the cross-check is missing
            logger.debug("%s oracle failed", args.command, exc_info=True)
            oracle = (None, f"error: {e}", None)

    if args.json:
        payload = {"command": args.command, "input": outcome.input, "result": outcome.result}
        if oracle is not None:
            payload["oracle"], payload["match"] = oracle[0], oracle[2]
            if oracle[2] is None:
                payload["oracle_error"] = oracle[1]
        text = json.dumps(payload)
    else:
        text = outcome.text
        if oracle is not None:
            match = "null" if oracle[2] is None else "true" if oracle[2] else "false"
            text += f"\noracle: {oracle[1]}\nmatch: {match}"
    code = EXIT_DOMAIN_ERROR if outcome.failed else EXIT_OK
    return code, text


def main():
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    code, text = run(sys.argv[1:])
    if text:
        print(text)
    sys.exit(code)


if __name__ == "__main__":
    main()
