"""Command-line front end.

Subcommands::

    bracket  print the bracket polynomial of a braid closure or PD diagram
    jones    print bracket, writhe, normalized invariant f, and Jones form V
    qsim     sample the braiding quantum computer and report a JSON record
    verify   run the algebraic relation suites

Exit codes: 0 success, 1 parse error, 2 size guard, 3 cross-check mismatch,
4 invalid angle, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidWord, bracket_via_trace, closure_to_diagram, exponent_sum, parse_braid
from .diagram import (
    LinkDiagram,
    bracket_state_sum,
    diagram_from_json,
    normalize,
    writhe,
    writhe_factor,
)
from .errors import (
    ExactDivisionError,
    InvalidAngleError,
    InvariantError,
    MismatchError,
    ParseError,
    SizeLimitError,
)
from .laurent import to_jones_variable
from .qsim import estimate_matrix_moduli, evolve, sample_shots
from .unitary3 import rho_unitary, unitary_generators
from .verify import run_all

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SIZE = 2
EXIT_MISMATCH = 3
EXIT_ANGLE = 4
EXIT_VERIFY = 5


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidket")
    sub = parser.add_subparsers(dest="command", required=True)

    for verb in ("bracket", "jones"):
        p = sub.add_parser(verb, help=f"compute the {verb} output for a link")
        p.add_argument("--strands", type=int, help="strand count for braid input")
        p.add_argument("--word", type=str, help="braid word, e.g. '1 1 1'")
        p.add_argument("--pd", type=str, help="path to a PD diagram JSON file")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument(
            "--check",
            action="store_true",
            help="for braid input, cross-check the trace bracket against the state sum",
        )

    q = sub.add_parser("qsim", help="run the 3-strand braiding computer")
    q.add_argument("--theta", type=float, required=True, help="braiding angle in radians")
    q.add_argument("--word", type=str, required=True, help="3-strand braid word")
    q.add_argument("--prepare", type=int, default=0, help="basis index to prepare")
    q.add_argument("--shots", type=int, default=100000)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--json", action="store_true", help="accepted; output is always JSON")

    v = sub.add_parser("verify", help="run the relation suites")
    v.add_argument("--n", type=int, default=3, help="strand bound (2..5)")
    return parser


def _load_input(args) -> tuple[BraidWord | None, LinkDiagram | None]:
    has_word = args.word is not None
    has_pd = args.pd is not None
    if has_word == has_pd:
        raise ParseError("provide exactly one input source: --word (with --strands) or --pd")
    if has_word:
        if args.strands is None:
            raise ParseError("--word requires --strands")
        return parse_braid(args.word, args.strands), None
    try:
        with open(args.pd, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read PD file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"PD file is not valid JSON: {exc}") from exc
    return None, diagram_from_json(data)


def _invariants(args) -> dict:
    word, diagram = _load_input(args)
    if word is not None:
        bracket = bracket_via_trace(word)
        if args.check:
            via_states = bracket_state_sum(closure_to_diagram(word))
            if via_states != bracket:
                raise MismatchError(
                    f"state sum {via_states} disagrees with trace bracket {bracket}"
                )
        w = exponent_sum(word)
        f = writhe_factor(w) * bracket
        v = to_jones_variable(f)
    else:
        bracket = bracket_state_sum(diagram)
        w = writhe(diagram)
        f, v = normalize(diagram)
    return {"bracket": bracket, "writhe": w, "f": f, "V": v}


def cmd_bracket(args) -> int:
    data = _invariants(args)
    if args.json:
        print(json.dumps({"bracket": data["bracket"].to_json()}))
    else:
        print(data["bracket"])
    return EXIT_OK


def cmd_jones(args) -> int:
    data = _invariants(args)
    if args.json:
        print(
            json.dumps(
                {
                    "bracket": data["bracket"].to_json(),
                    "writhe": data["writhe"],
                    "f": data["f"].to_json(),
                    "V": data["V"].to_json(),
                }
            )
        )
    else:
        print(f"bracket: {data['bracket']}")
        print(f"writhe: {data['writhe']}")
        print(f"f: {data['f']}")
        print(f"V: {data['V']}")
    return EXIT_OK


def cmd_qsim(args) -> int:
    setup = unitary_generators(args.theta)
    word = parse_braid(args.word, 3)
    if not 0 <= args.prepare <= 1:
        raise ParseError("--prepare must be 0 or 1")
    if args.shots < 1:
        raise ParseError("--shots must be positive")
    pairs = estimate_matrix_moduli(word, setup, args.shots, args.seed)
    record = sample_shots(
        evolve(args.prepare, rho_unitary(word, setup)), args.shots, args.seed + args.prepare
    )
    report = {
        "theta": args.theta,
        "word": str(word),
        "prepare": args.prepare,
        "shots": args.shots,
        "seed": args.seed,
        "counts": list(record.counts),
        "estimates": [[pairs[i][j][0] for j in range(2)] for i in range(2)],
        "exact": [[pairs[i][j][1] for j in range(2)] for i in range(2)],
    }
    print(json.dumps(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n < 2:
        raise ParseError("--n must be at least 2")
    results = run_all(args.n)
    failed = False
    for result in results:
        status = "pass" if result.passed else "FAIL"
        suffix = f" ({result.detail})" if result.detail else ""
        print(f"{result.name}: {status}{suffix}")
        failed = failed or not result.passed
    return EXIT_VERIFY if failed else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "bracket": cmd_bracket,
        "jones": cmd_jones,
        "qsim": cmd_qsim,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InvalidAngleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ANGLE
    except MismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ExactDivisionError, InvariantError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
