"""Command-line front-end: operator application on expressions, kernel and
decomposition tables, characters, and the verification suites.  Output is
human-readable text by default; --json emits a machine-readable document
with deterministic field and term order."""

import argparse
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .exprlang import EvalError, ParseError, evaluate, parse
from .sl2_actions import (
    act_rho1,
    act_rho2,
    character_finite,
    decompose_finite,
    lowest_weight_basis_rho1,
    lowest_weight_space_rho2,
)
from .combinatorics import count_lw_solutions
from .young import KerovParams, hat_apply, kerov_apply, tilde_apply

REP_OPS = {
    "rho1": ("raise", "lower", "cartan"),
    "rho2": ("raise", "lower", "cartan"),
    "hat": ("raise", "lower", "cartan"),
    "tilde": ("raise", "lower", "cartan"),
    "kerov": ("U", "L", "D"),
}


class CliError(Exception):
    pass


def format_terms(items, letter: str) -> str:
    """Render sorted (partition, coefficient) pairs like '-4*s[1,1] - 2*s[2]'."""
    if not items:
        return "0"
    pieces = []
    for lam, c in items:
        atom = f"{letter}[{','.join(map(str, lam))}]"
        mag = abs(c)
        body = atom if mag == 1 else f"{mag}*{atom}"
        pieces.append((c < 0, body))
    first_neg, first_body = pieces[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _terms_json(items):
    return [
        {"coefficient": str(c), "partition": list(lam)}
        for lam, c in items
    ]


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad rational {text!r}: {exc}")


def _cmd_act(args) -> tuple[str, dict]:
    rep = args.rep
    op = args.op
    if op not in REP_OPS[rep]:
        raise CliError(f"operator {op!r} is not valid for representation {rep!r}")
    if rep in ("rho2", "tilde") and args.d is None:
        raise CliError(f"--d is required for representation {rep!r}")
    if rep == "kerov" and (args.z is None or args.zprime is None):
        raise CliError("--z and --zprime are required for the Kerov operators")

    mode = "schur" if rep in ("rho1", "rho2") else "diagram"
    vec = evaluate(parse(args.expr), args.n, mode)

    if rep == "rho1":
        out = act_rho1(op, vec)
    elif rep == "rho2":
        out = act_rho2(op, vec, args.d)
    elif rep == "hat":
        out = hat_apply(op, vec, args.n)
    elif rep == "tilde":
        out = tilde_apply(op, vec, args.n, args.d)
    else:
        params = KerovParams(_parse_fraction(args.z), _parse_fraction(args.zprime))
        out = kerov_apply(op, vec, params)

    basis = "schur" if mode == "schur" else "diagram"
    letter = "s" if basis == "schur" else "y"
    items = out.sorted_terms()
    inputs = {"rep": rep, "op": op, "n": args.n, "expr": args.expr}
    doc = {"basis": basis, "n": args.n}
    if args.d is not None:
        doc["d"] = args.d
        inputs["d"] = args.d
    if rep == "kerov":
        inputs["z"] = args.z
        inputs["zprime"] = args.zprime
    doc["terms"] = _terms_json(items)
    doc["metadata"] = {"command": "act", "inputs": inputs}
    return format_terms(items, letter), doc


def _cmd_kernel(args) -> tuple[str, dict]:
    if args.rep == "rho2":
        if args.d is None:
            raise CliError("--d is required for the second representation")
        vectors = lowest_weight_space_rho2(args.n, args.d)
    else:
        if args.n < 2:
            raise CliError("the infinite kernel needs n >= 2")
        vectors = lowest_weight_basis_rho1(args.n, args.max_degree)

    lines = []
    json_vectors = []
    for vec, weight in vectors:
        items = vec.sorted_terms()
        lines.append(f"weight {weight}: {format_terms(items, 's')}")
        json_vectors.append({"weight": weight, "terms": _terms_json(items)})
    inputs = {"rep": args.rep, "n": args.n}
    if args.rep == "rho2":
        inputs["d"] = args.d
    else:
        inputs["max_degree"] = args.max_degree
    doc = {"command": "kernel", "inputs": inputs, "vectors": json_vectors}
    return "\n".join(lines) if lines else "0", doc


def _cmd_decompose(args) -> tuple[str, dict]:
    if (args.d is None) == (args.max_weight is None):
        raise CliError("decompose needs exactly one of --d or --max-weight")
    if args.d is not None:
        table = decompose_finite(args.n, args.d)
        entries = sorted(table.items())
        text = " + ".join(
            f"V[{i}]" if m == 1 else f"{m}*V[{i}]" for i, m in entries
        ) or "0"
        doc = {
            "command": "decompose", "n": args.n, "d": args.d,
            "multiplicities": [[i, m] for i, m in entries],
        }
        return text, doc
    if args.n < 2:
        raise CliError("the graded decomposition needs n >= 2")
    entries = [(i, count_lw_solutions(args.n, i)) for i in range(args.max_weight + 1)]
    text = "\n".join(f"c[{i}] = {m}" for i, m in entries)
    doc = {
        "command": "decompose", "n": args.n, "max_weight": args.max_weight,
        "multiplicities": [[i, m] for i, m in entries],
    }
    return text, doc


def _cmd_character(args) -> tuple[str, dict]:
    char = character_finite(args.n, args.d)
    entries = sorted(char.items())
    text = "\n".join(f"{w} {m}" for w, m in entries)
    doc = {
        "command": "character", "n": args.n, "d": args.d,
        "exponents": [[w, m] for w, m in entries],
    }
    return text, doc


def _cmd_verify(args) -> int:
    checks = verify_mod.run_suite(args.suite)
    failures = 0
    for check in checks:
        if check.note:
            status = "NOTE"
        elif check.ok:
            status = "PASS"
        else:
            status = "FAIL"
            failures += 1
        line = f"{status} {check.suite}/{check.name}"
        if check.detail:
            line += f": {check.detail}"
        print(line)
    real = [c for c in checks if not c.note]
    print(f"{len(real) - failures}/{len(real)} checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2sym",
        description="Exact sl2-actions on symmetric polynomials and Young diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    act = sub.add_parser("act", help="apply an operator to an expression")
    act.add_argument("--rep", required=True, choices=sorted(REP_OPS))
    act.add_argument("--op", required=True,
                     choices=("raise", "lower", "cartan", "U", "L", "D"))
    act.add_argument("--n", required=True, type=int)
    act.add_argument("--d", type=int)
    act.add_argument("--z")
    act.add_argument("--zprime")
    act.add_argument("--expr", required=True)
    act.add_argument("--json", action="store_true")

    kernel = sub.add_parser("kernel", help="lowest-weight vectors with weights")
    kernel.add_argument("--rep", required=True, choices=("rho1", "rho2"))
    kernel.add_argument("--n", required=True, type=int)
    kernel.add_argument("--d", type=int)
    kernel.add_argument("--max-degree", type=int, default=6)
    kernel.add_argument("--json", action="store_true")

    dec = sub.add_parser("decompose", help="irreducible multiplicity table")
    dec.add_argument("--n", required=True, type=int)
    dec.add_argument("--d", type=int)
    dec.add_argument("--max-weight", type=int)
    dec.add_argument("--json", action="store_true")

    char = sub.add_parser("character", help="weight exponent/multiplicity table")
    char.add_argument("--n", required=True, type=int)
    char.add_argument("--d", required=True, type=int)
    char.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", required=True,
                     choices=verify_mod.SUITE_NAMES + ("all",))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "act":
            text, doc = _cmd_act(args)
        elif args.command == "kernel":
            text, doc = _cmd_kernel(args)
        elif args.command == "decompose":
            text, doc = _cmd_decompose(args)
        else:
            text, doc = _cmd_character(args)
    except (CliError, ParseError, EvalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(doc) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
