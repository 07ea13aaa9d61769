"""Command-line front end: ``hypercert <command> [--input PATH | --json TEXT]``.

Exit status: 0 for any computed verdict, 2 for malformed input, 3 when a size
guard trips.  Output is a single JSON document (or a text report) on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from .engine import (
    FujimotoShape, GenericityCertificate, Verdict, configuration_count, genericity_check,
    lemma41_forward_check, pairing_identity_check, recompute_witness, witness_configuration,
)
from .errors import InputError, SizeLimitError
from .geometry import HyperplaneFamily, _scalar_from_json, general_position, normalize_block
from .lattice import classify, collapse_conclusion, has_property, tuple_rank
from .laurent import MonomialUnit, borel_check
from .scalar import format_scalar

EXIT_OK, EXIT_INPUT, EXIT_SIZE = 0, 2, 3


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- payload helpers ---------------------------------------------------------

def _field(payload, name: str, kind=None):
    if not isinstance(payload, dict) or name not in payload:
        raise InputError(f"missing field {name!r}")
    value = payload[name]
    if kind is not None and (not isinstance(value, kind) or isinstance(value, bool)):
        raise InputError(f"field {name!r} has the wrong type")
    return value


def _int_matrix(obj, name: str) -> list[list[int]]:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise InputError(f"{name} must be a list of integer lists")
    return obj


def _scalar_matrix(obj, name: str) -> list[list]:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise InputError(f"{name} must be a non-empty list of scalar lists")
    return [[_scalar_from_json(x) for x in r] for r in obj]


def _tuple_of(payload) -> list[list[int]]:
    if isinstance(payload, list):
        return _int_matrix(payload, "tuple")
    return _int_matrix(_field(payload, "tuple"), "tuple")


def _family(payload) -> HyperplaneFamily:
    return HyperplaneFamily.from_json(payload)


# -- reports -----------------------------------------------------------------

def report(cert: GenericityCertificate, fmt: str = "json", family: Optional[HyperplaneFamily] = None) -> str:
    """Render a certificate; the text form re-evaluates a NonGeneric witness."""
    if fmt == "json":
        return dumps(cert.to_json())
    lines = [
        f"verdict: {cert.verdict.value}",
        f"n: {cert.n}",
        f"mode: {cert.mode} ({cert.enumeration} enumeration)",
        f"configurations checked: {cert.configurations_checked}",
    ]
    w = cert.witness
    if cert.verdict is Verdict.NOT_GENERAL_POSITION:
        lines.append(f"violating subset: {w['violating_subset']}")
    elif cert.verdict is Verdict.NON_GENERIC:
        lines += [
            f"polynomial: {w['polynomial']}",
            f"block: {w['block']} (column 0 <- hyperplane {w['column0']}, columns {w['columns']})",
            f"rows: {w['rows']} (special row {w['special']})",
            f"constants: {', '.join(w['constants'])}",
            f"value: {w['value']}",
        ]
        if family is not None:
            G, det = normalize_block(family, witness_configuration(w).columns)
            lines.append(f"transformed rows (block determinant {format_scalar(det)}):")
            for i in w["rows"]:
                lines.append(f"  H{i}: [{', '.join(format_scalar(x) for x in G.rows[i])}]")
            value = recompute_witness(family, w, cert.mode)
            lines.append(f"re-evaluated determinant: {value if cert.mode == 'symbolic' else format_scalar(value)}")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------

def cmd_check_genericity(payload, args) -> str:
    F = _family(payload)
    if F.n > args.max_n:
        raise SizeLimitError(f"n = {F.n} exceeds --max-n {args.max_n} "
                             f"({configuration_count(F.n, args.mode, args.reference_enumeration)} configurations)")
    cert = genericity_check(F, args.mode, args.reference_enumeration)
    return report(cert, args.format, F)


def cmd_check_general_position(payload, args) -> str:
    gp = general_position(_family(payload))
    subset = list(gp.violating_subset) if gp.violating_subset is not None else None
    return dumps({"general_position": gp.ok, "violating_subset": subset})


def cmd_tuple_rank(payload, args) -> str:
    return dumps({"rank": tuple_rank(_tuple_of(payload))})


def cmd_check_property(payload, args) -> str:
    A = _tuple_of(payload)
    r, s = _field(payload, "r", int), _field(payload, "s", int)
    prop = has_property(A, r, s)
    return dumps({"property": prop, "collapse": collapse_conclusion(A, r, s) if prop else None})


def cmd_classify(payload, args) -> str:
    return dumps(classify(_tuple_of(payload), _field(payload, "s", int)).to_json())


def cmd_lemma41(payload, args) -> str:
    shape = FujimotoShape(
        _field(payload, "t", int), _field(payload, "k", int),
        tuple(_field(payload, "breakpoints", list)),
        tuple(_scalar_from_json(x) for x in _field(payload, "constants", list)),
    )
    res = lemma41_forward_check(shape, _scalar_matrix(_field(payload, "a"), "a"))
    return dumps({
        "vanishes": res.vanishes,
        "cases": list(res.cases),
        "consistent": res.consistent,
        "determinant": res.determinant.to_text(),
    })


def cmd_borel(payload, args) -> str:
    terms = []
    for item in _field(payload, "terms", list):
        terms.append(MonomialUnit(_scalar_from_json(_field(item, "constant")),
                                  tuple(_int_matrix([_field(item, "exponents", list)], "exponents")[0])))
    res = borel_check(terms)
    return dumps({"is_zero": res.is_zero, "groups": [list(g) for g in res.groups]})


def cmd_pairing_identity(payload, args) -> str:
    a = _scalar_matrix(_field(payload, "a"), "a")
    c = [_scalar_from_json(x) for x in _field(payload, "c", list)]
    res = pairing_identity_check(a, c)
    return dumps({
        "det_vanishes": res.det_vanishes,
        "forced_c": res.forced_c,
        "determinant": res.determinant.to_text(),
        "unit_values": [format_scalar(v) for v in res.unit_values],
    })


COMMANDS: dict[str, Callable] = {
    "check-genericity": cmd_check_genericity,
    "check-general-position": cmd_check_general_position,
    "tuple-rank": cmd_tuple_rank,
    "check-property": cmd_check_property,
    "classify": cmd_classify,
    "lemma41": cmd_lemma41,
    "borel": cmd_borel,
    "pairing-identity": cmd_pairing_identity,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercert", description="Exact certificates for generic hyperplane families.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--input", default="-", help="JSON input file, or - for stdin (default)")
    src.add_argument("--json", dest="inline", help="inline JSON payload")
    parser.add_argument("--mode", choices=("paper", "symbolic"), default="paper")
    parser.add_argument("--reference-enumeration", action="store_true",
                        help="enumerate every ordering of the hyperplanes (slow; for cross-checks)")
    parser.add_argument("--max-n", type=int, default=4, help="size guard for check-genericity (default 4)")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _load(args, stdin) -> object:
    if args.inline is not None:
        text = args.inline
    elif args.input == "-":
        text = stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}")
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}")


def _reject_float(text: str):
    raise InputError(f"floating-point literal {text} is not exact; use an integer or a \"p/q\" string")


def run(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        payload = _load(args, stdin)
        out = COMMANDS[args.command](payload, args)
    except SizeLimitError as exc:
        print(dumps({"error": "size_limit", "message": str(exc)}), file=stdout)
        return EXIT_SIZE
    except (InputError, ValueError, TypeError) as exc:
        print(dumps({"error": "input", "message": str(exc)}), file=stdout)
        return EXIT_INPUT
    print(out, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
