"""Command-line interface.

Base definition files are INI-style documents with exactly one of a
``[base]`` (explicit) or ``[symbolic]`` section:

    [field]
    minpoly = -13, 0, 1          ; constant term first
    root_interval = 3.6, 3.61    ; decimal or rational, parsed exactly

    [base]
    period = 2
    beta.1 = 1/2, 1/2            ; power-basis coordinates, length = degree
    beta.2 = 5/6, 1/6

    [symbolic]
    period = 2
    t.1 = 34(21)
    t.2 = 52(12)

Digit strings use the literal grammar ``SEQ [ "(" SEQ ")" ]`` where SEQ is
a run of single digits 0-9 or a bracketed list like ``[12,0]`` for digits
above 9; the parenthesized part repeats forever.

Exit codes: 0 success, 1 negative verdict from a check command, 2 input
error, 3 fuel exhausted.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from fractions import Fraction

from .algebraic.field import FieldElement, field_create
from .algebraic.polynomial import RationalPolynomial
from .bases import AlternateBase, base_new_explicit, base_new_symbolic
from .errors import AltbaseError, BaseFileError, FuelExhausted, NotParry
from .expansion import (
    DEFAULT_FUEL,
    Truncated,
    admissible,
    expansion_of_one,
    greedy_expand,
    parry_classify,
    quasi_greedy_of_one,
    value_of,
)
from .reports import necessary_conditions, sufficient_report
from .rewrite.normalize import add_with_trace, normalize, subtract_with_trace
from .rewrite.rules import build_rules, check_gfs
from .rewrite.weights import build_weight
from .words import FiniteDigitString, format_digit_string, parse_digit_string


def _parse_number(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise BaseFileError(f"cannot parse number {text!r}") from exc


def _parse_number_list(text: str) -> list[Fraction]:
    return [_parse_number(part) for part in text.replace(",", " ").split()]


def load_base_file(path: str) -> AlternateBase:
    parser = configparser.ConfigParser()
    parser.optionxform = str  # keep key case
    read = parser.read(path)
    if not read:
        raise BaseFileError(f"cannot read base file {path!r}")
    has_explicit = parser.has_section("base")
    has_symbolic = parser.has_section("symbolic")
    if has_explicit == has_symbolic:
        raise BaseFileError("base file needs exactly one of [base] or [symbolic]")
    if has_symbolic:
        section = parser["symbolic"]
        period = int(section.get("period", "0"))
        seqs = []
        for i in range(1, period + 1):
            key = f"t.{i}"
            if key not in section:
                raise BaseFileError(f"missing {key} in [symbolic]")
            seqs.append(parse_digit_string(section[key]))
        if period < 1:
            raise BaseFileError("period must be a positive integer")
        return base_new_symbolic(seqs)
    if not parser.has_section("field"):
        raise BaseFileError("explicit bases need a [field] section")
    fsec = parser["field"]
    if "minpoly" not in fsec or "root_interval" not in fsec:
        raise BaseFileError("[field] needs minpoly and root_interval")
    minpoly = RationalPolynomial.from_coeffs(_parse_number_list(fsec["minpoly"]))
    interval = _parse_number_list(fsec["root_interval"])
    if len(interval) != 2:
        raise BaseFileError("root_interval needs exactly two endpoints")
    field = field_create(minpoly, (interval[0], interval[1]))
    bsec = parser["base"]
    period = int(bsec.get("period", "0"))
    if period < 1:
        raise BaseFileError("period must be a positive integer")
    betas = []
    for i in range(1, period + 1):
        key = f"beta.{i}"
        if key not in bsec:
            raise BaseFileError(f"missing {key} in [base]")
        coords = _parse_number_list(bsec[key])
        if len(coords) != field.degree:
            raise BaseFileError(
                f"{key} has {len(coords)} coordinates, field degree is {field.degree}"
            )
        betas.append(field.element(coords))
    return base_new_explicit(field, betas)


def _approx(element: FieldElement, digits: int = 12) -> float:
    for _ in range(60):
        lo, hi = element.enclosure()
        if hi - lo < Fraction(1, 10 ** digits):
            break
        element.field.refine()
    lo, hi = element.enclosure()
    return float((lo + hi) / 2)


def _element_json(element: FieldElement) -> dict:
    return {
        "coords": [str(c) for c in element.coords],
        "approx": _approx(element),
    }


def _box_json(box) -> dict:
    return {
        "re": [str(box.real_lo), str(box.real_hi)],
        "im": [str(box.imag_lo), str(box.imag_hi)],
    }


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def _trace_lines(trace, full: bool) -> list[str]:
    if full:
        lines = []
        for idx, step in enumerate(trace.steps, start=1):
            before = format_digit_string(trace.stripped(step.before))
            after = format_digit_string(trace.stripped(step.after))
            weight = f"  g={step.weight_before}->{step.weight_after}" \
                if step.weight_before is not None else ""
            lines.append(f"{idx}  {step.rule_id}  {before} -> {after}{weight}")
        return lines
    if trace.steps:
        return ["steps: " + " ".join(s.rule_id for s in trace.steps)]
    return []


def _trace_json(trace) -> list[dict]:
    out = []
    for idx, step in enumerate(trace.steps, start=1):
        out.append({
            "index": idx,
            "violation_at": step.index,
            "case": step.case,
            "rule": step.rule_id,
            "before": format_digit_string(trace.stripped(step.before)),
            "after": format_digit_string(trace.stripped(step.after)),
            "weight_before": step.weight_before,
            "weight_after": step.weight_after,
        })
    return out


def _cmd_one(base, args) -> int:
    word = expansion_of_one(base, args.shift, args.fuel)
    if isinstance(word, Truncated):
        print("truncated after", len(word.digits), "digits", file=sys.stderr)
        return 3
    literal = format_digit_string(word)
    _emit(args, {"command": "one", "shift": args.shift, "word": literal}, [literal])
    return 0


def _cmd_quasi(base, args) -> int:
    word = quasi_greedy_of_one(base, args.shift, args.fuel)
    literal = format_digit_string(word)
    _emit(args, {"command": "quasi", "shift": args.shift, "word": literal}, [literal])
    return 0


def _cmd_expand(base, args) -> int:
    parts = _parse_number_list(args.value)
    x = base.field.from_rational(parts[0]) if len(parts) == 1 else base.field.element(parts)
    word = greedy_expand(base, x, args.fuel)
    if isinstance(word, Truncated):
        prefix = "".join(str(d) for d in word.digits[:40])
        _emit(args,
              {"command": "expand", "status": "truncated",
               "prefix": list(word.digits)},
              [f"truncated; digits so far: {prefix}..."])
        return 3
    literal = format_digit_string(word)
    kind = "finite" if isinstance(word, FiniteDigitString) else "periodic"
    _emit(args, {"command": "expand", "status": kind, "word": literal}, [literal])
    return 0


def _cmd_value(base, args) -> int:
    word = parse_digit_string(args.string)
    element = value_of(base, word)
    payload = {"command": "value", "string": args.string, **_element_json(element)}
    _emit(args, payload,
          [f"{element}  ~= {_approx(element):.12g}"])
    return 0


def _cmd_admissible(base, args) -> int:
    word = parse_digit_string(args.string)
    ok, witness = admissible(base, word, args.fuel)
    payload = {"command": "admissible", "string": args.string,
               "admissible": ok, "witness": witness}
    _emit(args, payload,
          ["admissible" if ok else f"not admissible (violation at shift {witness})"])
    return 0 if ok else 1


def _cmd_gfs(base, args) -> int:
    ok, witness = check_gfs(base, args.fuel)
    payload = {"command": "gfs", "holds": ok,
               "witness": None if ok else {"shift": witness[0], "position": witness[1]}}
    lines = ["digit chains are non-increasing"] if ok else [
        f"chain violated at shift {witness[0]}, position {witness[1]}"
    ]
    _emit(args, payload, lines)
    return 0 if ok else 1


def _cmd_rules(base, args) -> int:
    ruleset = build_rules(base, k_bound=args.kmax, prune=not args.no_prune, fuel=args.fuel)
    payload = {
        "command": "rules",
        "pruned": ruleset.pruned,
        "k_bound": ruleset.k_bound,
        "rules": [
            {"id": r.rule_id, "kind": r.kind,
             "lhs": format_digit_string(r.lhs), "rhs": format_digit_string(r.rhs)}
            for r in ruleset
        ],
    }
    lines = [f"{r.rule_id}: {format_digit_string(r.lhs)} -> {format_digit_string(r.rhs)}"
             for r in ruleset]
    _emit(args, payload, lines)
    return 0


def _cmd_weights(base, args) -> int:
    weight, construction = build_weight(base, args.fuel)
    payload: dict = {"command": "weights", "u": list(weight.u)}
    lines = [f"u = {list(weight.u)}"]
    if construction is not None:
        payload.update({
            "column_sums": [list(r) for r in construction.column_sums],
            "K": [list(r) for r in construction.K],
            "R": [list(r) for r in construction.R],
            "M": [list(r) for r in construction.M],
            "kappa": construction.kappa,
        })
        lines.append(f"kappa = {construction.kappa}")
        lines.append(f"K = {[list(r) for r in construction.K]}")
        lines.append(f"M = {[list(r) for r in construction.M]}")
    _emit(args, payload, lines)
    return 0


def _weight_or_none(base, fuel):
    try:
        weight, _ = build_weight(base, fuel)
        return weight
    except AltbaseError:
        return None


def _cmd_add(base, args) -> int:
    a = parse_digit_string(args.a)
    b = parse_digit_string(args.b)
    result, trace = add_with_trace(base, a, b, fuel=args.rewrite_fuel,
                                   tseq_fuel=args.fuel)
    literal = format_digit_string(result)
    payload = {"command": "add", "a": args.a, "b": args.b,
               "result": literal, "steps": _trace_json(trace)}
    _emit(args, payload, _trace_lines(trace, args.trace) + [literal])
    return 0


def _cmd_sub(base, args) -> int:
    a = parse_digit_string(args.a)
    b = parse_digit_string(args.b)
    result, steps = subtract_with_trace(base, a, b, fuel=args.rewrite_fuel,
                                        tseq_fuel=args.fuel)
    literal = format_digit_string(result)
    payload = {
        "command": "sub", "a": args.a, "b": args.b, "result": literal,
        "rounds": [
            {"j": s.j, "k": s.k, "borrowed": format_digit_string(s.borrowed),
             "minuend": format_digit_string(s.minuend),
             "subtrahend": format_digit_string(s.subtrahend)}
            for s in steps
        ],
    }
    lines = []
    if args.trace:
        for idx, s in enumerate(steps, start=1):
            lines.append(f"{idx}  borrow j={s.j} k={s.k} via {format_digit_string(s.borrowed)}"
                         f"  -> {format_digit_string(s.minuend)}")
    _emit(args, payload, lines + [literal])
    return 0


def _cmd_normalize(base, args) -> int:
    word = parse_digit_string(args.string)
    weight = _weight_or_none(base, args.fuel) if args.trace else None
    result, trace = normalize(base, word, fuel=args.rewrite_fuel,
                              weight=weight, tseq_fuel=args.fuel)
    literal = format_digit_string(result)
    payload = {"command": "normalize", "input": args.string,
               "result": literal, "steps": _trace_json(trace)}
    _emit(args, payload, _trace_lines(trace, args.trace) + [literal])
    return 0


def _cmd_classify(base, args) -> int:
    suff = sufficient_report(base, args.fuel)
    payload: dict = {
        "command": "classify",
        "sufficient": {
            "parry_class": suff.parry_class,
            "gfs": suff.gfs,
            "gfs_witness": suff.gfs_witness,
            "weights": list(suff.weight.u) if suff.weight else None,
            "verdict": suff.verdict.value,
            "reason": suff.reason,
        },
    }
    lines = [
        f"parry class: {suff.parry_class}",
        f"chain condition: {suff.gfs}",
        f"weights: {list(suff.weight.u) if suff.weight else suff.weight_absence}",
        f"sufficient verdict: {suff.verdict.value}"
        + (f" ({suff.reason})" if suff.reason else ""),
    ]
    if base.is_explicit:
        nec = necessary_conditions(base, fuel=args.fuel)
        payload["necessary"] = {
            "delta_minpoly": [str(c) for c in nec.delta_minpoly.coefficients],
            "delta_class": nec.delta_class.value,
            "betas_in_delta_field": nec.betas_in_delta_field,
            "beta_coordinates": [
                [str(c) for c in coords] if coords else None
                for coords in nec.beta_coordinates
            ],
            "parry_class": nec.parry_class,
            "embeddings": [
                {
                    "conjugate": _box_json(er.conjugate_box),
                    "real": er.is_real,
                    "coordinate_verdicts": list(er.coordinate_verdicts),
                    "vector_positive": er.vector_positive,
                }
                for er in nec.embedding_reports
            ],
            "overall": nec.overall.value,
            "obstruction": nec.obstruction,
            "notes": list(nec.notes),
        }
        lines += [
            f"minimal polynomial of the period product: {nec.delta_minpoly}",
            f"root class: {nec.delta_class.value}",
            f"entries in the field of the period product: {nec.betas_in_delta_field}",
        ]
        for er in nec.embedding_reports:
            lines.append(
                f"embedding signs: {', '.join(er.coordinate_verdicts)}"
                f" -> {'positive' if er.vector_positive else 'not positive'}"
            )
        lines.append(f"necessary verdict: {nec.overall.value}"
                     + (f" ({nec.obstruction})" if nec.obstruction else ""))
        for note in nec.notes:
            lines.append(f"note: {note}")
    _emit(args, payload, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altbase",
        description="Exact arithmetic for alternate-base numeration systems",
    )
    parser.add_argument("--base", required=True, metavar="FILE",
                        help="base definition file")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    parser.add_argument("--fuel", type=int, default=DEFAULT_FUEL,
                        help="expansion step budget")
    parser.add_argument("--rewrite-fuel", type=int, default=10_000,
                        help="rewriting step budget")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("one", help="expansion of 1")
    p.add_argument("--shift", type=int, default=1)
    p.set_defaults(func=_cmd_one)

    p = sub.add_parser("quasi", help="quasi-greedy expansion of 1")
    p.add_argument("--shift", type=int, default=1)
    p.set_defaults(func=_cmd_quasi)

    p = sub.add_parser("expand", help="greedy expansion of a value")
    p.add_argument("--value", required=True,
                   help="rational, decimal, or comma-separated field coordinates")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("value", help="exact value of a digit string")
    p.add_argument("string")
    p.set_defaults(func=_cmd_value)

    p = sub.add_parser("admissible", help="admissibility check")
    p.add_argument("string")
    p.set_defaults(func=_cmd_admissible)

    p = sub.add_parser("gfs", help="descending digit-chain check")
    p.set_defaults(func=_cmd_gfs)

    p = sub.add_parser("rules", help="print the rewriting rules")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--no-prune", action="store_true")
    p.set_defaults(func=_cmd_rules)

    p = sub.add_parser("weights", help="weight function construction")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("add", help="exact addition of admissible expansions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_add)

    p = sub.add_parser("sub", help="exact subtraction of admissible expansions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_sub)

    p = sub.add_parser("normalize", help="rewrite a string to its admissible form")
    p.add_argument("string")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("classify", help="necessary and sufficient condition report")
    p.set_defaults(func=_cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        base = load_base_file(args.base)
        return args.func(base, args)
    except FuelExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotParry as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AltbaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
