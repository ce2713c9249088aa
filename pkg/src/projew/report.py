"""Text and JSON rendering of :class:`~projew.obstruction.ObstructionReport`.

Every rational is written exactly as ``p/q`` and every expression in the
re-parseable syntax of :mod:`projew.exprparse`.
"""
import json
from fractions import Fraction

from .exactmath import UniPoly
from .obstruction import PTriple, QTriple


def fmt(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return str(value)


def _jsonable(value):
    if isinstance(value, UniPoly):
        return {"variable": value.name, "coefficients": [fmt(c) for c in value.coeffs]}
    if isinstance(value, (PTriple, QTriple)):
        return {k: _jsonable(v) for k, v in vars(value).items()}
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return fmt(value)


def to_dict(report):
    out = {
        "name": report.name,
        "branch": report.branch.value,
        "point": None if report.point is None else [fmt(Fraction(p)) for p in report.point],
        "invariants": _jsonable(report.invariants),
        "payload": _jsonable(report.payload),
        "verdict": report.verdict,
    }
    if report.notes:
        out["notes"] = list(report.notes)
    return out


def to_json(report):
    return json.dumps(to_dict(report), indent=2, ensure_ascii=False) + "\n"


def _pair(v):
    return f"({fmt(v[0])}, {fmt(v[1])})"


def _text_lines(report, sections):
    lines = []
    if report.name:
        lines.append(f"name: {report.name}")
    lines.append(f"branch: {report.branch.value}")
    if report.point is not None:
        lines.append(f"point: {_pair(report.point)}")
    inv = report.invariants
    lines.append(f"rho = {fmt(inv['rho'])}")
    lines.append(f"phi = {fmt(inv['phi'])}")
    lines.append(f"ell = {fmt(inv['ell'])}")
    lines.append(f"Y = {_pair(inv['Y'])}")
    lines.append(f"Yup = {_pair(inv['Yup'])}")
    lines.append(f"W = {_pair(inv['W'])}")
    if "payload" in sections:
        p = report.payload
        if "coefficients" in p:
            for k, v in p["coefficients"].items():
                lines.append(f"{k} = {fmt(v)}")
        if "P" in p:
            for k, v in vars(p["P"]).items():
                lines.append(f"{k}(t) = {v}")
        if "Q" in p:
            for k, v in vars(p["Q"]).items():
                lines.append(f"{k}(X) = {v}")
        for k in ("f", "h", "k", "m"):
            if k in p:
                lines.append(f"{k} = {fmt(p[k])}")
        if "quartic" in p:
            lines.append(f"quartic(t) = {p['quartic']}")
            lines.append(f"quadratic(t) = {p['quadratic']}")
        if "obstruction" in p:
            lines.append(f"obstruction = {fmt(p['obstruction'])}")
        if "obstruction_at_point" in p:
            lines.append(f"obstruction at point = {fmt(p['obstruction_at_point'])}")
        if "obstructions" in p:
            for k, v in p["obstructions"].items():
                lines.append(f"{k} = {fmt(v)}")
    for note in report.notes:
        lines.append(f"note: {note}")
    if "verdict" in sections:
        lines.append(f"verdict: {report.verdict}")
    return lines


def to_text(report, sections=("payload", "verdict")):
    return "\n".join(_text_lines(report, sections)) + "\n"
