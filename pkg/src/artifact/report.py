"""Uniform JSON-friendly verification reports."""
from __future__ import annotations

from fractions import Fraction
from typing import Any


def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


def make_report(identity: str, ok: bool, witness: Any = None, **context) -> dict:
    out = {"identity": identity, "status": "pass" if ok else "fail"}
    if context:
        out["context"] = jsonable(context)
    if witness is not None and not ok:
        out["witness"] = jsonable(witness)
    return out


def merge(identity: str, parts: list[dict], **context) -> dict:
    """Aggregate sub-reports; the first failing one becomes the witness."""
    bad = [p for p in parts if p["status"] != "pass"]
    out = make_report(identity, not bad, bad[0] if bad else None, **context)
    out["checks"] = len(parts)
    out["failed"] = len(bad)
    return out


def passed(rep: dict) -> bool:
    return rep["status"] == "pass"
