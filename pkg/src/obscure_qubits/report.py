"""Report records produced by script execution, and their serializations."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

SIG_DIGITS = 12


def _round(x: float) -> float:
    if x == 0:
        return 0.0
    return float(f"{x:.{SIG_DIGITS}g}")


def jsonable(value: Any) -> Any:
    """Convert numbers, arrays and containers to JSON-ready structures.

    Floats keep 12 significant digits; complex numbers become ``[re, im]``;
    arrays become nested row-major lists.
    """
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()] if value.ndim else jsonable(value.item())
    if isinstance(value, (complex, np.complexfloating)):
        return [_round(float(value.real)), _round(float(value.imag))]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _round(float(value))
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


@dataclass
class Section:
    kind: str
    payload: Any


@dataclass
class Report:
    model: str
    sections: list[Section] = field(default_factory=list)

    def add(self, kind: str, payload: Any) -> None:
        self.sections.append(Section(kind, jsonable(payload)))

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "sections": [{"kind": s.kind, "payload": s.payload} for s in self.sections],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(data["model"], [Section(s["kind"], s["payload"]) for s in data["sections"]])

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"model: {self.model}"]
        for s in self.sections:
            lines.append(f"[{s.kind}]")
            lines.extend("  " + ln for ln in _text_payload(s.payload))
        return "\n".join(lines)


def format_number(x: float, max_den: int = 32, tol: float = 1e-12) -> str:
    """Fraction when ``x`` is within ``tol`` of p/q with q <= max_den, else a decimal."""
    if not math.isfinite(x):
        return str(x)
    frac = Fraction(x).limit_denominator(max_den)
    if abs(float(frac) - x) <= tol:
        return str(frac)
    return f"{x:.6g}"


def _text_value(v: Any) -> str:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return format_number(float(v))
    if isinstance(v, list):
        return "[" + ", ".join(_text_value(t) for t in v) + "]"
    if isinstance(v, dict):
        return "  ".join(f"{k}={_text_value(t)}" for k, t in v.items())
    return str(v)


def _complex_text(v) -> str:
    re, im = v
    if im == 0:
        return format_number(re)
    return f"{format_number(re)}{'+' if im >= 0 else '-'}{format_number(abs(im))}i"


def _is_matrix(v) -> bool:
    return (
        isinstance(v, list)
        and v
        and all(isinstance(row, list) and row and all(isinstance(c, list) and len(c) == 2 for c in row) for row in v)
    )


def _text_payload(payload: Any) -> list[str]:
    if not isinstance(payload, dict):
        return [_text_value(payload)]
    out = []
    for key, val in payload.items():
        if _is_matrix(val):
            out.append(f"{key}:")
            for row in val:
                out.append("    " + "  ".join(_complex_text(c) for c in row))
        else:
            out.append(f"{key}: {_text_value(val)}")
    return out
