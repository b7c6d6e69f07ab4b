"""Report documents: JSON with rationals and polynomials as strings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactpoly.polymatrix import PolyMatrix


def rational(x) -> str:
    return str(Fraction(x))


def matrix_strings(m: PolyMatrix) -> list:
    return m.to_strings()


def sparse(v) -> str:
    """Vector as "index:coeff" entries with 1-based indices."""
    return " ".join(f"{k + 1}:{c}" for k, c in enumerate(v) if c) or "0"


@dataclass
class Report:
    job: dict
    sections: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)  # name -> "pass" | "fail"
    errors: list = field(default_factory=list)  # {"task", "error", "message"}
    skipped: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)  # task -> seconds

    @property
    def status(self) -> str:
        if self.errors:
            return "error"
        if any(v != "pass" for v in self.checks.values()):
            return "fail"
        return "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "error": 2}[self.status]

    def as_dict(self, timings: bool = True) -> dict:
        out = {
            "status": self.status,
            "job": self.job,
            "sections": self.sections,
            "checks": self.checks,
            "errors": self.errors,
            "skipped": self.skipped,
        }
        if timings:
            out["timings"] = {k: f"{v:.3f}" for k, v in self.timings.items()}
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.as_dict(timings), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"status: {self.status}"]
        for name, section in self.sections.items():
            lines.append(f"[{name}]")
            lines.extend(_text_lines(section, "  "))
        if self.checks:
            lines.append("[checks]")
            lines.extend(f"  {k}: {v}" for k, v in self.checks.items())
        for err in self.errors:
            lines.append(f"error in {err['task']}: {err['error']}: {err['message']}")
        for task in self.skipped:
            lines.append(f"skipped: {task}")
        return "\n".join(lines) + "\n"


def _text_lines(value, indent: str) -> list:
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                out.append(f"{indent}{k}:")
                out.extend(_text_lines(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {_flat(v)}")
        return out
    if isinstance(value, list):
        out = []
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                out.append(f"{indent}-")
                out.extend(_text_lines(item, indent + "  "))
            else:
                out.append(f"{indent}{_flat(item)}")
        return out
    return [f"{indent}{value}"]


def _is_flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)
