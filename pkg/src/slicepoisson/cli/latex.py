"""LaTeX rendering of report values."""

from __future__ import annotations

import re
from fractions import Fraction

from ..exactpoly.poly import MultiPoly

_NAME = re.compile(r"^([A-Za-z]+)(\d*)$")
_GREEK = {"chi": r"\chi", "lambda": r"\lambda", "omega": r"\omega", "u": "u"}


def variable_latex(name: str) -> str:
    m = _NAME.match(name)
    if not m:
        return name
    stem, index = m.groups()
    stem = _GREEK.get(stem, stem)
    return f"{stem}_{{{index}}}" if index else stem


def _coefficient(c: Fraction, has_monomial: bool) -> str:
    c = abs(c)
    if c == 1 and has_monomial:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def poly_latex(p: MultiPoly | str) -> str:
    """Inline rendering in the canonical term order, e.g. ``12 q_{1} q_{2} q_{3} - 4 q_{2}^{3}``."""
    if isinstance(p, str):
        p = MultiPoly.parse(p)
    if p.is_zero:
        return "0"
    parts = []
    for k, (exp, c) in enumerate(p.sorted_terms()):
        factors = []
        for name, e in zip(p.variables, exp):
            if e:
                v = variable_latex(name)
                factors.append(v if e == 1 else f"{v}^{{{e}}}")
        mono = " ".join(factors)
        coeff = _coefficient(c, bool(mono))
        body = " ".join(x for x in (coeff, mono) if x)
        if k == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def matrix_latex(rows) -> str:
    body = r" \\ ".join(" & ".join(poly_latex(x) for x in row) for row in rows)
    return rf"\begin{{pmatrix}}{body}\end{{pmatrix}}"


def _is_matrix(value) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(r, list) for r in value)


def emit_latex(value, label: str | None = None) -> str:
    """Render a report section or value.

    Matrices become pmatrix environments, a single polynomial is rendered
    inline, and lists of named invariants become an align block.
    """
    if isinstance(value, str):
        return poly_latex(value)
    if isinstance(value, (int, Fraction)):
        return str(value)
    if _is_matrix(value):
        return matrix_latex(value)
    if isinstance(value, dict):
        if "matrix" in value:
            return matrix_latex(value["matrix"])
        if "invariants" in value:
            return emit_latex(value["invariants"])
        lines = [rf"{variable_latex(k)} &= {poly_latex(v)}" for k, v in value.items() if isinstance(v, str)]
        return "\\begin{align}\n" + " \\\\\n".join(lines) + "\n\\end{align}"
    if isinstance(value, list) and all(isinstance(x, dict) and "name" in x for x in value):
        lines = [rf"{variable_latex(x['name'])} &= {poly_latex(x['poly'])}" for x in value]
        return "\\begin{align}\n" + " \\\\\n".join(lines) + "\n\\end{align}"
    if isinstance(value, list):
        return ", ".join(emit_latex(x) for x in value)
    raise ValueError(f"cannot render {type(value).__name__} as LaTeX")


def select(report: dict, path: str):
    """Look up ``section`` or ``section.key`` (or ``section.key.subkey``) in a report document."""
    parts = path.split(".")
    node = report.get("sections", report)
    for k, part in enumerate(parts):
        if isinstance(node, dict) and part not in node and "invariants" in node:
            node = node["invariants"]
        if isinstance(node, list):
            if part.isdigit():
                node = node[int(part)]
                continue
            match = [x for x in node if isinstance(x, dict) and x.get("name") == part]
            if not match:
                raise KeyError(path)
            node = match[0]["poly"] if k == len(parts) - 1 else match[0]
            continue
        if not isinstance(node, dict) or part not in node:
            raise KeyError(path)
        node = node[part]
    return node
