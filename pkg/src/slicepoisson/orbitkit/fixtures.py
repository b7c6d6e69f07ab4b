"""Chart fixture files.

Format (``#`` starts a comment)::

    [chart]
    name = g2-subregular
    algebra = G2
    labels = 0 2            # or: h = 1:2 2:4
    e = 4:1 7:1             # optional hint for the triple
    form_scale = 1          # optional, matrix types only
    [Z]
    4:1 7:1                 # one vector per line, 1-based basis index:coefficient
    [X]
    ...
    [casimirs]              # optional pinned restricted invariants
    chi1 = q1

Sections [Z] and [X] are optional; missing ones fall back to the canonical
choice (weight basis of g(e), image of ad_f).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..errors import ConfigError, FixtureMissing
from ..exactpoly.poly import MultiPoly
from ..liecore.builders import build_realization
from ..liecore.realization import LieAlgebraRealization
from .chart import Sl2TripleChart, build_chart
from .grading import characteristic_from_labels, complete_sl2

_SECTION = re.compile(r"^\[(\w+)\]$")


def parse_sparse_vector(text: str, dim: int) -> tuple:
    v = [Fraction(0)] * dim
    for tok in text.split():
        idx, _, coeff = tok.partition(":")
        k = int(idx) - 1
        if not 0 <= k < dim:
            raise ConfigError(f"basis index {idx} out of range 1..{dim}")
        v[k] += Fraction(coeff or "1")
    return tuple(v)


def format_sparse_vector(v) -> str:
    return " ".join(f"{k + 1}:{c}" for k, c in enumerate(v) if c)


@dataclass(frozen=True)
class ChartSpec:
    name: str
    algebra: str
    form_scale: str | None
    labels: tuple | None
    h: str | None
    e: str | None
    Z: tuple | None
    X: tuple | None
    casimirs: tuple  # (name, text) pairs


def parse_chart_text(text: str, source: str = "<chart>") -> ChartSpec:
    sections: dict = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.match(line)
        if m:
            current = m.group(1).lower()
            sections.setdefault(current, [])
            continue
        if current is None:
            raise ConfigError(f"{source}:{lineno}: content before the first section")
        sections[current].append(line)
    if "chart" not in sections:
        raise ConfigError(f"{source}: missing [chart] section")
    meta = {}
    for line in sections["chart"]:
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{source}: expected key = value, got {line!r}")
        meta[key.strip()] = value.strip()
    if "algebra" not in meta:
        raise ConfigError(f"{source}: [chart] needs an algebra")
    if "labels" not in meta and "h" not in meta:
        raise ConfigError(f"{source}: [chart] needs labels or h")
    casimirs = []
    for line in sections.get("casimirs", []):
        key, _, value = line.partition("=")
        casimirs.append((key.strip(), value.strip()))
    return ChartSpec(
        name=meta.get("name", Path(source).stem),
        algebra=meta["algebra"],
        form_scale=meta.get("form_scale"),
        labels=tuple(int(x) for x in meta["labels"].split()) if "labels" in meta else None,
        h=meta.get("h"),
        e=meta.get("e"),
        Z=tuple(sections["z"]) if "z" in sections else None,
        X=tuple(sections["x"]) if "x" in sections else None,
        casimirs=tuple(casimirs),
    )


@dataclass(frozen=True)
class ChartFixture:
    spec: ChartSpec
    realization: LieAlgebraRealization
    chart: Sl2TripleChart
    casimirs: tuple  # pinned MultiPoly values, possibly empty


def realize_spec(spec: ChartSpec, check_invariance: bool = True) -> ChartFixture:
    real = build_realization(spec.algebra, form_scale=spec.form_scale)
    dim = real.dim
    if spec.h is not None:
        h = parse_sparse_vector(spec.h, dim)
    else:
        h = characteristic_from_labels(real, spec.labels)
    hint = parse_sparse_vector(spec.e, dim) if spec.e else None
    triple = complete_sl2(real, h, hint=hint)
    Z = [parse_sparse_vector(line, dim) for line in spec.Z] if spec.Z else None
    X = [parse_sparse_vector(line, dim) for line in spec.X] if spec.X else None
    chart = build_chart(real, triple, complement=X, centralizer_basis=Z, check_invariance=check_invariance)
    casimirs = tuple(MultiPoly.parse(text, chart.coords) for _, text in spec.casimirs)
    return ChartFixture(spec, real, chart, casimirs)


def fixture_names() -> list:
    root = resources.files("slicepoisson.data").joinpath("charts")
    return sorted(p.name[: -len(".chart")] for p in root.iterdir() if p.name.endswith(".chart"))


def load_chart(name_or_path: str | Path, check_invariance: bool = True) -> ChartFixture:
    """Load a shipped chart by name (e.g. ``g2-subregular``) or a chart file by path."""
    path = Path(name_or_path)
    if path.suffix == ".chart" and path.exists():
        return realize_spec(parse_chart_text(path.read_text(), str(path)), check_invariance)
    res = resources.files("slicepoisson.data").joinpath("charts", f"{name_or_path}.chart")
    if not res.is_file():
        raise FixtureMissing(f"no chart fixture named {name_or_path!r} (have {', '.join(fixture_names())})")
    return realize_spec(parse_chart_text(res.read_text(), f"{name_or_path}.chart"), check_invariance)
