"""Invariant polynomials restricted to a slice, and the determinantal bracket they generate."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from ..diracred.presentation import PoissonPresentation, random_point
from ..diracred.reduction import reduce_chart
from ..errors import CasimirFailure, DependentCasimirs, DimensionMismatch, NotProportional, ValidationFailure, ZeroStructure
from ..exactpoly import linalg
from ..exactpoly.poly import MultiPoly, WeightVector, qdegree
from ..exactpoly.polymatrix import PolyMatrix, determinant
from ..liecore.invariants import InvariantFamily
from ..orbitkit.chart import Sl2TripleChart


@dataclass(frozen=True)
class RestrictedInvariant:
    name: str
    poly: MultiPoly
    degree: int  # polynomial degree of the ambient invariant
    qdegree: int  # quasi-degree on the slice, always twice the degree


def restrict_invariants(
    family: InvariantFamily,
    chart: Sl2TripleChart,
    presentation: PoissonPresentation | None = None,
    pinned: Sequence[MultiPoly] | None = None,
    prefix: str = "chi",
) -> list:
    """chi_i = G_i(Q(q)), checked for quasi-degree 2 d_i and for being Casimirs.

    ``pinned`` values (e.g. from a chart fixture) must agree exactly;
    any disagreement raises ``CasimirFailure``.
    """
    values = family.at(chart.generic_point())
    if presentation is None:
        presentation = reduce_chart(chart)
    out = []
    for i, (p, d) in enumerate(zip(values, family.degrees)):
        p = p.with_variables(chart.coords)
        q = qdegree(p, chart.weights)
        if q != 2 * d:
            raise ValidationFailure(f"restricted invariant {i + 1} has quasi-degree {q}, expected {2 * d}")
        residual = presentation.casimir_residual(p)
        if any(residual):
            raise CasimirFailure(i, residual)
        if pinned is not None and i < len(pinned) and pinned[i] != p:
            raise CasimirFailure(i, p - pinned[i])
        out.append(RestrictedInvariant(f"{prefix}{i + 1}", p, d, q))
    return out


def determinantal_bracket(
    casimirs: Sequence[MultiPoly],
    coords: Sequence[str],
    weights: WeightVector | None = None,
    seed: int = 0,
) -> PoissonPresentation:
    """{x_i, x_j} = det(grad x_i, grad x_j, grad C_1, ..., grad C_(d-2))."""
    coords = tuple(coords)
    d = len(coords)
    casimirs = [c.poly if isinstance(c, RestrictedInvariant) else c for c in casimirs]
    casimirs = [c.with_variables(coords) for c in casimirs]
    if len(casimirs) != d - 2:
        raise DimensionMismatch(f"{len(casimirs)} Casimirs for {d} coordinates; need {d - 2}")
    grads = [[c.diff(v) for v in coords] for c in casimirs]
    rng = random.Random(seed)
    for _ in range(5):
        point = random_point(coords, rng)
        if linalg.rank([[g.evaluate(point) for g in row] for row in grads]) == d - 2 or d == 2:
            break
    else:
        raise DependentCasimirs("Casimir gradients are dependent at every sampled point")
    zero = MultiPoly.zero(coords)
    one = MultiPoly.constant(1, coords)
    rows = [[zero] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            unit_i = [one if k == i else zero for k in range(d)]
            unit_j = [one if k == j else zero for k in range(d)]
            det = determinant(PolyMatrix([unit_i, unit_j] + grads, coords))
            rows[i][j] = det
            rows[j][i] = -det
    return PoissonPresentation(coords, weights, PolyMatrix(rows, coords), "determinantal")


def proportionality_constant(P1: PoissonPresentation, P2: PoissonPresentation):
    """The rational c with P1 = c * P2."""
    if tuple(P1.coords) != tuple(P2.coords):
        raise ValidationFailure("presentations use different coordinates")
    if P2.matrix.is_zero:
        raise ZeroStructure("the reference structure is zero")
    n = len(P1.coords)
    c = None
    first = None
    for i in range(n):
        for j in range(n):
            a, b = P1.matrix[i, j], P2.matrix[i, j]
            if not b:
                if a:
                    raise NotProportional((i, j, str(a), "0"), first)
                continue
            ratio = _constant_ratio(a, b)
            if ratio is None:
                raise NotProportional((i, j, str(a), str(b)), first)
            if c is None:
                c, first = ratio, (i, j, str(ratio))
            elif ratio != c:
                raise NotProportional((i, j, str(ratio)), first)
    if not (P1.matrix - P2.matrix.scale(c)).is_zero:
        raise NotProportional(first, None)
    return c


def _constant_ratio(a: MultiPoly, b: MultiPoly):
    """a / b when it is a constant, else None."""
    if not a:
        return 0
    variables = MultiPoly._union(a.variables, b.variables)
    exp, lead = b.with_variables(variables).leading_term()
    ratio = a.with_variables(variables).terms.get(exp, 0) / lead
    if ratio == 0 or a != b.scale(ratio):
        return None
    return ratio
