"""Coordinates in which a subregular slice structure splits as Casimirs plus a 3x3 block."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..diracred.presentation import PoissonPresentation
from ..errors import (
    NoLinearEliminationFound,
    NotLinear,
    NotProportional,
    SingularEliminationMatrix,
    ValidationFailure,
)
from ..exactpoly.elimination import eliminate_linear
from ..exactpoly.poly import MultiPoly, WeightVector, qdegree
from ..exactpoly.polymatrix import PolyMatrix, determinant
from .casimirs import RestrictedInvariant, _constant_ratio


@dataclass(frozen=True, eq=False)
class OmegaForm:
    eliminated: tuple  # original coordinates solved for
    parameters: tuple  # names of the Casimirs that replace them
    casimir_order: tuple  # indices of those Casimirs in the input list
    top_index: int  # index of the Casimir kept as the surface equation
    solution: dict  # eliminated coordinate -> polynomial in the new coordinates
    elimination_jacobian: PolyMatrix  # d(parameter Casimirs) / d(eliminated), constant determinant
    elimination_det: Fraction
    survivors: tuple  # the three remaining original coordinates
    chi_top: MultiPoly  # top Casimir in the new coordinates
    omega: PolyMatrix  # brackets of the survivors, in the new coordinates
    c_prime: Fraction
    presentation: PoissonPresentation  # full matrix in the new coordinates

    @property
    def coords(self) -> tuple:
        return self.parameters + self.survivors


def _normalize(casimirs, presentation) -> list:
    out = []
    for i, c in enumerate(casimirs):
        if isinstance(c, RestrictedInvariant):
            out.append((c.name, c.poly.with_variables(presentation.coords), c.qdegree))
        else:
            p = c.with_variables(presentation.coords)
            w = presentation.weights
            out.append((f"chi{i + 1}", p, qdegree(p, w) if w is not None else p.total_degree))
    return out


def _find_elimination(params, coords):
    """First subset of coordinates (lex order) the parameter Casimirs can be solved for linearly."""
    for subset in combinations(range(len(coords)), len(params)):
        names = [coords[k] for k in subset]
        try:
            return subset, eliminate_linear(params, names)
        except (NotLinear, SingularEliminationMatrix):
            continue
    raise NoLinearEliminationFound("no coordinate subset gives a linear change of coordinates")


def reduce_to_omega(presentation: PoissonPresentation, casimirs: Sequence) -> OmegaForm:
    """Trade l-1 coordinates for Casimirs; the remaining three carry the 3x3 block.

    The Casimir of largest quasi-degree stays as the surface equation; a tie
    for the largest quasi-degree is an error.  The others become coordinates
    by eliminating the lexicographically first admissible coordinate subset.
    """
    coords = presentation.coords
    items = _normalize(casimirs, presentation)
    if len(items) != len(coords) - 2:
        raise ValidationFailure(f"{len(items)} Casimirs on {len(coords)} coordinates; expected {len(coords) - 2}")
    top_deg = max(q for _, _, q in items)
    tops = [i for i, (_, _, q) in enumerate(items) if q == top_deg]
    if len(tops) > 1:
        raise ValidationFailure(f"Casimirs {tops} share the top quasi-degree {top_deg}")
    top = tops[0]
    order = tuple(i for i in range(len(items)) if i != top)
    parameters = tuple(items[i][0] for i in order)
    if set(parameters) & set(coords):
        raise ValidationFailure("Casimir names clash with coordinate names")
    ring = coords + parameters
    equations = [
        items[i][1].with_variables(ring) - MultiPoly.variable(items[i][0], ring) for i in order
    ]
    subset, solution = _find_elimination(equations, coords)
    eliminated = tuple(coords[k] for k in subset)
    survivors = tuple(c for c in coords if c not in eliminated)
    new_coords = parameters + survivors

    jac = PolyMatrix([[items[i][1].diff(v) for v in eliminated] for i in order], coords)
    det = determinant(jac) if order else MultiPoly.constant(1, coords)
    sol = {v: p.with_variables(new_coords) for v, p in solution.items()}

    # new coordinate functions in the old coordinates, then J P J^T
    funcs = [items[i][1] for i in order] + [MultiPoly.variable(s, coords) for s in survivors]
    J = PolyMatrix([[f.diff(v) for v in coords] for f in funcs], coords)
    old = J @ presentation.matrix @ J.T
    new = PolyMatrix(
        [[e.with_variables(ring).subs(sol).with_variables(new_coords) for e in row] for row in old.rows],
        new_coords,
    )
    m = len(parameters)
    for i in range(len(new_coords)):
        for j in range(len(new_coords)):
            if (i < m or j < m) and new[i, j]:
                raise ValidationFailure(f"bracket of {new_coords[i]} and {new_coords[j]} does not vanish")
    omega = PolyMatrix([[new[m + a, m + b] for b in range(3)] for a in range(3)], new_coords)

    chi_top = items[top][1].with_variables(ring).subs(sol).with_variables(new_coords)
    s1, s2, s3 = survivors
    pairs = [
        (omega[0, 1], chi_top.diff(s3)),
        (omega[0, 2], -chi_top.diff(s2)),
        (omega[1, 2], chi_top.diff(s1)),
    ]
    c_prime = None
    for lhs, rhs in pairs:
        if not rhs:
            if lhs:
                raise NotProportional(str(lhs), "0")
            continue
        ratio = _constant_ratio(lhs, rhs)
        if ratio is None or (c_prime is not None and ratio != c_prime):
            raise NotProportional(str(lhs), str(rhs))
        c_prime = ratio
    if not c_prime:
        raise ValidationFailure("the 3x3 block vanishes")

    weights = None
    if presentation.weights is not None:
        table = dict(zip(coords, presentation.weights.weights))
        weights = WeightVector(tuple(items[i][2] for i in order) + tuple(table[s] for s in survivors))
    return OmegaForm(
        eliminated=eliminated,
        parameters=parameters,
        casimir_order=order,
        top_index=top,
        solution=sol,
        elimination_jacobian=jac,
        elimination_det=det.constant_value(),
        survivors=survivors,
        chi_top=chi_top,
        omega=omega,
        c_prime=c_prime,
        presentation=PoissonPresentation(new_coords, weights, new, "omega"),
    )
