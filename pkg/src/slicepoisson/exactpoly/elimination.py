"""Solving polynomial equations that are linear in a chosen set of unknowns."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import NotLinear, SingularEliminationMatrix
from .poly import MultiPoly, natural_key
from .polymatrix import PolyMatrix, determinant


def _linear_split(eq: MultiPoly, var: str):
    """Return ``(a, rest)`` with ``eq = a*var + rest`` or ``None`` if nonlinear in ``var``."""
    deg = eq.degree_in(var)
    if deg > 1:
        return None
    if deg < 1:
        return MultiPoly.zero(eq.variables), eq
    a = eq.diff(var)
    rest = eq.subs({var: 0})
    return a, rest


def eliminate_linear(
    equations: Sequence[MultiPoly], solve_for: Iterable[str]
) -> dict:
    """Solve ``equations = 0`` for the variables in ``solve_for``.

    The unknowns are eliminated one at a time: at each step the first
    equation (in input order) that is linear in some remaining unknown with a
    nonzero constant coefficient is solved for it and substituted everywhere.
    An equation may be nonlinear in an unknown at first as long as earlier
    substitutions make it linear.  The Jacobian of the equations with respect
    to ``solve_for`` must have a nonzero constant determinant, which is what
    makes the result polynomial.

    Returns ``{name: MultiPoly}`` with every solution free of ``solve_for``.
    """
    solve_for = list(solve_for)
    equations = list(equations)
    if len(equations) != len(solve_for):
        raise SingularEliminationMatrix(
            f"{len(equations)} equations for {len(solve_for)} unknowns"
        )
    jac = PolyMatrix([[eq.diff(v) for v in solve_for] for eq in equations])
    det = determinant(jac)
    if det.is_zero:
        raise SingularEliminationMatrix("the equations are dependent in the chosen unknowns")
    if not det.is_constant:
        raise NotLinear(f"Jacobian determinant {det} is not constant")

    pending = list(range(len(equations)))
    remaining = list(solve_for)
    solution: dict = {}
    while remaining:
        choice = None
        for idx in pending:
            for v in remaining:
                split = _linear_split(equations[idx], v)
                if split is None:
                    continue
                a, rest = split
                if a and a.is_constant:
                    choice = (idx, v, a.constant_value(), rest)
                    break
            if choice:
                break
        if choice is None:
            raise NotLinear(
                "no equation is linear with a constant coefficient in a remaining "
                f"unknown (left: {remaining})"
            )
        idx, v, a, rest = choice
        value = rest.scale(-1 / a)
        pending.remove(idx)
        remaining.remove(v)
        for k in pending:
            equations[k] = equations[k].subs({v: value})
        solution = {name: p.subs({v: value}) for name, p in solution.items()}
        solution[v] = value

    ordered = {}
    for v in solve_for:
        p = solution[v]
        ordered[v] = p.with_variables(tuple(sorted(p.used_variables(), key=natural_key)))
    return ordered


def substitute_back(equations: Sequence[MultiPoly], solution: dict) -> list:
    """Equations after substituting a solution; all zero when the solution is exact."""
    return [eq.subs(solution) for eq in equations]
