"""Jordan-Chevalley decomposition of elements of a matrix realization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import IrrationalSpectrum, ValidationFailure
from ..exactpoly import linalg
from .realization import LieAlgebraRealization, Vector


@dataclass(frozen=True)
class JordanPair:
    s: Vector
    e: Vector
    eigenvalues: tuple


def _poly_at_matrix(coeffs, m):
    """Horner evaluation of a coefficient list (highest first) at a square matrix."""
    n = len(m)
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in coeffs:
        acc = linalg.matmul(acc, m)
        for i in range(n):
            acc[i][i] += c
    return acc


def _is_zero(m) -> bool:
    return all(not x for row in m for x in row)


def squarefree_part(p: list) -> list:
    g = linalg.poly_gcd(p, linalg.poly_derivative(p))
    q, r = linalg.poly_divmod(p, g)
    assert r == [0]
    return [c / q[0] for c in q]


def jordan_chevalley(realization: LieAlgebraRealization, x: Vector) -> JordanPair:
    """Split ``x = s + e`` with ``s`` semisimple, ``e`` nilpotent and ``[s, e] = 0``.

    ``s`` is obtained by Newton's iteration ``S <- S - q(S) q'(S)^{-1}`` for
    the squarefree part ``q`` of the characteristic polynomial, so it is a
    polynomial in ``x``.  Raises ``IrrationalSpectrum`` when some eigenvalue
    is not rational.
    """
    m = realization.matrix_of(x)
    n = len(m)
    p = linalg.charpoly_hessenberg(m)
    q = squarefree_part(p)
    roots = linalg.rational_roots(q)
    if len(roots) != len(q) - 1:
        raise IrrationalSpectrum(f"characteristic polynomial {p} does not split over Q")
    dq = linalg.poly_derivative(q)
    s = [row[:] for row in m]
    for _ in range(2 * n + 2):
        qs = _poly_at_matrix(q, s)
        if _is_zero(qs):
            break
        step = linalg.matmul(qs, linalg.inverse(_poly_at_matrix(dq, s)))
        s = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(s, step)]
    else:
        raise ValidationFailure("Newton iteration for the semisimple part did not converge")
    s_vec = realization.element_from_matrix(s)
    e_vec = tuple(a - b for a, b in zip(x, s_vec))
    pair = JordanPair(s=s_vec, e=e_vec, eigenvalues=tuple(roots))
    check_jordan_pair(realization, x, pair)
    return pair


def check_jordan_pair(realization: LieAlgebraRealization, x: Vector, pair: JordanPair) -> None:
    """Assert the defining properties; raises ``ValidationFailure`` on any violation."""
    if any(a + b != c for a, b, c in zip(pair.s, pair.e, x)):
        raise ValidationFailure("s + e differs from x")
    if any(realization.bracket(pair.s, pair.e)):
        raise ValidationFailure("s and e do not commute")
    em = realization.matrix_of(pair.e)
    power = em
    for _ in range(len(em)):
        power = linalg.matmul(power, em)
    if not _is_zero(power):
        raise ValidationFailure("e is not nilpotent")
    sm = realization.matrix_of(pair.s)
    q = squarefree_part(linalg.charpoly_hessenberg(sm))
    if not _is_zero(_poly_at_matrix(q, sm)):
        raise ValidationFailure("minimal polynomial of s is not squarefree")
