"""Block matrices on a slice and the Dirac-reduced Poisson matrix."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from ..errors import NonConstantDeterminant, NotExactlyDivisible, PolynomialityFailure, SingularMatrix
from ..exactpoly import linalg
from ..exactpoly.poly import MultiPoly, WeightVector
from ..exactpoly.polymatrix import PolyMatrix, adjugate, determinant, poly_matrix_inverse_unit_det
from ..liecore.realization import LieAlgebraRealization, Vector
from ..orbitkit.chart import Sl2TripleChart, pairing_polynomial
from .presentation import PoissonPresentation


def assemble_blocks(
    realization: LieAlgebraRealization,
    base: Vector,
    dual: Sequence[Vector],
    Z: Sequence[Vector],
    X: Sequence[Vector],
    coords: Sequence[str],
) -> tuple:
    """A, B, C with entries <Q(q)|[u, v]> for Q(q) = base + sum q_i dual_i."""
    r = realization
    coords = tuple(coords)

    def pair(u, v):
        return pairing_polynomial(r, base, dual, coords, r.bracket(u, v))

    def block(rows, cols, skew):
        out = [[None] * len(cols) for _ in rows]
        for i, u in enumerate(rows):
            for j, v in enumerate(cols):
                if skew and j < i:
                    out[i][j] = -out[j][i]
                elif skew and i == j:
                    out[i][j] = MultiPoly.zero(coords)
                else:
                    out[i][j] = pair(u, v)
        return PolyMatrix(out, coords) if rows and cols else PolyMatrix.zeros(len(rows), len(cols), coords)

    return block(Z, Z, True), block(Z, X, False), block(X, X, True)


def assemble_ABC(chart: Sl2TripleChart) -> tuple:
    """Blocks of the ambient Lie-Poisson matrix at the generic slice point."""
    return assemble_blocks(chart.realization, chart.e, chart.dualZ, chart.Z, chart.X, chart.coords)


def _decoupled(B: PolyMatrix, C: PolyMatrix) -> list:
    """Indices of C that do not reach any nonzero column of B through C's sparsity graph.

    Such indices form a union of diagonal blocks of C and B vanishes on them,
    so they drop out of B C^-1 B^T.
    """
    m = C.shape[0]
    nbrs = [[j for j in range(m) if C[i, j]] for i in range(m)]
    live = {j for j in range(m) if any(B[i, j] for i in range(B.shape[0]))}
    seen = set(live)
    stack = list(live)
    while stack:
        i = stack.pop()
        for j in nbrs[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return sorted(seen)


def _require_generically_invertible(C: PolyMatrix, samples: int = 5, seed: int = 0) -> None:
    rng = random.Random(seed)
    n = C.shape[0]
    for _ in range(samples):
        point = {v: Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for v in C.variables}
        if linalg.rank(C.evaluate(point)) == n:
            return
    if determinant(C).is_zero:
        raise SingularMatrix("C is singular on the slice")


def _restrict(M: PolyMatrix, rows, cols) -> PolyMatrix:
    return PolyMatrix([[M[i, j] for j in cols] for i in rows], M.variables)


def dirac_reduce(
    A: PolyMatrix,
    B: PolyMatrix,
    C: PolyMatrix,
    weights: WeightVector | None = None,
    coords: Sequence[str] | None = None,
    *,
    allow_rational: bool = True,
    prune: bool = True,
    provenance: str = "dirac",
) -> PoissonPresentation:
    """Lambda = A + B C^-1 B^T as a Jacobi-checked presentation.

    With a constant det C the inverse is polynomial.  Otherwise, if
    ``allow_rational``, the numerator det(C) A + B adj(C) B^T is formed and
    each entry must be divisible by det C; a leftover denominator raises
    ``PolynomialityFailure``.  With ``allow_rational=False`` the
    ``NonConstantDeterminant`` is propagated.  ``prune`` drops diagonal
    blocks of C on which B vanishes before inverting.
    """
    coords = tuple(coords) if coords is not None else A.variables
    k = A.shape[0]
    if C.shape[0] == 0:
        lam = A
    else:
        keep = _decoupled(B, C) if prune else list(range(C.shape[0]))
        if len(keep) < C.shape[0]:
            B = _restrict(B, range(k), keep)
            C = _restrict(C, keep, keep)
        if C.shape[0] == 0:
            lam = A
        elif B.is_zero:
            _require_generically_invertible(C)
            lam = A
        else:
            try:
                inv = poly_matrix_inverse_unit_det(C)
                lam = A + B @ inv @ B.T
            except NonConstantDeterminant as err:
                if not allow_rational:
                    raise
                det = err.det
                num = A.map(lambda p: p * det) + B @ adjugate(C) @ B.T
                rows = []
                for i in range(k):
                    row = []
                    for j in range(k):
                        try:
                            row.append(num[i, j].exact_divide(det))
                        except NotExactlyDivisible:
                            raise PolynomialityFailure((i, j), det) from None
                    rows.append(row)
                lam = PolyMatrix(rows, num.variables)
    return PoissonPresentation(coords, weights, lam.with_variables(coords), provenance)


def reduce_chart(chart: Sl2TripleChart, *, allow_rational: bool = True) -> PoissonPresentation:
    A, B, C = assemble_ABC(chart)
    return dirac_reduce(A, B, C, chart.weights, chart.coords, allow_rational=allow_rational)


def c_determinant(chart: Sl2TripleChart) -> MultiPoly:
    _, _, C = assemble_ABC(chart)
    if C.shape[0] == 0:
        return MultiPoly.constant(1, chart.coords)
    det = determinant(C)
    if det.is_zero:
        raise SingularMatrix("C is singular on the slice")
    return det


def numeric_agreement(chart: Sl2TripleChart, presentation: PoissonPresentation, samples: int = 10, seed: int = 0) -> list:
    """Points where the symbolic matrix differs from A + B C^-1 B^T formed in rationals.

    The base point q = 0 is always included; an empty list means agreement.
    """
    A, B, C = assemble_ABC(chart)
    rng = random.Random(seed)
    points = [{c: Fraction(0) for c in chart.coords}]
    points += [{c: Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for c in chart.coords} for _ in range(samples)]
    bad = []
    for point in points:
        a, b, c = A.evaluate(point), B.evaluate(point), C.evaluate(point)
        if c:
            corr = linalg.matmul(linalg.matmul(b, linalg.inverse(c)), linalg.transpose(b))
            value = [[x + y for x, y in zip(ra, rc)] for ra, rc in zip(a, corr)]
        else:
            value = a
        if value != presentation.matrix.evaluate(point):
            bad.append(point)
    return bad
