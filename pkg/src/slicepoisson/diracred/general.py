"""Slices through arbitrary elements, compared with slices inside the centralizer of the semisimple part."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NoTripleFound
from ..exactpoly import linalg
from ..exactpoly.poly import WeightVector
from ..liecore.jordan import jordan_chevalley
from ..liecore.realization import LieAlgebraRealization, Vector
from ..orbitkit.chart import dual_basis
from ..orbitkit.grading import check_triple, grading
from .presentation import PoissonPresentation
from .reduction import assemble_blocks, dirac_reduce


def _combine(coeffs, vectors, dim) -> Vector:
    v = [Fraction(0)] * dim
    for c, x in zip(coeffs, vectors):
        if c:
            for t, val in enumerate(x):
                v[t] += c * val
    return tuple(v)


def _subspace_killed_by(r: LieAlgebraRealization, space, elements) -> list:
    """Vectors of span(space) commuting with every element of ``elements``."""
    if not space:
        return []
    rows = []
    for a in elements:
        images = [r.bracket(a, x) for x in space]
        rows.extend(list(col) for col in zip(*images))
    if not rows:
        return [tuple(x) for x in space]
    null = linalg.nullspace(rows)
    vecs = [_combine(c, space, r.dim) for c in null]
    if not vecs:
        return []
    ech, piv = linalg.rref([list(v) for v in vecs])
    return [tuple(row) for row in ech[: len(piv)]]


def morozov_triple(r: LieAlgebraRealization, e: Vector, subalgebra) -> tuple:
    """(h, e, f) with h, f in span(subalgebra), for nilpotent e in that subalgebra."""
    if not any(e):
        return r.zero(), tuple(e), r.zero()
    basis = list(subalgebra)
    two_e = [2 * c for c in e]
    images = [r.bracket(r.bracket(e, b), e) for b in basis]
    z = linalg.coordinates(images, two_e)
    if z is None:
        raise NoTripleFound("no h in [e, g(s)] with [h, e] = 2e")
    h = r.bracket(e, _combine(z, basis, r.dim))
    # f solves [e, f] = h and [h, f] = -2f simultaneously
    stacked = [tuple(r.bracket(e, b)) + tuple(a + 2 * c for a, c in zip(r.bracket(h, b), b)) for b in basis]
    d = linalg.coordinates(stacked, list(h) + [Fraction(0)] * r.dim)
    if d is None:
        raise NoTripleFound("no f completing the triple inside g(s)")
    f = _combine(d, basis, r.dim)
    check_triple(r, h, tuple(e), f)
    return h, tuple(e), f


@dataclass(frozen=True, eq=False)
class GeneralOrbitReport:
    x: Vector
    s: Vector
    e: Vector
    h: Vector
    f: Vector
    coords: tuple
    ambient: PoissonPresentation  # on x + n^perp inside g
    centralizer: PoissonPresentation  # on e + n^perp inside g(s)
    diffs: tuple  # (i, j, difference) for every unequal entry

    @property
    def equal(self) -> bool:
        return not self.diffs


def reduce_general_orbit(realization: LieAlgebraRealization, x, coord_prefix: str = "q") -> GeneralOrbitReport:
    """Poisson matrices on the slice through x and on the slice through e inside g(s).

    Both sides use the complement n = n_s + n_e with n_s the orthogonal of
    g(s) and n_e the image of ad_f inside g(s); each side is assembled and
    reduced on its own and the matrices are compared entrywise.
    """
    r = realization
    x = tuple(Fraction(c) for c in x)
    jc = jordan_chevalley(r, x)
    s, e = jc.s, jc.e
    gs = [tuple(v) for v in r.centralizer(s)]
    h, e, f = morozov_triple(r, e, gs)

    gr = grading(r, h)
    Z, zw, n_e = [], [], []
    for i in gr.eigenvalues:
        for v in _subspace_killed_by(r, list(gr.space(i)), [s, e]):
            Z.append(v)
            zw.append(i)
    for i in sorted(gr.eigenvalues, reverse=True):
        source = _subspace_killed_by(r, list(gr.space(i + 2)), [s])
        images = [r.bracket(f, v) for v in source]
        if images:
            ech, piv = linalg.rref([list(v) for v in images])
            n_e.extend(tuple(row) for row in ech[: len(piv)])
    gram = r.gram
    constraints = [[sum((b[i] * gram[i][j] for i in range(r.dim) if b[i]), Fraction(0)) for j in range(r.dim)] for b in gs]
    n_s = [tuple(v) for v in linalg.nullspace(constraints)] if gs else [r.basis_element(j) for j in range(r.dim)]

    coords = tuple(f"{coord_prefix}{i + 1}" for i in range(len(Z)))
    dual = dual_basis(r, Z, n_e + n_s)
    weights = WeightVector(tuple(w + 2 for w in zw)) if Z else None

    A, B, C = assemble_blocks(r, x, dual, Z, n_e + n_s, coords)
    ambient = dirac_reduce(A, B, C, None, coords, prune=False)
    A2, B2, C2 = assemble_blocks(r, e, dual, Z, n_e, coords)
    inner = dirac_reduce(A2, B2, C2, weights, coords)

    diffs = []
    for i in range(len(coords)):
        for j in range(len(coords)):
            d = ambient.matrix[i, j] - inner.matrix[i, j]
            if d:
                diffs.append((i, j, d))
    return GeneralOrbitReport(x, s, e, h, f, coords, ambient, inner, tuple(diffs))
