"""Slice charts: centralizer and complement bases, dual basis and coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..errors import NotAdHInvariant, NotComplementary, ValidationFailure
from ..exactpoly import linalg
from ..exactpoly.poly import MultiPoly, WeightVector
from ..liecore.realization import LieAlgebraRealization, Vector
from .grading import Grading, check_triple, grading


def _eigenvalue(realization, h, x):
    """Eigenvalue of ad_h on x, or None if x is not an eigenvector."""
    y = realization.bracket(h, x)
    lam = None
    for a, b in zip(y, x):
        if b:
            ratio = a / b
            if lam is None:
                lam = ratio
            elif ratio != lam:
                return None
        elif a:
            return None
    if lam is None:
        return None
    return int(lam) if lam.denominator == 1 else None


def _echelon(vectors):
    if not vectors:
        return []
    r, piv = linalg.rref([list(v) for v in vectors])
    return [tuple(row) for row in r[: len(piv)]]


@dataclass(frozen=True, eq=False)
class Sl2TripleChart:
    realization: LieAlgebraRealization
    h: Vector
    e: Vector
    f: Vector
    Z: tuple
    z_weights: tuple
    X: tuple
    x_weights: tuple  # None for vectors that are not ad_h eigenvectors
    dualZ: tuple
    coords: tuple
    weights: WeightVector
    grading: Grading
    mode: str
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def k(self) -> int:
        return len(self.Z)

    def _covectors(self):
        if "cov" not in self._cache:
            gram = self.realization.gram
            n = self.realization.dim

            def cov(v):
                return tuple(
                    sum((v[i] * gram[i][j] for i in range(n) if v[i]), Fraction(0)) for j in range(n)
                )

            self._cache["cov"] = (cov(self.e), [cov(z) for z in self.dualZ])
        return self._cache["cov"]

    def pair(self, w: Vector) -> MultiPoly:
        """<Q(q)|w> for the generic slice point Q(q) = e + sum q_i Zbar_i."""
        ce, cz = self._covectors()
        const = sum((a * b for a, b in zip(ce, w) if b), Fraction(0))
        terms = {}
        k = self.k
        zero = (0,) * k
        if const:
            terms[zero] = const
        for i, c in enumerate(cz):
            v = sum((a * b for a, b in zip(c, w) if b), Fraction(0))
            if v:
                terms[tuple(int(t == i) for t in range(k))] = v
        return MultiPoly(self.coords, terms)

    def generic_point(self) -> tuple:
        """Coordinates of Q(q) in the realization basis, as polynomials."""
        qs = MultiPoly.variables_of(self.coords)
        out = []
        for j in range(self.realization.dim):
            p = MultiPoly.constant(self.e[j], self.coords)
            for q, z in zip(qs, self.dualZ):
                if z[j]:
                    p = p + q.scale(z[j])
            out.append(p)
        return tuple(out)

    def generic_matrix(self) -> list:
        return self.realization.matrix_of(self.generic_point())

    def check_invariants(self) -> None:
        """Sum of Z weights equals dim g - k; sum of (nu + 1) over X vanishes."""
        r = self.realization
        if sum(self.z_weights) != r.dim - self.k:
            raise ValidationFailure(f"sum of centralizer weights {sum(self.z_weights)} != {r.dim - self.k}")
        if all(w is not None for w in self.x_weights):
            if sum(w + 1 for w in self.x_weights) != 0:
                raise ValidationFailure("sum of (nu_j + 1) over the complement is nonzero")


def canonical_bases(realization: LieAlgebraRealization, h, e, f, g: Grading) -> tuple:
    """Weight bases of g(e) (ascending weight) and of im ad_f (descending weight)."""
    r = realization
    Z, zw = [], []
    for i in g.eigenvalues:
        space = g.space(i)
        if not space:
            continue
        images = [r.bracket(e, x) for x in space]
        null = linalg.nullspace(linalg.transpose([list(v) for v in images])) if images else []
        vecs = []
        for coeffs in null:
            v = [Fraction(0)] * r.dim
            for c, x in zip(coeffs, space):
                if c:
                    for t, val in enumerate(x):
                        v[t] += c * val
            vecs.append(tuple(v))
        for v in _echelon(vecs):
            Z.append(v)
            zw.append(i)
    X, xw = [], []
    for i in sorted(g.eigenvalues, reverse=True):
        source = g.space(i + 2)
        if not source:
            continue
        for v in _echelon([r.bracket(f, x) for x in source]):
            X.append(v)
            xw.append(i)
    return Z, zw, X, xw


def dual_basis(realization: LieAlgebraRealization, Z: Sequence[Vector], X: Sequence[Vector]) -> list:
    """Zbar_i with <Zbar_i|Z_j> = delta_ij and <Zbar_i|X_m> = 0."""
    r = realization
    full = [list(v) for v in list(Z) + list(X)]
    inv = linalg.inverse([[r.form(a, b) for b in full] for a in full])
    dual = []
    for i in range(len(Z)):
        v = [Fraction(0)] * r.dim
        for b, vec in enumerate(full):
            c = inv[b][i]
            if c:
                for t, val in enumerate(vec):
                    v[t] += c * val
        dual.append(tuple(v))
    return dual


def pairing_polynomial(realization: LieAlgebraRealization, base: Vector, dual: Sequence[Vector], coords, w: Vector) -> MultiPoly:
    """<base + sum q_i dual_i | w> as a polynomial affine in the coordinates."""
    r = realization
    k = len(dual)
    terms = {}
    const = r.form(base, w)
    if const:
        terms[(0,) * k] = const
    for i, z in enumerate(dual):
        v = r.form(z, w)
        if v:
            terms[tuple(int(t == i) for t in range(k))] = v
    return MultiPoly(coords, terms)


def build_chart(
    realization: LieAlgebraRealization,
    triple: tuple,
    complement: Sequence[Vector] | None = None,
    centralizer_basis: Sequence[Vector] | None = None,
    *,
    check_invariance: bool = True,
    coord_prefix: str = "q",
) -> Sl2TripleChart:
    """Chart on the slice e + n^perp.

    ``complement`` is an explicit basis of n (checked complementary to g(e)
    and ad_h-invariant); by default n is the image of ad_f.  The centralizer
    basis defaults to a weight basis of g(e).
    """
    r = realization
    h, e, f = (tuple(Fraction(c) for c in v) for v in triple)
    check_triple(r, h, e, f)
    g = grading(r, h)
    cZ, czw, cX, cxw = canonical_bases(r, h, e, f, g)

    if centralizer_basis is None:
        Z, zw = cZ, czw
    else:
        Z = [tuple(Fraction(c) for c in z) for z in centralizer_basis]
        zw = []
        for idx, z in enumerate(Z):
            if any(r.bracket(e, z)):
                raise ValidationFailure(f"Z{idx + 1} does not commute with e")
            w = _eigenvalue(r, h, z)
            if w is None:
                raise ValidationFailure(f"Z{idx + 1} is not an ad_h weight vector")
            zw.append(w)
        if len(Z) != len(cZ) or linalg.rank([list(z) for z in Z]) != len(Z):
            raise ValidationFailure(f"{len(Z)} centralizer vectors given, g(e) has dimension {len(cZ)}")

    if complement is None:
        X, xw, mode = cX, cxw, "canonical"
    else:
        X = [tuple(Fraction(c) for c in x) for x in complement]
        mode = "explicit"
        xw = [_eigenvalue(r, h, x) for x in X]
        if check_invariance:
            for j, x in enumerate(X):
                image = r.bracket(h, x)
                if not r.span_contains(X, image):
                    raise NotAdHInvariant(j, image)

    full = [list(v) for v in list(Z) + list(X)]
    if len(full) != r.dim or linalg.rank(full) != r.dim:
        raise NotComplementary(
            f"{len(Z)} + {len(X)} vectors of rank {linalg.rank(full) if full else 0} do not span g (dimension {r.dim})"
        )

    dual = dual_basis(r, Z, X)

    coords = tuple(f"{coord_prefix}{i + 1}" for i in range(len(Z)))
    chart = Sl2TripleChart(
        realization=r,
        h=h,
        e=e,
        f=f,
        Z=tuple(Z),
        z_weights=tuple(zw),
        X=tuple(X),
        x_weights=tuple(xw),
        dualZ=tuple(dual),
        coords=coords,
        weights=WeightVector(tuple(w + 2 for w in zw)),
        grading=g,
        mode=mode,
    )
    chart.check_invariants()
    return chart
