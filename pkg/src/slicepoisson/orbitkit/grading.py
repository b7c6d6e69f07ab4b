"""Characteristic elements, ad_h gradings and sl2-triples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random
from itertools import chain, product
from typing import Mapping, Sequence

from ..errors import (
    InconsistentHint,
    NonIntegerEigenvalue,
    NonIntegralSolution,
    NoTripleFound,
    ValidationFailure,
)
from ..exactpoly import linalg
from ..liecore.realization import LieAlgebraRealization, Vector


def characteristic_from_labels(realization: LieAlgebraRealization, labels) -> Vector:
    """The element h of the Cartan subalgebra with alpha_j(h) = labels[j] for each simple root."""
    r = realization
    if isinstance(labels, Mapping):
        missing = [j for j in range(r.rank) if j not in labels]
        if missing:
            raise ValueError(f"labels missing for simple roots {missing}")
        labels = [labels[j] for j in range(r.rank)]
    labels = list(labels)
    if len(labels) != r.rank:
        raise ValueError(f"{len(labels)} labels for rank {r.rank}")
    values = []
    for v in labels:
        v = Fraction(v)
        if v.denominator != 1:
            raise NonIntegralSolution(f"label {v} is not an integer")
        values.append(v)
    cartan = r.cartan_matrix()
    coeffs = linalg.solve(cartan, values)
    if coeffs is None:
        raise NonIntegralSolution("the labels admit no solution")
    h = [Fraction(0)] * r.dim
    for j, c in enumerate(coeffs):
        for k, v in enumerate(r.coroot(j)):
            h[k] += c * v
    h = tuple(h)
    for j, v in enumerate(values):
        if r.root_value(r.simple_root_index(j), h) != v:
            raise NonIntegralSolution("solved element does not reproduce the labels")
    return h


def coroot_coefficients(realization: LieAlgebraRealization, h: Vector) -> list:
    """Coefficients of h in the simple coroots."""
    cols = [realization.coroot(j) for j in range(realization.rank)]
    sol = linalg.coordinates(cols, list(h))
    if sol is None:
        raise ValidationFailure("element is not in the span of the simple coroots")
    return sol


@dataclass(frozen=True)
class Grading:
    eigenvalues: tuple
    spaces: Mapping  # eigenvalue -> tuple of vectors

    def space(self, i: int) -> tuple:
        return self.spaces.get(i, ())

    def dim(self, i: int) -> int:
        return len(self.space(i))

    def dims(self) -> dict:
        return {i: len(v) for i, v in sorted(self.spaces.items())}


def grading(realization: LieAlgebraRealization, h: Vector) -> Grading:
    """Eigenspace decomposition of ad_h; eigenvalues must be integers."""
    r = realization
    ad = r.ad_matrix(h)
    n = r.dim
    diagonal = all(not ad[i][j] for i in range(n) for j in range(n) if i != j)
    spaces: dict = {}
    if diagonal:
        for j in range(n):
            lam = ad[j][j]
            if lam.denominator != 1:
                raise NonIntegerEigenvalue(f"ad_h has eigenvalue {lam}")
            spaces.setdefault(int(lam), []).append(r.basis_element(j))
    else:
        cp = linalg.charpoly_hessenberg(ad)
        roots = linalg.rational_roots(cp)
        total = 0
        for lam in roots:
            if lam.denominator != 1:
                raise NonIntegerEigenvalue(f"ad_h has eigenvalue {lam}")
            shifted = [[ad[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
            vecs = [tuple(v) for v in linalg.nullspace(shifted)]
            spaces[int(lam)] = vecs
            total += len(vecs)
        if total != n:
            raise NonIntegerEigenvalue("ad_h is not diagonalizable with integer eigenvalues")
    return Grading(
        eigenvalues=tuple(sorted(spaces)),
        spaces={k: tuple(v) for k, v in sorted(spaces.items())},
    )


def check_grading(realization: LieAlgebraRealization, h: Vector, g: Grading) -> None:
    """Check [g(i), g(j)] in g(i+j) and dim g(i) = dim g(-i)."""
    for i in g.eigenvalues:
        if g.dim(i) != g.dim(-i):
            raise ValidationFailure(f"dim g({i}) != dim g({-i})")
    for i, j in product(g.eigenvalues, repeat=2):
        for x in g.space(i):
            for y in g.space(j):
                z = realization.bracket(x, y)
                hz = realization.bracket(h, z)
                if any(a != (i + j) * b for a, b in zip(hz, z)):
                    raise ValidationFailure(f"[g({i}), g({j})] is not in g({i + j})")


def _solve_f(realization, h, e, lower) -> Vector | None:
    """f in span(lower) with [e, f] = h, or None."""
    if not lower:
        return None if any(h) else realization.zero()
    images = [realization.bracket(e, y) for y in lower]
    sol = linalg.coordinates(images, list(h))
    if sol is None:
        return None
    f = [Fraction(0)] * realization.dim
    for c, y in zip(sol, lower):
        if c:
            for k, v in enumerate(y):
                f[k] += c * v
    return tuple(f)


def check_triple(realization: LieAlgebraRealization, h: Vector, e: Vector, f: Vector) -> None:
    r = realization
    if r.bracket(h, e) != tuple(2 * c for c in e):
        raise ValidationFailure("[h, e] != 2e")
    if r.bracket(h, f) != tuple(-2 * c for c in f):
        raise ValidationFailure("[h, f] != -2f")
    if r.bracket(e, f) != tuple(h):
        raise ValidationFailure("[e, f] != h")


def complete_sl2(
    realization: LieAlgebraRealization,
    h: Vector,
    hint: Vector | None = None,
    coefficient_range: Sequence[int] = (-2, -1, 0, 1, 2),
    budget: int = 100000,
    random_tries: int = 8,
    seed: int = 0,
) -> tuple:
    """Complete h to an sl2-triple (h, e, f).

    With a hint, e is the hint and must lie in g(2).  Otherwise the
    candidates for e are the sum of the g(2) basis, then ``random_tries``
    seeded random combinations with coefficients in ``coefficient_range``,
    then every combination in lexicographic order.  The first e admitting an
    f with dim g(e) = dim g(0) + dim g(1) is taken; all such e are
    conjugate, since h determines the orbit.
    """
    r = realization
    h = tuple(h)
    g = grading(r, h)
    upper, lower = g.space(2), g.space(-2)
    if hint is not None:
        e = tuple(Fraction(c) for c in hint)
        if r.bracket(h, e) != tuple(2 * c for c in e):
            raise InconsistentHint("the hint is not in g(2)")
        f = _solve_f(r, h, e, lower)
        if f is None:
            raise InconsistentHint("no f in g(-2) satisfies [e, f] = h for the hint")
        check_triple(r, h, e, f)
        return h, e, f
    if not upper:
        if any(h):
            raise NoTripleFound("g(2) is zero")
        return h, r.zero(), r.zero()
    target = g.dim(0) + g.dim(1)
    rng = random.Random(seed)
    nonzero = [c for c in coefficient_range if c] or [1]
    head = [(1,) * len(upper)] + [
        tuple(rng.choice(nonzero) for _ in upper) for _ in range(random_tries)
    ]
    tried = 0
    for coeffs in chain(head, product(coefficient_range, repeat=len(upper))):
        if not any(coeffs):
            continue
        tried += 1
        if tried > budget:
            break
        e = [Fraction(0)] * r.dim
        for c, x in zip(coeffs, upper):
            if c:
                for k, v in enumerate(x):
                    e[k] += c * v
        e = tuple(e)
        f = _solve_f(r, h, e, lower)
        if f is None:
            continue
        if len(r.centralizer(e)) != target:
            continue
        check_triple(r, h, e, f)
        return h, e, f
    raise NoTripleFound(f"no sl2-triple found after {tried} candidates")
