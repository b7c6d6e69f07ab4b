"""Poisson matrices on coordinate spaces and their structural checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..errors import JacobiFailure, NonQuasiHomogeneous, ValidationFailure, ZeroPolynomial
from ..exactpoly import linalg
from ..exactpoly.poly import MultiPoly, WeightVector, qdegree
from ..exactpoly.polymatrix import PolyMatrix

PROVENANCES = ("lie-poisson", "dirac", "determinantal", "omega")


@dataclass(frozen=True)
class JacobiResult:
    passed: bool
    triple: tuple | None = None  # coordinate names of the first failing triple
    jacobiator: MultiPoly | None = None

    def __bool__(self) -> bool:
        return self.passed


def jacobiator(P: PolyMatrix, coords: Sequence[str], i: int, j: int, k: int) -> MultiPoly:
    """{{x_i,x_j},x_k} + cyclic, written as sum_l P_il d_l P_jk + cyclic."""
    total = MultiPoly.zero(P.variables)
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        target = P[b, c]
        if not target:
            continue
        for l, name in enumerate(coords):
            pal = P[a, l]
            if pal:
                d = target.diff(name)
                if d:
                    total = total + pal * d
    return total


def check_jacobi(P: PolyMatrix, coords: Sequence[str]) -> JacobiResult:
    """Expand the Jacobiator on every triple i < j < k; the first nonzero one is the witness."""
    coords = tuple(coords)
    n = len(coords)
    if P.shape != (n, n):
        raise ValidationFailure(f"matrix of shape {P.shape} for {n} coordinates")
    for i, j, k in combinations(range(n), 3):
        jac = jacobiator(P, coords, i, j, k)
        if jac:
            return JacobiResult(False, (coords[i], coords[j], coords[k]), jac)
    return JacobiResult(True)


@dataclass(frozen=True)
class QuasiHomogeneityResult:
    passed: bool
    entry: tuple | None = None
    got: object = None  # offending degree, or "mixed" for a non-quasi-homogeneous entry

    def __bool__(self) -> bool:
        return self.passed


def check_quasihomogeneous(P: "PoissonPresentation", kappa: int = -2) -> QuasiHomogeneityResult:
    """Every nonzero entry (i, j) must have quasi-degree w_i + w_j + kappa."""
    if P.weights is None:
        raise ValidationFailure("presentation carries no weights")
    w = P.weights.weights
    n = len(P.coords)
    for i in range(n):
        for j in range(n):
            entry = P.matrix[i, j]
            if not entry:
                continue
            try:
                d = qdegree(entry, P.weights_for(entry))
            except NonQuasiHomogeneous:
                return QuasiHomogeneityResult(False, (i, j), "mixed")
            if d != w[i] + w[j] + kappa:
                return QuasiHomogeneityResult(False, (i, j), d)
    return QuasiHomogeneityResult(True)


@dataclass(frozen=True, eq=False)
class PoissonPresentation:
    """A skew polynomial matrix on named coordinates.

    Construction runs the Jacobi identity on every triple; a matrix that
    fails raises ``JacobiFailure`` instead of producing a value.
    """

    coords: tuple
    weights: WeightVector | None
    matrix: PolyMatrix
    provenance: str

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        n = len(self.coords)
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.matrix.shape != (n, n):
            raise ValidationFailure(f"matrix of shape {self.matrix.shape} for {n} coordinates")
        if self.weights is not None and len(self.weights.weights) != n:
            raise ValidationFailure("one weight per coordinate is required")
        if not self.matrix.is_skew:
            raise ValidationFailure("Poisson matrix is not skew-symmetric")
        stray = set(self.matrix.variables) - set(self.coords)
        if any(v in stray for _, _, e in self.matrix.entries() for v in e.used_variables()):
            raise ValidationFailure(f"entries use variables outside {self.coords}")
        result = check_jacobi(self.matrix.with_variables(self.coords), self.coords)
        if not result:
            raise JacobiFailure(result.triple, result.jacobiator)
        object.__setattr__(self, "matrix", self.matrix.with_variables(self.coords))

    def weights_for(self, p: MultiPoly) -> WeightVector:
        """Weights aligned with the variable order of ``p``."""
        table = dict(zip(self.coords, self.weights.weights))
        return WeightVector(tuple(table[v] for v in p.variables))

    def bracket(self, i: int | str, j: int | str) -> MultiPoly:
        i = self.coords.index(i) if isinstance(i, str) else i
        j = self.coords.index(j) if isinstance(j, str) else j
        return self.matrix[i, j]

    def poisson_bracket(self, F: MultiPoly, G: MultiPoly) -> MultiPoly:
        """{F, G} = grad F . P . grad G."""
        dF = [F.diff(c) for c in self.coords]
        dG = [G.diff(c) for c in self.coords]
        total = MultiPoly.zero(self.coords)
        for i, a in enumerate(dF):
            if not a:
                continue
            for j, b in enumerate(dG):
                if b and self.matrix[i, j]:
                    total = total + a * self.matrix[i, j] * b
        return total

    def is_casimir(self, C: MultiPoly) -> bool:
        return all(not r for r in self.casimir_residual(C))

    def casimir_residual(self, C: MultiPoly) -> list:
        """P . grad C, which vanishes exactly when C is a Casimir."""
        grad = [C.diff(c) for c in self.coords]
        out = []
        for i in range(len(self.coords)):
            total = MultiPoly.zero(self.coords)
            for j, g in enumerate(grad):
                if g and self.matrix[i, j]:
                    total = total + self.matrix[i, j] * g
            out.append(total)
        return out

    def generic_rank(self, samples: int = 20, seed: int = 0) -> int:
        return generic_rank(self.matrix, self.coords, samples, seed)

    def scale(self, factor, provenance: str | None = None) -> "PoissonPresentation":
        return PoissonPresentation(self.coords, self.weights, self.matrix.scale(factor), provenance or self.provenance)


def random_point(coords: Sequence[str], rng: random.Random) -> dict:
    return {c: Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for c in coords}


def generic_rank(P: PolyMatrix, coords: Sequence[str], samples: int = 20, seed: int = 0) -> int:
    """Maximum rank over seeded random rational points."""
    rng = random.Random(seed)
    best = 0
    for _ in range(samples):
        best = max(best, linalg.rank(P.evaluate(random_point(coords, rng))))
    return best


def quasi_degree_profile(P: PoissonPresentation) -> dict:
    """Quasi-degree minus w_i - w_j for each nonzero entry."""
    w = P.weights.weights
    out = {}
    for i in range(len(P.coords)):
        for j in range(len(P.coords)):
            e = P.matrix[i, j]
            if e:
                try:
                    out[(i, j)] = qdegree(e, P.weights_for(e)) - w[i] - w[j]
                except (NonQuasiHomogeneous, ZeroPolynomial):
                    out[(i, j)] = None
    return out
