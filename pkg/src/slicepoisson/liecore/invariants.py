"""Basic Ad-invariant polynomials of a matrix realization.

Each realization carries a recipe: a list of ``("charpoly", k, factor)``
entries (``factor`` times the coefficient of ``t^(n-k)`` in ``det(t - X)``)
and ``("pfaffian", n, factor)`` entries (``factor * Pf(J X)`` with
``J = [[0, I], [I, 0]]``).  Evaluation only uses ring operations and division
by integers, so the same code runs on rationals, polynomials and dual numbers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DependentCasimirs, UnsupportedType
from ..exactpoly import linalg
from ..exactpoly.poly import MultiPoly
from .realization import LieAlgebraRealization


class Dual:
    """Truncated ring Q[eps]/(eps^2); used for exact directional derivatives."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def _lift(self, other):
        return other if isinstance(other, Dual) else Dual(other)

    def __add__(self, other):
        other = self._lift(other)
        return Dual(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return Dual(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        other = self._lift(other)
        return self.a == other.a and self.b == other.b

    def __repr__(self):
        return f"Dual({self.a}, {self.b})"


def pfaffian(m):
    """Pfaffian of a skew matrix by expansion along the first row (memoised on index sets)."""
    n = len(m)
    if n % 2:
        return m[0][0] * 0 if n else 1
    zero = m[0][0] * 0
    memo = {}

    def pf(idx: tuple):
        if not idx:
            return zero + 1
        if idx in memo:
            return memo[idx]
        i = idx[0]
        total = zero
        for pos in range(1, len(idx)):
            j = idx[pos]
            a = m[i][j]
            if not a:
                continue
            rest = idx[1:pos] + idx[pos + 1 :]
            term = a * pf(rest)
            total = total + term if pos % 2 == 1 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


def _j_times(m):
    n = len(m) // 2
    return [list(m[n + i]) for i in range(n)] + [list(m[i]) for i in range(n)]


@dataclass(frozen=True, eq=False)
class InvariantFamily:
    realization: LieAlgebraRealization
    recipe: tuple
    degrees: tuple
    exponents: tuple

    def __len__(self):
        return len(self.recipe)

    def evaluate_matrix(self, m) -> list:
        """Values of all generators on a matrix (entries in any suitable ring)."""
        need_cp = [k for kind, k, _ in self.recipe if kind == "charpoly"]
        coeffs = linalg.charpoly(m) if need_cp else None
        out = []
        for kind, k, factor in self.recipe:
            if kind == "charpoly":
                out.append(coeffs[k] * factor)
            elif kind == "pfaffian":
                out.append(pfaffian(_j_times(m)) * factor)
            else:
                raise UnsupportedType(f"unknown invariant recipe {kind!r}")
        return out

    def at(self, x: Sequence) -> list:
        """Values at an element whose coordinates may be rationals or polynomials."""
        return self.evaluate_matrix(self.realization.matrix_of(x))

    def generators(self, prefix: str = "x") -> list:
        """The generators as polynomials in the basis coordinates ``x1, x2, ...``."""
        names = tuple(f"{prefix}{i + 1}" for i in range(self.realization.dim))
        coords = MultiPoly.variables_of(names)
        return self.at(coords)

    def differentials(self, x: Sequence) -> list:
        """For each generator G, the element u with <u|v> = dG_x(v) for all v."""
        r = self.realization
        base = [Dual(c) for c in x]
        partials = [[Fraction(0)] * r.dim for _ in self.recipe]
        for k in range(r.dim):
            point = list(base)
            point[k] = Dual(x[k], 1)
            for g, val in enumerate(self.at(point)):
                partials[g][k] = val.b
        gram_inv = r._cache.get("gram_inv")
        if gram_inv is None:
            gram_inv = linalg.inverse([list(row) for row in r.gram])
            r._cache["gram_inv"] = gram_inv
        return [tuple(linalg.matvec(gram_inv, p)) for p in partials]

    def jacobian_rank(self, x: Sequence) -> int:
        return linalg.rank([list(d) for d in self.differentials(x)])


def chevalley_invariants(realization: LieAlgebraRealization, check_seed: int | None = 0) -> InvariantFamily:
    """Basic invariants G_1..G_l of a realization that carries a recipe and matrices."""
    if not realization.invariant_recipe or not realization.has_matrices:
        raise UnsupportedType(f"no invariant recipe for {realization.name}")
    recipe = realization.invariant_recipe
    degrees = tuple(k for _, k, _ in recipe)
    exponents = tuple(d - 1 for d in degrees)
    if sorted(exponents) != sorted(realization.exponents):
        raise UnsupportedType(f"recipe degrees {degrees} do not match the exponents of {realization.name}")
    family = InvariantFamily(realization, recipe, degrees, exponents)
    if check_seed is not None:
        rng = random.Random(check_seed)
        x = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(realization.dim))
        if family.jacobian_rank(x) != len(recipe):
            raise DependentCasimirs(f"invariants of {realization.name} are dependent at {x}")
    return family
