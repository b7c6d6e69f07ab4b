"""Concrete realizations of simple Lie algebras.

A realization is a basis with a sparse structure-constant table, a Gram
matrix for an invariant form, and root data for every basis element.
Elements are coordinate tuples of ``Fraction`` with respect to the basis.
Types A and D are built from matrices; G2 is read from a table file.
Everything is validated (Jacobi, invariance, non-degeneracy) before a
realization is handed out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from ..errors import DimensionMismatch, ValidationFailure
from ..exactpoly import linalg
from ..exactpoly.poly import as_rational

Vector = tuple


def _vec(values) -> Vector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True, eq=False)
class LieAlgebraRealization:
    name: str
    family: str
    rank: int
    labels: tuple
    structure: Mapping  # (i, j) -> tuple of (k, coeff), for i != j
    gram: tuple
    form_tag: str
    cartan: tuple  # basis indices spanning the Cartan subalgebra
    roots: tuple  # per basis index: root in simple-root coordinates, or None
    exponents: tuple
    invariant_recipe: tuple = ()
    matrices: tuple | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    # -- shape ---------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def basis_element(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def element(self, coeffs: Mapping | Sequence) -> Vector:
        """Element from a full coefficient list or a sparse ``{index: coeff}`` map."""
        if isinstance(coeffs, Mapping):
            v = [Fraction(0)] * self.dim
            for i, c in coeffs.items():
                v[i] += as_rational(c)
            return tuple(v)
        if len(coeffs) != self.dim:
            raise DimensionMismatch(f"{len(coeffs)} coefficients for dimension {self.dim}")
        return _vec(coeffs)

    def _check(self, *xs):
        for x in xs:
            if len(x) != self.dim:
                raise DimensionMismatch(f"element of length {len(x)} in a {self.dim}-dimensional algebra")

    # -- roots ---------------------------------------------------------------

    def root_index(self, root: Iterable[int]) -> int:
        root = tuple(root)
        for i, r in enumerate(self.roots):
            if r == root:
                return i
        raise KeyError(f"no basis element with root {root}")

    def simple_root_index(self, j: int) -> int:
        return self.root_index(tuple(int(k == j) for k in range(self.rank)))

    def root_value(self, root_basis_index: int, h: Vector) -> Fraction:
        """alpha(h) for the root carried by a root vector, with h in the Cartan span."""
        x = self.basis_element(root_basis_index)
        y = self.bracket(h, x)
        for k, v in enumerate(y):
            if k != root_basis_index and v:
                raise ValidationFailure("element is not in the Cartan subalgebra", self.labels[k])
        return y[root_basis_index]

    def coroot(self, j: int) -> Vector:
        """Coroot of the j-th simple root: [X, Y] scaled so the root takes the value 2 on it."""
        key = ("coroot", j)
        if key not in self._cache:
            xi = self.simple_root_index(j)
            yi = self.root_index(tuple(-int(k == j) for k in range(self.rank)))
            h = self.bracket(self.basis_element(xi), self.basis_element(yi))
            t = self.root_value(xi, h)
            self._cache[key] = tuple(c * 2 / t for c in h)
        return self._cache[key]

    def cartan_matrix(self) -> list:
        """Entry (i, j) is alpha_i evaluated on the j-th simple coroot."""
        return [
            [self.root_value(self.simple_root_index(i), self.coroot(j)) for j in range(self.rank)]
            for i in range(self.rank)
        ]

    # -- bracket and form -------------------------------------------------------

    def bracket(self, x: Vector, y: Vector) -> Vector:
        self._check(x, y)
        out = [Fraction(0)] * self.dim
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        table = self.structure
        for i, a in xs:
            for j, b in ys:
                entry = table.get((i, j))
                if entry:
                    ab = a * b
                    for k, c in entry:
                        out[k] += ab * c
        return tuple(out)

    def form(self, x: Vector, y: Vector) -> Fraction:
        self._check(x, y)
        total = Fraction(0)
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if a:
                row = self.gram[i]
                for j, b in ys:
                    g = row[j]
                    if g:
                        total += a * g * b
        return total

    def ad_matrix(self, x: Vector) -> list:
        """Matrix of ad_x; column j holds the coordinates of [x, b_j]."""
        cols = [self.bracket(x, self.basis_element(j)) for j in range(self.dim)]
        return linalg.transpose([list(c) for c in cols])

    def centralizer(self, x: Vector) -> list:
        """Basis of g(x) = ker ad_x, echelonized."""
        return [tuple(v) for v in linalg.nullspace(self.ad_matrix(x))]

    def span_contains(self, vectors: Sequence[Vector], x: Vector) -> bool:
        if not any(x):
            return True
        if not vectors:
            return False
        return linalg.coordinates(vectors, x) is not None

    # -- matrices -------------------------------------------------------------

    @property
    def has_matrices(self) -> bool:
        return self.matrices is not None

    def matrix_of(self, x: Sequence) -> list:
        """Matrix of an element; coefficients may be any ring values (e.g. MultiPoly)."""
        if self.matrices is None:
            raise ValidationFailure(f"{self.name} has no matrix model")
        if len(x) != self.dim:
            raise DimensionMismatch(f"element of length {len(x)} in a {self.dim}-dimensional algebra")
        n = len(self.matrices[0])
        zero = next((c * 0 for c in x if not isinstance(c, (int, Fraction))), Fraction(0))
        out = [[zero for _ in range(n)] for _ in range(n)]
        for k, c in enumerate(x):
            if not c:
                continue
            for (r, s), v in self._sparse_matrices()[k]:
                out[r][s] = out[r][s] + c * v
        return out

    def _sparse_matrices(self):
        if "sparse" not in self._cache:
            self._cache["sparse"] = [
                tuple(((r, s), v) for r, row in enumerate(m) for s, v in enumerate(row) if v)
                for m in self.matrices
            ]
        return self._cache["sparse"]

    def element_from_matrix(self, m: Sequence[Sequence]) -> Vector:
        if self.matrices is None:
            raise ValidationFailure(f"{self.name} has no matrix model")
        positions, inv = self._coordinate_map()
        values = [Fraction(m[r][s]) for r, s in positions]
        coords = tuple(sum((v * inv[i][k] for i, v in enumerate(values) if v), Fraction(0)) for k in range(self.dim))
        back = self.matrix_of(coords)
        if any(Fraction(a) != b for ra, rb in zip(m, back) for a, b in zip(ra, rb)):
            raise ValidationFailure("matrix does not lie in the algebra")
        return coords

    def _coordinate_map(self):
        if "coordmap" not in self._cache:
            n = len(self.matrices[0])
            flat = [[x for row in mat for x in row] for mat in self.matrices]
            _, pivots = linalg.rref(flat)
            positions = [(p // n, p % n) for p in pivots]
            sub = [[flat[k][p] for p in pivots] for k in range(self.dim)]
            # coords * sub = values  =>  coords = values * sub^{-1}
            inv = linalg.inverse(sub)
            self._cache["coordmap"] = (positions, inv)
        return self._cache["coordmap"]

    # -- validation -----------------------------------------------------------

    def validate(self) -> None:
        """Raise ``ValidationFailure`` unless the table is a Lie algebra with an invariant form."""
        n = self.dim
        for (i, j), entry in self.structure.items():
            other = dict(self.structure.get((j, i), ()))
            if dict(entry) != {k: -c for k, c in other.items()}:
                raise ValidationFailure("bracket table is not antisymmetric", (i, j))
        basis = [self.basis_element(i) for i in range(n)]
        for i, j, k in combinations(range(n), 3):
            a = self.bracket(self.bracket(basis[i], basis[j]), basis[k])
            b = self.bracket(self.bracket(basis[j], basis[k]), basis[i])
            c = self.bracket(self.bracket(basis[k], basis[i]), basis[j])
            if any(x + y + z for x, y, z in zip(a, b, c)):
                raise ValidationFailure("Jacobi identity fails", (self.labels[i], self.labels[j], self.labels[k]))
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValidationFailure("form is not symmetric", (self.labels[i], self.labels[j]))
        for (i, j), entry in self.structure.items():
            for k in range(n):
                lhs = sum((c * self.gram[m][k] for m, c in entry), Fraction(0))
                rhs = sum((c * self.gram[i][m] for m, c in self.structure.get((j, k), ())), Fraction(0))
                if lhs != rhs:
                    raise ValidationFailure(
                        "form is not invariant", (self.labels[i], self.labels[j], self.labels[k])
                    )
        if linalg.det([list(r) for r in self.gram]) == 0:
            raise ValidationFailure("form is degenerate")
        if self.matrices is not None:
            for (i, j), entry in self.structure.items():
                if i > j:
                    continue
                lhs = linalg.commutator([list(r) for r in self.matrices[i]], [list(r) for r in self.matrices[j]])
                rhs = self.matrix_of(tuple(dict(entry).get(k, Fraction(0)) for k in range(n)))
                if lhs != rhs:
                    raise ValidationFailure("matrices do not satisfy the bracket table", (self.labels[i], self.labels[j]))
        expected = _expected_dimension(self.family, self.rank)
        if expected is not None and expected != n:
            raise ValidationFailure(f"dimension {n} does not match type {self.name} (expected {expected})")
        if len(self.cartan) != self.rank or len(self.exponents) != self.rank:
            raise ValidationFailure("rank does not match the Cartan data")

    def __repr__(self) -> str:
        return f"LieAlgebraRealization({self.name}, dim={self.dim}, form={self.form_tag})"


def _expected_dimension(family: str, rank: int):
    if family == "A":
        return (rank + 1) ** 2 - 1
    if family == "D":
        return rank * (2 * rank - 1)
    if family == "G":
        return 14
    return None
