"""Matrices with polynomial entries.

Determinants and adjugates use fraction-free (Bareiss) elimination, so every
intermediate quantity stays inside the polynomial ring and each division is
exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..errors import DimensionMismatch, NonConstantDeterminant, SingularMatrix
from .poly import MultiPoly, as_rational


def _to_poly(x, variables) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x.with_variables(variables) if x.variables != variables else x
    if isinstance(x, str):
        return MultiPoly.parse(x, variables)
    return MultiPoly.constant(as_rational(x), variables)


class PolyMatrix:
    """Immutable rectangular matrix of :class:`MultiPoly` over a shared variable list."""

    __slots__ = ("_rows", "_variables", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence], variables: Iterable[str] | None = None):
        rows = [list(r) for r in rows]
        if variables is None:
            names: tuple = ()
            for r in rows:
                for x in r:
                    if isinstance(x, MultiPoly):
                        names = MultiPoly._union(names, x.variables)
            variables = names
        variables = tuple(variables)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("rows of unequal length")
        self._variables = variables
        self._rows = tuple(tuple(_to_poly(x, variables) for x in r) for r in rows)
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows, variables) -> "PolyMatrix":
        obj = cls.__new__(cls)
        obj._rows = tuple(tuple(r) for r in rows)
        obj._variables = variables
        obj.nrows = len(obj._rows)
        obj.ncols = len(obj._rows[0]) if obj._rows else 0
        return obj

    @classmethod
    def zeros(cls, n: int, m: int | None = None, variables: Iterable[str] = ()) -> "PolyMatrix":
        variables = tuple(variables)
        z = MultiPoly.zero(variables)
        return cls._raw([[z] * (n if m is None else m) for _ in range(n)], variables)

    @classmethod
    def identity(cls, n: int, variables: Iterable[str] = ()) -> "PolyMatrix":
        variables = tuple(variables)
        one = MultiPoly.constant(1, variables)
        z = MultiPoly.zero(variables)
        return cls._raw([[one if i == j else z for j in range(n)] for i in range(n)], variables)

    # -- access --------------------------------------------------------------

    @property
    def variables(self) -> tuple:
        return self._variables

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, index) -> MultiPoly:
        i, j = index
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def entries(self):
        for i, row in enumerate(self._rows):
            for j, x in enumerate(row):
                yield i, j, x

    def with_variables(self, variables: Iterable[str]) -> "PolyMatrix":
        variables = tuple(variables)
        return PolyMatrix._raw([[x.with_variables(variables) for x in r] for r in self._rows], variables)

    def map(self, fn: Callable[[MultiPoly], MultiPoly]) -> "PolyMatrix":
        return PolyMatrix([[fn(x) for x in r] for r in self._rows])

    # -- predicates ----------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for _, _, x in self.entries())

    @property
    def is_skew(self) -> bool:
        if not self.is_square:
            return False
        n = self.nrows
        return all(self[i, j] == -self[j, i] for i in range(n) for j in range(i, n))

    @property
    def is_constant(self) -> bool:
        return all(x.is_constant for _, _, x in self.entries())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.shape, self._rows))

    # -- arithmetic ----------------------------------------------------------

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix._raw(list(zip(*self._rows)) if self._rows else [], self._variables)

    @property
    def T(self) -> "PolyMatrix":
        return self.transpose()

    def _common(self, other: "PolyMatrix") -> tuple:
        if other._variables == self._variables:
            return self, other
        variables = MultiPoly._union(self._variables, other._variables)
        return self.with_variables(variables), other.with_variables(variables)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        a, b = self._common(other)
        return PolyMatrix._raw(
            [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a._rows, b._rows)], a._variables
        )

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix._raw([[-x for x in r] for r in self._rows], self._variables)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale(self, factor) -> "PolyMatrix":
        if isinstance(factor, MultiPoly):
            return PolyMatrix([[x * factor for x in r] for r in self._rows])
        factor = as_rational(factor)
        return PolyMatrix._raw([[x.scale(factor) for x in r] for r in self._rows], self._variables)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self._common(other)
        zero = MultiPoly.zero(a._variables)
        cols = list(zip(*b._rows)) if b._rows else []
        out = []
        for row in a._rows:
            nz = [(k, x) for k, x in enumerate(row) if x]
            new = []
            for col in cols:
                s = zero
                for k, x in nz:
                    y = col[k]
                    if y:
                        s = s + x * y
                new.append(s)
            out.append(new)
        return PolyMatrix._raw(out, a._variables)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point) -> list:
        return [[x.evaluate(point) for x in r] for r in self._rows]

    def subs(self, mapping) -> "PolyMatrix":
        return PolyMatrix([[x.subs(mapping) for x in r] for r in self._rows])

    def to_strings(self) -> list:
        return [[str(x) for x in r] for r in self._rows]

    @classmethod
    def from_strings(cls, rows, variables: Iterable[str]) -> "PolyMatrix":
        variables = tuple(variables)
        return cls([[MultiPoly.parse(s, variables) for s in r] for r in rows], variables)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.to_strings()!r})"

    def __str__(self) -> str:
        body = [[str(x) for x in r] for r in self._rows]
        width = max((len(s) for r in body for s in r), default=1)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in r) + " ]" for r in body)


# -- determinants and inverses ------------------------------------------------

def _pivot_row(m, k, start, n):
    """Prefer a constant pivot, then the one with fewest terms."""
    best = None
    for i in range(start, n):
        x = m[i][k]
        if not x:
            continue
        key = (0 if x.is_constant else 1, len(x))
        if best is None or key < best[0]:
            best = (key, i)
    return None if best is None else best[1]


def determinant(matrix: PolyMatrix) -> MultiPoly:
    """Determinant by Bareiss fraction-free elimination."""
    if not matrix.is_square:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = matrix.nrows
    variables = matrix.variables
    if n == 0:
        return MultiPoly.constant(1, variables)
    m = [list(r) for r in matrix.rows]
    sign = 1
    prev = MultiPoly.constant(1, variables)
    for k in range(n - 1):
        p = _pivot_row(m, k, k, n)
        if p is None:
            return MultiPoly.zero(variables)
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.exact_divide(prev) if not prev.is_constant else num.scale(1 / prev.constant_value())
            m[i][k] = MultiPoly.zero(variables)
        prev = pivot
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def _divide(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    if den.is_constant:
        return num.scale(1 / den.constant_value())
    return num.exact_divide(den)


def adjugate(matrix: PolyMatrix) -> PolyMatrix:
    """Classical adjoint, so that ``adjugate(M) @ M = det(M) * I``."""
    if not matrix.is_square:
        raise DimensionMismatch("adjugate of a non-square matrix")
    n = matrix.nrows
    variables = matrix.variables
    if n == 0:
        return PolyMatrix._raw([], variables)
    if n == 1:
        return PolyMatrix.identity(1, variables)
    zero = MultiPoly.zero(variables)
    one = MultiPoly.constant(1, variables)
    # fraction-free Gauss-Jordan on [M | I] ends at [d*I | sign * adj(M)]
    w = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(matrix.rows)]
    sign = 1
    prev = one
    for k in range(n):
        p = _pivot_row(w, k, k, n)
        if p is None:
            return _cofactor_adjugate(matrix)
        if p != k:
            w[k], w[p] = w[p], w[k]
            sign = -sign
        pivot = w[k][k]
        for i in range(n):
            if i == k:
                continue
            factor = w[i][k]
            for j in range(2 * n):
                if j == k:
                    continue
                num = w[i][j] * pivot - factor * w[k][j]
                w[i][j] = _divide(num, prev)
            w[i][k] = zero
        prev = pivot
    right = [row[n:] for row in w]
    if sign < 0:
        right = [[-x for x in r] for r in right]
    return PolyMatrix._raw(right, variables)


def _minor(rows, i, j):
    return [r[:j] + r[j + 1 :] for k, r in enumerate(rows) if k != i]


def _cofactor_adjugate(matrix: PolyMatrix) -> PolyMatrix:
    rows = [list(r) for r in matrix.rows]
    n = matrix.nrows
    variables = matrix.variables
    cof = [
        [determinant(PolyMatrix._raw(_minor(rows, i, j), variables)) for j in range(n)]
        for i in range(n)
    ]
    adj = [[cof[j][i] if (i + j) % 2 == 0 else -cof[j][i] for j in range(n)] for i in range(n)]
    return PolyMatrix._raw(adj, variables)


def _unit_pivot_inverse(matrix: PolyMatrix):
    """Gauss-Jordan that only ever divides by nonzero constants; ``None`` if stuck."""
    n = matrix.nrows
    variables = matrix.variables
    zero = MultiPoly.zero(variables)
    one = MultiPoly.constant(1, variables)
    w = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(matrix.rows)]
    for k in range(n):
        p = None
        for i in range(k, n):
            x = w[i][k]
            if x and x.is_constant:
                p = i
                break
        if p is None:
            return None
        w[k], w[p] = w[p], w[k]
        inv = 1 / w[k][k].constant_value()
        w[k] = [x.scale(inv) if x else x for x in w[k]]
        for i in range(n):
            if i != k and w[i][k]:
                f = w[i][k]
                w[i] = [a - f * b if b else a for a, b in zip(w[i], w[k])]
    return PolyMatrix._raw([row[n:] for row in w], variables)


def poly_matrix_inverse_unit_det(matrix: PolyMatrix, verify: bool = True) -> PolyMatrix:
    """Inverse of a polynomial matrix whose determinant is a nonzero constant.

    Raises ``SingularMatrix`` when the determinant vanishes and
    ``NonConstantDeterminant`` when it has positive-degree terms.  The
    product with ``matrix`` is checked to be the identity.
    """
    if not matrix.is_square:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = matrix.nrows
    inv = _unit_pivot_inverse(matrix)
    if inv is None:
        det = determinant(matrix)
        if det.is_zero:
            raise SingularMatrix("matrix has zero determinant")
        if not det.is_constant:
            raise NonConstantDeterminant(det)
        inv = adjugate(matrix).scale(1 / det.constant_value())
    if verify:
        if not (inv @ matrix) == PolyMatrix.identity(n, matrix.variables):
            # unreachable unless arithmetic is broken; keep the post-condition explicit
            raise SingularMatrix("computed inverse does not multiply to the identity")
    return inv


def constant_determinant(matrix: PolyMatrix) -> Fraction:
    det = determinant(matrix)
    if not det.is_constant:
        raise NonConstantDeterminant(det)
    return det.constant_value()
