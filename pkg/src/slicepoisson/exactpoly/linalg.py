"""Dense linear algebra over Q on lists of ``Fraction`` rows.

Row reduction always takes the first nonzero column and, in it, the topmost
row with a nonzero entry, so every result here is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DimensionMismatch, SingularMatrix

Matrix = list


def to_matrix(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    ab = matmul(a, b)
    ba = matmul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rref(a: Matrix) -> tuple:
    """Reduced row echelon form and the tuple of pivot columns."""
    m = [list(map(Fraction, row)) for row in a]
    if not m:
        return m, ()
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list:
    """Basis of ``{v : a v = 0}``, returned in reduced echelon form."""
    if not a:
        n = ncols or 0
        return identity(n)
    n = len(a[0])
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(r, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return []
    echelon, piv = rref(basis)
    return echelon[: len(piv)]


def solve(a: Matrix, b: Sequence) -> list | None:
    """One solution of ``a x = b`` (free unknowns set to zero), or ``None``."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(r, pivots):
        x[p] = row[n]
    return x


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatch("inverse needs a square matrix")
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    r, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in r]


def det(a: Matrix) -> Fraction:
    m = [list(map(Fraction, row)) for row in a]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def coordinates(basis: Sequence[Sequence], vector: Sequence) -> list | None:
    """Coefficients of ``vector`` in ``basis`` (vectors as rows), or ``None``."""
    return solve(transpose([list(b) for b in basis]), vector)


def charpoly(a) -> list:
    """Coefficients ``[1, c1, ..., cn]`` of ``det(t*I - a)`` by Faddeev-LeVerrier.

    Only ring operations and division by integers are used, so entries may be
    ``Fraction``, ``MultiPoly`` or any type supporting those.
    """
    n = len(a)
    if n == 0:
        return [Fraction(1)]
    zero = a[0][0] * 0
    one = zero + 1
    coeffs = [one]
    # m_1 = I, m_k = a m_{k-1} + c_{k-1} I, c_k = -tr(a m_k) / k
    am = [row[:] for row in a]
    for k in range(1, n + 1):
        if k > 1:
            c = coeffs[-1]
            m = [[am[i][j] + (c if i == j else zero) for j in range(n)] for i in range(n)]
            am = _mul_generic(a, m, zero)
        tr = zero
        for i in range(n):
            tr = tr + am[i][i]
        coeffs.append(tr * Fraction(-1, k))
    return coeffs


def _mul_generic(a, b, zero):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(len(b[0])):
            s = zero
            for k in range(len(b)):
                if a[i][k] and b[k][j]:
                    s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


# -- univariate helpers (coefficient lists, highest degree first) -----------

def poly_trim(p: list) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return [Fraction(c) for c in p[i:]]


def poly_divmod(num: list, den: list) -> tuple:
    num, den = poly_trim(num), poly_trim(den)
    if den == [0]:
        raise ZeroDivisionError("division by zero polynomial")
    if len(num) < len(den):
        return [Fraction(0)], num
    out = []
    rem = list(num)
    while len(rem) >= len(den):
        f = rem[0] / den[0]
        out.append(f)
        for i in range(len(den)):
            rem[i] -= f * den[i]
        rem.pop(0)
    return out, poly_trim(rem or [Fraction(0)])


def poly_gcd(a: list, b: list) -> list:
    a, b = poly_trim(a), poly_trim(b)
    while b != [0]:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a == [0]:
        return a
    return [c / a[0] for c in a]


def poly_derivative(p: list) -> list:
    n = len(p) - 1
    if n == 0:
        return [Fraction(0)]
    return [c * (n - i) for i, c in enumerate(p[:-1])]


def poly_eval(p: list, x) -> Fraction:
    acc = Fraction(0)
    for c in p:
        acc = acc * x + c
    return acc


def rational_roots(p: list) -> list:
    """Distinct rational roots of a univariate rational polynomial, ascending."""
    from math import lcm

    p = poly_trim(p)
    if p == [0]:
        raise ValueError("zero polynomial has every root")
    p = [c / p[0] for c in p]
    # x = y / d turns p into a monic integer polynomial in y
    d = lcm(*(c.denominator for c in p))
    q = [int(c * d**k) for k, c in enumerate(p)]
    return sorted(Fraction(y, d) for y in integer_roots(q))


def integer_roots(q: list) -> list:
    """Distinct integer roots of a monic integer polynomial."""
    roots = set()
    while len(q) > 1 and q[-1] == 0:
        roots.add(0)
        q = q[:-1]
    if len(q) == 1:
        return sorted(roots)
    # Fujiwara bound: every root has modulus at most 2 * max |c_k|^(1/k)
    bound = 1
    for k, c in enumerate(q[1:], start=1):
        bound = max(bound, 2 * _iroot_ceil(abs(c), k))
    const = abs(q[-1])
    for y in range(1, bound + 1):
        if const % y:
            continue
        for cand in (y, -y):
            acc = 0
            for c in q:
                acc = acc * cand + c
            if acc == 0:
                roots.add(cand)
    return sorted(roots)


def _iroot_ceil(n: int, k: int) -> int:
    """Smallest r >= 0 with r**k >= n."""
    if n == 0:
        return 0
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def charpoly_hessenberg(a: Matrix) -> list:
    """Coefficients ``[1, c1, ..., cn]`` of ``det(t*I - a)`` for rational ``a``.

    Reduces to upper Hessenberg form by elimination similarities and then
    runs the standard three-term recurrence; O(n^3) rational operations.
    """
    n = len(a)
    h = [list(map(Fraction, row)) for row in a]
    for k in range(n - 2):
        p = next((i for i in range(k + 1, n) if h[i][k]), None)
        if p is None:
            continue
        if p != k + 1:
            h[p], h[k + 1] = h[k + 1], h[p]
            for row in h:
                row[p], row[k + 1] = row[k + 1], row[p]
        piv = h[k + 1][k]
        for i in range(k + 2, n):
            if h[i][k]:
                f = h[i][k] / piv
                h[i] = [x - f * y for x, y in zip(h[i], h[k + 1])]
                for row in h:
                    row[k + 1] += f * row[i]
    # p_m(t) = (t - h_mm) p_{m-1}(t) - sum_i h_im * prod(h_{j+1,j}) p_{i-1}(t)
    polys = [[Fraction(1)]]
    for m in range(n):
        prev = polys[-1]
        cur = prev + [Fraction(0)]
        for idx in range(len(prev)):
            cur[idx + 1] -= h[m][m] * prev[idx]
        prod = Fraction(1)
        for i in range(m - 1, -1, -1):
            prod *= h[i + 1][i]
            if not prod:
                break
            c = h[i][m] * prod
            if c:
                base = polys[i]
                shift = len(cur) - len(base)
                for idx, v in enumerate(base):
                    cur[shift + idx] -= c * v
        polys.append(cur)
    return polys[-1]
