"""Independent reference computations (sympy, plain matrices) used as test oracles."""

from __future__ import annotations

from fractions import Fraction

import sympy

from slicepoisson.exactpoly import MultiPoly, PolyMatrix


def to_sympy(p: MultiPoly, symbols: dict | None = None):
    symbols = symbols or {v: sympy.Symbol(v) for v in p.variables}
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, k in zip(p.variables, exp):
            term *= symbols[v] ** k
        expr += term
    return expr


def from_sympy(expr, variables) -> MultiPoly:
    poly = sympy.Poly(sympy.expand(expr), *[sympy.Symbol(v) for v in variables])
    terms = {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}
    return MultiPoly(variables, terms)


def matrix_to_sympy(m: PolyMatrix) -> sympy.Matrix:
    return sympy.Matrix([[to_sympy(x) for x in row] for row in m.rows])


def jacobiator(P: sympy.Matrix, coords, i, j, k):
    xs = [sympy.Symbol(c) for c in coords]
    total = 0
    for l, x in enumerate(xs):
        total += P[i, l] * sympy.diff(P[j, k], x)
        total += P[j, l] * sympy.diff(P[k, i], x)
        total += P[k, l] * sympy.diff(P[i, j], x)
    return sympy.expand(total)


def dirac(A: sympy.Matrix, B: sympy.Matrix, C: sympy.Matrix) -> sympy.Matrix:
    return (A + B * C.inv() * B.T).applyfunc(sympy.expand)


def commutator(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] - b[i][k] * a[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def trace_product(a, b):
    n = len(a)
    return sum(a[i][k] * b[k][i] for i in range(n) for k in range(n))


def parse_matrix(rows, coords) -> PolyMatrix:
    return PolyMatrix([[MultiPoly.parse(x, coords) for x in row] for row in rows], coords)
