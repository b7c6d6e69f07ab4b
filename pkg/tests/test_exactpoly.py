from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import from_sympy, matrix_to_sympy, to_sympy
from slicepoisson.errors import (
    BudgetExceeded,
    InfiniteDimensional,
    NonConstantDeterminant,
    NonQuasiHomogeneous,
    NotExactlyDivisible,
    NotLinear,
    SingularEliminationMatrix,
    SingularMatrix,
    ZeroPolynomial,
)
from slicepoisson.exactpoly import (
    MultiPoly,
    PolyMatrix,
    WeightVector,
    adjugate,
    determinant,
    eliminate_linear,
    groebner_basis,
    groebner_quotient_basis,
    poly_matrix_inverse_unit_det,
    qdegree,
    substitute_back,
)
from slicepoisson.exactpoly import linalg

VARS = ("x", "y", "z")
P = MultiPoly.parse

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exponents = st.tuples(*(st.integers(0, 3) for _ in VARS))
polys = st.dictionaries(exponents, rationals, max_size=5).map(lambda t: MultiPoly(VARS, t))


def monos(basis):
    return {str(m) for m in basis}


# -- MultiPoly -------------------------------------------------------------------


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_arithmetic_agrees_with_sympy(a, b):
    assert to_sympy(a * b + a**2 - b).expand() == sympy.expand(to_sympy(a) * to_sympy(b) + to_sympy(a) ** 2 - to_sympy(b))


@given(polys)
@settings(max_examples=60, deadline=None)
def test_render_parse_round_trip(p):
    assert MultiPoly.parse(str(p), VARS) == p


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_derivative_leibniz_and_sympy(a, b):
    for v in VARS:
        assert (a * b).diff(v) == a.diff(v) * b + a * b.diff(v)
        assert from_sympy(sympy.diff(to_sympy(a), sympy.Symbol(v)), VARS) == a.diff(v).with_variables(VARS)


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_exact_divide_recovers_factor(a, b):
    if b.is_zero:
        return
    assert (a * b).exact_divide(b) == a


def test_exact_divide_rejects_remainder():
    with pytest.raises(NotExactlyDivisible):
        P("x^2 + 1", VARS).exact_divide(P("x + 1", VARS))


def test_canonical_rendering_order():
    p = P("9*q4^2 - 4*q3^3 + 12*q1*q2*q3 - 4*q2^3", ("q1", "q2", "q3", "q4"))
    assert str(p) == "12*q1*q2*q3 - 4*q2^3 - 4*q3^3 + 9*q4^2"
    assert str(P("-1/6*x", VARS)) == "-1/6*x"


def test_substitution_matches_sympy():
    p = P("x^2*y - 3*z + 1/2", VARS)
    q = p.subs({"x": P("y + z", VARS), "z": P("2", VARS)})
    x, y, z = sympy.symbols("x y z")
    expr = to_sympy(p).subs({x: y + z, z: 2}, simultaneous=True)
    assert q == from_sympy(expr, VARS)


# -- quasi-degrees ---------------------------------------------------------------

W = WeightVector((4, 4, 4, 6))
Q4 = ("q1", "q2", "q3", "q4")


def test_qdegree_examples():
    assert qdegree(P("12*q1*q2*q3 - 4*q2^3 - 4*q3^3 + 9*q4^2", Q4), W) == 12
    assert qdegree(P("q1", Q4), W) == 4
    with pytest.raises(NonQuasiHomogeneous):
        qdegree(P("q1 + q4", Q4), W)
    with pytest.raises(ZeroPolynomial):
        qdegree(MultiPoly.zero(Q4), W)


def test_weight_vector_rejects_nonpositive():
    with pytest.raises(ValueError):
        WeightVector((1, 0))


weights = st.tuples(*(st.integers(1, 4) for _ in VARS))


@st.composite
def homogeneous_pair(draw):
    w = WeightVector(draw(weights))
    out = []
    for _ in range(2):
        target = draw(st.integers(1, 10))
        terms = {}
        for e in draw(st.lists(exponents, min_size=1, max_size=6)):
            if w.degree_of(e) == target:
                terms[e] = draw(rationals.filter(bool))
        out.append(MultiPoly(VARS, terms))
    return w, out[0], out[1]


@given(homogeneous_pair())
@settings(max_examples=80, deadline=None)
def test_qdegree_additive_and_derivative_shift(data):
    w, p, q = data
    if p.is_zero or q.is_zero:
        return
    assert qdegree(p * q, w) == qdegree(p, w) + qdegree(q, w)
    for i, v in enumerate(VARS):
        d = p.diff(v)
        if not d.is_zero:
            assert qdegree(d, w) == qdegree(p, w) - w[i]


# -- polynomial matrices -----------------------------------------------------------


def test_inverse_examples():
    C = PolyMatrix([[P("0", ["q"]), P("1", ["q"])], [P("-1", ["q"]), P("q", ["q"])]])
    inv = poly_matrix_inverse_unit_det(C)
    assert inv.to_strings() == [["q", "-1"], ["1", "0"]]
    I = PolyMatrix.identity(3, ["q"])
    assert poly_matrix_inverse_unit_det(I) == I


def test_inverse_errors():
    with pytest.raises(SingularMatrix):
        poly_matrix_inverse_unit_det(PolyMatrix([[P("x", VARS), P("y", VARS)], [P("x", VARS), P("y", VARS)]]))
    with pytest.raises(NonConstantDeterminant):
        poly_matrix_inverse_unit_det(PolyMatrix([[P("x", VARS), P("0", VARS)], [P("0", VARS), P("1", VARS)]]))


@st.composite
def unimodular(draw):
    """Products of elementary matrices with polynomial off-diagonal entries and a constant diagonal."""
    n = draw(st.integers(2, 4))
    rng = random.Random(draw(st.integers(0, 10**6)))
    M = PolyMatrix.identity(n, VARS)
    for _ in range(draw(st.integers(1, 5))):
        i, j = rng.sample(range(n), 2)
        rows = [list(r) for r in PolyMatrix.identity(n, VARS).rows]
        rows[i][j] = MultiPoly(VARS, {tuple(rng.randint(0, 1) for _ in VARS): Fraction(rng.randint(-3, 3))})
        M = M @ PolyMatrix(rows, VARS)
    d = draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool), min_size=n, max_size=n))
    diag = [[MultiPoly.constant(d[i] if i == j else 0, VARS) for j in range(n)] for i in range(n)]
    return M @ PolyMatrix(diag, VARS)


@given(unimodular())
@settings(max_examples=30, deadline=None)
def test_inverse_identity_symbolic_and_numeric(M):
    inv = poly_matrix_inverse_unit_det(M)
    n = M.nrows
    assert inv @ M == PolyMatrix.identity(n, VARS)
    rng = random.Random(0)
    for _ in range(100):
        pt = {v: Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for v in VARS}
        assert linalg.matmul(inv.evaluate(pt), M.evaluate(pt)) == linalg.identity(n)


@given(unimodular())
@settings(max_examples=20, deadline=None)
def test_determinant_and_adjugate_match_sympy(M):
    S = matrix_to_sympy(M)
    assert from_sympy(S.det(), VARS) == determinant(M).with_variables(VARS)
    adj = adjugate(M)
    assert adj @ M == PolyMatrix.identity(M.nrows, VARS).map(lambda e: e * determinant(M))


def test_matrix_properties():
    S = PolyMatrix([[P("0", VARS), P("x", VARS)], [P("-x", VARS), P("0", VARS)]])
    assert S.is_skew and not S.is_zero and not S.is_constant
    assert PolyMatrix.zeros(2, 2, VARS).is_zero
    assert PolyMatrix.from_strings(S.to_strings(), VARS) == S


# -- linear elimination ----------------------------------------------------------------


def test_eliminate_simple():
    sol = eliminate_linear([P("x + y - c")], ["x"])
    assert sol["x"] == P("c - y")


def test_eliminate_casimir_systems():
    coords = ("q1", "q2", "q3", "q4", "q5", "chi1", "chi2")
    eqs = [P("q2 + q3^2 - chi1", coords), P("q1 + q2*q3 - chi2", coords)]
    sol = eliminate_linear(eqs, ["q1", "q2"])
    assert sol["q2"] == P("chi1 - q3^2")
    assert sol["q1"] == P("chi2 - (chi1 - q3^2)*q3")
    assert all(r.is_zero for r in substitute_back(eqs, sol))


def test_eliminate_errors():
    with pytest.raises(SingularEliminationMatrix):
        eliminate_linear([P("x + y"), P("2*x + 2*y")], ["x", "y"])
    with pytest.raises(NotLinear):
        eliminate_linear([P("x^2 + y")], ["x"])


@st.composite
def triangular_system(draw):
    """Equations u_i = c_i * x_i + f_i(x_{i+1}, ..., y), linear with constant coefficients after substitution."""
    names = ["x1", "x2", "x3", "y", "u1", "u2", "u3"]
    rng = random.Random(draw(st.integers(0, 10**6)))
    eqs = []
    for i in range(3):
        later = names[i + 1 : 4]
        terms = {}
        for _ in range(3):
            e = [0] * 7
            for v in later:
                e[names.index(v)] = rng.randint(0, 2)
            terms[tuple(e)] = Fraction(rng.randint(-3, 3))
        e = [0] * 7
        e[i] = 1
        terms[tuple(e)] = Fraction(rng.choice([-2, -1, 1, 3]))
        e = [0] * 7
        e[4 + i] = 1
        terms[tuple(e)] = Fraction(-1)
        eqs.append(MultiPoly(names, terms))
    perm = draw(st.permutations(range(3)))
    return [eqs[i] for i in perm]


@given(triangular_system())
@settings(max_examples=40, deadline=None)
def test_elimination_back_substitution_vanishes(eqs):
    sol = eliminate_linear(eqs, ["x1", "x2", "x3"])
    assert all(r.is_zero for r in substitute_back(eqs, sol))
    for p in sol.values():
        assert not {"x1", "x2", "x3"} & set(p.used_variables())


# -- Groebner ------------------------------------------------------------------------


def test_quotient_basis_examples():
    v = ("q2", "q3", "q4")
    basis, dim = groebner_quotient_basis([P("q4", v), P("q2^2", v), P("q3^2", v)], v)
    assert dim == 4 and monos(basis) == {"1", "q2", "q3", "q2*q3"}
    v = ("q3", "q4", "q5")
    basis, dim = groebner_quotient_basis([P("q4", v), P("q5", v), P("q3^3", v)], v)
    assert dim == 3 and monos(basis) == {"1", "q3", "q3^2"}
    basis, dim = groebner_quotient_basis([P("x", ["x"])], ["x"])
    assert dim == 1 and monos(basis) == {"1"}


def test_quotient_errors():
    with pytest.raises(InfiniteDimensional):
        groebner_quotient_basis([P("x*y", ["x", "y"])], ["x", "y"])
    gens = [P("x^3 - y^2*z + 1", VARS), P("y^3 - x*z^2", VARS), P("z^3 - x^2*y + x", VARS)]
    with pytest.raises(BudgetExceeded):
        groebner_quotient_basis(gens, VARS, max_pairs=1)


def _random_zero_dim(seed):
    rng = random.Random(seed)
    gens = []
    for i, v in enumerate(VARS):
        e = [0, 0, 0]
        e[i] = rng.randint(2, 3)
        terms = {tuple(e): Fraction(1)}
        for _ in range(2):
            low = tuple(rng.randint(0, 1) for _ in VARS)
            terms[low] = terms.get(low, 0) + Fraction(rng.randint(-2, 2))
        gens.append(MultiPoly(VARS, terms))
    return gens


@given(st.integers(0, 10**6), st.permutations(range(3)))
@settings(max_examples=25, deadline=None)
def test_quotient_dimension_permutation_invariant(seed, perm):
    gens = _random_zero_dim(seed)
    _, d1 = groebner_quotient_basis(gens, VARS)
    _, d2 = groebner_quotient_basis([gens[i] for i in perm], VARS)
    assert d1 == d2


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_groebner_basis_matches_sympy(seed):
    gens = _random_zero_dim(seed)
    ours = groebner_basis(gens, variables=VARS)
    theirs = sympy.groebner([to_sympy(g) for g in gens], *[sympy.Symbol(v) for v in VARS], order="grlex")
    ours_monic = {str(g.scale(1 / g.leading_term()[1])) for g in ours}
    theirs_monic = {str(from_sympy(g / sympy.Poly(g, *sympy.symbols(VARS)).LC(order="grlex"), VARS)) for g in theirs.exprs}
    assert ours_monic == theirs_monic


# -- dense linear algebra ------------------------------------------------------------


@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=5, max_size=5))
@settings(max_examples=50, deadline=None)
def test_charpoly_routes_agree_with_sympy(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    expected = [Fraction(int(c)) for c in sympy.Matrix(rows).charpoly().all_coeffs()]
    assert linalg.charpoly_hessenberg(m) == expected
    assert [Fraction(c) for c in linalg.charpoly(m)] == expected


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4))
@settings(max_examples=50, deadline=None)
def test_rank_det_inverse(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    S = sympy.Matrix(rows)
    assert linalg.rank(m) == S.rank()
    assert linalg.det(m) == Fraction(int(S.det()))
    if S.det():
        assert linalg.matmul(linalg.inverse(m), m) == linalg.identity(4)
