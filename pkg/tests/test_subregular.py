from __future__ import annotations

from fractions import Fraction

import pytest

from oracles import parse_matrix
from slicepoisson.diracred import PoissonPresentation, check_jacobi, check_quasihomogeneous
from slicepoisson.errors import (
    CasimirFailure,
    DependentCasimirs,
    NoLinearEliminationFound,
    NotProportional,
    UnknownType,
    ValidationFailure,
    ZeroStructure,
)
from slicepoisson.exactpoly import MultiPoly, PolyMatrix, WeightVector
from slicepoisson.liecore import build_realization
from slicepoisson.liecore.invariants import chevalley_invariants
from slicepoisson.orbitkit import build_chart, complete_sl2
from slicepoisson.subregular import (
    determinantal_bracket,
    milnor_data,
    proportionality_constant,
    reduce_to_omega,
    restrict_invariants,
    singular_surface,
    singularity_type_lookup,
)

P = MultiPoly.parse


def det_structure(p):
    return determinantal_bracket(p.casimirs, p.lam.coords, p.lam.weights)


def surface(p):
    return singular_surface(p.omega, p.realization.family if p.realization.family != "G" else "G2")


def monos(ps):
    return [str(m) for m in ps]


# -- Casimirs ---------------------------------------------------------------------


def test_g2_casimirs(g2):
    coords = g2.chart.coords
    assert g2.casimirs == [P("q1", coords), P("12*q1*q2*q3 - 4*q2^3 - 4*q3^3 + 9*q4^2", coords)]
    assert [c.qdegree for c in g2.invariants] == [4, 12]


def test_so8_casimirs(d4):
    coords = d4.chart.coords
    expected = [
        "-2*q1 - 2*q4",
        "-12*q2 - 4*q3 - 4*q4*q5 + (q1 + q4)^2",
        "-q2 + q3 - q4*q5",
        "-4*q1*q2 - 16*q2*q5 - 12*q3*q4 + 12*q2*q4 + 4*q1*q3 + 4*q4^2*q5 + 4*q1*q4*q5 - 4*q6^2",
    ]
    assert d4.casimirs == [P(t, coords) for t in expected]
    assert [c.qdegree for c in d4.invariants] == [4, 8, 8, 12]
    assert [c.degree for c in d4.invariants] == [2, 4, 4, 6]


def test_sl4_casimirs(a3):
    coords = a3.chart.coords
    assert a3.casimirs == [P("q2 + q3^2", coords), P("q1 + q2*q3", coords), P("q1*q3 + q4*q5", coords)]


def test_casimirs_annihilated(subregular):
    for c in subregular.casimirs:
        assert all(r.is_zero for r in subregular.lam.casimir_residual(c))


def test_casimir_quasi_degree_twice_the_degree(subregular):
    for c in subregular.invariants:
        assert c.qdegree == 2 * c.degree


def test_pinned_casimir_mismatch(g2):
    wrong = [g2.casimirs[0], g2.casimirs[1] + P("q1^3", g2.chart.coords)]
    with pytest.raises(CasimirFailure):
        restrict_invariants(chevalley_invariants(g2.realization), g2.chart, g2.lam, pinned=wrong)


def test_sl2_regular_single_casimir():
    r = build_realization("A1")
    chart = build_chart(r, complete_sl2(r, r.basis_element(0)))
    invs = restrict_invariants(chevalley_invariants(r), chart)
    assert len(invs) == 1 and invs[0].degree == 2


# -- determinantal bracket -------------------------------------------------------------


def test_determinantal_three_dimensional():
    v = ("x", "y", "z")
    D = determinantal_bracket([P("z", v)], v)
    assert D.matrix == parse_matrix([["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "0"]], v)


def test_determinantal_dependent_casimirs():
    v = ("a", "b", "c", "d")
    with pytest.raises(DependentCasimirs):
        determinantal_bracket([P("a + b", v), P("2*a + 2*b", v)], v)


def test_proportionality_g2(g2):
    assert proportionality_constant(g2.lam, det_structure(g2)) == Fraction(-1, 6)
    assert det_structure(g2).matrix == g2.lam.matrix.scale(-6)


def test_proportionality_so8(d4):
    assert proportionality_constant(d4.lam, det_structure(d4)) == Fraction(-1, 256)


def test_proportionality_sl4_nonzero(a3):
    c = proportionality_constant(a3.lam, det_structure(a3))
    assert c != 0 and isinstance(c, Fraction)


def test_determinantal_structure_properties(subregular):
    D = det_structure(subregular)
    assert check_jacobi(D.matrix, D.coords)
    assert check_quasihomogeneous(D, -2)
    for c in subregular.casimirs:
        assert D.is_casimir(c)


def test_proportionality_errors(g2):
    assert proportionality_constant(g2.lam, g2.lam) == 1
    v = g2.lam.coords
    zero = PoissonPresentation(v, None, PolyMatrix.zeros(4, 4, v), "dirac")
    with pytest.raises(ZeroStructure):
        proportionality_constant(g2.lam, zero)
    x = ("x", "y", "z")
    P1 = PoissonPresentation(x, None, parse_matrix([["0", "z", "0"], ["-z", "0", "0"], ["0", "0", "0"]], x), "dirac")
    P2 = PoissonPresentation(x, None, parse_matrix([["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "0"]], x), "dirac")
    with pytest.raises(NotProportional):
        proportionality_constant(P1, P2)


# -- the 3x3 block -------------------------------------------------------------------


def test_omega_g2(g2):
    om = g2.omega
    assert om.c_prime == Fraction(-1, 6)
    assert om.eliminated == ("q1",) and om.survivors == ("q2", "q3", "q4")
    assert om.chi_top == P("9*q4^2 - 4*q2^3 - 4*q3^3 + 12*chi1*q2*q3", om.coords)


def test_omega_so8(d4):
    om = d4.omega
    coords = om.coords
    assert om.c_prime == Fraction(-1, 8)
    assert om.eliminated == ("q1", "q2", "q3")
    sol = om.solution
    assert sol["q1"] == P("-q4 - chi1/2", coords)
    assert sol["q2"] == P("(chi1^2 - 16*chi3 - 4*chi2 - 32*q4*q5)/64", coords)
    assert sol["q3"] == P("(chi1^2 + 48*chi3 - 4*chi2 + 32*q4*q5)/64", coords)
    assert om.chi_top == P(
        "8*q4*q5^2 - 16*q4^2*q5 - 4*q6^2 - 4*chi1*q4*q5 + (chi2 - chi1^2/4 + 4*chi3)*q5 - 16*chi3*q4 - 2*chi1*chi3",
        coords,
    )


def test_omega_so8_modified_casimir(d4):
    """With chi4 + 2 chi1 chi3 in place of chi4 the brackets of q4, q5, q6 are -1/8, 1/8, -1/8 times its partials."""
    om = d4.omega
    coords = om.coords
    chi1, chi3 = (MultiPoly.variable(n, coords) for n in ("chi1", "chi3"))
    hat = om.chi_top + chi1 * chi3 * 2
    w = om.omega
    assert w[0, 1] == P("q6", coords) == hat.diff("q6").scale(Fraction(-1, 8))
    assert w[0, 2] == hat.diff("q5").scale(Fraction(1, 8))
    assert w[1, 2] == hat.diff("q4").scale(Fraction(-1, 8))
    hat2 = P("chi2 - chi1^2/4 + 4*chi3", coords)
    assert w[0, 2] == P("2*q4*q5 - 2*q4^2 - chi1*q4/2", coords) + hat2.scale(Fraction(1, 8))


def test_omega_invariant_under_casimir_recombination(d4):
    base = d4.casimirs
    modified = base[:3] + [base[3] + base[0] * base[2] * 2]
    om = reduce_to_omega(d4.lam, modified)
    assert om.omega == d4.omega.omega
    assert om.c_prime == d4.omega.c_prime


def test_omega_sl4(a3):
    om = a3.omega
    coords = om.coords
    assert om.c_prime == 1
    assert om.eliminated == ("q1", "q2")
    assert om.solution["q2"] == P("chi1 - q3^2", coords)
    assert om.solution["q1"] == P("chi2 - (chi1 - q3^2)*q3", coords)
    assert om.chi_top == P("q3^4 + q4*q5 - chi1*q3^2 + chi2*q3", coords)
    w = om.omega
    assert w[0, 1] == P("q4", coords) == om.chi_top.diff("q5")
    assert w[0, 2] == P("-q5", coords) == -om.chi_top.diff("q4")
    assert w[1, 2] == P("4*q3^3 - 2*chi1*q3 + chi2", coords) == om.chi_top.diff("q3")


def test_omega_block_structure(subregular):
    om = subregular.omega
    M = om.presentation.matrix
    m = len(om.parameters)
    for i in range(len(om.coords)):
        for j in range(len(om.coords)):
            if i < m or j < m:
                assert M[i, j].is_zero
    s1, s2, s3 = om.survivors
    c = om.c_prime
    assert om.omega[0, 1] == om.chi_top.diff(s3).scale(c)
    assert om.omega[0, 2] == om.chi_top.diff(s2).scale(-c)
    assert om.omega[1, 2] == om.chi_top.diff(s1).scale(c)
    assert om.elimination_det != 0


def test_omega_errors():
    v = ("x", "y", "z", "w")
    zero = PoissonPresentation(v, None, PolyMatrix.zeros(4, 4, v), "dirac")
    with pytest.raises(NoLinearEliminationFound):
        reduce_to_omega(zero, [P("x^2 + y^2 + z^2 + w^2", v), P("x^3 + y^3 + z^3 + w^3", v)])
    with pytest.raises(ValidationFailure):
        reduce_to_omega(zero, [P("x + y", v), P("z + w", v)])


# -- singular surfaces ------------------------------------------------------------------


def test_surface_g2(g2):
    data = surface(g2)
    v = data.variables
    assert data.F0 == P("9*q4^2 - 4*q2^3 - 4*q3^3", v)
    assert data.surface in (P("4*q2^3 + 4*q3^3 - 9*q4^2", v), P("9*q4^2 - 4*q2^3 - 4*q3^3", v))
    assert data.milnor_number == 4
    assert set(monos(data.milnor_basis)) == {"1", "q2", "q3", "q2*q3"}
    assert data.coefficients["chi1"] == P("12*q2*q3", v)
    assert set(monos(data.invariant_basis)) == {"1", "q2*q3"}


def test_surface_so8(d4):
    data = surface(d4)
    v = data.variables
    assert data.F0 == P("8*q4*q5^2 - 16*q4^2*q5 - 4*q6^2", v)
    assert data.surface.primitive() in (P("4*q4^2*q5 - 2*q4*q5^2 + q6^2", v), P("-4*q4^2*q5 + 2*q4*q5^2 - q6^2", v))
    assert data.F0.scale(Fraction(-1, 4)) == P("4*q4^2*q5 - 2*q4*q5^2 + q6^2", v)
    assert data.milnor_number == 4
    assert set(monos(data.milnor_basis)) == {"1", "q4", "q5", "q4*q5"}


def test_surface_sl4(a3):
    data = surface(a3)
    v = data.variables
    assert data.F0 == P("q3^4 + q4*q5", v)
    assert data.milnor_number == 3
    assert set(monos(data.milnor_basis)) == {"1", "q3", "q3^2"}


def test_deformation_coefficients_in_milnor_basis(subregular):
    data = surface(subregular)
    assert data.coefficients_in_basis
    params = subregular.omega.parameters
    zero = {p: MultiPoly.zero(subregular.omega.coords) for p in params}
    assert subregular.omega.chi_top.subs(zero) == data.F0


def test_milnor_data_of_a_simple_singularity():
    v = ("x", "y", "z")
    _, standard, basis, mu = milnor_data(P("x^3 + y^3 + z^2", v), v)
    assert mu == 4 and set(monos(basis)) == {"1", "x", "y", "x*y"}


# -- tables --------------------------------------------------------------------------


def test_table_type_a():
    row = singularity_type_lookup("A")
    assert row.equation == "X^(l+1) + Y*Z" and row.group == "C(l+1)" and row.homogeneous
    row3 = singularity_type_lookup("A3")
    assert row3.polynomial() == P("X^4 + Y*Z", ("X", "Y", "Z"))


def test_table_homogeneous_rows():
    xyz = ("X", "Y", "Z")
    assert singularity_type_lookup("D4").polynomial() == P("X^3 + X*Y^2 + Z^2", xyz)
    assert singularity_type_lookup("E6").polynomial() == P("X^4 + Y^3 + Z^2", xyz)
    assert singularity_type_lookup("E7").polynomial() == P("X^3*Y + Y^3 + Z^2", xyz)
    assert singularity_type_lookup("E8").polynomial() == P("X^5 + Y^3 + Z^2", xyz)


def test_table_g2():
    row = singularity_type_lookup("G2")
    assert row.V == "D4" and row.gamma == "Z/3Z" and not row.homogeneous
    assert row.polynomial() == P("X^3 + Y^3 + Z^2", ("X", "Y", "Z"))
    act = row.action
    assert act.fixes_monomial((1, 1, 0)) and act.fixes_monomial((0, 0, 2))
    assert not act.fixes_monomial((1, 0, 0)) and not act.fixes_monomial((0, 1, 0))


def test_table_inhomogeneous_rows():
    b = singularity_type_lookup("B", 3)
    assert (b.V, b.group, b.F_prime, b.gamma) == ("A5", "C6", "D3", "Z/2Z")
    assert b.polynomial() == P("X^6 + Y*Z", ("X", "Y", "Z"))
    c = singularity_type_lookup("C3")
    assert (c.V, c.group, c.F_prime, c.gamma) == ("D4", "D2", "D4", "Z/2Z")
    f4 = singularity_type_lookup("F4")
    assert (f4.V, f4.group, f4.F_prime) == ("E6", "T", "O")
    with pytest.raises(ValueError):
        singularity_type_lookup("B").polynomial()


def test_table_unknown():
    for label in ("H3", "E9", "Z"):
        with pytest.raises(UnknownType):
            singularity_type_lookup(label)


def test_weights_of_new_coordinates(d4):
    assert d4.omega.presentation.weights == WeightVector((4, 8, 8, 4, 4, 6))
