from __future__ import annotations

from fractions import Fraction

import pytest

from slicepoisson.diracred import generic_rank, quasi_degree_profile, reduce_chart
from slicepoisson.errors import (
    ConfigError,
    FixtureMissing,
    InconsistentHint,
    NonIntegerEigenvalue,
    NonIntegralSolution,
    NotAdHInvariant,
    NotComplementary,
    NoTripleFound,
    ValidationFailure,
)
from slicepoisson.exactpoly import MultiPoly, linalg
from slicepoisson.liecore import build_realization
from slicepoisson.orbitkit import (
    build_chart,
    characteristic_from_labels,
    complete_sl2,
    fixture_names,
    grading,
    load_chart,
)
from slicepoisson.orbitkit.fixtures import parse_chart_text, parse_sparse_vector
from slicepoisson.orbitkit.grading import check_grading, check_triple

# (type, weighted Dynkin labels, expected k) for canonical charts
CANONICAL = [("A1", [2], 1), ("A3", [2, 0, 2], 5), ("G2", [0, 2], 4), ("A3", [0, 2, 0], 7)]


def canonical_chart(label, labels):
    r = build_realization(label)
    h = characteristic_from_labels(r, labels)
    return build_chart(r, complete_sl2(r, h))


def span_equal(vs, ws):
    return linalg.rank([list(v) for v in vs]) == linalg.rank([list(v) for v in ws]) == linalg.rank(
        [list(v) for v in list(vs) + list(ws)]
    )


# -- characteristics and gradings ----------------------------------------------------


def test_characteristic_g2():
    r = build_realization("G2")
    assert characteristic_from_labels(r, [0, 2]) == r.element({0: 2, 1: 4})
    assert characteristic_from_labels(r, {0: 0, 1: 2}) == r.element({0: 2, 1: 4})


def test_characteristic_so8():
    r = build_realization("D4")
    h = characteristic_from_labels(r, [2, 0, 2, 2])
    expected = [Fraction(0)] * r.dim
    for j, c in enumerate((4, 6, 4, 4)):
        for k, v in enumerate(r.coroot(j)):
            expected[k] += c * v
    assert h == tuple(expected)
    # in the diagonal basis H_i = E_ii - E_{4+i,4+i}: h = diag(4, 2, 2, 0)
    assert h[:4] == (4, 2, 2, 0)


def test_characteristic_sl2():
    r = build_realization("A1")
    assert characteristic_from_labels(r, [2]) == r.basis_element(0)


def test_characteristic_errors():
    r = build_realization("A1")
    with pytest.raises(NonIntegralSolution):
        characteristic_from_labels(r, [Fraction(1, 2)])
    with pytest.raises(ValueError):
        characteristic_from_labels(r, [2, 0])


def test_grading_dimensions():
    g2 = build_realization("G2")
    assert grading(g2, g2.element({0: 2, 1: 4})).dims() == {-4: 1, -2: 4, 0: 4, 2: 4, 4: 1}
    d4 = build_realization("D4")
    dims = grading(d4, characteristic_from_labels(d4, [2, 0, 2, 2])).dims()
    assert dims == {-6: 2, -4: 3, -2: 6, 0: 6, 2: 6, 4: 3, 6: 2}
    a1 = build_realization("A1")
    assert grading(a1, a1.basis_element(0)).dims() == {-2: 1, 0: 1, 2: 1}


def test_grading_is_a_lie_grading():
    r = build_realization("G2")
    h = r.element({0: 2, 1: 4})
    check_grading(r, h, grading(r, h))


def test_grading_of_non_diagonal_element():
    """h conjugated away from the Cartan subalgebra still grades with the same dimensions."""
    r = build_realization("A1")
    m = linalg.matmul(linalg.matmul([[1, 1], [0, 1]], [[1, 0], [0, -1]]), [[1, -1], [0, 1]])
    h = r.element_from_matrix(m)
    assert grading(r, h).dims() == {-2: 1, 0: 1, 2: 1}


def test_grading_rejects_fractional_eigenvalues():
    r = build_realization("A1")
    with pytest.raises(NonIntegerEigenvalue):
        grading(r, r.element({0: Fraction(1, 3)}))


# -- sl2-triples -----------------------------------------------------------------


def test_triple_g2_from_search():
    r = build_realization("G2")
    h, e, f = complete_sl2(r, r.element({0: 2, 1: 4}))
    check_triple(r, h, e, f)
    assert len(r.centralizer(e)) == 4


def test_triple_g2_from_hint():
    r = build_realization("G2")
    # basis: 4 Xb, 7 X3ab, 10 Yb, 13 Y3ab (1-based)
    h, e, f = complete_sl2(r, r.element({0: 2, 1: 4}), hint=r.element({3: 1, 6: 1}))
    assert f == r.element({9: 2, 12: 2})


def test_triple_so8_from_hint():
    r = build_realization("D4")
    h = characteristic_from_labels(r, [2, 0, 2, 2])
    # X(a1) + X(a1+a2) - X(a2+a4) + 2 X(a3) - X(a4)
    e = parse_sparse_vector("5:1 6:1 15:-1 10:2 16:-1", r.dim)
    _, _, f = complete_sl2(r, h, hint=e)
    # X(-a1) + 3 X(-a1-a2) - 3 X(-a2-a4) + 2 X(-a3) - X(-a4)
    assert f == parse_sparse_vector("17:1 18:3 27:-3 22:2 28:-1", r.dim)


def test_triple_sl2():
    r = build_realization("A1")
    H, E, F = (r.basis_element(i) for i in range(3))
    assert complete_sl2(r, H) == (H, E, F)


def test_triple_errors():
    r = build_realization("A1")
    H = r.basis_element(0)
    with pytest.raises(InconsistentHint):
        complete_sl2(r, H, hint=r.basis_element(2))
    a3 = build_realization("A3")
    h = characteristic_from_labels(a3, [2, 0, 2])
    g2space = grading(a3, h).space(2)
    # a single root vector of g(2) is not a hint admitting f with [e, f] = h
    with pytest.raises(InconsistentHint):
        complete_sl2(a3, h, hint=g2space[0])
    with pytest.raises(NoTripleFound):
        complete_sl2(r, r.element({0: Fraction(1, 2)}))


# -- charts ----------------------------------------------------------------------


@pytest.mark.parametrize("label,labels,k", CANONICAL)
def test_canonical_chart_invariants(label, labels, k):
    chart = canonical_chart(label, labels)
    r = chart.realization
    assert chart.k == k
    assert sum(chart.z_weights) == r.dim - chart.k
    assert sum(w + 1 for w in chart.x_weights) == 0
    check_triple(r, chart.h, chart.e, chart.f)
    for z in chart.Z:
        assert not any(r.bracket(chart.e, z))
    for i, zb in enumerate(chart.dualZ):
        for j, z in enumerate(chart.Z):
            assert r.form(zb, z) == (1 if i == j else 0)
        for x in chart.X:
            assert r.form(zb, x) == 0


def test_sl2_canonical_complement():
    chart = canonical_chart("A1", [2])
    r = chart.realization
    assert chart.k == 1 and chart.mode == "canonical"
    assert span_equal(chart.X, [r.basis_element(0), r.basis_element(2)])


def test_subregular_dimension(subregular):
    chart = subregular.chart
    assert chart.k == chart.realization.rank + 2


def test_fixture_invariants(subregular):
    chart = subregular.chart
    r = chart.realization
    assert chart.mode == "explicit"
    assert sum(chart.z_weights) == r.dim - chart.k
    assert sum(w + 1 for w in chart.x_weights) == 0
    check_triple(r, chart.h, chart.e, chart.f)
    for x in chart.X:
        assert r.span_contains(chart.X, r.bracket(chart.h, x))


def test_g2_chart_weights(g2):
    assert g2.chart.weights.weights == (4, 4, 4, 6)


def test_so8_generic_point_matches_expected_matrix(d4):
    names = d4.chart.coords
    expected_rows = [
        "0 1 1 0 0 0 0 0",
        "q4 0 0 0 0 0 0 -1",
        "q1 0 0 2 0 0 0 -1",
        "0 q5 0 0 0 1 1 0",
        "0 -q3 -q2 0 0 -q4 -q1 0",
        "q3 0 q6 0 -1 0 0 -q5",
        "q2 -q6 0 0 -1 0 0 0",
        "0 0 0 0 0 0 -2 0",
    ]
    expected = [[MultiPoly.parse(t, names) for t in row.split()] for row in expected_rows]
    assert d4.chart.generic_matrix() == expected


def test_sl4_generic_point_is_companion_type(a3):
    names = a3.chart.coords
    expected_rows = ["0 1 0 0", "0 0 1 0", "q1 q2 q3 q4", "q5 0 0 -q3"]
    expected = [[MultiPoly.parse(t, names) for t in row.split()] for row in expected_rows]
    assert a3.chart.generic_matrix() == expected


@pytest.mark.parametrize("label,labels", [("A3", [2, 0, 2]), ("G2", [0, 2])])
def test_canonical_and_explicit_complements_agree_structurally(label, labels):
    name = {"A3": "a3-subregular-arnold", "G2": "g2-subregular"}[label]
    explicit = reduce_chart(load_chart(name).chart)
    fx = load_chart(name)
    canon_chart = build_chart(fx.realization, (fx.chart.h, fx.chart.e, fx.chart.f), centralizer_basis=fx.chart.Z)
    canonical = reduce_chart(canon_chart)
    assert set(quasi_degree_profile(canonical).values()) == set(quasi_degree_profile(explicit).values()) == {-2}
    assert generic_rank(canonical.matrix, canonical.coords) == generic_rank(explicit.matrix, explicit.coords)


def test_not_ad_h_invariant_complement():
    r = build_realization("A1")
    h, e, f = complete_sl2(r, r.basis_element(0))
    tilted = [r.element({0: 1, 2: 1}), r.basis_element(2)]
    # span{h + f, f} = span{h, f}: invariant, accepted
    build_chart(r, (h, e, f), complement=tilted)
    bad = [r.element({0: 1, 1: 1}), r.basis_element(2)]
    with pytest.raises(NotAdHInvariant):
        build_chart(r, (h, e, f), complement=bad)


def test_not_complementary():
    r = build_realization("A1")
    h, e, f = complete_sl2(r, r.basis_element(0))
    with pytest.raises(NotComplementary):
        build_chart(r, (h, e, f), complement=[r.basis_element(1), r.basis_element(2)])
    with pytest.raises(NotComplementary):
        build_chart(r, (h, e, f), complement=[r.basis_element(2)])


def test_bad_centralizer_basis():
    r = build_realization("A1")
    h, e, f = complete_sl2(r, r.basis_element(0))
    with pytest.raises(ValidationFailure):
        build_chart(r, (h, e, f), centralizer_basis=[r.basis_element(2)])


# -- fixture files ------------------------------------------------------------------


def test_shipped_fixtures():
    assert fixture_names() == ["a3-subregular-arnold", "d4-subregular", "g2-subregular"]
    with pytest.raises(FixtureMissing):
        load_chart("e8-subregular")


def test_chart_parser_errors():
    with pytest.raises(ConfigError):
        parse_chart_text("x = 1\n")
    with pytest.raises(ConfigError):
        parse_chart_text("[chart]\nname = a\n")
    with pytest.raises(ConfigError):
        parse_chart_text("[chart]\nalgebra = A1\n")
    with pytest.raises(ConfigError):
        parse_sparse_vector("4:1", 3)


def test_chart_file_by_path(tmp_path):
    path = tmp_path / "sl2.chart"
    path.write_text("[chart]\nalgebra = A1\nlabels = 2\n[X]\n1:1\n3:1\n")
    fx = load_chart(path)
    assert fx.chart.k == 1 and fx.chart.mode == "explicit"
