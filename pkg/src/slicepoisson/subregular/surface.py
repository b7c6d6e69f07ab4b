"""The singular fibre over the origin, its deformation coefficients and Milnor algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactpoly import linalg
from ..exactpoly.groebner import groebner_basis, groebner_quotient_basis, normal_form
from ..exactpoly.poly import MultiPoly, grlex_key
from .omega import OmegaForm
from .tables import SingularityTypeEntry, singularity_type_lookup


@dataclass(frozen=True, eq=False)
class SingularSurfaceData:
    variables: tuple
    F0: MultiPoly  # top Casimir with every parameter set to zero
    surface: MultiPoly  # primitive integer form of F0
    deformation: MultiPoly  # top Casimir as a polynomial in parameters and variables
    coefficients: dict  # parameter -> coefficient of its linear term
    higher_order: MultiPoly  # part of the deformation of degree >= 2 in the parameters
    standard_basis: tuple  # standard monomials of the Milnor algebra
    milnor_basis: tuple  # reported basis: 1, monomials of the coefficients, then standard monomials
    milnor_number: int
    coefficients_in_basis: bool
    declared_type: SingularityTypeEntry | None
    invariant_basis: tuple | None  # monomials of milnor_basis fixed by the symmetry group, if any


def _monomial(variables, exp) -> MultiPoly:
    return MultiPoly(variables, {exp: Fraction(1)})


def milnor_data(f: MultiPoly, variables: tuple, preferred=()) -> tuple:
    """Groebner basis, standard monomials and a reported basis of Q[vars] / (grad f).

    The reported basis starts from 1 and the monomials in ``preferred`` (kept
    when independent modulo the Jacobian ideal), is completed by standard
    monomials, and is sorted in ascending grlex order.
    """
    jac = [f.diff(v) for v in variables]
    gb = groebner_basis(jac, variables=variables)
    standard, mu = groebner_quotient_basis(jac, variables=variables)
    index = {tuple(m.sorted_terms()[0][0]): k for k, m in enumerate(standard)}

    def vector(p):
        nf = normal_form(p.with_variables(variables), gb).with_variables(variables)
        v = [Fraction(0)] * mu
        for exp, c in nf.terms.items():
            v[index[exp]] = c
        return v

    chosen, rows = [], []
    candidates = [_monomial(variables, (0,) * len(variables))] + list(preferred) + list(standard)
    for m in candidates:
        if len(chosen) == mu:
            break
        exp = m.sorted_terms()[0][0]
        if any(c.sorted_terms()[0][0] == exp for c in chosen):
            continue
        trial = rows + [vector(m)]
        if linalg.rank(trial) == len(trial):
            chosen.append(m)
            rows = trial
    chosen.sort(key=lambda m: grlex_key(m.sorted_terms()[0][0]))
    return gb, tuple(standard), tuple(chosen), mu


def singular_surface(form: OmegaForm, lie_type: str | None = None) -> SingularSurfaceData:
    variables = form.survivors
    params = form.parameters
    chi = form.chi_top
    split = chi.coefficients_in(params)
    zero = (0,) * len(params)
    F0 = split.get(zero, MultiPoly.zero(variables)).with_variables(variables)
    coefficients = {}
    higher = MultiPoly.zero(form.coords)
    for exp, coeff in split.items():
        if sum(exp) == 1:
            coefficients[params[exp.index(1)]] = coeff.with_variables(variables)
        elif sum(exp) > 1:
            mono = MultiPoly(params, {exp: Fraction(1)}).with_variables(form.coords)
            higher = higher + mono * coeff.with_variables(form.coords)
    preferred = []
    for p in params:
        c = coefficients.get(p)
        if c is None:
            continue
        for exp, _ in c.sorted_terms(descending=False):
            preferred.append(_monomial(variables, exp))
    _, standard, basis, mu = milnor_data(F0, variables, preferred)
    basis_exps = {m.sorted_terms()[0][0] for m in basis}
    in_basis = all(exp in basis_exps for c in coefficients.values() for exp in c.terms)

    entry = singularity_type_lookup(lie_type) if lie_type else None
    invariant = None
    if entry is not None and entry.action is not None:
        invariant = tuple(m for m in basis if entry.action.fixes_monomial(m.sorted_terms()[0][0]))
    return SingularSurfaceData(
        variables=variables,
        F0=F0,
        surface=F0.primitive(),
        deformation=chi,
        coefficients=coefficients,
        higher_order=higher,
        standard_basis=standard,
        milnor_basis=basis,
        milnor_number=mu,
        coefficients_in_basis=in_basis,
        declared_type=entry,
        invariant_basis=invariant,
    )
