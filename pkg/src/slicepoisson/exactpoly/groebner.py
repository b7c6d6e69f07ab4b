"""Buchberger's algorithm under graded-lexicographic order.

Meant for small ideals (a handful of variables, quasi-homogeneous
generators); there are no sugar strategies or signature tricks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from ..errors import BudgetExceeded, InfiniteDimensional, ZeroPolynomial
from .poly import MultiPoly, grlex_key, natural_key

DEFAULT_PAIR_BUDGET = 5000
MAX_VARIABLES = 4


def _lead(terms: dict):
    exp = max(terms, key=grlex_key)
    return exp, terms[exp]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _reduce(terms: dict, basis: list) -> dict:
    """Full normal form of ``terms`` modulo ``basis`` (list of (lead_exp, lead_coeff, terms))."""
    terms = dict(terms)
    remainder = {}
    while terms:
        exp, coeff = _lead(terms)
        for lexp, lcoeff, g in basis:
            if _divides(lexp, exp):
                shift = tuple(x - y for x, y in zip(exp, lexp))
                factor = coeff / lcoeff
                for e, c in g.items():
                    key = tuple(x + y for x, y in zip(e, shift))
                    v = terms.get(key, 0) - factor * c
                    if v:
                        terms[key] = v
                    else:
                        terms.pop(key, None)
                break
        else:
            remainder[exp] = coeff
            del terms[exp]
    return remainder


def _spoly(f, g) -> dict:
    fe, fc, ft = f
    ge, gc, gt = g
    lcm = tuple(max(x, y) for x, y in zip(fe, ge))
    out: dict = {}
    for exp, c in ft.items():
        key = tuple(x + l - y for x, l, y in zip(exp, lcm, fe))
        out[key] = out.get(key, 0) + c / fc
    for exp, c in gt.items():
        key = tuple(x + l - y for x, l, y in zip(exp, lcm, ge))
        out[key] = out.get(key, 0) - c / gc
    return {e: c for e, c in out.items() if c}


def _entry(terms: dict):
    exp, coeff = _lead(terms)
    return (exp, coeff, terms)


def _ambient(generators, variables):
    if variables is not None:
        return tuple(variables)
    names = set()
    for g in generators:
        names.update(g.used_variables())
    return tuple(sorted(names, key=natural_key))


def groebner_basis(
    generators: Sequence[MultiPoly],
    variables: Sequence[str] | None = None,
    max_pairs: int = DEFAULT_PAIR_BUDGET,
) -> list:
    """Reduced Groebner basis (monic, sorted by leading monomial) under grlex.

    ``variables`` fixes the variable order; by default the used variables are
    taken in natural order (``q2`` before ``q10``).
    """
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        raise ZeroPolynomial("the zero ideal has no finite quotient")
    variables = _ambient(gens, variables)
    basis = [_entry(dict(g.with_variables(variables).terms)) for g in gens]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    spent = 0
    while pairs:
        i, j = pairs.pop(0)
        f, g = basis[i], basis[j]
        # coprime leading monomials: the S-polynomial reduces to zero
        if all(x == 0 or y == 0 for x, y in zip(f[0], g[0])):
            continue
        spent += 1
        if spent > max_pairs:
            raise BudgetExceeded(f"more than {max_pairs} S-polynomials")
        r = _reduce(_spoly(f, g), basis)
        if r:
            basis.append(_entry(r))
            k = len(basis) - 1
            pairs.extend((m, k) for m in range(k))
    # minimise then inter-reduce
    minimal = []
    for idx, (exp, c, t) in enumerate(basis):
        if any(
            _divides(other[0], exp) and (other[0] != exp or jdx < idx)
            for jdx, other in enumerate(basis)
            if jdx != idx
        ):
            continue
        minimal.append((exp, c, t))
    reduced = []
    for idx, (exp, c, t) in enumerate(minimal):
        others = [m for k, m in enumerate(minimal) if k != idx]
        tail = {e: v for e, v in t.items() if e != exp}
        tail = _reduce(tail, others)
        tail[exp] = c
        reduced.append({e: v / c for e, v in tail.items()})
    reduced.sort(key=lambda t: grlex_key(_lead(t)[0]))
    return [MultiPoly._raw(variables, t) for t in reduced]


def normal_form(p: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    if not basis:
        return p
    variables = basis[0].variables
    variables = MultiPoly._union(variables, p.variables)
    entries = [_entry(dict(g.with_variables(variables).terms)) for g in basis]
    return MultiPoly._raw(variables, _reduce(dict(p.with_variables(variables).terms), entries))


def standard_monomials(basis: Sequence[MultiPoly]) -> list:
    """Exponents outside the leading-term ideal, in ascending grlex order."""
    variables = basis[0].variables
    n = len(variables)
    leads = [g.leading_term()[0] for g in basis]
    bounds = []
    for i in range(n):
        pure = [e[i] for e in leads if all(k == 0 for j, k in enumerate(e) if j != i) and e[i] > 0]
        if not pure:
            raise InfiniteDimensional(f"no pure power of {variables[i]} among the leading terms")
        bounds.append(min(pure))
    out = [
        exp
        for exp in product(*(range(b) for b in bounds))
        if not any(_divides(lead, exp) for lead in leads)
    ]
    out.sort(key=grlex_key)
    return out


def groebner_quotient_basis(
    generators: Sequence[MultiPoly],
    variables: Sequence[str] | None = None,
    max_pairs: int = DEFAULT_PAIR_BUDGET,
) -> tuple:
    """Standard monomials of ``Q[vars] / (generators)`` and the quotient dimension."""
    variables = _ambient([g for g in generators if not g.is_zero], variables)
    if len(variables) > MAX_VARIABLES:
        raise ValueError(f"at most {MAX_VARIABLES} variables supported, got {len(variables)}")
    basis = groebner_basis(generators, variables=variables, max_pairs=max_pairs)
    if any(g.is_constant for g in basis):
        return [], 0
    exps = standard_monomials(basis)
    monos = [MultiPoly._raw(variables, {e: Fraction(1)}) for e in exps]
    return monos, len(monos)
