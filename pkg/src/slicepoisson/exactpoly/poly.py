"""Multivariate polynomials over Q with a canonical text form.

A :class:`MultiPoly` is an immutable map from exponent tuples to nonzero
``Fraction`` coefficients, together with the ordered tuple of variable names
those exponents refer to.  Binary operations between polynomials over
different variable lists work on the union of the lists (left operand first).

The canonical rendering sorts terms in graded-lexicographic order, highest
first, with respect to the declared variable order::

    >>> p = MultiPoly.parse("9*q4^2 - 4*q2^3 + 12*q1*q2*q3 - 4*q3^3")
    >>> str(p)
    '12*q1*q2*q3 - 4*q2^3 - 4*q3^3 + 9*q4^2'
"""

from __future__ import annotations

import ast
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from ..errors import NonQuasiHomogeneous, NotExactlyDivisible, ZeroPolynomial

Rational = Fraction
Scalar = Union[int, Fraction]
Exponent = tuple


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to ``Fraction``; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip().replace("−", "-"))
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def natural_key(name: str):
    """Sort key putting ``q2`` before ``q10``."""
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


def grlex_key(exp: Exponent):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables) or any(e < 0 for e in exp):
                raise ValueError(f"exponent {exp} does not fit variables {variables}")
            coeff = as_rational(coeff)
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
        self._vars = variables
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        value = as_rational(value)
        return cls._raw(variables, {(0,) * len(variables): value} if value else {})

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> "MultiPoly":
        return cls._raw(tuple(variables), {})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        variables = (name,) if variables is None else tuple(variables)
        if name not in variables:
            raise ValueError(f"{name} not among {variables}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {exp: Fraction(1)})

    @classmethod
    def variables_of(cls, names: Iterable[str]) -> list["MultiPoly"]:
        names = tuple(names)
        return [cls.variable(n, names) for n in names]

    # -- basic accessors -----------------------------------------------------

    @property
    def variables(self) -> tuple:
        return self._vars

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self._vars), Fraction(0))

    @property
    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: str) -> int:
        if var not in self._vars:
            return 0 if self._terms else -1
        i = self._vars.index(var)
        return max((e[i] for e in self._terms), default=-1)

    def used_variables(self) -> tuple:
        return tuple(v for i, v in enumerate(self._vars) if any(e[i] for e in self._terms))

    def sorted_terms(self, descending: bool = True) -> list:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def leading_term(self) -> tuple:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    # -- variable bookkeeping ------------------------------------------------

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-embed into ``variables``; every used variable must be present."""
        variables = tuple(variables)
        if variables == self._vars:
            return self
        index = {v: i for i, v in enumerate(variables)}
        for v in self.used_variables():
            if v not in index:
                raise ValueError(f"variable {v} of {self} missing from {variables}")
        moves = [(index[v], i) for i, v in enumerate(self._vars) if v in index]
        n = len(variables)
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * n
            for dst, src in moves:
                new[dst] = exp[src]
            terms[tuple(new)] = c
        return MultiPoly._raw(variables, terms)

    def trimmed(self) -> "MultiPoly":
        return self.with_variables(self.used_variables())

    @staticmethod
    def _union(a: tuple, b: tuple) -> tuple:
        if a == b:
            return a
        return a + tuple(v for v in b if v not in a)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(as_rational(other), self._vars)

    def _aligned(self, other) -> tuple:
        other = self._coerce(other)
        if other._vars == self._vars:
            return self._vars, self._terms, other._terms
        variables = self._union(self._vars, other._vars)
        return variables, self.with_variables(variables)._terms, other.with_variables(variables)._terms

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                other = as_rational(other)
            except TypeError:
                return NotImplemented
        variables, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                other = as_rational(other)
            except TypeError:
                return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, factor: Scalar) -> "MultiPoly":
        factor = as_rational(factor)
        if not factor:
            return MultiPoly.zero(self._vars)
        return MultiPoly._raw(self._vars, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(as_rational(other))
            except TypeError:
                return NotImplemented
        variables, a, b = self._aligned(other)
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw(variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.is_constant and other:
                return self.scale(1 / other.constant_value())
            return self.exact_divide(other)
        return self.scale(1 / as_rational(other))

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = MultiPoly.constant(1, self._vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_divide(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises ``NotExactlyDivisible`` otherwise."""
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if divisor.is_constant:
            return self.scale(1 / divisor.constant_value())
        variables, rem, d = self._aligned(divisor)
        rem = dict(rem)
        d_exp = max(d, key=grlex_key)
        d_coeff = d[d_exp]
        quotient = {}
        while rem:
            r_exp = max(rem, key=grlex_key)
            shift = tuple(x - y for x, y in zip(r_exp, d_exp))
            if any(s < 0 for s in shift):
                raise NotExactlyDivisible(
                    f"{MultiPoly._raw(variables, rem)} is not divisible by {divisor}"
                )
            factor = rem[r_exp] / d_coeff
            quotient[shift] = factor
            for e, c in d.items():
                key = tuple(x + y for x, y in zip(e, shift))
                v = rem.get(key, 0) - factor * c
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return MultiPoly._raw(variables, quotient)

    # -- comparison ----------------------------------------------------------

    def _named_terms(self) -> frozenset:
        used = [i for i, v in enumerate(self._vars)]
        return frozenset(
            (tuple((self._vars[i], e[i]) for i in used if e[i]), c) for e, c in self._terms.items()
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            if other._vars == self._vars:
                return self._terms == other._terms
            return self._named_terms() == other._named_terms()
        try:
            value = as_rational(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.is_constant and self.constant_value() == value

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._named_terms())
        return self._hash

    # -- calculus and substitution ----------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        if var not in self._vars:
            return MultiPoly.zero(self._vars)
        i = self._vars.index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                new = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[new] = c * e[i]
        return MultiPoly._raw(self._vars, out)

    def gradient(self, variables: Iterable[str]) -> list:
        return [self.diff(v) for v in variables]

    def evaluate(self, point: Mapping) -> Fraction:
        """Value at a point given as ``{name: scalar}``; all used variables required."""
        values = []
        for v in self._vars:
            if v in point:
                values.append(as_rational(point[v]))
            else:
                values.append(None)
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for val, k in zip(values, e):
                if k:
                    if val is None:
                        raise KeyError(f"no value for a variable of {self}")
                    term *= val**k
            total += term
        return total

    def subs(self, mapping: Mapping) -> "MultiPoly":
        """Substitute polynomials or scalars for variables."""
        mapping = {k: v for k, v in mapping.items() if k in self._vars}
        if not mapping:
            return self
        keep = tuple(v for v in self._vars if v not in mapping)
        images = {k: (v if isinstance(v, MultiPoly) else MultiPoly.constant(as_rational(v))) for k, v in mapping.items()}
        variables = keep
        for img in images.values():
            variables = MultiPoly._union(variables, img._vars)
        images = {k: v.with_variables(variables) for k, v in images.items()}
        keep_idx = [(variables.index(v), i) for i, v in enumerate(self._vars) if v not in mapping]
        sub_idx = [(images[v], i) for i, v in enumerate(self._vars) if v in mapping]
        power_cache: dict = {}
        result = MultiPoly.zero(variables)
        n = len(variables)
        for e, c in self._terms.items():
            base = [0] * n
            for dst, src in keep_idx:
                base[dst] = e[src]
            term = MultiPoly._raw(variables, {tuple(base): c})
            for img, src in sub_idx:
                k = e[src]
                if k:
                    key = (src, k)
                    if key not in power_cache:
                        power_cache[key] = img**k
                    term = term * power_cache[key]
            result = result + term
        return result

    def coefficients_in(self, variables: Iterable[str]) -> dict:
        """Split as ``sum m(vars) * coeff(rest)``; keys are exponent tuples in ``variables``."""
        variables = tuple(variables)
        rest = tuple(v for v in self._vars if v not in variables)
        sel = [self._vars.index(v) if v in self._vars else None for v in variables]
        rest_idx = [self._vars.index(v) for v in rest]
        out: dict = {}
        for e, c in self._terms.items():
            key = tuple(e[i] if i is not None else 0 for i in sel)
            r = tuple(e[i] for i in rest_idx)
            out.setdefault(key, {})
            out[key][r] = out[key].get(r, 0) + c
        return {k: MultiPoly._raw(rest, {e: c for e, c in v.items() if c}) for k, v in out.items()}

    # -- normalisation -------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational g with ``self / g`` having coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        nums = [c.numerator for c in self._terms.values()]
        dens = [c.denominator for c in self._terms.values()]
        return Fraction(math.gcd(*nums), math.lcm(*dens))

    def primitive(self) -> "MultiPoly":
        """Integer-coefficient multiple with unit content and positive grlex-leading coefficient."""
        if not self._terms:
            return self
        g = self.content()
        if self.leading_term()[1] < 0:
            g = -g
        return self.scale(1 / g)

    # -- text ---------------------------------------------------------------

    def _monomial_text(self, exp) -> str:
        parts = []
        for v, k in zip(self._vars, exp):
            if k == 1:
                parts.append(v)
            elif k:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (exp, c) in enumerate(self.sorted_terms()):
            mono = self._monomial_text(exp)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r}, variables={self._vars!r})"

    @classmethod
    def parse(cls, text: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        """Parse the canonical rendering (``+ - * / ^`` and parentheses)."""
        source = text.replace("−", "-").replace("^", "**").strip()
        try:
            tree = ast.parse(source, mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse polynomial {text!r}") from exc
        names = sorted({n.id for n in ast.walk(tree) if isinstance(n, ast.Name)}, key=natural_key)
        if variables is None:
            variables = tuple(names)
        else:
            variables = tuple(variables)
            missing = [n for n in names if n not in variables]
            if missing:
                raise ValueError(f"unknown variables {missing} in {text!r}")
        return _PolyBuilder(variables).visit(tree.body)


class _PolyBuilder(ast.NodeVisitor):
    def __init__(self, variables):
        self.variables = variables

    def generic_visit(self, node):
        raise ValueError(f"unsupported syntax {ast.dump(node)}")

    def visit_Constant(self, node):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ValueError(f"only integer literals allowed, got {node.value!r}")
        return MultiPoly.constant(node.value, self.variables)

    def visit_Name(self, node):
        return MultiPoly.variable(node.id, self.variables)

    def visit_UnaryOp(self, node):
        inner = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return -inner
        if isinstance(node.op, ast.UAdd):
            return inner
        return self.generic_visit(node)

    def visit_BinOp(self, node):
        left = self.visit(node.left)
        right = self.visit(node.right)
        op = node.op
        if isinstance(op, ast.Add):
            return left + right
        if isinstance(op, ast.Sub):
            return left - right
        if isinstance(op, ast.Mult):
            return left * right
        if isinstance(op, ast.Div):
            if not right.is_constant or right.is_zero:
                raise ValueError("division only by nonzero constants")
            return left.scale(1 / right.constant_value())
        if isinstance(op, ast.Pow):
            if not right.is_constant:
                raise ValueError("exponent must be a constant")
            k = right.constant_value()
            if k.denominator != 1 or k < 0:
                raise ValueError("exponent must be a non-negative integer")
            return left ** int(k)
        return self.generic_visit(node)


@dataclass(frozen=True)
class WeightVector:
    """Positive integer weights, one per variable (quasi-degree of each variable)."""

    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be >= 1, got {self.weights}")

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def degree_of(self, exp) -> int:
        return sum(w * k for w, k in zip(self.weights, exp))


def qdegree(p: MultiPoly, w: WeightVector) -> int:
    """Common weighted degree of all monomials of ``p``."""
    if not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    if len(w) != len(p.variables):
        raise ValueError(f"{len(w)} weights for {len(p.variables)} variables")
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no quasi-degree")
    degree = None
    first = None
    for exp, _ in p.sorted_terms():
        d = w.degree_of(exp)
        if degree is None:
            degree, first = d, exp
        elif d != degree:
            raise NonQuasiHomogeneous(p, p._monomial_text(first) or "1", p._monomial_text(exp) or "1")
    return degree


def is_quasi_homogeneous(p: MultiPoly, w: WeightVector) -> bool:
    try:
        qdegree(p, w)
    except NonQuasiHomogeneous:
        return False
    return True
