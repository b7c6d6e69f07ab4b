"""Simple surface singularities attached to simple Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnknownType
from ..exactpoly.poly import MultiPoly


@dataclass(frozen=True)
class GammaAction:
    """(X, Y, Z) -> (zeta^k_X * var[perm_X], ...) with zeta a primitive order-th root of unity."""

    order: int
    powers: tuple  # exponent of zeta on each variable
    perm: tuple  # image variable index of each variable
    text: str

    def fixes_monomial(self, exp: tuple) -> bool:
        image = [0, 0, 0]
        for i, a in enumerate(exp):
            image[self.perm[i]] += a
        if tuple(image) != tuple(exp):
            return False
        return sum(k * a for k, a in zip(self.powers, exp)) % self.order == 0


@dataclass(frozen=True)
class SingularityTypeEntry:
    lie_type: str
    equation: str  # R(X, Y, Z), with l standing for the rank when it is not fixed
    group: str  # the finite subgroup F of SL2
    homogeneous: bool
    V: str | None = None
    F_prime: str | None = None
    gamma: str | None = None
    action: GammaAction | None = None

    def polynomial(self) -> MultiPoly:
        if "l" in self.equation:
            raise ValueError("equation depends on the rank; look it up with a rank")
        return MultiPoly.parse(self.equation, ("X", "Y", "Z"))


_HOMOGENEOUS = {
    "A": ("X^(l+1) + Y*Z", "C(l+1)"),
    "D": ("X^(l-1) + X*Y^2 + Z^2", "D(l-2)"),
    "E6": ("X^4 + Y^3 + Z^2", "T"),
    "E7": ("X^3*Y + Y^3 + Z^2", "O"),
    "E8": ("X^5 + Y^3 + Z^2", "I"),
}

_INHOMOGENEOUS = {
    # type: (V, F, F', Gamma, R, action)
    "B": ("A(2l-1)", "C(2l)", "D(l)", "Z/2Z", "X^(2l) + Y*Z",
          GammaAction(2, (1, 0, 0), (0, 2, 1), "(X, Y, Z) -> (-X, Z, Y)")),
    "C": ("D(l+1)", "D(l-1)", "D(2l-2)", "Z/2Z", "X^l + X*Y^2 + Z^2",
          GammaAction(2, (0, 1, 1), (0, 1, 2), "(X, Y, Z) -> (X, -Y, -Z)")),
    "F4": ("E6", "T", "O", "Z/2Z", "X^4 + Y^3 + Z^2",
           GammaAction(2, (1, 0, 1), (0, 1, 2), "(X, Y, Z) -> (-X, Y, -Z)")),
    "G2": ("D4", "D2", "O", "Z/3Z", "X^3 + Y^3 + Z^2",
           GammaAction(3, (1, 2, 0), (0, 1, 2), "(X, Y, Z) -> (a*X, a^2*Y, Z), a^3 = 1, a != 1")),
}


_RANK_EXPRESSIONS = {
    "(l+1)": lambda l: l + 1,
    "(l-1)": lambda l: l - 1,
    "(l-2)": lambda l: l - 2,
    "(2l-1)": lambda l: 2 * l - 1,
    "(2l-2)": lambda l: 2 * l - 2,
    "(2l)": lambda l: 2 * l,
    "(l)": lambda l: l,
}


def _substitute_rank(text: str, rank: int | None) -> str:
    if rank is None:
        return text
    for expr, fn in _RANK_EXPRESSIONS.items():
        text = text.replace(expr, str(fn(rank)))
    return text.replace("^l", f"^{rank}")


def singularity_type_lookup(lie_type: str, rank: int | None = None) -> SingularityTypeEntry:
    """Table row for a Lie type, e.g. ``"G2"``, ``"A"`` (rank left symbolic) or ``"A3"``."""
    label = lie_type.strip().upper()
    if label in ("E6", "E7", "E8", "F4", "G2"):
        key = label
    elif label[:1] in "ABCD" and (len(label) == 1 or label[1:].isdigit()):
        key = label[0]
        if len(label) > 1:
            rank = int(label[1:])
    else:
        raise UnknownType(f"no singularity table entry for {lie_type!r}")
    name = key if key not in "ABCD" or rank is None else f"{key}{rank}"
    if key in _HOMOGENEOUS:
        eq, group = _HOMOGENEOUS[key]
        return SingularityTypeEntry(name, _substitute_rank(eq, rank), _substitute_rank(group, rank), True)
    V, F, Fp, gamma, eq, action = _INHOMOGENEOUS[key]
    return SingularityTypeEntry(
        name,
        _substitute_rank(eq, rank),
        _substitute_rank(F, rank),
        False,
        V=_substitute_rank(V, rank),
        F_prime=_substitute_rank(Fp, rank),
        gamma=gamma,
        action=action,
    )
