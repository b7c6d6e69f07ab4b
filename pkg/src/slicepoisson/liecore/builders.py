"""Constructors for the shipped realizations (types A, D and G2)."""

from __future__ import annotations

import re
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from ..errors import UnsupportedType, ValidationFailure
from ..exactpoly import linalg
from ..exactpoly.poly import as_rational
from .realization import LieAlgebraRealization


def _E(n: int, i: int, j: int) -> list:
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(1)
    return m


def _lin(*pairs) -> list:
    """Linear combination of matrices given as (coeff, matrix) pairs."""
    n = len(pairs[0][1])
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, m in pairs:
        for r in range(n):
            for s in range(n):
                if m[r][s]:
                    out[r][s] += c * m[r][s]
    return out


def _freeze(m) -> tuple:
    return tuple(tuple(r) for r in m)


def _structure_from_matrices(mats: Sequence, labels) -> dict:
    dim = len(mats)
    n = len(mats[0])
    flat = [[x for row in m for x in row] for m in mats]
    _, pivots = linalg.rref(flat)
    if len(pivots) != dim:
        raise ValidationFailure("basis matrices are linearly dependent")
    sub = [[flat[k][p] for p in pivots] for k in range(dim)]
    inv = linalg.inverse(sub)
    table = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            c = linalg.commutator(mats[i], mats[j])
            values = [c[p // n][p % n] for p in pivots]
            coords = [sum((v * inv[a][k] for a, v in enumerate(values) if v), Fraction(0)) for k in range(dim)]
            back = [[Fraction(0)] * n for _ in range(n)]
            for k, ck in enumerate(coords):
                if ck:
                    for r in range(n):
                        for s in range(n):
                            if mats[k][r][s]:
                                back[r][s] += ck * mats[k][r][s]
            if back != c:
                raise ValidationFailure("basis is not closed under the bracket", (labels[i], labels[j]))
            entry = tuple((k, ck) for k, ck in enumerate(coords) if ck)
            if entry:
                table[(i, j)] = entry
                table[(j, i)] = tuple((k, -ck) for k, ck in entry)
    return table


def _trace_gram(mats, scale: Fraction) -> tuple:
    dim = len(mats)
    n = len(mats[0])
    nz = [[(r, s, m[r][s]) for r in range(n) for s in range(n) if m[r][s]] for m in mats]
    gram = []
    for a in range(dim):
        row = []
        for b in range(dim):
            # tr(AB) = sum_{r,s} A[r][s] B[s][r]
            mb = mats[b]
            row.append(scale * sum((v * mb[s][r] for r, s, v in nz[a]), Fraction(0)))
        gram.append(tuple(row))
    return tuple(gram)


def _killing_gram(structure, dim) -> tuple:
    def ad(i):
        m = [[Fraction(0)] * dim for _ in range(dim)]
        for j in range(dim):
            for k, c in structure.get((i, j), ()):
                m[k][j] += c
        return m

    ads = [ad(i) for i in range(dim)]
    return tuple(
        tuple(linalg.trace(linalg.matmul(ads[a], ads[b])) for b in range(dim)) for a in range(dim)
    )


def _in_simple_coordinates(vec, simple) -> tuple:
    """Coordinates of an e-basis weight vector in the simple roots (must be integral)."""
    sol = linalg.solve(linalg.transpose([list(map(Fraction, s)) for s in simple]), list(map(Fraction, vec)))
    if sol is None or any(c.denominator != 1 for c in sol):
        raise ValidationFailure("root is not an integral combination of simple roots", vec)
    return tuple(int(c) for c in sol)


def _finish(name, family, rank, labels, mats, roots, exponents, recipe, form_scale, default_scale):
    structure = _structure_from_matrices(mats, labels)
    if form_scale == "killing":
        gram = _killing_gram(structure, len(mats))
        tag = "killing"
    else:
        scale = default_scale if form_scale is None else as_rational(form_scale)
        if scale == 0:
            raise ValidationFailure("form scale must be nonzero")
        gram = _trace_gram(mats, scale)
        tag = f"trace*{scale}"
    real = LieAlgebraRealization(
        name=name,
        family=family,
        rank=rank,
        labels=tuple(labels),
        structure=structure,
        gram=gram,
        form_tag=tag,
        cartan=tuple(range(rank)),
        roots=tuple(roots),
        exponents=tuple(exponents),
        invariant_recipe=tuple(recipe),
        matrices=tuple(_freeze(m) for m in mats),
    )
    real.validate()
    return real


def build_sl(rank: int, form_scale=None) -> LieAlgebraRealization:
    """sl_{rank+1}: basis H_i = E_ii - E_{i+1,i+1}, then E_ij (i<j), then E_ji."""
    if rank < 1:
        raise UnsupportedType(f"A{rank} is not a simple Lie algebra")
    n = rank + 1
    labels, mats, roots = [], [], []
    for i in range(rank):
        labels.append(f"H{i + 1}")
        mats.append(_lin((1, _E(n, i, i)), (-1, _E(n, i + 1, i + 1))))
        roots.append(None)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for i, j in pairs:
        labels.append(f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1}_{j + 1}")
        mats.append(_E(n, i, j))
        roots.append(tuple(int(i <= k < j) for k in range(rank)))
    for i, j in pairs:
        labels.append(f"E{j + 1}{i + 1}" if n < 10 else f"E{j + 1}_{i + 1}")
        mats.append(_E(n, j, i))
        roots.append(tuple(-int(i <= k < j) for k in range(rank)))
    recipe = tuple(("charpoly", k, Fraction(-1)) for k in range(2, n + 1))
    return _finish(f"A{rank}", "A", rank, labels, mats, roots, range(1, n), recipe, form_scale, Fraction(1))


def build_so(rank: int, form_scale=None) -> LieAlgebraRealization:
    """so_{2n} as block matrices [[A, B], [C, -A^T]] with B, C skew.

    Basis: H_i = E_ii - E_{n+i,n+i}; positive root vectors for e_i - e_j and
    e_i + e_j (i < j); then the negative root vectors in the same order.
    """
    n = rank
    if n < 3:
        raise UnsupportedType(f"D{n} is not supported (need rank >= 3)")
    size = 2 * n
    E = lambda i, j: _E(size, i, j)  # noqa: E731
    simple = [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)]
    simple.append(tuple(int(k in (n - 2, n - 1)) for k in range(n)))

    labels, mats, roots = [], [], []
    for i in range(n):
        labels.append(f"H{i + 1}")
        mats.append(_lin((1, E(i, i)), (-1, E(n + i, n + i))))
        roots.append(None)
    pos, neg = [], []
    for i in range(n):
        for j in range(i + 1, n):
            w = tuple(int(k == i) - int(k == j) for k in range(n))
            pos.append((f"X[e{i + 1}-e{j + 1}]", _lin((1, E(i, j)), (-1, E(n + j, n + i))), w))
            neg.append((f"X[-e{i + 1}+e{j + 1}]", _lin((1, E(j, i)), (-1, E(n + i, n + j))), tuple(-x for x in w)))
    for i in range(n):
        for j in range(i + 1, n):
            w = tuple(int(k in (i, j)) for k in range(n))
            pos.append((f"X[e{i + 1}+e{j + 1}]", _lin((1, E(i, n + j)), (-1, E(j, n + i))), w))
            neg.append((f"X[-e{i + 1}-e{j + 1}]", _lin((-1, E(n + i, j)), (1, E(n + j, i))), tuple(-x for x in w)))
    for label, m, w in pos + neg:
        labels.append(label)
        mats.append(m)
        roots.append(_in_simple_coordinates(w, simple))
    exponents = sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])
    recipe = [("charpoly", 2 * k, Fraction(1)) for k in range(1, n)]
    recipe.append(("pfaffian", n, Fraction(1, 2)))
    # order by degree; the Pfaffian goes after the coefficient of equal degree
    recipe.sort(key=lambda r: (r[1], r[0] == "pfaffian"))
    return _finish(f"D{n}", "D", n, labels, mats, roots, exponents, recipe, form_scale, Fraction(1, 2))


# -- table files ---------------------------------------------------------------

_SECTION = re.compile(r"^\[(\w+)\]$")


def parse_table(text: str, source: str = "<table>") -> LieAlgebraRealization:
    """Parse a structure-constant table (sections [meta], [basis], [brackets], [form], ...)."""
    sections: dict = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.match(line)
        if m:
            current = m.group(1)
            sections.setdefault(current, [])
            continue
        if current is None:
            raise ValidationFailure(f"{source}:{lineno}: content before the first section")
        sections[current].append((lineno, line))
    for needed in ("meta", "basis", "brackets", "form"):
        if needed not in sections:
            raise ValidationFailure(f"{source}: missing section [{needed}]")

    meta = {}
    for lineno, line in sections["meta"]:
        key, _, value = line.partition("=")
        meta[key.strip()] = value.strip()
    name = meta["name"]
    rank = int(meta["rank"])
    family = re.match(r"[A-Z]+", name).group(0)

    labels, roots, cartan = [], [], []
    for lineno, line in sections["basis"]:
        parts = line.split()
        idx = int(parts[0]) - 1
        if idx != len(labels):
            raise ValidationFailure(f"{source}:{lineno}: basis indices must be consecutive")
        labels.append(parts[1])
        if parts[2] == "cartan":
            cartan.append(idx)
            roots.append(None)
        elif parts[2] == "root":
            roots.append(tuple(int(x) for x in parts[3:]))
        else:
            raise ValidationFailure(f"{source}:{lineno}: unknown basis kind {parts[2]!r}")
    dim = len(labels)

    def index(tok, lineno):
        k = int(tok) - 1
        if not 0 <= k < dim:
            raise ValidationFailure(f"{source}:{lineno}: basis index {tok} out of range")
        return k

    structure: dict = {}
    for lineno, line in sections["brackets"]:
        lhs, _, rhs = line.partition("->")
        i, j = (index(t, lineno) for t in lhs.split())
        coeff, k = rhs.split()
        c = Fraction(coeff)
        k = index(k, lineno)
        for a, b, sign in ((i, j, 1), (j, i, -1)):
            entry = dict(structure.get((a, b), ()))
            entry[k] = entry.get(k, 0) + sign * c
            structure[(a, b)] = tuple((kk, v) for kk, v in sorted(entry.items()) if v)

    gram = [[Fraction(0)] * dim for _ in range(dim)]
    for lineno, line in sections["form"]:
        lhs, _, value = line.partition("=")
        i, j = (index(t, lineno) for t in lhs.split())
        gram[i][j] = gram[j][i] = Fraction(value.strip())

    recipe = []
    for lineno, line in sections.get("invariants", []):
        kind, degree, factor = line.split()
        recipe.append((kind, int(degree), Fraction(factor)))

    matrices = None
    if "matrices" in sections:
        body = sections["matrices"]
        size = int(body[0][1].partition("=")[2])
        mats = [[[Fraction(0)] * size for _ in range(size)] for _ in range(dim)]
        for lineno, line in body[1:]:
            k, r, s, v = line.split()
            mats[index(k, lineno)][int(r) - 1][int(s) - 1] = Fraction(v)
        matrices = tuple(_freeze(m) for m in mats)

    real = LieAlgebraRealization(
        name=name,
        family=family,
        rank=rank,
        labels=tuple(labels),
        structure=structure,
        gram=tuple(tuple(r) for r in gram),
        form_tag=f"table:{meta.get('form', 'unspecified')}",
        cartan=tuple(cartan),
        roots=tuple(roots),
        exponents=tuple(int(x) for x in meta["exponents"].split()),
        invariant_recipe=tuple(recipe),
        matrices=matrices,
    )
    real.validate()
    return real


def load_table(path: str | Path) -> LieAlgebraRealization:
    path = Path(path)
    return parse_table(path.read_text(), str(path))


def build_g2() -> LieAlgebraRealization:
    text = resources.files("slicepoisson.data").joinpath("g2.lie").read_text()
    return parse_table(text, "g2.lie")


def parse_type_label(label) -> tuple:
    """Accept ``"A3"``, ``"A_3"``, ``("A", 3)``; return ``(family, rank)``."""
    if isinstance(label, tuple):
        family, rank = label
        return str(family).upper(), int(rank)
    m = re.fullmatch(r"\s*([A-Za-z]+)_?(\d+)\s*", str(label))
    if not m:
        raise UnsupportedType(f"cannot read a Lie type from {label!r}")
    return m.group(1).upper(), int(m.group(2))


_CACHE: dict = {}


def build_realization(type_label, rank: int | None = None, form_scale=None) -> LieAlgebraRealization:
    """Validated realization of a simple Lie algebra of type A_n, D_n or G2.

    ``form_scale`` multiplies the trace form (defaults: 1 for A, 1/2 for D) or
    is ``"killing"``.  Results are cached; realizations are immutable.
    """
    if rank is None:
        family, rank = parse_type_label(type_label)
    else:
        family = str(type_label).upper()
    key = (family, rank, str(form_scale))
    if key in _CACHE:
        return _CACHE[key]
    if family == "A":
        real = build_sl(rank, form_scale)
    elif family == "D":
        real = build_so(rank, form_scale)
    elif family == "G" and rank == 2:
        if form_scale not in (None, 1, "1"):
            raise UnsupportedType("the G2 table carries a fixed form")
        real = build_g2()
    else:
        raise UnsupportedType(f"type {family}{rank} is not supported (A_n, D_n and G2 are)")
    _CACHE[key] = real
    return real
