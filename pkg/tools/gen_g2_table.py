"""Regenerate ``src/slicepoisson/data/g2.lie`` from the 7-dimensional matrix model.

The root vectors are built from the simple ones by repeated brackets and then
negated (overall sign convention of the shipped table); each negative root
vector is scaled so that ``gamma([X_gamma, Y_gamma]) = 2``.  The form is
``Trace(XY) / 6``, which gives ``<X_beta|Y_beta> = 1/3`` for the long simple root.

Run: python tools/gen_g2_table.py > src/slicepoisson/data/g2.lie
"""

from __future__ import annotations

from fractions import Fraction

N = 7
FORM_SCALE = Fraction(1, 6)
SIGN = -1


def E(i, j):
    m = [[Fraction(0)] * N for _ in range(N)]
    m[i - 1][j - 1] = Fraction(1)
    return m


def add(*ms):
    return [[sum(m[i][j] for m in ms) for j in range(N)] for i in range(N)]


def scal(c, m):
    return [[c * x for x in row] for row in m]


def mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(N)) for j in range(N)] for i in range(N)]


def br(a, b):
    return add(mul(a, b), scal(-1, mul(b, a)))


def is_zero(m):
    return all(x == 0 for row in m for x in row)


def eigen_on(h, x):
    """Scalar c with [h, x] = c x."""
    y = br(h, x)
    for i in range(N):
        for j in range(N):
            if x[i][j]:
                return y[i][j] / x[i][j]
    raise ValueError("zero vector")


def main():
    ea = add(E(1, 2), scal(2, E(3, 4)), E(4, 5), E(6, 7))
    fa = add(E(2, 1), E(4, 3), scal(2, E(5, 4)), E(7, 6))
    eb = add(E(2, 3), E(5, 6))
    fb = add(E(3, 2), E(6, 5))
    ha, hb = br(ea, fa), br(eb, fb)

    names = ["a", "b", "ab", "2ab", "3ab", "3a2b"]
    roots = {"a": (1, 0), "b": (0, 1), "ab": (1, 1), "2ab": (2, 1), "3ab": (3, 1), "3a2b": (3, 2)}
    xs = {"a": ea, "b": eb}
    xs["ab"] = br(ea, eb)
    xs["2ab"] = scal(Fraction(1, 2), br(ea, xs["ab"]))
    xs["3ab"] = scal(Fraction(1, 3), br(ea, xs["2ab"]))
    xs["3a2b"] = br(eb, xs["3ab"])
    fs = {"a": fa, "b": fb}
    fs["ab"] = br(fb, fa)
    fs["2ab"] = br(fa, fs["ab"])
    fs["3ab"] = br(fa, fs["2ab"])
    fs["3a2b"] = br(fb, fs["3ab"])

    def root_value(r, h):
        # gamma(h) = r_a * alpha(h) + r_b * beta(h)
        return r[0] * eigen_on(h, ea) + r[1] * eigen_on(h, eb)

    ys = {}
    for n in names:
        h = br(xs[n], fs[n])
        t = root_value(roots[n], h)
        ys[n] = scal(2 / t, fs[n])
    xs = {n: scal(SIGN, m) for n, m in xs.items()}
    ys = {n: scal(SIGN, m) for n, m in ys.items()}

    basis = [("Ha", "cartan", None, ha), ("Hb", "cartan", None, hb)]
    basis += [(f"X{n}", "root", roots[n], xs[n]) for n in names]
    basis += [(f"Y{n}", "root", tuple(-c for c in roots[n]), ys[n]) for n in names]

    flat = [[x for row in m for x in row] for *_, m in basis]
    gram = [[FORM_SCALE * sum(mul(a[3], b[3])[i][i] for i in range(N)) for b in basis] for a in basis]

    def coords(m):
        # solve flat^T c = vec(m) by Gaussian elimination on the 14 unknowns
        rows = [[flat[k][p] for k in range(len(basis))] + [x] for p, x in enumerate(v for r in m for v in r)]
        piv = []
        r = 0
        for c in range(len(basis)):
            p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            piv.append(c)
            r += 1
        assert all(row[-1] == 0 for row in rows[r:]), "bracket left the span"
        out = [Fraction(0)] * len(basis)
        for row, c in zip(rows, piv):
            out[c] = row[-1]
        return out

    print("# g2 in its Chevalley basis; generated by tools/gen_g2_table.py")
    print("[meta]")
    print("name = G2")
    print("rank = 2")
    print("form = trace*1/6")
    print("exponents = 1 5")
    print("simple_roots = a b")
    print("[basis]")
    for i, (label, kind, root, _) in enumerate(basis, 1):
        tail = "" if root is None else " " + " ".join(map(str, root))
        print(f"{i} {label} {kind}{tail}")
    print("[brackets]")
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            c = coords(br(basis[i][3], basis[j][3]))
            for k, v in enumerate(c):
                if v:
                    print(f"{i + 1} {j + 1} -> {v} {k + 1}")
    print("[form]")
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            if gram[i][j]:
                print(f"{i + 1} {j + 1} = {gram[i][j]}")
    print("[invariants]")
    print("charpoly 2 -1/6")
    print("charpoly 6 -1")
    print("[matrices]")
    print(f"size = {N}")
    for i, (*_, m) in enumerate(basis, 1):
        for r in range(N):
            for c in range(N):
                if m[r][c]:
                    print(f"{i} {r + 1} {c + 1} {m[r][c]}")


if __name__ == "__main__":
    main()
