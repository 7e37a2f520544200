"""Expand the closed-form source expressions into the monomial table shipped with the package.

Usage: python tools/gen_coefficients.py > src/hexaweb/data/coefficients.txt
"""

import sympy as sp

import table_sources as src

a, b, c, x, y, z, S, r3 = sp.symbols("a b c x y z S r3")
A2, B2, C2 = sp.symbols("A2 B2 C2")

QUAD_TARGETS = {"xx": x**2, "yy": y**2, "zz": z**2, "xy": x * y, "xz": x * z, "yz": y * z}


def parse(text):
    text = " ".join(text.split()).replace("^", "**").replace("sqrt(3)", "r3")
    return sp.expand(sp.sympify(text, locals={"a": a, "b": b, "c": c, "x": x, "y": y,
                                              "z": z, "S": S, "r3": r3}))


def reduce_r3(expr):
    # r3**2 -> 3
    poly = sp.Poly(expr, r3)
    out = 0
    for (k,), coeff in poly.terms():
        out += coeff * (3 ** (k // 2)) * r3 ** (k % 2)
    return sp.expand(out)


def terms(expr):
    expr = reduce_r3(expr).subs({a: sp.sqrt(A2), b: sp.sqrt(B2), c: sp.sqrt(C2)})
    expr = sp.expand(expr)
    poly = sp.Poly(expr, A2, B2, C2, r3, S)
    rows = []
    for (i, j, k, m, s), coeff in sorted(poly.terms()):
        if coeff != 0:
            rows.append((i, j, k, sp.Rational(coeff), m, s))
    return rows


def emit(name, target, expr):
    for i, j, k, coeff, m, s in terms(expr):
        print(f"{name} {target} {i} {j} {k} {coeff} {m} {s}")


def main():
    print("# hexaweb coefficient tables, format version 1")
    print("# columns: object target exp_a2 exp_b2 exp_c2 coefficient sqrt3_power S_power")
    print("# conic targets are monomials of the barycentric coordinates x, y, z;")
    print("# point/line targets are the x, y, z components.")
    print("# Generated by tools/gen_coefficients.py; S is twice the signed area (CCW > 0).")
    quad = parse(src.A_PARABOLA)
    for name, expr in (("a_parabola", quad), ("skip1_through_b", parse(src.SKIP1_THROUGH_B))):
        poly = sp.Poly(expr, x, y, z)
        for tname, mono in QUAD_TARGETS.items():
            emit(name, tname, poly.coeff_monomial(mono))
    for comp, text in src.AXIS_INFINITY.items():
        emit("axis_infinity_a", comp, parse(text))
    line = sp.Poly(parse(src.A_DIRECTRIX), x, y, z)
    for comp, mono in (("x", x), ("y", y), ("z", z)):
        emit("directrix_a", comp, line.coeff_monomial(mono))
    for comp, text in src.DIRECTRIX_VERTEX_A.items():
        emit("directrix_vertex_a", comp, parse(text))
    for comp, text in src.FOCUS_A.items():
        emit("focus_a", comp, parse(text))


if __name__ == "__main__":
    main()
