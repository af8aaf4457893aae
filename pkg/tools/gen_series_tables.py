"""Generate the frozen series tables used by cpshift.halfplane.

Three families of expansions are produced, all with exact rational
coefficients derived symbolically and then verified numerically against
high-precision direct evaluation:

1. Small-x expansions of the universal half-plane kernels

       p3(x)  = ((3x^2 + 6x + 4)  - 4(1+x)^(3/2)) / x^2
       p5(x)  = ((3x^3 + 6x^2 + 10x + 4) - 4(1+x)^(5/2)) / x^2
       p5z(x) = ((9x^2 + 10x + 4) - 4(1+x)^(5/2)) / x^2

   whose literal forms lose all significance as x -> 0 (x = eta^2).

2. Two-variable Taylor tables, in x = eta^2 and y = sin^2(phi), of the
   angular numerators

       V_rho = 4((2x+1)y - x) (1+x)^(3/2) + c*N_rho
       V_phi = 4((1-2x)y + x) (1+x)^(5/2) + c*N_phi
       V_z   = 4(y - x)       (1+x)^(5/2) - c*N_z

   with c = -sqrt(1-y) (the cos(phi) branch with phi > pi/2).  Each V
   vanishes to third total order at (0, 0), which is exactly the
   cancellation that makes naive evaluation of the angular bracket terms
   collapse near the edge direction phi = pi.  The angular part is then
   V / ((1+x)^q (x+y)^3) with q = 3/2 or 5/2.

3. Even series in eps = pi - phi of the angular combinations appearing in
   the non-retarded closed forms,

       F_rho(eps) = (eps(1 + sin^2 eps) - sin(eps)cos(eps)) / sin^3(eps)
       F_phi(eps) = (eps(1 + cos^2 eps) - 2 sin(eps)cos(eps)) / sin^3(eps)
       F_z(eps)   = (eps - sin(eps)cos(eps)) / sin^3(eps)

   which individually blow up like 1/sin^3 but combine smoothly.

Run from the repository root:

    python tools/gen_series_tables.py

Writes src/cpshift/_series.py.  Requires sympy and mpmath.
"""

import sys
from fractions import Fraction

import mpmath
import sympy as sp

CORNER_DEGREE = 12      # total degree kept in the 2-variable tables
P_TERMS = 26            # number of coefficients kept for p3/p5/p5z
NEARPI_ORDER = 14       # highest power of eps kept (even powers only)

OUT_PATH = "src/cpshift/_series.py"


def p_series_coeffs(poly_coeffs, alpha, n_terms):
    """Coefficients of ((poly) - 4(1+x)^alpha)/x^2 about x = 0.

    poly_coeffs maps power -> coefficient for the polynomial part.  The
    constant and linear terms of poly - 4(1+x)^alpha must vanish.
    """
    x = sp.symbols("x")
    poly = sum(c * x**k for k, c in poly_coeffs.items())
    expr = poly - 4 * (1 + x) ** sp.Rational(*alpha)
    ser = sp.series(expr, x, 0, n_terms + 3).removeO()
    p = sp.Poly(ser, x)
    assert p.coeff_monomial(1) == 0 and p.coeff_monomial(x) == 0
    return [Fraction(int(sp.numer(q)), int(sp.denom(q)))
            for q in (sp.nsimplify(p.coeff_monomial(x ** (k + 2)))
                      for k in range(n_terms))]


def corner_tables():
    """Total-degree-limited Taylor tables of V_rho, V_phi, V_z at (0, 0)."""
    x, y = sp.symbols("x y")
    c = -sp.sqrt(1 - y)
    g32 = (1 + x) ** sp.Rational(3, 2)
    g52 = (1 + x) ** sp.Rational(5, 2)

    n_rho = (2 + x) * y**2 + 2 * y * (3 * x**2 + 6 * x + 2) - x * (3 * x**2 + 6 * x + 4)
    n_phi = ((2 - 2 * x - x**2) * y**2 + 2 * y * (2 + 2 * x - 6 * x**2 - 3 * x**3)
             + x * (3 * x**3 + 6 * x**2 + 10 * x + 4))
    n_z = (x - 2) * y**2 + 2 * (x**2 - 4 * x - 2) * y + x * (9 * x**2 + 10 * x + 4)

    vs = {
        "rho": 4 * ((2 * x + 1) * y - x) * g32 + c * n_rho,
        "phi": 4 * ((1 - 2 * x) * y + x) * g52 + c * n_phi,
        "z": 4 * (y - x) * g52 - c * n_z,
    }

    tables = {}
    for name, v in vs.items():
        # expand in y first (the only non-polynomial y dependence is sqrt(1-y)),
        # then in x, keeping total degree <= CORNER_DEGREE
        ser_y = sp.series(v, y, 0, CORNER_DEGREE + 1).removeO()
        terms = []
        for j in range(CORNER_DEGREE + 1):
            cj = sp.expand(ser_y.coeff(y, j))
            ser_x = sp.series(cj, x, 0, CORNER_DEGREE + 1 - j).removeO()
            px = sp.Poly(ser_x, x)
            for i in range(CORNER_DEGREE + 1 - j):
                q = px.coeff_monomial(x**i) if i else px.coeff_monomial(1)
                q = sp.nsimplify(q)
                if q != 0:
                    if i + j < 3:
                        raise AssertionError(
                            f"V_{name}: nonzero coefficient at degree {i + j} < 3: "
                            f"x^{i} y^{j} -> {q}")
                    terms.append((i, j, Fraction(int(sp.numer(q)), int(sp.denom(q)))))
        terms.sort()
        tables[name] = terms
    return tables


def nearpi_coeffs():
    """Even eps-series of F_rho, F_phi, F_z."""
    e = sp.symbols("eps")
    s, co = sp.sin(e), sp.cos(e)
    fs = {
        "rho": (e * (1 + s**2) - s * co) / s**3,
        "phi": (e * (1 + co**2) - 2 * s * co) / s**3,
        "z": (e - s * co) / s**3,
    }
    out = {}
    for name, f in fs.items():
        ser = sp.series(f, e, 0, NEARPI_ORDER + 2).removeO()
        p = sp.Poly(sp.expand(ser), e)
        coeffs = []
        for k in range(0, NEARPI_ORDER + 1):
            q = sp.nsimplify(p.coeff_monomial(e**k) if k else p.coeff_monomial(1))
            if k % 2 == 1:
                assert q == 0, f"F_{name} has an odd term at eps^{k}"
            else:
                coeffs.append(Fraction(int(sp.numer(q)), int(sp.denom(q))))
        out[name] = coeffs
    return out


def verify(p3c, p5c, p5zc, corner, nearpi):
    """Spot-check every table against mpmath direct evaluation."""
    mpmath.mp.dps = 60
    one = mpmath.mpf(1)

    def p_direct(x, poly, alpha):
        x = mpmath.mpf(x)
        return (poly(x) - 4 * (1 + x) ** alpha) / x**2

    def p_eval(cs, x):
        return sum(mpmath.mpf(c.numerator) / c.denominator * mpmath.mpf(x) ** k
                   for k, c in enumerate(cs))

    checks = []
    for x in ("1e-4", "0.01", "0.05", "0.09"):
        a = p_eval(p3c, x)
        b = p_direct(x, lambda t: 3 * t**2 + 6 * t + 4, mpmath.mpf(3) / 2)
        checks.append(("p3", x, abs(a / b - 1)))
        a = p_eval(p5c, x)
        b = p_direct(x, lambda t: 3 * t**3 + 6 * t**2 + 10 * t + 4, mpmath.mpf(5) / 2)
        checks.append(("p5", x, abs(a / b - 1)))
        a = p_eval(p5zc, x)
        b = p_direct(x, lambda t: 9 * t**2 + 10 * t + 4, mpmath.mpf(5) / 2)
        checks.append(("p5z", x, abs(a / b - 1)))

    def v_direct(name, x, y):
        x, y = mpmath.mpf(x), mpmath.mpf(y)
        c = -mpmath.sqrt(1 - y)
        g32 = (1 + x) ** (mpmath.mpf(3) / 2)
        g52 = (1 + x) ** (mpmath.mpf(5) / 2)
        if name == "rho":
            n = (2 + x) * y**2 + 2 * y * (3 * x**2 + 6 * x + 2) - x * (3 * x**2 + 6 * x + 4)
            return 4 * ((2 * x + 1) * y - x) * g32 + c * n
        if name == "phi":
            n = ((2 - 2 * x - x**2) * y**2 + 2 * y * (2 + 2 * x - 6 * x**2 - 3 * x**3)
                 + x * (3 * x**3 + 6 * x**2 + 10 * x + 4))
            return 4 * ((1 - 2 * x) * y + x) * g52 + c * n
        n = (x - 2) * y**2 + 2 * (x**2 - 4 * x - 2) * y + x * (9 * x**2 + 10 * x + 4)
        return 4 * (y - x) * g52 - c * n

    for name, terms in corner.items():
        for x, y in [("1e-3", "1e-3"), ("0.01", "0.002"), ("0.008", "0.01"),
                     ("1e-5", "0.009"), ("0.01", "0.01")]:
            xv, yv = mpmath.mpf(x), mpmath.mpf(y)
            a = sum(mpmath.mpf(c.numerator) / c.denominator * xv**i * yv**j
                    for i, j, c in terms)
            b = v_direct(name, x, y)
            checks.append((f"V_{name}", f"({x},{y})", abs(a / b - 1) if b else abs(a)))

    def f_direct(name, eps):
        e = mpmath.mpf(eps)
        s, co = mpmath.sin(e), mpmath.cos(e)
        if name == "rho":
            return (e * (1 + s**2) - s * co) / s**3
        if name == "phi":
            return (e * (1 + co**2) - 2 * s * co) / s**3
        return (e - s * co) / s**3

    for name, cs in nearpi.items():
        for eps in ("1e-4", "0.02", "0.09"):
            ev = mpmath.mpf(eps)
            a = sum(mpmath.mpf(c.numerator) / c.denominator * ev ** (2 * k)
                    for k, c in enumerate(cs))
            checks.append((f"F_{name}", eps, abs(a / f_direct(name, eps) - 1)))

    worst = max(checks, key=lambda t: t[2])
    print(f"verification: {len(checks)} checks, worst relative error "
          f"{mpmath.nstr(worst[2], 3)} at {worst[0]} {worst[1]}")
    assert worst[2] < mpmath.mpf("1e-12"), worst
    return one


def fmt_fraction_list(cs, indent):
    pad = " " * indent
    body = ",\n".join(f"{pad}{float(c)!r}" for c in cs)
    return body


def main():
    p3c = p_series_coeffs({2: 3, 1: 6, 0: 4}, (3, 2), P_TERMS)
    p5c = p_series_coeffs({3: 3, 2: 6, 1: 10, 0: 4}, (5, 2), P_TERMS)
    p5zc = p_series_coeffs({2: 9, 1: 10, 0: 4}, (5, 2), P_TERMS)
    assert p3c[0] == Fraction(3, 2) and p5c[0] == Fraction(-3, 2) and p5zc[0] == Fraction(3, 2)

    corner = corner_tables()
    nearpi = nearpi_coeffs()
    assert nearpi["rho"][0] == Fraction(5, 3)
    assert nearpi["phi"][0] == Fraction(1, 3)
    assert nearpi["z"][0] == Fraction(2, 3)

    verify(p3c, p5c, p5zc, corner, nearpi)

    lines = []
    lines.append('"""Frozen series tables for the half-plane kernels.')
    lines.append("")
    lines.append("Generated by tools/gen_series_tables.py; do not edit by hand.")
    lines.append("Coefficients are exact rationals rounded once to double precision.")
    lines.append('"""')
    lines.append("")
    for name, cs in (("P3_COEFFS", p3c), ("P5_COEFFS", p5c), ("P5Z_COEFFS", p5zc)):
        lines.append(f"{name} = (")
        lines.append(fmt_fraction_list(cs, 4) + ",")
        lines.append(")")
        lines.append("")
    for name in ("rho", "phi", "z"):
        lines.append(f"CORNER_{name.upper()} = (")
        for i, j, c in corner[name]:
            lines.append(f"    ({i}, {j}, {float(c)!r}),")
        lines.append(")")
        lines.append("")
    for name in ("rho", "phi", "z"):
        lines.append(f"NEARPI_{name.upper()} = (")
        lines.append(fmt_fraction_list(nearpi[name], 4) + ",")
        lines.append(")")
        lines.append("")

    with open(OUT_PATH, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {OUT_PATH}: corner table sizes "
          + ", ".join(f"{k}={len(v)}" for k, v in corner.items()))


if __name__ == "__main__":
    sys.exit(main())
