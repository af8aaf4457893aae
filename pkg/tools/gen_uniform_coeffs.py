"""Derive and validate the Debye polynomials used by cpshift.specfun.

The large-order uniform asymptotic expansions of I_m(m z) and K_m(m z)
and their derivatives use the polynomial sequences u_k(t), v_k(t) with
t = 1/sqrt(1+z^2).  They satisfy

    u_0 = 1
    u_{k+1}(t) = t^2 (1 - t^2) u_k'(t) / 2 + (1/8) int_0^t (1 - 5 s^2) u_k(s) ds
    v_0 = 1
    v_{k+1}(t) = u_{k+1}(t) + t (t^2 - 1) (u_k(t) / 2 + t u_k'(t))

This script derives u_1..u_4 and v_1..v_4 symbolically, validates the
resulting log-magnitude expansions against mpmath on a grid of orders and
arguments, and prints the coefficient tables to paste into specfun.py.

    python3 tools/gen_uniform_coeffs.py
"""

import mpmath
import sympy as sp


def debye_polys(kmax):
    t = sp.symbols("t")
    s = sp.symbols("s")
    us = [sp.Integer(1)]
    vs = [sp.Integer(1)]
    for _ in range(kmax):
        u = us[-1]
        un = sp.expand(t**2 * (1 - t**2) * sp.diff(u, t) / 2
                       + sp.integrate((1 - 5 * s**2) * u.subs(t, s), (s, 0, t)) / 8)
        vn = sp.expand(un + t * (t**2 - 1) * (u / 2 + t * sp.diff(u, t)))
        us.append(un)
        vs.append(vn)
    return t, us[1:], vs[1:]


def poly_coeff_tuple(expr, t):
    p = sp.Poly(expr, t)
    deg = p.degree()
    return tuple(float(p.coeff_monomial(t**k) if k else p.coeff_monomial(1))
                 for k in range(deg + 1))


def log_uniform(m, x, us, vs, t_sym):
    """Double-precision-style evaluation of the four log magnitudes."""
    import math
    z = x / m
    r = math.hypot(1.0, z)
    eta = r + math.log(z / (1.0 + r))
    t = 1.0 / r
    su = si = 1.0
    sv_i = sv_k = 1.0
    for k, (u, v) in enumerate(zip(us, vs), start=1):
        uv = float(u.subs(t_sym, t))
        vv = float(v.subs(t_sym, t))
        si += uv / m**k
        su += (-1) ** k * uv / m**k
        sv_i += vv / m**k
        sv_k += (-1) ** k * vv / m**k
    q = 0.25 * math.log1p(z * z)
    log_i = m * eta - 0.5 * math.log(2 * math.pi * m) - q + math.log(si)
    log_k = -m * eta + 0.5 * math.log(math.pi / (2 * m)) - q + math.log(su)
    log_ip = m * eta - 0.5 * math.log(2 * math.pi * m) + q - math.log(z) + math.log(sv_i)
    log_kp = -m * eta + 0.5 * math.log(math.pi / (2 * m)) + q - math.log(z) + math.log(sv_k)
    return log_i, log_k, log_ip, log_kp


def _mp_bessel(fn, m, x):
    """mpmath besseli/besselk with precision escalation at extreme orders.

    besseli gets a raised maxterms (its series is convergent but long at
    large argument); besselk must not (its large-x branch is an asymptotic
    series that would churn), so it relies on precision escalation alone.
    """
    from mpmath.libmp.libhyper import NoConvergence

    kw = {"maxterms": 10**6} if fn is mpmath.besseli else {}
    for dps in (40, 80, 160, 320, 640):
        try:
            with mpmath.workdps(dps):
                return +fn(m, x, **kw)
        except (ValueError, NoConvergence):
            continue
    raise RuntimeError(f"no convergence for {fn.__name__}({m}, {x})")


def main():
    t, us, vs = debye_polys(4)
    for k, (u, v) in enumerate(zip(us, vs), start=1):
        print(f"u_{k} = {u}")
        print(f"v_{k} = {v}")

    mpmath.mp.dps = 40
    worst = (0.0, None)
    worst60 = (0.0, None)
    for m in (15, 30, 60, 120, 300, 1000, 2000):
        for z in (1e-6, 1e-3, 0.05, 0.3, 1.0, 3.0, 20.0):
            x = m * z
            li, lk, lip, lkp = log_uniform(m, x, us, vs, t)
            i_lo = _mp_bessel(mpmath.besseli, m - 1, x)
            i_hi = _mp_bessel(mpmath.besseli, m + 1, x)
            k_lo = _mp_bessel(mpmath.besselk, m - 1, x)
            k_hi = _mp_bessel(mpmath.besselk, m + 1, x)
            ref_i = mpmath.log(_mp_bessel(mpmath.besseli, m, x))
            ref_k = mpmath.log(_mp_bessel(mpmath.besselk, m, x))
            ref_ip = mpmath.log((i_lo + i_hi) / 2)
            ref_kp = mpmath.log((k_lo + k_hi) / 2)
            for got, ref, tag in ((li, ref_i, "I"), (lk, ref_k, "K"),
                                  (lip, ref_ip, "I'"), (lkp, ref_kp, "K'")):
                # compare resulting magnitudes, i.e. the error in the log
                err = abs(float(got - ref))
                if err > worst[0]:
                    worst = (err, (m, z, tag))
                if m >= 60 and err > worst60[0]:
                    worst60 = (err, (m, z, tag))
    print(f"worst |delta log| over grid (m >= 15): {worst[0]:.3e} at {worst[1]}")
    print(f"worst |delta log| for m >= 60: {worst60[0]:.3e} at {worst60[1]}")

    print()
    print("coefficient tables (ascending powers of t):")
    print("U_POLYS = (")
    for u in us:
        print(f"    {poly_coeff_tuple(u, t)},")
    print(")")
    print("V_POLYS = (")
    for v in vs:
        print(f"    {poly_coeff_tuple(v, t)},")
    print(")")


if __name__ == "__main__":
    main()
