"""Response functions for an atom outside a perfectly reflecting cylinder.

Exact values are primed sums over azimuthal order m of semi-infinite
k-integrals whose kernels combine I_m(kR)/K_m(kR) (and the derivative
ratio) with squared K_m(k rho) factors; retardation enters through the
three factors (sqrt(E^2+k^2) - E), (E^2/sqrt(E^2+k^2) - E) and
k^2/sqrt(E^2+k^2).  Every integrand term is nonnegative, and the code
keeps it that way by tracking |I'/K'| and -(E^2/sqrt(E^2+k^2) - E)
instead of the signed quantities.

Internally everything is dimensionless: q = k*rho, beta = R/rho,
Ebar = E*rho.  That makes the geometric scaling law
Xi(lambda*R, lambda*rho, E/lambda) = Xi(R, rho, E)/lambda^3 exact up to
rounding of beta and Ebar themselves.  Kernels assemble the analytic
damping factor e^(-2q(1-beta)) from scaled Bessel values; abscissae where
any scaled value leaves the double range are redone in log space.

Series length grows like rho/d, so evaluations below d/R of about 1e-3
are impractical at the default m_max; so close to the surface the
plane-mirror formulas apply anyway.
"""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from . import specfun
from .errors import DomainError, NonConvergenceError
from .quad import DEFAULT_SETTINGS, integrate_multi, sum_primed_multi
from .types import Regime, WireConfig, XiTriple

# below this d/R callers should switch to the plane-mirror formulas; the
# m-sum needs roughly 12*rho/d terms, so m_max must grow accordingly
MIN_D_OVER_R = 1e-3


def _kernel_products(m, beta, q):
    """The four nonnegative kernel products for one azimuthal order.

    With a = beta*q, returns
        p1 =  (I_m/K_m)(a)  K'_m(q)^2
        p2 = -(I'_m/K'_m)(a) K_m(q)^2
        p3 =  (I_m/K_m)(a)  K_m(q)^2
        p4 = -(I'_m/K'_m)(a) K'_m(q)^2
    assembled from scaled values with the explicit damping e^(-2q(1-beta));
    entries where that route degenerates are redone in log space.
    """
    a = beta * q
    ia, ipa = specfun.ive_pair(m, a)
    ka, kna = specfun.kve_pair(m, a)
    kb, knb = specfun.kve_pair(m, q)
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        damp = np.exp(-2.0 * q * (1.0 - beta))
        # pair each I factor with one K(q) factor and keep the remaining
        # K(q)/K(a) as a same-function ratio (<= 1 since q >= a); naive
        # (ia/ka)*kb*kb underflows to 0 at small q even where the true
        # product is order beta^2m, which poisons near-surface sums
        p1 = (ia * knb) * (knb / ka) * damp
        p2 = (ipa * kb) * (kb / kna) * damp
        p3 = (ia * kb) * (kb / ka) * damp
        p4 = (ipa * knb) * (knb / kna) * damp
    bad = ~(np.isfinite(ka) & np.isfinite(kna) & np.isfinite(kb)
            & np.isfinite(knb) & np.isfinite(p1) & np.isfinite(p2)
            & np.isfinite(p3) & np.isfinite(p4))
    if bad.any():
        idx = np.nonzero(bad)[0]
        if m >= 15:
            li_a, lk_a, lip_a, lkn_a = specfun.log_four_uniform(m, a[idx])
            _, lk_b, _, lkn_b = specfun.log_four_uniform(m, q[idx])
        else:
            rows = [specfun.log_bessel_four(m, float(v)) for v in a[idx]]
            li_a, lk_a, lip_a, lkn_a = map(np.array, zip(*rows))
            rows = [specfun.log_bessel_four(m, float(v)) for v in q[idx]]
            _, lk_b, _, lkn_b = map(np.array, zip(*rows))
        p1[idx] = np.exp(li_a - lk_a + 2.0 * lkn_b)
        p2[idx] = np.exp(lip_a - lkn_a + 2.0 * lk_b)
        p3[idx] = np.exp(li_a - lk_a + 2.0 * lk_b)
        p4[idx] = np.exp(lip_a - lkn_a + 2.0 * lkn_b)
    return p1, p2, p3, p4


def _retardation(mode, Ebar, q):
    """Stable nonnegative retardation factors (f1, nf2, f3).

    f1 = sqrt(Ebar^2+q^2) - Ebar, computed as q^2/(r + Ebar);
    nf2 = -(Ebar^2/sqrt(Ebar^2+q^2) - Ebar) = Ebar q^2/(r (r + Ebar));
    f3 = q^2/sqrt(Ebar^2+q^2).
    "nonret" is the E = 0 reduction (q, 0, q); "retlim" the coefficient of
    1/E as E -> inf (q^2/2, q^2/2, q^2).
    """
    if mode == "nonret":
        return q, 0.0, q
    if mode == "retlim":
        q2 = q * q
        return 0.5 * q2, 0.5 * q2, q2
    r = np.hypot(Ebar, q)
    q2 = q * q
    return q2 / (r + Ebar), Ebar * q2 / (r * (r + Ebar)), q2 / r


def _integrand_rows(m, beta, Ebar, mode, q):
    """Shape (3, n) integrand of the m-th summand, every entry >= 0."""
    p1, p2, p3, p4 = _kernel_products(m, beta, q)
    f1, nf2, f3 = _retardation(mode, Ebar, q)
    row_rho = f1 * p1
    row_phi = nf2 * p4
    if m:
        w = (m * m) / (q * q)
        row_rho = row_rho + w * nf2 * p2
        row_phi = row_phi + w * f1 * p3
    return np.stack([q * row_rho, q * row_phi, q * f3 * p3])


def _term_factory(beta, Ebar, mode, settings):
    tail_scale = 0.5 / (1.0 - beta)

    def term(m, abs_floor):
        def fv(q):
            return _integrand_rows(m, beta, Ebar, mode, q)

        c = float(max(m, 1))
        inner = replace(settings, abs_tol=max(abs_floor, settings.abs_tol))
        vals, errs, ev, ok = integrate_multi(
            fv, c + tail_scale + 0.5 * Ebar, inner,
            split_hints=(0.5 * c, c, 2.0 * c))
        if not ok:
            raise NonConvergenceError(
                f"k-integral did not converge at m={m}", vals,
                float(errs.max()), ev)
        return vals, errs, ev

    return term


def _summed_triple(beta, Ebar, mode, settings):
    term = _term_factory(beta, Ebar, mode, settings)
    vals, errs, _ = sum_primed_multi(term, settings)
    pref = 2.0 / math.pi
    return pref * vals, pref * float(errs.max())


def xi_wire(cfg: WireConfig, settings=DEFAULT_SETTINGS) -> XiTriple:
    """Exact response triple for the wire at finite transition energy.

    E = 0 dispatches to the electrostatic reduction, which removes the
    0*inf ambiguity in the (E^2/sqrt(E^2+k^2) - E) factor.
    """
    if cfg.E == 0.0:
        return xi_wire_nonretarded(cfg.R, cfg.rho, settings)
    beta = cfg.R / cfg.rho
    vals, err = _summed_triple(beta, cfg.E * cfg.rho, "exact", settings)
    s = 1.0 / cfg.rho**3
    return XiTriple(vals[0] * s, vals[1] * s, vals[2] * s, err * s)


def xi_wire_nonretarded(R: float, rho: float,
                        settings=DEFAULT_SETTINGS) -> XiTriple:
    """Electrostatic (E = 0) response triple for the wire.

    The second rho-integrand term and the first phi-integrand term vanish
    identically here (their shared retardation factor is 0 at E = 0).
    """
    cfg = WireConfig(R=R, rho=rho)
    vals, err = _summed_triple(cfg.R / cfg.rho, 0.0, "nonret", settings)
    s = 1.0 / rho**3
    return XiTriple(vals[0] * s, vals[1] * s, vals[2] * s, err * s)


def xi_wire_retarded_limit(R: float, rho: float,
                           settings=DEFAULT_SETTINGS) -> XiTriple:
    """lim E->inf of E*Xi for the wire, units 1/length^4 per unit E."""
    cfg = WireConfig(R=R, rho=rho)
    vals, err = _summed_triple(cfg.R / cfg.rho, 0.0, "retlim", settings)
    s = 1.0 / rho**4
    return XiTriple(vals[0] * s, vals[1] * s, vals[2] * s, err * s)


def _lambda_factor(A):
    return A * (A * A + 4.0 * A + 1.0) / (A - 1.0) ** 4


def xi_wire_large_radius_approx(R: float, rho: float,
                                settings=DEFAULT_SETTINGS) -> XiTriple:
    """Close-surface approximation to lim E*Xi, intended for d <~ R.

    Lowest-order Bessel integrals plus correction integrals whose kernel
    is the closed form of the geometric series over large azimuthal
    orders in the uniform asymptotic regime.
    """
    cfg = WireConfig(R=R, rho=rho)
    beta = cfg.R / cfg.rho
    one_m = 1.0 - beta

    def k_ints(q):
        a = beta * q
        i0, _ = specfun.ive_pair(0, a)
        k0a, _ = specfun.kve_pair(0, a)
        i1, _ = specfun.ive_pair(1, a)
        k1a, _ = specfun.kve_pair(1, a)
        k0, k1n = specfun.kve_pair(0, q)
        damp = np.exp(-2.0 * q * one_m)
        q3 = q ** 3
        return np.stack([q3 * (i0 / k0a) * k1n * k1n,
                         q3 * (i1 / k1a) * k1n * k1n,
                         q3 * (i0 / k0a) * k0 * k0]) * damp

    kv, ke, _, ok1 = integrate_multi(
        k_ints, 1.0 + 0.5 / one_m, settings, split_hints=(0.5, 1.0, 2.0))

    def x_ints(x):
        r1 = np.sqrt(1.0 + x * x)
        rb = np.sqrt(1.0 + (beta * x) ** 2)
        A = (beta * (1.0 + r1) / (1.0 + rb)) ** 2 * np.exp(2.0 * (rb - r1))
        lam = _lambda_factor(A)
        return np.stack([x * (r1 + 1.0 / r1) * lam, (x ** 3 / r1) * lam])

    xs = 1.0 / math.sqrt(1.0 - beta * beta)
    xv, xe, _, ok2 = integrate_multi(
        x_ints, xs + 0.5 / one_m, settings,
        split_hints=(0.3 * xs, xs, 3.0 * xs))

    pref = 1.0 / (2.0 * math.pi * rho ** 4)
    vals = (pref * (kv[0] + xv[0]), pref * (kv[1] + xv[0]),
            2.0 * pref * (kv[2] + xv[1]))
    err = pref * float(ke.max() + xe.max())
    if not (ok1 and ok2):
        raise NonConvergenceError(
            "close-surface approximation quadrature did not converge",
            vals, err)
    return XiTriple(vals[0], vals[1], vals[2], err)


def xi_wire_small_radius_approx(R: float, rho: float,
                                settings=DEFAULT_SETTINGS) -> XiTriple:
    """Thin-wire approximation to lim E*Xi from the lowest azimuthal
    orders; stated accuracy needs d/R of order 10 or more."""
    cfg = WireConfig(R=R, rho=rho)
    beta = cfg.R / cfg.rho
    one_m = 1.0 - beta

    def fv(q):
        a = beta * q
        i0, _ = specfun.ive_pair(0, a)
        k0a, _ = specfun.kve_pair(0, a)
        i1, ip1 = specfun.ive_pair(1, a)
        k1a, kn1a = specfun.kve_pair(1, a)
        k0, _ = specfun.kve_pair(0, q)
        k1, kn1 = specfun.kve_pair(1, q)
        damp = np.exp(-2.0 * q * one_m)
        q2 = q * q
        q3 = q2 * q
        # ip1/kn1a = -(I_1'/K_1')(a) >= 0, so the "-2 (I'/K') ..." pieces
        # enter with a plus sign here
        rho_row = q3 * (i0 / k0a) * k1 * k1 + 2.0 * q * (ip1 / kn1a) * k1 * k1
        phi_row = (q * (q2 + 2.0) * (i1 / k1a) * k1 * k1
                   + 2.0 * q3 * (ip1 / kn1a) * kn1 * kn1)
        z_row = 2.0 * q3 * (i0 / k0a) * k0 * k0
        return np.stack([rho_row, phi_row, z_row]) * damp

    vals, errs, _, ok = integrate_multi(
        fv, 1.0 + 0.5 / one_m, settings, split_hints=(0.5, 1.0, 2.0))
    if not ok:
        raise NonConvergenceError(
            "thin-wire approximation quadrature did not converge",
            vals, float(errs.max()))
    pref = 1.0 / (2.0 * math.pi * rho ** 4)
    return XiTriple(pref * vals[0], pref * vals[1], pref * vals[2],
                    pref * float(errs.max()))


# adjacent scales closer than this factor leave no clear regime
REGIME_BAND = 3.0

_ORDER_TAGS = {
    ("d", "R", "lam"): "NR_close",
    ("d", "lam", "R"): "NR_mid",
    ("R", "d", "lam"): "NR_thin",
    ("lam", "d", "R"): "RET_close",
    ("lam", "R", "d"): "RET_thin",
    ("R", "lam", "d"): "RET_thin2",
}


def classify_regime(d: float, R: float, lam: float) -> Regime:
    """Asymptotic regime from the ordering of (d, R, lambda).

    The tag encodes the sorted order of the three scales; clear is False
    when any adjacent pair of sorted scales lies within a factor of
    REGIME_BAND of each other.
    """
    for name, v in (("d", d), ("R", R), ("lam", lam)):
        if not (v > 0 and math.isfinite(v)):
            raise DomainError(f"{name} must be positive and finite, got {v!r}")
    ordered = sorted([("d", d), ("R", R), ("lam", lam)], key=lambda kv: kv[1])
    tag = _ORDER_TAGS[tuple(k for k, _ in ordered)]
    clear = (ordered[1][1] >= REGIME_BAND * ordered[0][1]
             and ordered[2][1] >= REGIME_BAND * ordered[1][1])
    return Regime(tag=tag, clear=clear)
