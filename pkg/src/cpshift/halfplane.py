"""Response functions for an atom near a perfectly reflecting half-plane.

Each component is a single semi-infinite integral over eta with weight
e^(-2 rho E eta).  The curly-bracket integrands mix three pieces: a
universal part that suffers an 8-digit cancellation as eta -> 0, an
angular part with denominator (eta^2 + sin^2 phi)^3 that cancels just as
badly when the atom approaches the edge direction phi = pi, and a
cos(phi)-weighted numerator.  Both cancellations are handled by frozen
series tables (see _series.py and its generator): the universal part
switches to a series in x = eta^2 below x = 0.1, and the angular part
switches to a two-variable Taylor form when cos(phi) < 0 with
x <= 0.01 and sin^2(phi) <= 0.01.

The angle is canonicalized to (0, pi] through the phi <-> 2pi - phi
reflection symmetry.  Directly above the edge (phi = pi, snapped within
1e-12) the azimuthal integrand is identically zero and the other two
collapse to twice their universal parts.
"""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from . import _series
from .errors import DomainError, NonConvergenceError, PlaneLimitError
from .quad import DEFAULT_SETTINGS, integrate_multi
from .types import HalfPlaneConfig, XiTriple

# sin(phi) below this on the open side means the geometry is a plane to
# working precision; callers should use the plane-mirror formulas
PLANE_GUARD_SIN = 1e-6

# tolerance for snapping to the exactly-above-the-edge case
PI_SNAP = 1e-12

# validity threshold for the retarded closed forms: distance to the
# nearest material point should exceed ~5 reduced wavelengths
RETARDED_VALIDITY_THRESHOLD = 5.0

# switch points of the cancellation-safe branches
X_SERIES_SWITCH = 0.1
CORNER_SWITCH = 0.01
NEARPI_EPS_SWITCH = 0.1


def _poly(coeffs, t):
    acc = np.zeros_like(t) if isinstance(t, np.ndarray) else 0.0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _p_universal(coeffs, poly, alpha_num, x):
    """(poly(x) - 4(1+x)^(alpha_num/2)) / x^2, series below the switch."""
    small = x < X_SERIES_SWITCH
    out = np.empty_like(x)
    out[small] = _poly(coeffs, x[small])
    large = ~small
    if large.any():
        xl = x[large]
        out[large] = (poly(xl) - 4.0 * (1.0 + xl) ** (0.5 * alpha_num)) \
            / (xl * xl)
    return out


def _universal_triple(x, g):
    """The three eta-only bracket parts (finite at eta = 0)."""
    g32 = g * np.sqrt(g)
    g52 = g32 * g
    p3 = _p_universal(_series.P3_COEFFS,
                      lambda t: (3.0 * t + 6.0) * t + 4.0, 3, x)
    p5 = _p_universal(_series.P5_COEFFS,
                      lambda t: ((3.0 * t + 6.0) * t + 10.0) * t + 4.0, 5, x)
    p5z = _p_universal(_series.P5Z_COEFFS,
                       lambda t: (9.0 * t + 10.0) * t + 4.0, 5, x)
    return p3 / g32, p5 / g52, p5z / g52


# corner tables regrouped as dense coefficient matrices M[i][j] for
# V(x, y) = sum_ij M[i][j] x^i y^j
def _corner_matrix(table):
    deg = max(max(i, j) for i, j, _ in table)
    mat = np.zeros((deg + 1, deg + 1))
    for i, j, c in table:
        mat[i, j] = c
    return mat


_CORNER = tuple(_corner_matrix(t) for t in
                (_series.CORNER_RHO, _series.CORNER_PHI, _series.CORNER_Z))


def _corner_v(mat, x, y):
    yj = 1.0
    acc = np.zeros_like(x)
    for j in range(mat.shape[1]):
        col = mat[:, j]
        if col.any():
            acc = acc + yj * _poly(col, x)
        yj *= y
    return acc


def _angular_triple(x, g, y, c):
    """The angular bracket parts, shape (3, n); y, c are scalars."""
    g32 = g * np.sqrt(g)
    g52 = g32 * g
    w3 = (x + y) ** 3
    n_rho = ((2.0 + x) * y * y + 2.0 * y * ((3.0 * x + 6.0) * x + 2.0)
             - x * ((3.0 * x + 6.0) * x + 4.0))
    n_phi = ((2.0 - 2.0 * x - x * x) * y * y
             + 2.0 * y * (2.0 + 2.0 * x - (6.0 + 3.0 * x) * x * x)
             + x * (((3.0 * x + 6.0) * x + 10.0) * x + 4.0))
    n_z = ((x - 2.0) * y * y + 2.0 * ((x - 4.0) * x - 2.0) * y
           + x * ((9.0 * x + 10.0) * x + 4.0))
    a_rho = (4.0 * ((2.0 * x + 1.0) * y - x) + c * n_rho / g32) / w3
    a_phi = (4.0 * ((1.0 - 2.0 * x) * y + x) + c * n_phi / g52) / w3
    a_z = (4.0 * (y - x) - c * n_z / g52) / w3
    if c < 0.0 and y <= CORNER_SWITCH:
        corner = x <= CORNER_SWITCH
        if corner.any():
            xc = x[corner]
            w3c = w3[corner]
            gc = g[corner]
            g32c = gc * np.sqrt(gc)
            g52c = g32c * gc
            a_rho[corner] = _corner_v(_CORNER[0], xc, y) / (g32c * w3c)
            a_phi[corner] = _corner_v(_CORNER[1], xc, y) / (g52c * w3c)
            a_z[corner] = _corner_v(_CORNER[2], xc, y) / (g52c * w3c)
    return a_rho, a_phi, a_z


def _brackets(phi, eta):
    """Curly-bracket integrands for canonical phi, shape (3, n)."""
    x = eta * eta
    g = 1.0 + x
    u_rho, u_phi, u_z = _universal_triple(x, g)
    if abs(phi - math.pi) < PI_SNAP:
        return np.stack([2.0 * u_rho, np.zeros_like(x), 2.0 * u_z])
    s = math.sin(phi)
    a_rho, a_phi, a_z = _angular_triple(x, g, s * s, math.cos(phi))
    return np.stack([u_rho + a_rho, u_phi + a_phi, u_z + a_z])


def xi_halfplane(cfg: HalfPlaneConfig, settings=DEFAULT_SETTINGS) -> XiTriple:
    """Exact response triple for the half-plane geometry."""
    phi = cfg.phi_canonical
    sphi = math.sin(phi)
    if phi < 0.5 * math.pi and sphi < PLANE_GUARD_SIN:
        raise PlaneLimitError(
            f"sin(phi) = {sphi:.2e} is below {PLANE_GUARD_SIN}; the geometry "
            f"is a plane mirror at d = rho*sin(phi) to working precision, "
            f"use xi_plane")
    ebar = cfg.E * cfg.rho
    damp = 2.0 * ebar

    def fv(eta):
        out = _brackets(phi, eta)
        if damp:
            out = out * np.exp(-damp * eta)
        return out

    # the bracket pieces cancel down from O(bscale), leaving absolute
    # jitter of a few hundred ulp of bscale; an error floor below that
    # (e.g. on the azimuthal component behind the sheet, which is exactly
    # zero at phi = pi) burns the whole panel budget chasing noise
    probe = _brackets(phi, np.array([1e-3, 0.03, 0.3, 1.0, 3.0]))
    bscale = max(1.0, float(np.max(np.abs(probe))))
    inner = replace(settings, abs_tol=max(
        settings.abs_tol, 500.0 * np.finfo(float).eps * bscale))

    hints = tuple(h for h in (0.25 * sphi, sphi, 4.0 * sphi, 1.0)
                  if h > 1e-9)
    vals, errs, ev, ok = integrate_multi(
        fv, 1.0 / (1.0 + damp), inner, split_hints=hints)
    pref = 1.0 / (16.0 * math.pi * cfg.rho ** 3)
    if not ok:
        raise NonConvergenceError(
            "half-plane quadrature did not converge",
            (pref * vals).tolist(), pref * float(errs.max()), ev)
    return XiTriple(pref * vals[0], pref * vals[1], pref * vals[2],
                    pref * float(errs.max()))


def _nearpi_f(eps):
    e2 = eps * eps
    return (_poly(_series.NEARPI_RHO, e2), _poly(_series.NEARPI_PHI, e2),
            _poly(_series.NEARPI_Z, e2))


def xi_halfplane_nonretarded(rho: float, phi: float) -> XiTriple:
    """Electrostatic (E = 0) closed forms for the half-plane.

    In units of 1/(16 pi rho^3) the components are
        5/3 + cos(phi)/sin^2(phi) + (pi-phi)(1+sin^2 phi)/sin^3(phi),
       -1/3 + 2cos(phi)/sin^2(phi) + (pi-phi)(1+cos^2 phi)/sin^3(phi),
        2/3 + cos(phi)/sin^2(phi) + (pi-phi)/sin^3(phi);
    near phi = pi the angle-dependent pieces combine through an even
    series in pi - phi (they separately diverge like 1/sin^3).
    """
    cfg = HalfPlaneConfig(rho=rho, phi=phi)
    p = cfg.phi_canonical
    eps = math.pi - p
    if eps < NEARPI_EPS_SWITCH:
        f_rho, f_phi, f_z = _nearpi_f(eps)
    else:
        s, c = math.sin(p), math.cos(p)
        s2, s3 = s * s, s ** 3
        f_rho = c / s2 + eps * (1.0 + s2) / s3
        f_phi = 2.0 * c / s2 + eps * (1.0 + c * c) / s3
        f_z = c / s2 + eps / s3
    pref = 1.0 / (16.0 * math.pi * rho ** 3)
    return XiTriple(pref * (5.0 / 3.0 + f_rho), pref * (-1.0 / 3.0 + f_phi),
                    pref * (2.0 / 3.0 + f_z), 0.0)


def xi_halfplane_retarded(rho: float, phi: float,
                          E: float) -> tuple[XiTriple, bool]:
    """Leading large-E closed forms and their validity flag.

    With u = 1/sin^2(phi/2) the components are (3 + 2u + u^2), (u^2 + 2u
    - 3) and (3 + 2u + u^2), all over 64 pi rho^4 E.  The flag is True
    when the atom sits several reduced wavelengths from the material:
    rho E sin(phi) >= threshold on the open side (phi < pi/2), rho E >=
    threshold otherwise.
    """
    cfg = HalfPlaneConfig(rho=rho, phi=phi, E=E)
    if E <= 0.0:
        raise DomainError(f"retarded closed forms need E > 0, got {E!r}")
    p = cfg.phi_canonical
    half = 0.5 * p
    if abs(p - math.pi) < PI_SNAP:
        um1 = 0.0
    else:
        um1 = (math.cos(half) / math.sin(half)) ** 2  # u - 1 = cot^2(phi/2)
    u = 1.0 + um1
    pref = 1.0 / (64.0 * math.pi * rho ** 4 * E)
    perp = pref * (3.0 + u * (2.0 + u))
    azim = pref * um1 * (u + 3.0)
    if p < 0.5 * math.pi:
        valid = rho * E * math.sin(p) >= RETARDED_VALIDITY_THRESHOLD
    else:
        valid = rho * E >= RETARDED_VALIDITY_THRESHOLD
    return XiTriple(perp, azim, perp, 0.0), valid


def force_direction(rho: float, phi: float, E: float,
                    settings=DEFAULT_SETTINGS,
                    step_scale: float = 1e-4) -> tuple[np.ndarray, bool]:
    """Unit force direction on an isotropically polarizable atom.

    Returns (unit vector (rho-component, phi-component), degenerate).
    The shift is proportional to -(Xi_rho + Xi_phi + Xi_z), so the force
    points along the positive gradient of that sum; components are with
    respect to arc length (d rho, rho d phi).  Central differences with
    step step_scale*rho (and the same arc step in the angle); when the
    retarded closed forms are valid at the midpoint they replace the
    quadrature.  A zero gradient is reported as degenerate = True.
    """
    HalfPlaneConfig(rho=rho, phi=phi, E=E)
    if E > 0.0:
        _, use_closed = xi_halfplane_retarded(rho, phi, E)
    else:
        use_closed = False

    def total(r, p):
        if use_closed:
            t, _ = xi_halfplane_retarded(r, p, E)
        else:
            t = xi_halfplane(HalfPlaneConfig(rho=r, phi=p, E=E), settings)
        return t.rho_comp + t.phi_comp + t.z_comp

    h = step_scale * rho
    dphi = step_scale
    g_rho = (total(rho + h, phi) - total(rho - h, phi)) / (2.0 * h)
    g_phi = (total(rho, phi + dphi) - total(rho, phi - dphi)) \
        / (2.0 * rho * dphi)
    vec = np.array([g_rho, g_phi])
    norm = math.hypot(g_rho, g_phi)
    if norm == 0.0:
        return np.zeros(2), True
    return vec / norm, False
