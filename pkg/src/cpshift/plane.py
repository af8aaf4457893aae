"""Response functions for an atom facing a perfectly reflecting plane.

The triple is ordered (normal, parallel, parallel).  Callers map these onto
their own coordinates: the wire limit pairs its rho component with normal,
the half-plane limit pairs its phi component with normal.
"""

from __future__ import annotations

import math

import numpy as np

from .quad import DEFAULT_SETTINGS, integrate_multi
from .types import PlaneConfig, XiTriple


def xi_plane(cfg: PlaneConfig, settings=DEFAULT_SETTINGS) -> XiTriple:
    """Exact plane-mirror triple at distance d and transition energy E.

    Evaluated as the one-dimensional retardation integrals
    (1/2 pi d^3) int_0^inf deta e^(-2 d E eta) / (1+eta^2)^2 (normal) and
    the same with an extra factor (1-eta^2)/(1+eta^2) (parallel).
    """
    s = 2.0 * cfg.d * cfg.E

    def fv(eta):
        u = eta * eta
        g = 1.0 + u
        w = np.exp(-s * eta) / (g * g)
        return np.stack([w, w * (1.0 - u) / g])

    vals, errs, _, _ = integrate_multi(fv, 1.0 / (1.0 + s), settings,
                                       split_hints=(1.0,))
    pref = 1.0 / (2.0 * math.pi * cfg.d**3)
    err = pref * float(errs.max())
    return XiTriple(pref * vals[0], pref * vals[1], pref * vals[1], err)


def xi_plane_nonretarded(d: float) -> XiTriple:
    """Electrostatic limit: exactly (1/(8 d^3), 1/(16 d^3), 1/(16 d^3))."""
    cfg = PlaneConfig(d=d)
    v = 1.0 / (8.0 * cfg.d**3)
    return XiTriple(v, 0.5 * v, 0.5 * v, 0.0)


def xi_plane_retarded(d: float, E: float) -> XiTriple:
    """Fully retarded limit: each component exactly 1/(4 pi d^4 E)."""
    cfg = PlaneConfig(d=d, E=E)
    if not cfg.E > 0:
        raise ValueError("retarded limit needs E > 0")
    v = 1.0 / (4.0 * math.pi * cfg.d**4 * cfg.E)
    return XiTriple(v, v, v, 0.0)
