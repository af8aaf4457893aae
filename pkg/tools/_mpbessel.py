"""Robust mpmath modified-Bessel helpers shared by the oracle generators.

besseli gets a raised maxterms (convergent series, just long at large
argument); besselk gets precision escalation only, since its large-x
asymptotic branch diverges if maxterms is forced up.  Derivatives use the
exact recurrence identities, which is fine for oracle purposes because the
frozen bessel_oracle table pins the derivatives independently via mp.diff.
"""

import mpmath
from mpmath.libmp.libhyper import NoConvergence


def _call(fn, m, x, kw):
    for dps_extra in (0, 40, 120, 280, 600):
        try:
            with mpmath.workdps(mpmath.mp.dps + dps_extra):
                return +fn(m, x, **kw)
        except (ValueError, NoConvergence):
            continue
    raise RuntimeError(f"no convergence for {fn.__name__}({m}, {x})")


def besi(m, x):
    return _call(mpmath.besseli, m, x, {"maxterms": 10**6})


def besk(m, x):
    return _call(mpmath.besselk, m, x, {})


def besip(m, x):
    if m == 0:
        return besi(1, x)
    return (besi(m - 1, x) + besi(m + 1, x)) / 2


def beskp(m, x):
    if m == 0:
        return -besk(1, x)
    return -(besk(m - 1, x) + besk(m + 1, x)) / 2
