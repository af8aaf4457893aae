"""Casimir-Polder energy shifts near a wire, a half-plane, and a plane.

Response functions Xi and energy shifts for a neutral atom close to a
perfectly reflecting cylinder, semi-infinite half-plane, or plane
mirror, in natural units hbar = c = 1 with 1/(4 pi eps0) = 1.
"""

from .errors import (CpshiftError, DomainError, NaNIntegrandError,
                     NonConvergenceError, PlaneLimitError,
                     ScaledOverflowError)
from .halfplane import (force_direction, xi_halfplane,
                        xi_halfplane_nonretarded, xi_halfplane_retarded)
from .plane import xi_plane, xi_plane_nonretarded, xi_plane_retarded
from .quad import (DEFAULT_SETTINGS, QuadResult, QuadSettings,
                   integrate_finite, integrate_semi_infinite,
                   sum_primed_series)
from .shift import energy_shift, isotropic_shift
from .types import (EnergyShift, HalfPlaneConfig, PlaneConfig, Regime,
                    Transition, WireConfig, XiTriple)
from .wire import (classify_regime, xi_wire, xi_wire_large_radius_approx,
                   xi_wire_nonretarded, xi_wire_retarded_limit,
                   xi_wire_small_radius_approx)

__version__ = "0.1.0"

__all__ = [
    "CpshiftError", "DomainError", "NaNIntegrandError",
    "NonConvergenceError", "PlaneLimitError", "ScaledOverflowError",
    "DEFAULT_SETTINGS", "QuadResult", "QuadSettings",
    "integrate_finite", "integrate_semi_infinite", "sum_primed_series",
    "EnergyShift", "HalfPlaneConfig", "PlaneConfig", "Regime",
    "Transition", "WireConfig", "XiTriple",
    "xi_plane", "xi_plane_nonretarded", "xi_plane_retarded",
    "xi_wire", "xi_wire_nonretarded", "xi_wire_retarded_limit",
    "xi_wire_large_radius_approx", "xi_wire_small_radius_approx",
    "classify_regime",
    "xi_halfplane", "xi_halfplane_nonretarded", "xi_halfplane_retarded",
    "force_direction",
    "energy_shift", "isotropic_shift",
    "__version__",
]
