"""Assemble physical energy shifts from response triples.

The shift of level i is -sum_j (Xi_rho |mu_rho|^2 + Xi_phi |mu_phi|^2 +
Xi_z |mu_z|^2) over the virtual transitions j, in units where
1/(4 pi eps0) = 1; each Xi is evaluated at that transition's energy.
The component labels follow the geometry's own coordinates, so for the
plane the triple is (normal, parallel, parallel).
"""

from __future__ import annotations

import math
from dataclasses import replace

from . import halfplane as _halfplane
from . import plane as _plane
from . import wire as _wire
from .errors import CpshiftError, DomainError
from .quad import DEFAULT_SETTINGS
from .types import (EnergyShift, HalfPlaneConfig, PlaneConfig, Transition,
                    WireConfig, XiTriple)

GeometryConfig = PlaneConfig | WireConfig | HalfPlaneConfig


def _xi_at(geometry: GeometryConfig, E: float, settings) -> XiTriple:
    cfg = replace(geometry, E=E)
    if isinstance(cfg, PlaneConfig):
        return _plane.xi_plane(cfg, settings)
    if isinstance(cfg, WireConfig):
        return _wire.xi_wire(cfg, settings)
    if isinstance(cfg, HalfPlaneConfig):
        return _halfplane.xi_halfplane(cfg, settings)
    raise DomainError(f"unsupported geometry config {type(geometry).__name__}")


def energy_shift(geometry: GeometryConfig, transitions: list[Transition],
                 settings=DEFAULT_SETTINGS) -> EnergyShift:
    """Total level shift for a set of transitions near one geometry."""
    if not transitions:
        raise DomainError("at least one transition is required")
    if not isinstance(geometry, (PlaneConfig, WireConfig, HalfPlaneConfig)):
        raise DomainError(
            f"unsupported geometry config {type(geometry).__name__}")
    contributions = []
    err = 0.0
    for j, tr in enumerate(transitions):
        try:
            xi = _xi_at(geometry, tr.E_ji, settings)
        except CpshiftError as exc:
            label = f"transition {j} (E_ji={tr.E_ji!r}): "
            exc.args = ((label + str(exc.args[0]),) + exc.args[1:]
                        if exc.args else (label.rstrip(": "),))
            raise
        mr, mp_, mz = tr.mu_sq
        contributions.append(-(xi.rho_comp * mr + xi.phi_comp * mp_
                               + xi.z_comp * mz))
        err += xi.error_estimate * (mr + mp_ + mz)
    return EnergyShift(value=math.fsum(contributions),
                       per_transition=tuple(contributions),
                       error_estimate=err)


def isotropic_shift(geometry: GeometryConfig, E: float, mu_sq_total: float,
                    settings=DEFAULT_SETTINGS) -> EnergyShift:
    """Shift for an isotropically polarizable atom: the total squared
    dipole moment is split evenly over the three components."""
    if not (mu_sq_total > 0) or not math.isfinite(mu_sq_total):
        raise DomainError(
            f"mu_sq_total must be positive and finite, got {mu_sq_total!r}")
    third = mu_sq_total / 3.0
    tr = Transition(E_ji=E, mu_sq=(third, third, third))
    return energy_shift(geometry, [tr], settings)
