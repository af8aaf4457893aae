"""Shared value types: geometry configs, response triples, regime tags.

Conventions used throughout: natural units hbar = c = 1, all lengths in one
arbitrary unit L, transition energies E_ji in 1/L, response functions Xi in
1/L^3.  The wavelength scale paired with E is lambda = 1/E.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError


def _check_positive(name, value):
    if not (value > 0) or not math.isfinite(value):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def _check_nonnegative(name, value):
    if value < 0 or not math.isfinite(value):
        raise DomainError(f"{name} must be >= 0 and finite, got {value!r}")


@dataclass(frozen=True)
class XiTriple:
    """The three dipole-orientation response functions.

    For the wire: (Xi_rho, Xi_phi, Xi_z) in cylinder coordinates around the
    wire axis.  For the half-plane: cylinder coordinates around the edge.
    For the plane: (normal, parallel, parallel).  Units 1/L^3, except the
    retarded-limit and approximation triples which carry the coefficient of
    1/E and hence are 1/L^4 per unit E.
    """

    rho_comp: float
    phi_comp: float
    z_comp: float
    error_estimate: float = 0.0

    def as_tuple(self):
        return (self.rho_comp, self.phi_comp, self.z_comp)

    def scaled(self, factor: float) -> "XiTriple":
        return XiTriple(self.rho_comp * factor, self.phi_comp * factor,
                        self.z_comp * factor, self.error_estimate * abs(factor))


@dataclass(frozen=True)
class PlaneConfig:
    """Atom at distance d from a perfectly reflecting infinite plane."""

    d: float
    E: float = 0.0

    def __post_init__(self):
        _check_positive("d", self.d)
        _check_nonnegative("E", self.E)


@dataclass(frozen=True)
class WireConfig:
    """Atom at radius rho outside a perfectly reflecting cylinder of
    radius R; distance to the surface is d = rho - R."""

    R: float
    rho: float
    E: float = 0.0

    def __post_init__(self):
        _check_positive("R", self.R)
        _check_positive("rho", self.rho)
        _check_nonnegative("E", self.E)
        if not self.rho > self.R:
            raise DomainError(
                f"atom must sit outside the wire: rho={self.rho!r} <= R={self.R!r}")

    @property
    def d(self) -> float:
        return self.rho - self.R


@dataclass(frozen=True)
class HalfPlaneConfig:
    """Atom at distance rho from the edge of a half-plane, polar angle phi
    measured from the half-plane surface, phi in (0, 2pi)."""

    rho: float
    phi: float
    E: float = 0.0

    def __post_init__(self):
        _check_positive("rho", self.rho)
        _check_nonnegative("E", self.E)
        if not 0.0 < self.phi < 2.0 * math.pi:
            raise DomainError(
                f"phi must lie strictly inside (0, 2*pi), got {self.phi!r}")

    @property
    def phi_canonical(self) -> float:
        """Angle folded into (0, pi] using the phi <-> 2pi - phi symmetry."""
        return self.phi if self.phi <= math.pi else 2.0 * math.pi - self.phi


REGIME_TAGS = ("NR_close", "NR_mid", "NR_thin",
               "RET_close", "RET_thin", "RET_thin2")


@dataclass(frozen=True)
class Regime:
    """Asymptotic regime from the ordering of (d, R, lambda).

    clear is False inside the hysteresis band where two adjacent scales are
    within a factor of 3 of each other, i.e. no regime is clearly attained.
    """

    tag: str
    clear: bool

    def __post_init__(self):
        if self.tag not in REGIME_TAGS:
            raise DomainError(f"unknown regime tag {self.tag!r}")


@dataclass(frozen=True)
class Transition:
    """One virtual transition: energy E_ji and the squared dipole
    matrix-element components (|mu_rho|^2, |mu_phi|^2, |mu_z|^2).

    E_ji = 0 is accepted and means the electrostatic limit.
    """

    E_ji: float
    mu_sq: tuple[float, float, float]

    def __post_init__(self):
        _check_nonnegative("E_ji", self.E_ji)
        if len(self.mu_sq) != 3:
            raise DomainError("mu_sq must have exactly 3 components")
        for c in self.mu_sq:
            _check_nonnegative("mu_sq component", c)
        if not any(c > 0 for c in self.mu_sq):
            raise DomainError("mu_sq components must not all be zero")


@dataclass(frozen=True)
class EnergyShift:
    """Total shift in reduced units mu^2/(4 pi eps0 L^3), with the list of
    per-transition contributions (same order as the input transitions)."""

    value: float
    per_transition: tuple[float, ...] = field(default_factory=tuple)
    error_estimate: float = 0.0
