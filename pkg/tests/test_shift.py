import math

import pytest
from numpy.testing import assert_allclose

from cpshift import plane
from cpshift.errors import DomainError, PlaneLimitError
from cpshift.shift import energy_shift, isotropic_shift
from cpshift.types import (HalfPlaneConfig, PlaneConfig, Transition,
                           WireConfig)

PLANE = PlaneConfig(d=1.0)


def test_single_transition_matches_response():
    tr = Transition(E_ji=0.5, mu_sq=(1.0, 2.0, 3.0))
    res = energy_shift(PLANE, [tr])
    xi = plane.xi_plane(PlaneConfig(d=1.0, E=0.5))
    want = -(xi.rho_comp + 2.0 * xi.phi_comp + 3.0 * xi.z_comp)
    assert_allclose(res.value, want, rtol=1e-12)
    assert res.per_transition == (res.value,)
    assert res.value < 0.0


def test_shift_is_additive_over_transitions():
    t1 = Transition(E_ji=0.2, mu_sq=(1.0, 0.0, 0.0))
    t2 = Transition(E_ji=2.0, mu_sq=(0.0, 1.0, 1.0))
    both = energy_shift(PLANE, [t1, t2])
    one = energy_shift(PLANE, [t1])
    two = energy_shift(PLANE, [t2])
    assert_allclose(both.value, one.value + two.value, rtol=1e-12)
    assert both.per_transition == (one.value, two.value)
    assert both.error_estimate >= max(one.error_estimate,
                                      two.error_estimate)


def test_linearity_in_dipole_strength():
    tr = Transition(E_ji=1.0, mu_sq=(1.0, 1.0, 1.0))
    big = Transition(E_ji=1.0, mu_sq=(7.0, 7.0, 7.0))
    assert_allclose(energy_shift(PLANE, [big]).value,
                    7.0 * energy_shift(PLANE, [tr]).value, rtol=1e-12)


def test_works_for_all_geometries():
    tr = Transition(E_ji=1.0, mu_sq=(1.0, 1.0, 1.0))
    for geo in (PLANE, WireConfig(R=1.0, rho=2.0, E=0.0),
                HalfPlaneConfig(rho=1.0, phi=2.0)):
        res = energy_shift(geo, [tr])
        assert res.value < 0.0
        assert math.isfinite(res.error_estimate)


def test_transition_energy_overrides_config_energy():
    # the geometry's own E field is ignored in favor of each E_ji
    cfg_a = PlaneConfig(d=1.0, E=99.0)
    cfg_b = PlaneConfig(d=1.0, E=0.0)
    tr = Transition(E_ji=1.0, mu_sq=(1.0, 0.0, 0.0))
    assert energy_shift(cfg_a, [tr]).value == \
        energy_shift(cfg_b, [tr]).value


def test_isotropic_shift_splits_in_thirds():
    res = isotropic_shift(PLANE, 1.0, 3.0)
    tr = Transition(E_ji=1.0, mu_sq=(1.0, 1.0, 1.0))
    assert_allclose(res.value, energy_shift(PLANE, [tr]).value, rtol=1e-12)
    with pytest.raises(DomainError):
        isotropic_shift(PLANE, 1.0, 0.0)
    with pytest.raises(DomainError):
        isotropic_shift(PLANE, 1.0, math.inf)


def test_failure_is_labeled_with_transition_index():
    # second transition drives the half-plane into its plane-limit guard
    geo = HalfPlaneConfig(rho=1.0, phi=1e-7)
    ts = [Transition(E_ji=1.0, mu_sq=(1.0, 1.0, 1.0))]
    with pytest.raises(PlaneLimitError, match=r"^transition 0 \(E_ji=1\.0\)"):
        energy_shift(geo, ts)


def test_rejects_bad_inputs():
    tr = Transition(E_ji=1.0, mu_sq=(1.0, 1.0, 1.0))
    with pytest.raises(DomainError):
        energy_shift(PLANE, [])
    with pytest.raises(DomainError):
        energy_shift("plane", [tr])
    with pytest.raises(DomainError):
        Transition(E_ji=-1.0, mu_sq=(1.0, 1.0, 1.0))
    with pytest.raises(DomainError):
        Transition(E_ji=1.0, mu_sq=(0.0, 0.0, 0.0))
    with pytest.raises(DomainError):
        Transition(E_ji=1.0, mu_sq=(1.0, -1.0, 1.0))
    with pytest.raises(DomainError):
        Transition(E_ji=1.0, mu_sq=(1.0, 1.0))
