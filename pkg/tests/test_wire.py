import json
import math
from pathlib import Path

import numpy as np
import pytest
from numpy.testing import assert_allclose

from cpshift import plane, wire
from cpshift.errors import DomainError
from cpshift.quad import DEFAULT_SETTINGS, QuadSettings
from cpshift.types import PlaneConfig, WireConfig

ORACLE = json.loads((Path(__file__).parent / "fixtures"
                     / "wire_oracle.json").read_text())

TIGHT = QuadSettings(rel_tol=1e-10)


def _triple(xi):
    return xi.rho_comp, xi.phi_comp, xi.z_comp


def _oracle_triple(row):
    return row["xi_rho"], row["xi_phi"], row["xi_z"]


@pytest.mark.parametrize("row", ORACLE["exact"],
                         ids=lambda r: f"R{r['R']}-rho{r['rho']}-E{r['E']}")
def test_exact_matches_oracle(row):
    xi = wire.xi_wire(WireConfig(R=row["R"], rho=row["rho"], E=row["E"]),
                      TIGHT)
    assert_allclose(_triple(xi), _oracle_triple(row), rtol=2e-8)


def test_nonretarded_matches_oracle():
    row = ORACLE["nonretarded"][0]
    xi = wire.xi_wire_nonretarded(row["R"], row["rho"], TIGHT)
    assert_allclose(_triple(xi), _oracle_triple(row), rtol=2e-8)
    # xi_wire at E=0 must take the same route
    via = wire.xi_wire(WireConfig(R=row["R"], rho=row["rho"], E=0.0), TIGHT)
    assert _triple(via) == _triple(xi)


@pytest.mark.parametrize("row", ORACLE["retarded_limit"],
                         ids=lambda r: f"rho{r['rho']}")
def test_retarded_limit_matches_oracle(row):
    xi = wire.xi_wire_retarded_limit(row["R"], row["rho"], TIGHT)
    assert_allclose(_triple(xi), _oracle_triple(row), rtol=2e-8)


@pytest.mark.parametrize("row", ORACLE["large_radius"],
                         ids=lambda r: f"rho{r['rho']}")
def test_large_radius_matches_oracle(row):
    xi = wire.xi_wire_large_radius_approx(row["R"], row["rho"], TIGHT)
    assert_allclose(_triple(xi), _oracle_triple(row), rtol=2e-10)


@pytest.mark.parametrize("row", ORACLE["small_radius"],
                         ids=lambda r: f"rho{r['rho']}")
def test_small_radius_matches_oracle(row):
    xi = wire.xi_wire_small_radius_approx(row["R"], row["rho"], TIGHT)
    assert_allclose(_triple(xi), _oracle_triple(row), rtol=2e-10)


def test_z_component_partial_terms():
    # per-m contributions, not just the converged sum, pin down the
    # integrand itself
    sec = ORACLE["z_terms"]
    beta = sec["R"] / sec["rho"]
    term = wire._term_factory(beta, sec["E"] * sec["rho"], "exact",
                              DEFAULT_SETTINGS)
    pref = 2.0 / math.pi / sec["rho"] ** 3
    for m, want in enumerate(sec["terms"]):
        vals, _, _ = term(m, 0.0)
        assert_allclose(pref * vals[2], want, rtol=1e-9)


def test_integrand_rows_nonnegative():
    qs = np.geomspace(1e-6, 80.0, 120)
    for m in (0, 1, 2, 7, 40, 120):
        for beta, Ebar in ((0.2, 0.0), (0.5, 1.0), (0.99, 3.0), (0.9, 40.0)):
            for mode in ("exact", "nonret", "retlim"):
                rows = wire._integrand_rows(m, beta, Ebar, mode, qs)
                assert np.isfinite(rows).all()
                assert (rows >= 0.0).all(), (m, beta, Ebar, mode)


def test_components_positive_and_finite():
    for cfg in (WireConfig(R=1.0, rho=1.05, E=2.0),
                WireConfig(R=1.0, rho=4.0, E=0.3),
                WireConfig(R=0.1, rho=3.0, E=1.0)):
        xi = wire.xi_wire(cfg)
        assert all(v > 0.0 for v in _triple(xi))
        assert xi.error_estimate < 1e-6 * max(_triple(xi))


def test_scaling_law():
    base = wire.xi_wire(WireConfig(R=1.0, rho=1.7, E=0.8), TIGHT)
    for lam in (0.5, 3.7):
        scaled = wire.xi_wire(
            WireConfig(R=lam, rho=1.7 * lam, E=0.8 / lam), TIGHT)
        assert_allclose([v * lam**3 for v in _triple(scaled)],
                        _triple(base), rtol=1e-10)


def test_small_E_joins_electrostatic_limit():
    stat = wire.xi_wire_nonretarded(1.0, 2.0, TIGHT)
    near = wire.xi_wire(WireConfig(R=1.0, rho=2.0, E=1e-4), TIGHT)
    assert_allclose(_triple(near), _triple(stat), rtol=1e-3)


def test_large_E_joins_retarded_limit():
    lim = wire.xi_wire_retarded_limit(1.0, 2.0, TIGHT)
    far = wire.xi_wire(WireConfig(R=1.0, rho=2.0, E=1000.0), TIGHT)
    assert_allclose([1000.0 * v for v in _triple(far)], _triple(lim),
                    rtol=1e-2)


def test_plane_recovery_close_to_surface():
    d = 0.01
    ref = plane.xi_plane(PlaneConfig(d=d))
    xi = wire.xi_wire_nonretarded(1.0, 1.0 + d)
    for got, want in zip(_triple(xi), _triple(ref)):
        assert abs(got / want - 1.0) < 0.05


def test_regime_classification():
    # d=0.1, R=1, lam=10: d < R < lam, electrostatic near a fat wire
    reg = wire.classify_regime(0.1, 1.0, 10.0)
    assert reg.tag == "NR_close" and reg.clear
    reg = wire.classify_regime(1.0, 0.01, 100.0)
    assert reg.tag == "NR_thin" and reg.clear
    reg = wire.classify_regime(0.1, 1.0, 0.001)
    assert reg.tag == "RET_close" and reg.clear
    reg = wire.classify_regime(100.0, 1.0, 0.01)
    assert reg.tag == "RET_thin" and reg.clear
    # adjacent scales within one REGIME_BAND factor are not clear-cut
    assert not wire.classify_regime(1.0, 1.2, 50.0).clear
    with pytest.raises(DomainError):
        wire.classify_regime(-1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        wire.classify_regime(1.0, 1.0, 0.0)


def test_rejects_bad_config():
    with pytest.raises(DomainError):
        WireConfig(R=0.0, rho=1.0, E=1.0)
    with pytest.raises(DomainError):
        WireConfig(R=2.0, rho=1.0, E=1.0)  # atom inside the wire
    with pytest.raises(DomainError):
        WireConfig(R=1.0, rho=2.0, E=-1.0)
    with pytest.raises(DomainError):
        WireConfig(R=1.0, rho=math.nan, E=1.0)
