"""Acceptance gate: one test per shipping criterion.

Each test prints a single PASS/FAIL line (run with -s or -rA to see all
of them) and then asserts, so the pytest summary matches the printed
lines.  Timed criteria are measured after a warmup call of the same
code path; the limits refer to steady-state numerical cost on one core.
"""

import json
import math
import time
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings as hsettings
from hypothesis import strategies as st

from cpshift import halfplane, plane, specfun, wire
from cpshift.quad import QuadSettings
from cpshift.types import HalfPlaneConfig, PlaneConfig, WireConfig

FIXTURES = Path(__file__).parent / "fixtures"
WIRE_ORACLE = json.loads((FIXTURES / "wire_oracle.json").read_text())

SCALE_SETTINGS = QuadSettings(rel_tol=1e-12)


def _report(num, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:2d}: {status}  ({detail})", flush=True)
    return ok


def _rel(got, want):
    return abs(got - want) / abs(want)


def _triple(xi):
    return xi.rho_comp, xi.phi_comp, xi.z_comp


def test_criterion_01_plane_electrostatic():
    plane.xi_plane(PlaneConfig(d=1.0))  # warmup
    t0 = time.perf_counter()
    xi = plane.xi_plane(PlaneConfig(d=1.0))
    dt = time.perf_counter() - t0
    devs = [_rel(g, w) for g, w in zip(_triple(xi), (0.125, 0.0625, 0.0625))]
    ok = max(devs) < 1e-9 and dt < 0.010
    assert _report(1, ok, f"max rel dev {max(devs):.2e}, {dt*1e3:.2f} ms")


def test_criterion_02_plane_retarded():
    cfg = PlaneConfig(d=1.0, E=100.0)
    plane.xi_plane(cfg)  # warmup
    t0 = time.perf_counter()
    xi = plane.xi_plane(cfg)
    dt = time.perf_counter() - t0
    scaled = [4.0 * math.pi * 100.0 * v for v in _triple(xi)]
    ok = all(0.999 <= s <= 1.001 for s in scaled) and dt < 0.010
    assert _report(2, ok,
                   f"4 pi d^4 E xi in [{min(scaled):.6f}, {max(scaled):.6f}]"
                   f", {dt*1e3:.2f} ms")


def test_criterion_03_wire_plane_recovery_nonretarded():
    d = 0.01
    ref = (0.125 / d**3, 0.0625 / d**3, 0.0625 / d**3)
    t0 = time.perf_counter()
    xi = wire.xi_wire(WireConfig(R=1.0, rho=1.0 + d, E=0.0))
    dt = time.perf_counter() - t0
    devs = [_rel(g, w) for g, w in zip(_triple(xi), ref)]
    ok = max(devs) < 0.05 and dt < 5.0
    assert _report(3, ok, f"max rel dev {max(devs)*100:.2f}%, {dt:.2f} s")


def test_criterion_04_wire_plane_recovery_retarded():
    d = 0.01
    t0 = time.perf_counter()
    xi = wire.xi_wire_retarded_limit(1.0, 1.0 + d)
    dt = time.perf_counter() - t0
    want = 1.0 / (4.0 * math.pi)
    devs = [_rel(d**4 * v, want) for v in _triple(xi)]
    ok = max(devs) < 0.05 and dt < 5.0
    assert _report(4, ok, f"max rel dev {max(devs)*100:.2f}%, {dt:.2f} s")


def test_criterion_05_fig2_approximations():
    grid = np.geomspace(0.05, 50.0, 30)
    worst_big = worst_small = 0.0
    t0 = time.perf_counter()
    for ratio in grid:
        rho = 1.0 + ratio
        exact = _triple(wire.xi_wire_retarded_limit(1.0, rho))
        if ratio <= 1.0:
            big = _triple(wire.xi_wire_large_radius_approx(1.0, rho))
            worst_big = max(worst_big,
                            max(_rel(b, e) for b, e in zip(big, exact)))
        if ratio >= 20.0:
            small = _triple(wire.xi_wire_small_radius_approx(1.0, rho))
            worst_small = max(worst_small,
                              max(_rel(s, e) for s, e in zip(small, exact)))
    dt = time.perf_counter() - t0
    ok = worst_big < 0.05 and worst_small < 0.05 and dt < 60.0
    assert _report(5, ok,
                   f"worst large-R dev {worst_big*100:.2f}% for d/R<=1, "
                   f"worst small-R dev {worst_small*100:.2f}% for d/R>=20, "
                   f"{dt:.1f} s")


def test_criterion_06_wire_oracle_equivalence():
    rows = [r for r in WIRE_ORACLE["exact"]
            if r["R"] == 1.0 and r["rho"] == 2.0
            and r["E"] in (0.1, 1.0, 10.0)]
    assert len(rows) == 3
    worst = 0.0
    for row in rows:
        xi = wire.xi_wire(WireConfig(R=1.0, rho=2.0, E=row["E"]))
        worst = max(worst, _rel(xi.rho_comp, row["xi_rho"]),
                    _rel(xi.phi_comp, row["xi_phi"]),
                    _rel(xi.z_comp, row["xi_z"]))
    ok = worst < 1e-6
    assert _report(6, ok, f"worst rel dev {worst:.2e} over E in 0.1,1,10")


def test_criterion_07_halfplane_nonretarded():
    angles = (math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi)
    for phi in angles:  # warmup
        halfplane.xi_halfplane(HalfPlaneConfig(rho=1.0, phi=phi, E=1e-4))
    worst = 0.0
    t0 = time.perf_counter()
    for phi in angles:
        got = _triple(halfplane.xi_halfplane(
            HalfPlaneConfig(rho=1.0, phi=phi, E=1e-4)))
        want = _triple(halfplane.xi_halfplane_nonretarded(1.0, phi))
        for g, w in zip(got, want):
            worst = max(worst, abs(g - w) / max(abs(w), 1e-30))
    dt = time.perf_counter() - t0
    ok = worst < 1e-3 and dt < 1.0
    assert _report(7, ok, f"worst rel dev {worst:.2e}, {dt*1e3:.0f} ms")


def test_criterion_08_halfplane_retarded():
    angles = (math.pi / 2, 3 * math.pi / 4, math.pi)
    E = 100.0
    for phi in angles:  # warmup
        halfplane.xi_halfplane(HalfPlaneConfig(rho=1.0, phi=phi, E=E))
    worst = 0.0
    t0 = time.perf_counter()
    for phi in angles:
        got = _triple(halfplane.xi_halfplane(
            HalfPlaneConfig(rho=1.0, phi=phi, E=E)))
        closed, valid = halfplane.xi_halfplane_retarded(1.0, phi, E)
        assert valid
        for g, w in zip(got, _triple(closed)):
            if w == 0.0:
                worst = max(worst, abs(g) / closed.rho_comp)
            else:
                worst = max(worst, _rel(g, w))
    dt = time.perf_counter() - t0
    ok = worst < 0.01 and dt < 1.0
    assert _report(8, ok, f"worst rel dev {worst*100:.3f}%, {dt*1e3:.0f} ms")


def test_criterion_09_edge_null():
    worst = 0.0
    for E in (0.1, 1.0, 10.0, 100.0):
        xi = halfplane.xi_halfplane(HalfPlaneConfig(rho=1.0, phi=math.pi,
                                                    E=E))
        worst = max(worst, abs(xi.phi_comp) / xi.rho_comp)
    ok = worst < 1e-10
    assert _report(9, ok, f"worst |xi_phi|/xi_rho {worst:.2e}")


def test_criterion_10_halfplane_to_plane():
    phi = 0.01
    rho = 1.0 / math.sin(phi)  # so that d = rho sin(phi) = 1
    worst = 0.0
    for E in (0.01, 1.0, 100.0):
        hp = halfplane.xi_halfplane(HalfPlaneConfig(rho=rho, phi=phi, E=E))
        pl = plane.xi_plane(PlaneConfig(d=1.0, E=E))
        # tilted frame: the half-plane phi direction is the plane normal,
        # rho and z lie in the mirror plane
        worst = max(worst, _rel(hp.phi_comp, pl.rho_comp),
                    _rel(hp.rho_comp, pl.phi_comp),
                    _rel(hp.z_comp, pl.z_comp))
    ok = worst < 0.01
    assert _report(10, ok, f"worst rel dev {worst*100:.3f}%")


# -- criterion 11: property-based symmetry suite (>= 200 cases) ---------

_CASES = {"n": 0}
_H = dict(deadline=None, derandomize=True,
          suppress_health_check=[HealthCheck.too_slow])


@hsettings(max_examples=80, **_H)
@given(rho=st.floats(0.5, 3.0), phi=st.floats(0.05, 3.0),
       E=st.floats(0.0, 3.0))
def test_criterion_11a_reflection(rho, phi, E):
    # phi is kept below 3.0: within ~1e-1 of pi the azimuthal component
    # sinks toward the cancellation noise floor of the brackets and no
    # longer supports a 1e-10 relative comparison
    a = halfplane.xi_halfplane(HalfPlaneConfig(rho=rho, phi=phi, E=E),
                               SCALE_SETTINGS)
    b = halfplane.xi_halfplane(
        HalfPlaneConfig(rho=rho, phi=2.0 * math.pi - phi, E=E),
        SCALE_SETTINGS)
    _CASES["n"] += 1
    for x, y in zip(_triple(a), _triple(b)):
        assert abs(x - y) <= 1e-10 * abs(y)


@hsettings(max_examples=50, **_H)
@given(rho=st.floats(0.5, 3.0), phi=st.floats(0.05, 3.0),
       E=st.floats(0.0, 3.0), lam=st.floats(0.2, 5.0))
def test_criterion_11b_halfplane_scaling(rho, phi, E, lam):
    base = halfplane.xi_halfplane(HalfPlaneConfig(rho=rho, phi=phi, E=E),
                                  SCALE_SETTINGS)
    scaled = halfplane.xi_halfplane(
        HalfPlaneConfig(rho=lam * rho, phi=phi, E=E / lam), SCALE_SETTINGS)
    _CASES["n"] += 1
    for x, y in zip(_triple(scaled), _triple(base)):
        assert abs(x * lam**3 - y) <= 1e-10 * abs(y)


@hsettings(max_examples=40, **_H)
@given(d=st.floats(0.3, 4.0), E=st.floats(0.0, 10.0),
       lam=st.floats(0.2, 5.0))
def test_criterion_11c_plane_scaling(d, E, lam):
    base = plane.xi_plane(PlaneConfig(d=d, E=E), SCALE_SETTINGS)
    scaled = plane.xi_plane(PlaneConfig(d=lam * d, E=E / lam),
                            SCALE_SETTINGS)
    _CASES["n"] += 1
    for x, y in zip(_triple(scaled), _triple(base)):
        assert abs(x * lam**3 - y) <= 1e-10 * abs(y)


@hsettings(max_examples=35, **_H)
@given(beta=st.floats(0.2, 0.75), rho=st.floats(0.5, 2.0),
       Ebar=st.floats(0.1, 4.0), lam=st.floats(0.25, 4.0))
def test_criterion_11d_wire_scaling(beta, rho, Ebar, lam):
    base = wire.xi_wire(WireConfig(R=beta * rho, rho=rho, E=Ebar / rho),
                        SCALE_SETTINGS)
    scaled = wire.xi_wire(
        WireConfig(R=lam * beta * rho, rho=lam * rho, E=Ebar / rho / lam),
        SCALE_SETTINGS)
    _CASES["n"] += 1
    for x, y in zip(_triple(scaled), _triple(base)):
        assert abs(x * lam**3 - y) <= 1e-10 * abs(y)


def test_criterion_11_case_count():
    ok = _CASES["n"] >= 200
    assert _report(11, ok, f"{_CASES['n']} randomized symmetry cases, "
                           f"reflection and lambda-scaling at 1e-10")


def test_criterion_12_special_functions():
    table = np.loadtxt(FIXTURES / "bessel_oracle.txt")
    worst_tab = 0.0
    for m, x, iv, kv, ivp, kvp in table:
        i = specfun.bessel_i_scaled(int(m), x)
        k = specfun.bessel_k_scaled(int(m), x)
        for got, want in ((i.value, iv), (i.derivative, ivp),
                          (k.value, kv), (k.derivative, kvp)):
            worst_tab = max(worst_tab, _rel(got, want))
    worst_id = 0.0
    for m in (0, 1, 2, 5, 13, 40):
        for x in np.geomspace(0.5, 300.0, 12):
            if m == 40 and x < 3.0:
                continue  # I_40 underflows the scaled double range there
            w = specfun.wronskian_check(m, float(x))
            worst_id = max(worst_id, abs(w * x + 1.0))
            i = specfun.bessel_i_scaled(m, float(x))
            k = specfun.bessel_k_scaled(m, float(x))
            ip1 = specfun.bessel_i_scaled(m + 1, float(x))
            kp1 = specfun.bessel_k_scaled(m + 1, float(x))
            worst_id = max(
                worst_id,
                _rel(i.derivative, ip1.value + m / x * i.value),
                _rel(k.derivative, -(kp1.value - m / x * k.value)))
    ok = worst_tab < 1e-12 and worst_id < 1e-10
    assert _report(12, ok, f"oracle table dev {worst_tab:.2e}, "
                           f"identity dev {worst_id:.2e}")
