"""Freeze reference values for the plane and half-plane geometries.

The half-plane integrands are evaluated in their literal published-bracket
form: the three curly-bracket expressions contain individually divergent
4/eta^4 pieces that cancel, so each evaluation runs at a working precision
raised by the exactly-known number of cancelled digits, 4*log10(1/eta).
This keeps the oracle algebraically independent of the reorganized
cancellation-free form used by the implementation.

Writes tests/fixtures/plane_oracle.json and
tests/fixtures/halfplane_oracle.json, and prints margin pre-checks for the
closed-form asymptotics at the tolerance edges exercised by the test suite.

    python3 tools/gen_plane_halfplane_oracle.py
"""

import json
import time

import mpmath

mpmath.mp.dps = 30


def plane_pair(d, E):
    """Perpendicular and parallel response integrals for a plane mirror."""

    def f_perp(eta):
        return mpmath.exp(-2 * d * E * eta) / (1 + eta * eta) ** 2

    def f_par(eta):
        u = eta * eta
        return mpmath.exp(-2 * d * E * eta) * (1 - u) / (1 + u) ** 3

    scale = 1 / (1 + 2 * d * E)
    pts = [0, scale, 1, 10 / (1 + d * E), mpmath.inf]
    pref = 1 / (2 * mpmath.pi * d**3)
    return (pref * mpmath.quad(f_perp, sorted(set(pts))),
            pref * mpmath.quad(f_par, sorted(set(pts))))


def bracket(which, phi, eta):
    """Literal integrand bracket, with precision matched to the 4/eta^4
    cancellation depth."""
    extra = max(0, int(4 * mpmath.log10(1 / eta))) + 15 if eta < 1 else 15
    with mpmath.workdps(mpmath.mp.dps + extra):
        eta = mpmath.mpf(eta)
        s2 = mpmath.sin(phi) ** 2
        c = mpmath.cos(phi)
        e2 = eta * eta
        e4 = e2 * e2
        g = 1 + e2
        w = e2 + s2
        if which == "rho":
            val = ((3 * e4 + 6 * e2 + 4) / (e4 * g ** mpmath.mpf("1.5"))
                   - 4 / e4
                   + 4 / w**3 * ((2 * e2 + 1) * s2 - e2)
                   + c / (g ** mpmath.mpf("1.5") * w**3)
                   * ((2 + e2) * s2**2 + 2 * s2 * (3 * e4 + 6 * e2 + 2)
                      - e2 * (3 * e4 + 6 * e2 + 4)))
        elif which == "phi":
            val = ((3 * e2 * e4 + 6 * e4 + 10 * e2 + 4) / (e4 * g ** mpmath.mpf("2.5"))
                   - 4 / e4
                   + 4 / w**3 * ((1 - 2 * e2) * s2 + e2)
                   + c / (g ** mpmath.mpf("2.5") * w**3)
                   * ((2 - 2 * e2 - e4) * s2**2
                      + 2 * s2 * (2 + 2 * e2 - 6 * e4 - 3 * e2 * e4)
                      + e2 * (3 * e2 * e4 + 6 * e4 + 10 * e2 + 4)))
        else:
            val = ((9 * e4 + 10 * e2 + 4) / (e4 * g ** mpmath.mpf("2.5"))
                   - 4 / e4
                   + 4 * (s2 - e2) / w**3
                   - c / (g ** mpmath.mpf("2.5") * w**3)
                   * ((e2 - 2) * s2**2 + 2 * (e4 - 4 * e2 - 2) * s2
                      + e2 * (9 * e4 + 10 * e2 + 4)))
        return +val


def halfplane_xi(which, rho, phi, E):
    def f(eta):
        if eta == 0:
            return mpmath.mpf(0)
        return mpmath.exp(-2 * rho * E * eta) * bracket(which, phi, eta)

    pts = [0, mpmath.mpf(1) / (1 + 2 * rho * E), 1, 5, mpmath.inf]
    return mpmath.quad(f, sorted(set(pts))) / (16 * mpmath.pi * rho**3)


def halfplane_triple(rho, phi, E):
    return {w: halfplane_xi(w, rho, phi, E) for w in ("rho", "phi", "z")}


def nonret_closed(rho, phi):
    s = mpmath.sin(phi)
    c = mpmath.cos(phi)
    p = mpmath.pi - phi
    r3 = mpmath.pi * rho**3
    return {
        "rho": 5 / (48 * r3) + c / (16 * r3 * s**2) + p * (1 + s**2) / (16 * r3 * s**3),
        "phi": -1 / (48 * r3) + c / (8 * r3 * s**2) + p * (1 + c**2) / (16 * r3 * s**3),
        "z": 1 / (24 * r3) + c / (16 * r3 * s**2) + p / (16 * r3 * s**3),
    }


def ret_closed(rho, phi, E):
    u = 1 / mpmath.sin(phi / 2) ** 2
    pref = 1 / (64 * mpmath.pi * rho**4 * E)
    return {"rho": pref * (3 + u * u + 2 * u),
            "phi": pref * (u * u + 2 * u - 3),
            "z": pref * (3 + u * u + 2 * u)}


def force_direction(rho, phi, E):
    """Unit vector along -grad of the isotropic sum, by central differences."""
    h = mpmath.mpf("1e-8")

    def total(r, p):
        t = halfplane_triple(r, p, E)
        return t["rho"] + t["phi"] + t["z"]

    # shift is negative-proportional to the Xi sum, so the force points
    # along +grad(sum)
    g_rho = (total(rho + h, phi) - total(rho - h, phi)) / (2 * h)
    g_phi = (total(rho, phi + h) - total(rho, phi - h)) / (2 * h) / rho
    norm = mpmath.sqrt(g_rho**2 + g_phi**2)
    return g_rho / norm, g_phi / norm


def main():
    t0 = time.time()

    plane_rows = []
    for d, E in ((1.0, 0.0), (1.0, 0.1), (1.0, 1.0), (1.0, 10.0),
                 (0.5, 2.0), (1.0, 100.0)):
        perp, par = plane_pair(mpmath.mpf(d), mpmath.mpf(E))
        plane_rows.append({"d": d, "E": E,
                           "perp": float(perp), "par": float(par)})
        print(f"plane d={d} E={E} done {time.time()-t0:.0f}s")
    with open("tests/fixtures/plane_oracle.json", "w") as fh:
        json.dump({"plane": plane_rows}, fh, indent=1)

    hp = {"exact": [], "bracket": [], "force_direction": []}
    configs = ((1.0, mpmath.pi / 4, 1.0), (1.0, 2 * mpmath.pi / 3, 1.0),
               (2.0, mpmath.pi / 2, 0.3), (1.0, mpmath.pi, 1.0),
               (1.0, 3 * mpmath.pi / 4, 0.0))
    for rho, phi, E in configs:
        tri = halfplane_triple(mpmath.mpf(rho), phi, mpmath.mpf(E))
        hp["exact"].append({"rho": float(rho), "phi": float(phi), "E": float(E),
                            "xi_rho": float(tri["rho"]),
                            "xi_phi": float(tri["phi"]),
                            "xi_z": float(tri["z"])})
        print(f"halfplane rho={float(rho)} phi={float(phi):.6f} E={float(E)} "
              f"done {time.time()-t0:.0f}s")

    for phi, eta in ((mpmath.pi / 3, 0.7), (mpmath.pi / 3, 1e-3),
                     (3 * mpmath.pi / 4, 0.05), (3 * mpmath.pi / 4, 1e-4),
                     (mpmath.mpf("3.1"), 0.01), (mpmath.mpf("3.1"), 0.03),
                     (mpmath.mpf("3.1"), 1e-5), (mpmath.pi / 2, 0.2),
                     (mpmath.mpf("0.3"), 1e-3), (mpmath.mpf("2.0"), 2.5)):
        row = {"phi": float(phi), "eta": float(eta)}
        for w in ("rho", "phi", "z"):
            row["b_" + w] = float(bracket(w, phi, mpmath.mpf(eta)))
        hp["bracket"].append(row)
    print(f"brackets done {time.time()-t0:.0f}s")

    fr, fp = force_direction(mpmath.mpf(1), 3 * mpmath.pi / 4, mpmath.mpf(50))
    hp["force_direction"].append({"rho": 1.0, "phi": float(3 * mpmath.pi / 4),
                                  "E": 50.0, "e_rho": float(fr),
                                  "e_phi": float(fp)})
    print(f"force direction done {time.time()-t0:.0f}s")

    with open("tests/fixtures/halfplane_oracle.json", "w") as fh:
        json.dump(hp, fh, indent=1)

    # margin pre-checks at the asymptotic-tolerance edges
    for phi in (mpmath.pi / 4, mpmath.pi / 2, 3 * mpmath.pi / 4, mpmath.pi):
        ex = halfplane_triple(mpmath.mpf(1), phi, mpmath.mpf("1e-4"))
        if phi == mpmath.pi:
            # limit values; the closed forms are 0/0 at the edge
            cl = {"rho": 5 / (24 * mpmath.pi), "phi": mpmath.mpf(1),
                  "z": 1 / (12 * mpmath.pi)}
        else:
            cl = nonret_closed(mpmath.mpf(1), phi)
        rel = max(abs(float(ex[w] / cl[w] - 1)) for w in ("rho", "z"))
        relp = abs(float(ex["phi"] / cl["phi"] - 1)) if phi != mpmath.pi else \
            abs(float(ex["phi"]))
        print(f"nonret margin phi={float(phi):.4f}: worst rho/z {rel:.2e} "
              f"phi {relp:.2e}")
    for phi in (mpmath.pi / 2, 3 * mpmath.pi / 4, mpmath.pi):
        ex = halfplane_triple(mpmath.mpf(1), phi, mpmath.mpf(100))
        cl = ret_closed(mpmath.mpf(1), phi, mpmath.mpf(100))
        rel = max(abs(float(ex[w] / cl[w] - 1)) for w in ("rho", "z"))
        relp = abs(float(ex["phi"] / cl["phi"] - 1)) if phi != mpmath.pi else \
            abs(float(ex["phi"] / ex["rho"]))
        print(f"ret margin phi={float(phi):.4f}: worst rho/z {rel:.2e} "
              f"phi {relp:.2e}")

    # plane-mirror limit margin for the small-angle mapping check:
    # phi normal, rho and z parallel, d = rho*sin(phi)
    phi = mpmath.mpf("0.01")
    for E in (mpmath.mpf("0.01"), mpmath.mpf(1), mpmath.mpf(100)):
        ex = halfplane_triple(mpmath.mpf(1), phi, E)
        d = mpmath.sin(phi)
        perp, par = plane_pair(d, E)
        print(f"plane-limit margin E={float(E)}: "
              f"phi->perp {abs(float(ex['phi'] / perp - 1)):.2e} "
              f"rho->par {abs(float(ex['rho'] / par - 1)):.2e} "
              f"z->par {abs(float(ex['z'] / par - 1)):.2e} "
              f"({time.time()-t0:.0f}s)")


if __name__ == "__main__":
    main()
