"""Generate the frozen reference table for cpshift.specfun tests.

Writes tests/fixtures/bessel_oracle.txt with rows

    m  x  ive  kve  ivep  kvep

where ive = exp(-x) I_m(x), kve = exp(x) K_m(x) and ivep/kvep are the
scaled derivatives exp(-x) I_m'(x), exp(x) K_m'(x), all to 25 significant
digits from mpmath.  Derivatives come from mpmath.diff so the table stays
independent of the recurrence identities used by the implementation.

Grid points where the scaled values overflow/underflow a float64 are
skipped (K_m(x) ~ (m-1)! (2/x)^m / 2 exceeds 1e308 for small x at large m);
the implementation raises for those, so they never appear in comparisons.

Also writes tests/fixtures/bessel_log_oracle.txt with rows

    m  x  log(I_m(x))  log(K_m(x))  log(I_m'(x))  log(-K_m'(x))

on a wider grid including the extreme order/argument combinations served
by the log-magnitude fallback path.

    python3 tools/gen_bessel_oracle.py
"""

import math

import mpmath
from mpmath.libmp.libhyper import NoConvergence


# besseli's series is convergent, so raising maxterms is safe and needed at
# very large argument; besselk's large-x branch is an asymptotic (divergent)
# series where a large maxterms makes mpmath churn, so escalate precision only.
def _kwargs(fn):
    return {"maxterms": 10**6} if fn is mpmath.besseli else {}


def _call(fn, m, x):
    kw = _kwargs(fn)
    for dps in (40, 80, 160, 320, 640):
        try:
            with mpmath.workdps(dps):
                return +fn(m, x, **kw)
        except (ValueError, NoConvergence):
            continue
    raise RuntimeError(f"no convergence for {fn.__name__}({m}, {x})")


def _diff(fn, m, x):
    kw = _kwargs(fn)
    for dps in (60, 120, 240):
        try:
            with mpmath.workdps(dps):
                return +mpmath.diff(lambda y: fn(m, y, **kw), mpmath.mpf(x))
        except (ValueError, NoConvergence):
            continue
    raise RuntimeError(f"no convergence for d/dx {fn.__name__}({m}, {x})")


def scaled_row(m, x):
    xm = mpmath.mpf(x)
    i = _call(mpmath.besseli, m, x)
    k = _call(mpmath.besselk, m, x)
    ip = _diff(mpmath.besseli, m, x)
    kp = _diff(mpmath.besselk, m, x)
    ive = i * mpmath.exp(-xm)
    kve = k * mpmath.exp(xm)
    ivep = ip * mpmath.exp(-xm)
    kvep = kp * mpmath.exp(xm)
    vals = [float(v) for v in (ive, kve, ivep, kvep)]
    if any(not math.isfinite(v) for v in vals):
        return None
    if vals[1] != 0.0 and abs(vals[1]) < 1e-300:
        return None
    if vals[0] != 0.0 and abs(vals[0]) < 1e-300:
        return None
    return tuple(mpmath.nstr(v, 25, strip_zeros=False) for v in (ive, kve, ivep, kvep))


def log_row(m, x):
    i = _call(mpmath.besseli, m, x)
    k = _call(mpmath.besselk, m, x)
    ip = _diff(mpmath.besseli, m, x)
    kp = _diff(mpmath.besselk, m, x)
    assert ip > 0 and kp < 0
    return tuple(mpmath.nstr(mpmath.log(v), 25, strip_zeros=False)
                 for v in (i, k, ip, -kp))


def main():
    orders = (0, 1, 2, 3, 5, 8, 13, 40, 90, 200)
    args = (1e-4, 0.01, 0.3, 1.0, 2.7, 10.0, 55.0, 300.0, 600.0)

    lines = ["# m  x  ive  kve  ivep  kvep   (25 significant digits)"]
    kept = skipped = 0
    for m in orders:
        for x in args:
            row = scaled_row(m, x)
            if row is None:
                skipped += 1
                continue
            kept += 1
            lines.append(f"{m} {x!r} " + " ".join(row))
    with open("tests/fixtures/bessel_oracle.txt", "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"bessel_oracle.txt: {kept} rows, {skipped} skipped as non-representable")

    log_lines = ["# m  x  log_i  log_k  log_ip  log_nkp   (25 significant digits)"]
    log_points = []
    for m in (40, 90, 200, 700, 2000):
        for z in (1e-5, 1e-3, 0.05, 0.4, 1.0, 5.0):
            log_points.append((m, m * z))
    for m, x in log_points:
        log_lines.append(f"{m} {x!r} " + " ".join(log_row(m, x)))
    with open("tests/fixtures/bessel_log_oracle.txt", "w") as fh:
        fh.write("\n".join(log_lines) + "\n")
    print(f"bessel_log_oracle.txt: {len(log_points)} rows")


if __name__ == "__main__":
    main()
