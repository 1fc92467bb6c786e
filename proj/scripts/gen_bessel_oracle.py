#!/usr/bin/env python3
"""Generate Bessel-function reference data and evaluation coefficients.

Produces two headers:
  include/mhelm/detail/bessel_coeffs.hpp   Chebyshev coefficients used by the
                                           double-precision evaluators.
  tests/data/bessel_oracle_data.hpp        frozen multiprecision reference
                                           values used by the test suite.

The reference values are computed from scratch (power series for small
argument, divergent asymptotic series summed to the minimal term for large
argument) at 60 significant digits and cross-checked against mpmath's own
implementations to >= 30 digits before anything is emitted.

Run from the repository root:  python3 scripts/gen_bessel_oracle.py
"""

import numpy as np
from mpmath import mp, mpf, log, sqrt, exp, pi, euler, cos, sin, findroot
import mpmath

mp.dps = 60

# ----------------------------------------------------------------------------
# independent multiprecision oracle: series + asymptotics
# ----------------------------------------------------------------------------

def harmonic(k):
    return mp.fsum(mpf(1) / j for j in range(1, k + 1)) if k else mpf(0)


def i0_series(x):
    t, s, k = mpf(1), mpf(1), 1
    q = x * x / 4
    while True:
        t *= q / (k * k)
        s += t
        if abs(t) < abs(s) * mpf(10) ** (-mp.dps - 5):
            return s
        k += 1


def i1_series(x):
    t, s, k = mpf(1), mpf(1), 1
    q = x * x / 4
    while True:
        t *= q / (k * (k + 1))
        s += t
        if abs(t) < abs(s) * mpf(10) ** (-mp.dps - 5):
            return s * x / 2
        k += 1


def k0_series(x):
    # K0 = -(log(x/2)+gamma) I0 + sum_{k>=1} H_k (x^2/4)^k / (k!)^2
    q = x * x / 4
    t, s, k = mpf(1), mpf(0), 1
    while True:
        t *= q / (k * k)
        term = t * harmonic(k)
        s += term
        if abs(term) < (abs(s) + 1) * mpf(10) ** (-mp.dps - 5):
            break
        k += 1
    return -(log(x / 2) + euler) * i0_series(x) + s


def k1_series(x):
    # K1 = 1/x + (log(x/2)+gamma) I1 - x/4 sum_k (H_k + H_{k+1}) (x^2/4)^k/(k!(k+1)!)
    q = x * x / 4
    t, s, k = mpf(1), mpf(0), 0
    while True:
        if k > 0:
            t *= q / (k * (k + 1))
        term = t * (harmonic(k) + harmonic(k + 1))
        s += term
        if abs(term) < (abs(s) + 1) * mpf(10) ** (-mp.dps - 5):
            break
        k += 1
    return 1 / x + (log(x / 2) + euler) * i1_series(x) - (x / 4) * s


def hankel_a(nu, kmax):
    # a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k), a_0 = 1
    out = [mpf(1)]
    for k in range(1, kmax + 1):
        out.append(out[-1] * (4 * nu * nu - (2 * k - 1) ** 2) / (k * 8))
    return out


def k_asymptotic(nu, x):
    # summed to the minimal term; valid (to double precision) for x >= 18
    s, t, k = mpf(1), mpf(1), 1
    best = None
    while k < 400:
        t *= (4 * nu * nu - (2 * k - 1) ** 2) / (k * 8 * x)
        if best is not None and abs(t) > best:
            break
        best = abs(t)
        s += t
        k += 1
    return sqrt(pi / (2 * x)) * exp(-x) * s


def i_asymptotic(nu, x):
    s, t, k = mpf(1), mpf(1), 1
    best = None
    while k < 400:
        t *= -(4 * nu * nu - (2 * k - 1) ** 2) / (k * 8 * x)
        if best is not None and abs(t) > best:
            break
        best = abs(t)
        s += t
        k += 1
    return exp(x) / sqrt(2 * pi * x) * s


def j0_series(x):
    q = -x * x / 4
    t, s, k = mpf(1), mpf(1), 1
    while True:
        t *= q / (k * k)
        s += t
        if abs(t) < (abs(s) + 1) * mpf(10) ** (-mp.dps - 5):
            return s
        k += 1


def j1_series(x):
    q = -x * x / 4
    t, s, k = mpf(1), mpf(1), 1
    while True:
        t *= q / (k * (k + 1))
        s += t
        if abs(t) < (abs(s) + 1) * mpf(10) ** (-mp.dps - 5):
            return s * x / 2
        k += 1


def y0_series(x):
    # Y0 = (2/pi)[ (log(x/2)+gamma) J0 + sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k/(k!)^2 ]
    q = x * x / 4
    t, s, k = mpf(1), mpf(0), 1
    sign = 1
    while True:
        t *= q / (k * k)
        sign = -sign
        term = -sign * t * harmonic(k)  # (-1)^{k+1}
        s += term
        if abs(t) * (harmonic(k) + 1) < (abs(s) + 1) * mpf(10) ** (-mp.dps - 5):
            break
        k += 1
    return (2 / pi) * ((log(x / 2) + euler) * j0_series(x) + s)


def y1_series(x):
    # Y1 = -2/(pi x) + (2/pi)(log(x/2)+gamma) J1 - (x/(2 pi)) sum_k (-1)^k (H_k+H_{k+1}) q^k/(k!(k+1)!)
    q = x * x / 4
    t, s, k = mpf(1), mpf(0), 0
    while True:
        if k > 0:
            t *= -q / (k * (k + 1))
        term = t * (harmonic(k) + harmonic(k + 1))
        s += term
        if abs(t) * (harmonic(k) + harmonic(k + 1) + 1) < (abs(s) + 1) * mpf(10) ** (-mp.dps - 5):
            break
        k += 1
    return -2 / (pi * x) + (2 / pi) * (log(x / 2) + euler) * j1_series(x) - x / (2 * pi) * s


def jy_asymptotic(nu, x):
    # Hankel expansion, P/Q summed to minimal term; double precision for x >= 18
    a = hankel_a(nu, 220)
    p, q = mpf(0), mpf(0)
    tk = mpf(1)
    best = None
    k = 0
    terms = []
    while k < 200:
        terms.append(a[k] / x ** k)
        if best is not None and abs(terms[-1]) > best:
            terms.pop()
            break
        best = abs(terms[-1])
        k += 1
    for k, t in enumerate(terms):
        if k % 2 == 0:
            p += (-1) ** (k // 2) * t
        else:
            q += (-1) ** ((k - 1) // 2) * t
    chi = x - (2 * nu + 1) * pi / 4
    amp = sqrt(2 / (pi * x))
    jv = amp * (p * cos(chi) - q * sin(chi))
    yv = amp * (p * sin(chi) + q * cos(chi))
    return jv, yv


def oracle(fn, x):
    """Series/asymptotic oracle, cross-checked against mpmath builtins.

    Below x = 45 the power series are summed with working precision boosted
    to absorb their cancellation (~0.87 x digits); above, the asymptotic
    series truncated at the minimal term is already accurate to ~e^{-2x}.
    """
    x = mpf(x)
    boost = mp.dps + 20 + int(0.9 * float(x))
    if fn == "K0":
        with mp.workdps(boost):
            v = k0_series(x) if x < 45 else k_asymptotic(0, x)
        ref = mpmath.besselk(0, x)
    elif fn == "K1":
        with mp.workdps(boost):
            v = k1_series(x) if x < 45 else k_asymptotic(1, x)
        ref = mpmath.besselk(1, x)
    elif fn == "I0":
        with mp.workdps(boost):
            v = i0_series(x) if x < 45 else i_asymptotic(0, x)
        ref = mpmath.besseli(0, x)
    elif fn == "I1":
        with mp.workdps(boost):
            v = i1_series(x) if x < 45 else i_asymptotic(1, x)
        ref = mpmath.besseli(1, x)
    elif fn == "J0":
        with mp.workdps(boost):
            v = j0_series(x) if x < 45 else jy_asymptotic(0, x)[0]
        ref = mpmath.besselj(0, x)
    elif fn == "J1":
        with mp.workdps(boost):
            v = j1_series(x) if x < 45 else jy_asymptotic(1, x)[0]
        ref = mpmath.besselj(1, x)
    elif fn == "Y0":
        with mp.workdps(boost):
            v = y0_series(x) if x < 45 else jy_asymptotic(0, x)[1]
        ref = mpmath.bessely(0, x)
    elif fn == "Y1":
        with mp.workdps(boost):
            v = y1_series(x) if x < 45 else jy_asymptotic(1, x)[1]
        ref = mpmath.bessely(1, x)
    else:
        raise ValueError(fn)
    v = mpf(v)
    scale = max(abs(ref), mpf(10) ** -300)
    assert abs(v - ref) / scale < mpf(10) ** -30, (fn, x, v, ref)
    return v


# ----------------------------------------------------------------------------
# Chebyshev fitting helpers
# ----------------------------------------------------------------------------

def cheb_fit(f, lo, hi, deg):
    """Chebyshev coefficients of f on [lo,hi] via Chebyshev-Gauss quadrature."""
    nodes = [mp.cos(pi * (mpf(2 * i + 1)) / (2 * (deg + 1))) for i in range(deg + 1)]
    vals = [f((hi + lo) / 2 + (hi - lo) / 2 * t) for t in nodes]
    coeffs = []
    for j in range(deg + 1):
        s = mp.fsum(vals[i] * mp.cos(j * pi * (2 * i + 1) / (2 * (deg + 1)))
                    for i in range(deg + 1))
        coeffs.append(s * 2 / (deg + 1))
    coeffs[0] /= 2
    return coeffs


def trim(coeffs, rel=1e-19):
    m = max(abs(c) for c in coeffs)
    n = len(coeffs)
    while n > 1 and abs(coeffs[n - 1]) < m * rel:
        n -= 1
    return coeffs[:n]


def clenshaw64(coeffs, t):
    b1 = b2 = 0.0
    for c in coeffs[:0:-1]:
        b1, b2 = 2.0 * t * b1 - b2 + float(c), b1
    return t * b1 - b2 + float(coeffs[0])


# K0,K1 mid range: fit g(u) = e^x sqrt(x) K(x) with x = 1/u, u in [1/30, 1/2]
K_LO, K_HI = mpf(1) / 30, mpf(1) / 2
k0_mid = trim(cheb_fit(lambda u: exp(1 / u) * sqrt(1 / u) * oracle("K0", 1 / u), K_LO, K_HI, 44))
k1_mid = trim(cheb_fit(lambda u: exp(1 / u) * sqrt(1 / u) * oracle("K1", 1 / u), K_LO, K_HI, 44))

# J/Y mid range via P,Q: fit in w = 5/x, x in [5, 18]
PQ_LO, PQ_HI = mpf(5) / 18, mpf(1)


def pq_exact(nu, x):
    jv = mpmath.besselj(nu, x)
    yv = mpmath.bessely(nu, x)
    chi = x - (2 * nu + 1) * pi / 4
    amp = sqrt(pi * x / 2)
    return amp * (jv * cos(chi) + yv * sin(chi)), amp * (yv * cos(chi) - jv * sin(chi))


p0_mid = trim(cheb_fit(lambda w: pq_exact(0, 5 / w)[0], PQ_LO, PQ_HI, 40))
q0_mid = trim(cheb_fit(lambda w: pq_exact(0, 5 / w)[1], PQ_LO, PQ_HI, 40))
p1_mid = trim(cheb_fit(lambda w: pq_exact(1, 5 / w)[0], PQ_LO, PQ_HI, 40))
q1_mid = trim(cheb_fit(lambda w: pq_exact(1, 5 / w)[1], PQ_LO, PQ_HI, 40))

print("coefficient counts: K0 %d K1 %d P0 %d Q0 %d P1 %d Q1 %d"
      % tuple(len(c) for c in (k0_mid, k1_mid, p0_mid, q0_mid, p1_mid, q1_mid)))

# ----------------------------------------------------------------------------
# float64 prototypes of the shipped evaluators; measure achieved accuracy
# ----------------------------------------------------------------------------

EULER64 = float(euler)


def f64_i0_series(x):
    t = s = 1.0
    k = 1
    q = x * x / 4.0
    while True:
        t *= q / (k * k)
        s += t
        if t < s * 1e-18:
            return s
        k += 1


def f64_i1_series(x):
    t = s = 1.0
    k = 1
    q = x * x / 4.0
    while True:
        t *= q / (k * (k + 1))
        s += t
        if t < s * 1e-18:
            return s * x / 2.0
        k += 1


def f64_k0(x):
    if x <= 0 or x != x:
        raise ValueError
    if x > 700.0:
        return 0.0
    if x < 2.0:
        q = x * x / 4.0
        t, s, h, k = 1.0, 0.0, 0.0, 1
        while True:
            t *= q / (k * k)
            h += 1.0 / k
            s += t * h
            if t * h < 1e-18 * (abs(s) + 1):
                break
            k += 1
        return -(np.log(x / 2.0) + EULER64) * f64_i0_series(x) + s
    if x <= 30.0:
        u = 1.0 / x
        t = (2.0 * u - float(K_LO + K_HI)) / float(K_HI - K_LO)
        return clenshaw64(k0_mid, t) * np.exp(-x) / np.sqrt(x)
    # asymptotic
    s, t, k, best = 1.0, 1.0, 1, 1e300
    while k < 60:
        t *= -((2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(t) >= best:
            break
        best = abs(t)
        s += t
        if abs(t) < 1e-18 * abs(s):
            break
        k += 1
    return np.sqrt(np.pi / (2.0 * x)) * np.exp(-x) * s


def f64_k1(x):
    if x <= 0 or x != x:
        raise ValueError
    if x > 700.0:
        return 0.0
    if x < 2.0:
        q = x * x / 4.0
        t, s, k = 1.0, 0.0, 0
        h = 1.0  # H_0 + H_1
        while True:
            if k > 0:
                t *= q / (k * (k + 1))
                h += 1.0 / k + 1.0 / (k + 1)
            s += t * h
            if t * h < 1e-18 * (abs(s) + 1):
                break
            k += 1
        return 1.0 / x + (np.log(x / 2.0) + EULER64) * f64_i1_series(x) - (x / 4.0) * s
    if x <= 30.0:
        u = 1.0 / x
        t = (2.0 * u - float(K_LO + K_HI)) / float(K_HI - K_LO)
        return clenshaw64(k1_mid, t) * np.exp(-x) / np.sqrt(x)
    s, t, k, best = 1.0, 1.0, 1, 1e300
    while k < 60:
        t *= (4.0 - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(t) >= best:
            break
        best = abs(t)
        s += t
        if abs(t) < 1e-18 * abs(s):
            break
        k += 1
    return np.sqrt(np.pi / (2.0 * x)) * np.exp(-x) * s


def f64_pq(nu, x, pc, qc):
    if x <= 18.0:
        w = 5.0 / x
        t = (2.0 * w - float(PQ_LO + PQ_HI)) / float(PQ_HI - PQ_LO)
        return clenshaw64(pc, t), clenshaw64(qc, t)
    p, q = 1.0, 0.0
    t, k, best = 1.0, 1, 1e300
    while k < 80:
        t *= (4.0 * nu * nu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(t) >= best or abs(t) < 1e-19:
            break
        best = abs(t)
        if k % 2 == 0:
            p += (-1) ** (k // 2) * t
        else:
            q += (-1) ** ((k - 1) // 2) * t
        k += 1
    return p, q


def f64_j0(x):
    x = abs(x)
    if x < 5.0:
        q = -x * x / 4.0
        t = s = 1.0
        k = 1
        while True:
            t *= q / (k * k)
            s += t
            if abs(t) < 1e-18 * (abs(s) + 1):
                return s
            k += 1
    p, q = f64_pq(0, x, p0_mid, q0_mid)
    chi = x - np.pi / 4
    return np.sqrt(2.0 / (np.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def f64_y0(x):
    if x <= 0:
        raise ValueError
    if x < 5.0:
        q = x * x / 4.0
        t, s, h, k, sign = 1.0, 0.0, 0.0, 1, 1.0
        while True:
            t *= q / (k * k)
            h += 1.0 / k
            sign = -sign
            s += -sign * t * h
            if t * h < 1e-18 * (abs(s) + 1):
                break
            k += 1
        return 2.0 / np.pi * ((np.log(x / 2.0) + EULER64) * f64_j0(x) + s)
    p, q = f64_pq(0, x, p0_mid, q0_mid)
    chi = x - np.pi / 4
    return np.sqrt(2.0 / (np.pi * x)) * (p * np.sin(chi) + q * np.cos(chi))


def f64_j1(x):
    if abs(x) < 5.0:
        q = -x * x / 4.0
        t = s = 1.0
        k = 1
        while True:
            t *= q / (k * (k + 1))
            s += t
            if abs(t) < 1e-18 * (abs(s) + 1):
                return s * x / 2.0
            k += 1
    p, q = f64_pq(1, x, p1_mid, q1_mid)
    chi = x - 3 * np.pi / 4
    return np.sqrt(2.0 / (np.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def f64_y1(x):
    if x <= 0:
        raise ValueError
    if x < 5.0:
        q = x * x / 4.0
        t, s, k = 1.0, 0.0, 0
        h = 1.0
        while True:
            if k > 0:
                t *= -q / (k * (k + 1))
                h += 1.0 / k + 1.0 / (k + 1)
            s += t * h
            if abs(t) * h < 1e-18 * (abs(s) + 1):
                break
            k += 1
        return (-2.0 / (np.pi * x) + 2.0 / np.pi * (np.log(x / 2.0) + EULER64) * f64_j1(x)
                - x / (2.0 * np.pi) * s)
    p, q = f64_pq(1, x, p1_mid, q1_mid)
    chi = x - 3 * np.pi / 4
    return np.sqrt(2.0 / (np.pi * x)) * (p * np.sin(chi) + q * np.cos(chi))


def report(name, fn64, fname, grid):
    worst = 0.0
    worst_x = None
    for x in grid:
        v = fn64(float(x))
        ref = oracle(fname, x)
        scale = max(abs(ref), mpf(1) if fname in ("J0", "J1", "Y0", "Y1") else abs(ref))
        if abs(ref) < mpf(10) ** -290:
            continue
        e = float(abs(mpf(float(v)) - ref) / scale)
        if e > worst:
            worst, worst_x = e, float(x)
    print("%-4s max err %.3e at x=%g" % (name, worst, worst_x))
    return worst


kg = [mpf(10) ** e for e in np.linspace(-8, np.log10(690), 260)]
jg = [mpf(10) ** e for e in np.linspace(-3, 2, 260)]
ig = [mpf(10) ** e for e in np.linspace(-3, np.log10(600), 200)]

errs = []
errs.append(report("K0", f64_k0, "K0", kg))
errs.append(report("K1", f64_k1, "K1", kg))
errs.append(report("J0", f64_j0, "J0", jg))
errs.append(report("Y0", f64_y0, "Y0", jg))
errs.append(report("J1", f64_j1, "J1", jg))
errs.append(report("Y1", f64_y1, "Y1", jg))

# seam agreement checks
for name, f, seams in (("K0", f64_k0, (2.0, 30.0)), ("K1", f64_k1, (2.0, 30.0)),
                       ("J0", f64_j0, (5.0, 18.0)), ("Y0", f64_y0, (5.0, 18.0))):
    for s in seams:
        lo, hi = f(s * (1 - 1e-12)), f(s * (1 + 1e-12))
        print("%s seam %g rel jump %.2e" % (name, s, abs(lo - hi) / max(abs(lo), 1e-300)))

# ----------------------------------------------------------------------------
# special constants
# ----------------------------------------------------------------------------

j0_root = findroot(lambda t: mpmath.besselj(0, t), mpf("2.4048"))


def cross(lam):
    return (mpmath.bessely(0, mpf("0.1") * lam) * mpmath.besselj(0, mpf("0.4") * lam)
            - mpmath.besselj(0, mpf("0.1") * lam) * mpmath.bessely(0, mpf("0.4") * lam))


lam = findroot(cross, mpf("10.244"))
print("first J0 root :", mp.nstr(j0_root, 20))
print("lambda(0.1,0.4):", mp.nstr(lam, 20))
print("K0(1) =", mp.nstr(oracle("K0", 1), 20))
print("K1(1) =", mp.nstr(oracle("K1", 1), 20))
print("Y0(1) =", mp.nstr(oracle("Y0", 1), 20))

# ----------------------------------------------------------------------------
# emit headers
# ----------------------------------------------------------------------------

def carray(name, coeffs):
    body = ",\n    ".join(mp.nstr(c, 22) for c in coeffs)
    return "inline constexpr double %s[%d] = {\n    %s};\n" % (name, len(coeffs), body)


with open("include/mhelm/detail/bessel_coeffs.hpp", "w") as f:
    f.write("// Generated by scripts/gen_bessel_oracle.py -- do not edit by hand.\n")
    f.write("#pragma once\n\nnamespace mhelm::detail {\n\n")
    f.write("// e^x sqrt(x) K0(x) and ... K1(x) as Chebyshev series in u = 1/x on [1/30, 1/2]\n")
    f.write("inline constexpr double kChebULo = %s;\n" % mp.nstr(K_LO, 22))
    f.write("inline constexpr double kChebUHi = %s;\n" % mp.nstr(K_HI, 22))
    f.write(carray("kK0MidCheb", k0_mid))
    f.write(carray("kK1MidCheb", k1_mid))
    f.write("\n// Hankel P,Q as Chebyshev series in w = 5/x on [5/18, 1] (x in [5, 18])\n")
    f.write("inline constexpr double kPQULo = %s;\n" % mp.nstr(PQ_LO, 22))
    f.write("inline constexpr double kPQUHi = %s;\n" % mp.nstr(PQ_HI, 22))
    f.write(carray("kP0MidCheb", p0_mid))
    f.write(carray("kQ0MidCheb", q0_mid))
    f.write(carray("kP1MidCheb", p1_mid))
    f.write(carray("kQ1MidCheb", q1_mid))
    f.write("\n} // namespace mhelm::detail\n")

FNS = ("K0", "K1", "I0", "I1", "J0", "J1", "Y0", "Y1")


def table_rows(grid, fns):
    rows = []
    for x in grid:
        vals = [oracle(fn, x) for fn in fns]
        rows.append("    {%s, %s}" % (mp.nstr(mpf(x), 22),
                                      ", ".join(mp.nstr(v, 22) for v in vals)))
    return ",\n".join(rows)


k_grid = [mpf(10) ** e for e in np.linspace(-8, np.log10(690), 80)]
jy_grid = [mpf(10) ** e for e in np.linspace(-3, 2, 80)]
i_grid = [mpf(10) ** e for e in np.linspace(-3, np.log10(600), 60)]

with open("tests/data/bessel_oracle_data.hpp", "w") as f:
    f.write("// Generated by scripts/gen_bessel_oracle.py -- do not edit by hand.\n")
    f.write("// Multiprecision (60-digit) series/asymptotic oracle values.\n")
    f.write("#pragma once\n\nnamespace mhelm::testdata {\n\n")
    f.write("struct KRow { double x, k0, k1, i0, i1; };\n")
    f.write("inline constexpr KRow kKITable[] = {\n%s};\n\n"
            % table_rows(k_grid, ("K0", "K1", "I0", "I1")))
    f.write("struct JYRow { double x, j0, j1, y0, y1; };\n")
    f.write("inline constexpr JYRow kJYTable[] = {\n%s};\n\n"
            % table_rows(jy_grid, ("J0", "J1", "Y0", "Y1")))
    f.write("struct IRow { double x, i0, i1; };\n")
    f.write("inline constexpr IRow kITable[] = {\n%s};\n\n"
            % table_rows(i_grid, ("I0", "I1")))
    f.write("inline constexpr double kFirstJ0Root = %s;\n" % mp.nstr(j0_root, 22))
    f.write("inline constexpr double kLambdaAnnulus = %s;\n" % mp.nstr(lam, 22))
    f.write("inline constexpr double kK0At1 = %s;\n" % mp.nstr(oracle("K0", 1), 22))
    f.write("inline constexpr double kK1At1 = %s;\n" % mp.nstr(oracle("K1", 1), 22))
    f.write("inline constexpr double kY0At1 = %s;\n" % mp.nstr(oracle("Y0", 1), 22))
    f.write("inline constexpr double kI0At1 = %s;\n" % mp.nstr(oracle("I0", 1), 22))
    f.write("\n} // namespace mhelm::testdata\n")

print("wrote include/mhelm/detail/bessel_coeffs.hpp and tests/data/bessel_oracle_data.hpp")
print("WORST overall: %.3e" % max(errs))
