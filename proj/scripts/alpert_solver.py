"""Chebyshev-basis Newton continuation for the log-rule moment systems.

Shared by gen_alpert_rules.py.  Conditions in the monomial basis,

    sum_n w_n chi_n^q          = -zeta(-q, a)
    sum_n w_n chi_n^q ln chi_n =  zeta'(-q, a)      q = 0..l-1,

are recombined into Chebyshev moments T_q(2 chi/a - 1), which keeps the
Newton Jacobian well scaled for l up to at least 10.
"""

from mpmath import mp, mpf, zeta, log, matrix, lu_solve
import mpmath


def gauss_legendre(n):
    from mpmath import pi
    xs, ws = [], []
    for i in range(1, n + 1):
        x = mpf(mpmath.cos(pi * (i - mpf(1) / 4) / (n + mpf(1) / 2)))
        for _ in range(100):
            p0, p1 = mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < mpf(10) ** (-mp.dps + 5):
                break
        p0, p1 = mpf(1), x
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1)
        xs.append(x)
        ws.append(2 / ((1 - x * x) * dp * dp))
    return xs, ws


def cheb_monomial_matrix(l, a):
    """C[q][j]: T_q(2x/a - 1) = sum_j C[q][j] x^j."""
    rows = [[mpf(1)] + [mpf(0)] * (l - 1)]
    if l > 1:
        rows.append([mpf(-1), mpf(2) / a] + [mpf(0)] * (l - 2))
    for q in range(2, l):
        prev, pprev = rows[q - 1], rows[q - 2]
        cur = [mpf(0)] * l
        for j in range(l):
            cur[j] = -2 * prev[j] - pprev[j]
            if j > 0:
                cur[j] += 4 * prev[j - 1] / a
        rows.append(cur)
    return rows


def cheb_eval_with_deriv(q, xi):
    """T_q(xi) and T_q'(xi) by recurrence."""
    if q == 0:
        return mpf(1), mpf(0)
    tkm, tk = mpf(1), xi
    dkm, dk = mpf(0), mpf(1)
    for _ in range(q - 1):
        tnew = 2 * xi * tk - tkm
        dnew = 2 * tk + 2 * xi * dk - dkm
        tkm, tk = tk, tnew
        dkm, dk = dk, dnew
    return tk, dk


def solve_rule(l, a, steps=200):
    """Solve the 2l moment conditions; returns (chi, w) or None."""
    C = cheb_monomial_matrix(l, a)
    mono1 = [-zeta(-q, a) for q in range(l)]
    mono2 = [zeta(-q, a, 1) for q in range(l)]
    tgt1 = [mpmath.fsum(C[q][j] * mono1[j] for j in range(l)) for q in range(l)]
    tgt2 = [mpmath.fsum(C[q][j] * mono2[j] for j in range(l)) for q in range(l)]

    glx, glw = gauss_legendre(l)
    chi = [a * (x + 1) / 2 for x in glx]
    w = [a * wi / 2 for wi in glw]

    def cheb_moments(chi, w):
        m1, m2 = [], []
        for q in range(l):
            s1 = s2 = mpf(0)
            for n in range(l):
                xi = 2 * chi[n] / a - 1
                t, _ = cheb_eval_with_deriv(q, xi)
                s1 += w[n] * t
                s2 += w[n] * t * log(chi[n])
            m1.append(s1)
            m2.append(s2)
        return m1, m2

    src1, src2 = cheb_moments(chi, w)

    for s in range(1, steps + 1):
        t_hom = mpf(s) / steps
        cur1 = [(1 - t_hom) * src1[q] + t_hom * tgt1[q] for q in range(l)]
        cur2 = [(1 - t_hom) * src2[q] + t_hom * tgt2[q] for q in range(l)]
        converged = False
        for _ in range(80):
            F = matrix(2 * l, 1)
            J = matrix(2 * l, 2 * l)
            for q in range(l):
                s1 = s2 = mpf(0)
                for n in range(l):
                    xi = 2 * chi[n] / a - 1
                    tq, dq = cheb_eval_with_deriv(q, xi)
                    lg = log(chi[n])
                    s1 += w[n] * tq
                    s2 += w[n] * tq * lg
                    J[2 * q, n] = w[n] * dq * 2 / a
                    J[2 * q, l + n] = tq
                    J[2 * q + 1, n] = w[n] * (dq * 2 / a * lg + tq / chi[n])
                    J[2 * q + 1, l + n] = tq * lg
                F[2 * q, 0] = s1 - cur1[q]
                F[2 * q + 1, 0] = s2 - cur2[q]
            normF = mpmath.norm(F, mpf("inf"))
            if normF < mpf(10) ** (-mp.dps + 15):
                converged = True
                break
            try:
                dz = lu_solve(J, F)
            except ZeroDivisionError:
                return None
            lam = mpf(1)
            ok = False
            while lam > mpf(10) ** -12:
                nchi = [chi[n] - lam * dz[n, 0] for n in range(l)]
                if all(c > 0 for c in nchi):
                    ok = True
                    break
                lam /= 2
            if not ok:
                return None
            chi = [chi[n] - lam * dz[n, 0] for n in range(l)]
            w = [w[n] - lam * dz[l + n, 0] for n in range(l)]
        if not converged:
            return None
    order = sorted(range(l), key=lambda n: chi[n])
    chi = [chi[n] for n in order]
    w = [w[n] for n in order]
    if any(c <= 0 or c >= a for c in chi) or any(wi <= 0 for wi in w):
        return None
    return chi, w
