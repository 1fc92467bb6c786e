#pragma once

#include <cmath>
#include <stdexcept>

#include "mhelm/common.hpp"
#include "mhelm/detail/bessel_coeffs.hpp"

// Bessel functions K0, K1, I0, I1, J0, J1, Y0, Y1 of a real argument.
//
// Evaluation is piecewise: truncated power series for small argument,
// Chebyshev fits of the exponentially rescaled function (K0, K1) or of the
// Hankel amplitude functions P, Q (J, Y) in the middle range, and the
// asymptotic expansion summed to its minimal term for large argument.  The
// Chebyshev coefficients live in detail/bessel_coeffs.hpp and are produced,
// together with the frozen reference tables used by the tests, by
// scripts/gen_bessel_oracle.py.

namespace mhelm {

namespace detail {

inline double clenshaw(const double* c, int n, double t) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = n - 1; k >= 1; --k) {
        double b0 = 2.0 * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c[0];
}

inline constexpr double kEulerGamma = 0.5772156649015328606065121;

inline double i0_series(double x) {
    double t = 1.0, s = 1.0;
    double q = x * x / 4.0;
    for (int k = 1; k < 200; ++k) {
        t *= q / (double(k) * k);
        s += t;
        if (t < s * 1e-18) break;
    }
    return s;
}

inline double i1_series(double x) {
    double t = 1.0, s = 1.0;
    double q = x * x / 4.0;
    for (int k = 1; k < 200; ++k) {
        t *= q / (double(k) * (k + 1));
        s += t;
        if (t < s * 1e-18) break;
    }
    return s * x / 2.0;
}

// sqrt(pi/2x) e^{-x} sum a_k(nu)/x^k, summed to the minimal term
inline double k_asymptotic(int nu, double x) {
    double s = 1.0, t = 1.0, best = 1e300;
    for (int k = 1; k < 60; ++k) {
        t *= (4.0 * nu * nu - (2 * k - 1) * (2 * k - 1)) / (k * 8.0 * x);
        if (std::abs(t) >= best) break;
        best = std::abs(t);
        s += t;
        if (std::abs(t) < 1e-18 * std::abs(s)) break;
    }
    return std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) * s;
}

inline double i_asymptotic(int nu, double x) {
    double s = 1.0, t = 1.0, best = 1e300;
    for (int k = 1; k < 60; ++k) {
        t *= -(4.0 * nu * nu - (2 * k - 1) * (2 * k - 1)) / (k * 8.0 * x);
        if (std::abs(t) >= best) break;
        best = std::abs(t);
        s += t;
        if (std::abs(t) < 1e-18 * std::abs(s)) break;
    }
    return std::exp(x) / std::sqrt(2.0 * M_PI * x) * s;
}

// Hankel amplitudes; Chebyshev fit in w = 5/x for x in [5,18], asymptotic
// series to the minimal term beyond.
struct PQ {
    double p, q;
};

inline PQ hankel_pq(int nu, double x, const double* pc, int np, const double* qc, int nq) {
    if (x <= 18.0) {
        double w = 5.0 / x;
        double t = (2.0 * w - (kPQULo + kPQUHi)) / (kPQUHi - kPQULo);
        return {clenshaw(pc, np, t), clenshaw(qc, nq, t)};
    }
    double p = 1.0, q = 0.0, t = 1.0, best = 1e300;
    for (int k = 1; k < 80; ++k) {
        t *= (4.0 * nu * nu - (2 * k - 1) * (2 * k - 1)) / (k * 8.0 * x);
        if (std::abs(t) >= best || std::abs(t) < 1e-19) break;
        best = std::abs(t);
        if (k % 2 == 0)
            p += ((k / 2) % 2 ? -t : t);
        else
            q += (((k - 1) / 2) % 2 ? -t : t);
    }
    return {p, q};
}

inline void check_positive(double x, const char* fn) {
    if (!(x > 0.0)) throw std::domain_error(std::string(fn) + ": argument must be positive");
}

inline double k0_series_small(double x) {
    double q = x * x / 4.0;
    double t = 1.0, s = 0.0, h = 0.0;
    for (int k = 1; k < 60; ++k) {
        t *= q / (double(k) * k);
        h += 1.0 / k;
        s += t * h;
        if (t * h < 1e-18 * (std::abs(s) + 1.0)) break;
    }
    return -(std::log(x / 2.0) + kEulerGamma) * i0_series(x) + s;
}

inline double k0_cheb_mid(double x) {
    double u = 1.0 / x;
    double t = (2.0 * u - (kChebULo + kChebUHi)) / (kChebUHi - kChebULo);
    return clenshaw(kK0MidCheb, int(std::size(kK0MidCheb)), t) * std::exp(-x) / std::sqrt(x);
}

inline double k1_series_small(double x) {
    double q = x * x / 4.0;
    double t = 1.0, s = 0.0, h = 1.0; // h = H_k + H_{k+1}
    for (int k = 0; k < 60; ++k) {
        if (k > 0) {
            t *= q / (double(k) * (k + 1));
            h += 1.0 / k + 1.0 / (k + 1);
        }
        s += t * h;
        if (t * h < 1e-18 * (std::abs(s) + 1.0)) break;
    }
    return 1.0 / x + (std::log(x / 2.0) + kEulerGamma) * i1_series(x) - (x / 4.0) * s;
}

inline double k1_cheb_mid(double x) {
    double u = 1.0 / x;
    double t = (2.0 * u - (kChebULo + kChebUHi)) / (kChebUHi - kChebULo);
    return clenshaw(kK1MidCheb, int(std::size(kK1MidCheb)), t) * std::exp(-x) / std::sqrt(x);
}

} // namespace detail

inline double bessel_k0(double x) {
    detail::check_positive(x, "bessel_k0");
    if (x > 700.0) return 0.0;
    if (x < 2.0) return detail::k0_series_small(x);
    if (x <= 30.0) return detail::k0_cheb_mid(x);
    return detail::k_asymptotic(0, x);
}

inline double bessel_k1(double x) {
    detail::check_positive(x, "bessel_k1");
    if (x > 700.0) return 0.0;
    if (x < 2.0) return detail::k1_series_small(x);
    if (x <= 30.0) return detail::k1_cheb_mid(x);
    return detail::k_asymptotic(1, x);
}

inline double bessel_i0(double x) {
    if (std::isnan(x)) throw std::domain_error("bessel_i0: NaN argument");
    x = std::abs(x);
    return x < 40.0 ? detail::i0_series(x) : detail::i_asymptotic(0, x);
}

inline double bessel_i1(double x) {
    if (std::isnan(x)) throw std::domain_error("bessel_i1: NaN argument");
    double ax = std::abs(x);
    double v = ax < 40.0 ? detail::i1_series(ax) : detail::i_asymptotic(1, ax);
    return x < 0.0 ? -v : v;
}

inline double bessel_j0(double x) {
    if (std::isnan(x)) throw std::domain_error("bessel_j0: NaN argument");
    x = std::abs(x);
    if (x < 5.0) {
        double q = -x * x / 4.0, t = 1.0, s = 1.0;
        for (int k = 1; k < 60; ++k) {
            t *= q / (double(k) * k);
            s += t;
            if (std::abs(t) < 1e-18 * (std::abs(s) + 1.0)) break;
        }
        return s;
    }
    auto [p, q] = detail::hankel_pq(0, x, detail::kP0MidCheb, int(std::size(detail::kP0MidCheb)),
                                    detail::kQ0MidCheb, int(std::size(detail::kQ0MidCheb)));
    double chi = x - M_PI / 4.0;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

inline double bessel_j1(double x) {
    if (std::isnan(x)) throw std::domain_error("bessel_j1: NaN argument");
    double ax = std::abs(x), v;
    if (ax < 5.0) {
        double q = -ax * ax / 4.0, t = 1.0, s = 1.0;
        for (int k = 1; k < 60; ++k) {
            t *= q / (double(k) * (k + 1));
            s += t;
            if (std::abs(t) < 1e-18 * (std::abs(s) + 1.0)) break;
        }
        v = s * ax / 2.0;
    } else {
        auto [p, q] = detail::hankel_pq(1, ax, detail::kP1MidCheb, int(std::size(detail::kP1MidCheb)),
                                        detail::kQ1MidCheb, int(std::size(detail::kQ1MidCheb)));
        double chi = ax - 3.0 * M_PI / 4.0;
        v = std::sqrt(2.0 / (M_PI * ax)) * (p * std::cos(chi) - q * std::sin(chi));
    }
    return x < 0.0 ? -v : v;
}

inline double bessel_y0(double x) {
    detail::check_positive(x, "bessel_y0");
    if (x < 5.0) {
        double q = x * x / 4.0, t = 1.0, s = 0.0, h = 0.0;
        double sign = 1.0;
        for (int k = 1; k < 60; ++k) {
            t *= q / (double(k) * k);
            h += 1.0 / k;
            sign = -sign;
            s += -sign * t * h; // (-1)^{k+1}
            if (t * h < 1e-18 * (std::abs(s) + 1.0)) break;
        }
        return 2.0 / M_PI * ((std::log(x / 2.0) + detail::kEulerGamma) * bessel_j0(x) + s);
    }
    auto [p, q] = detail::hankel_pq(0, x, detail::kP0MidCheb, int(std::size(detail::kP0MidCheb)),
                                    detail::kQ0MidCheb, int(std::size(detail::kQ0MidCheb)));
    double chi = x - M_PI / 4.0;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

inline double bessel_y1(double x) {
    detail::check_positive(x, "bessel_y1");
    if (x < 5.0) {
        double q = x * x / 4.0, t = 1.0, s = 0.0, h = 1.0;
        for (int k = 0; k < 60; ++k) {
            if (k > 0) {
                t *= -q / (double(k) * (k + 1));
                h += 1.0 / k + 1.0 / (k + 1);
            }
            s += t * h;
            if (std::abs(t) * h < 1e-18 * (std::abs(s) + 1.0)) break;
        }
        return -2.0 / (M_PI * x) + 2.0 / M_PI * (std::log(x / 2.0) + detail::kEulerGamma) * bessel_j1(x)
               - x / (2.0 * M_PI) * s;
    }
    auto [p, q] = detail::hankel_pq(1, x, detail::kP1MidCheb, int(std::size(detail::kP1MidCheb)),
                                    detail::kQ1MidCheb, int(std::size(detail::kQ1MidCheb)));
    double chi = x - 3.0 * M_PI / 4.0;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

enum class BesselKind { K0, K1, J0, Y0 };

inline double modified_bessel_k(int order, double x) {
    if (order != 0 && order != 1) throw std::domain_error("modified_bessel_k: order must be 0 or 1");
    return order == 0 ? bessel_k0(x) : bessel_k1(x);
}

inline double bessel_first_second(BesselKind kind, double x) {
    switch (kind) {
        case BesselKind::J0: return bessel_j0(x);
        case BesselKind::Y0: return bessel_y0(x);
        default: throw std::domain_error("bessel_first_second: expects J0 or Y0");
    }
}

// Root of the cross product C(t) = Y0(ri t) J0(ro t) - J0(ri t) Y0(ro t)
// near `guess`; used to build separable solutions vanishing on both circles
// of an annulus.
inline double find_lambda(double r_inner, double r_outer, double guess) {
    if (!(0.0 < r_inner && r_inner < r_outer))
        throw std::invalid_argument("find_lambda: need 0 < r_inner < r_outer");
    auto cross = [&](double t) {
        return bessel_y0(r_inner * t) * bessel_j0(r_outer * t)
               - bessel_j0(r_inner * t) * bessel_y0(r_outer * t);
    };
    // bracket by scanning around the guess
    double lo = 0.0, hi = 0.0;
    double left = std::max(guess - 1.0, 1e-8);
    double prev_t = left, prev_v = cross(left);
    bool found = false;
    for (int i = 1; i <= 200; ++i) {
        double t = left + i * 0.01;
        double v = cross(t);
        if (prev_v == 0.0) {
            lo = hi = prev_t;
            found = true;
            break;
        }
        if (v == 0.0 || (v > 0) != (prev_v > 0)) {
            lo = prev_t;
            hi = t;
            found = true;
            break;
        }
        prev_t = t;
        prev_v = v;
    }
    if (!found) throw RootNotFound("find_lambda: no sign change near guess");
    if (lo == hi) return lo;
    double flo = cross(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = cross(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace mhelm
