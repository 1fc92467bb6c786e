#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Trigonometric machinery for 2pi-periodic samples on equispaced grids:
// real coefficient extraction, spectral differentiation, and the cardinal
// (periodic sinc) interpolant.  Grids are small (N <= a few thousand) and
// coefficients are computed once per curve, so the direct O(N^2) transform
// is used instead of an FFT.

namespace mhelm {

// Coefficients of f(a) = sum_{k=0}^{N/2} a_k cos(k a) + sum_{k=1}^{N/2-1} b_k sin(k a)
// interpolating N equispaced samples (N even).  The Nyquist mode is pure
// cosine, which is the standard balanced convention for real data.
struct TrigSeries {
    std::vector<double> a; // size N/2 + 1
    std::vector<double> b; // size N/2 + 1, b[0] = b[N/2] = 0

    int half() const { return static_cast<int>(a.size()) - 1; }

    double eval(double alpha) const {
        int m = half();
        double s = a[0];
        for (int k = 1; k < m; ++k)
            s += a[k] * std::cos(k * alpha) + b[k] * std::sin(k * alpha);
        s += a[m] * std::cos(m * alpha);
        return s;
    }

    // term-by-term derivative; the Nyquist cosine differentiates to a sine
    // invisible on the grid and is dropped (exact for degree < N/2)
    TrigSeries derivative() const {
        int m = half();
        TrigSeries d;
        d.a.assign(m + 1, 0.0);
        d.b.assign(m + 1, 0.0);
        for (int k = 1; k < m; ++k) {
            d.a[k] = k * b[k];
            d.b[k] = -k * a[k];
        }
        return d;
    }
};

inline TrigSeries trig_fit(const std::vector<double>& f) {
    int n = static_cast<int>(f.size());
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("trig_fit: need even N >= 2");
    int m = n / 2;
    TrigSeries s;
    s.a.assign(m + 1, 0.0);
    s.b.assign(m + 1, 0.0);
    // one period of twiddles; angles reduced exactly via (k j) mod n
    std::vector<double> cs(n), sn(n);
    for (int j = 0; j < n; ++j) {
        cs[j] = std::cos(2.0 * M_PI * j / n);
        sn[j] = std::sin(2.0 * M_PI * j / n);
    }
    for (int k = 0; k <= m; ++k) {
        long double ca = 0.0L, cb = 0.0L;
        for (int j = 0; j < n; ++j) {
            int idx = int((std::int64_t(k) * j) % n);
            ca += static_cast<long double>(f[j]) * cs[idx];
            cb += static_cast<long double>(f[j]) * sn[idx];
        }
        double scale = (k == 0 || k == m) ? 1.0 / n : 2.0 / n;
        s.a[k] = static_cast<double>(ca) * scale;
        s.b[k] = (k == 0 || k == m) ? 0.0 : static_cast<double>(cb) * scale;
    }
    return s;
}

// derivative values at the N grid nodes (spectral differentiation)
inline std::vector<double> spectral_derivative(const std::vector<double>& f) {
    TrigSeries d = trig_fit(f).derivative();
    int n = static_cast<int>(f.size());
    std::vector<double> out(n);
    double h = 2.0 * M_PI / n;
    for (int j = 0; j < n; ++j) out[j] = d.eval(j * h);
    return out;
}

// cardinal function of the balanced trig interpolant on an even-N grid:
// tau(0) = 1, tau(theta) = sin(N theta / 2) cot(theta / 2) / N
inline double trig_cardinal(int n, double theta) {
    theta = std::remainder(theta, 2.0 * M_PI);
    if (std::abs(theta) < 1e-14) return 1.0;
    return std::sin(0.5 * n * theta) / (n * std::tan(0.5 * theta));
}

// interpolate samples at fractional index t (parameter alpha = t * 2pi/N)
inline double fourier_interpolate(const std::vector<double>& f, double t) {
    int n = static_cast<int>(f.size());
    if (n % 2 != 0) throw std::invalid_argument("fourier_interpolate: need even N");
    double h = 2.0 * M_PI / n;
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += f[j] * trig_cardinal(n, (t - j) * h);
    return s;
}

// weights w[m] such that  f(t0 + m0 + frac) = sum_m w[m] f[(m0 + m) mod N]
inline std::vector<double> cardinal_stencil(int n, double frac) {
    double h = 2.0 * M_PI / n;
    std::vector<double> w(n);
    for (int m = 0; m < n; ++m) w[m] = trig_cardinal(n, (frac - m) * h);
    return w;
}

} // namespace mhelm
