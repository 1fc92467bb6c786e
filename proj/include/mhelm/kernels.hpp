#pragma once

#include <cmath>
#include <stdexcept>

#include "mhelm/bessel.hpp"
#include "mhelm/common.hpp"

// Screened (modified Helmholtz / Yukawa) kernels.  G is the free-space
// Green's function of 1 - alpha^2 Laplacian; the directional family carries
// the normal-derivative kernel of the double layer potential.

namespace mhelm {

struct ScreenedKernel {
    double alpha;

    explicit ScreenedKernel(double a) : alpha(a) {
        if (!(a > 0.0)) throw std::invalid_argument("ScreenedKernel: alpha must be positive");
    }

    // G(d) = K0(|d|/alpha) / (2 pi alpha^2)
    double greens(double r) const {
        if (r <= 0.0) throw std::domain_error("ScreenedKernel::greens: r must be positive");
        double z = r / alpha;
        if (z > 700.0) return 0.0;
        return bessel_k0(z) / (2.0 * M_PI * alpha * alpha);
    }

    // gradient pieces of K0(|s-t|/alpha) used by the layer kernels:
    // dir_x(t,s) = (1/alpha) K1(|s-t|/alpha) (s.x-t.x)/|s-t|, likewise y
    double dir_component(Vec2 t, Vec2 s, bool ycomp) const {
        double dx = s.x - t.x, dy = s.y - t.y;
        double r = std::hypot(dx, dy);
        if (r <= 0.0) throw std::domain_error("ScreenedKernel::dir_component: coincident points");
        double z = r / alpha;
        if (z > 700.0) return 0.0;
        return bessel_k1(z) / alpha * (ycomp ? dy : dx) / r;
    }
};

enum class KernelFamily { K0Potential, K1Directional };

struct KernelSpec {
    KernelFamily family;
    double alpha;
};

// Normal-derivative kernel of the double layer, in parametric form with the
// arclength Jacobian folded in:
//   kernel_K(y, x) = d/dnu_y K0(|y - x|/alpha) * speed_y
// with the continuous diagonal limit -kappa(x)/2 * speed_x.  n_y points out
// of the physical domain and kappa is signed against that normal.
inline double kernel_K(Vec2 y, Vec2 x, Vec2 n_y, double speed_y, const ScreenedKernel& kernel,
                       double kappa_x) {
    double dx = y.x - x.x, dy = y.y - x.y;
    double r = std::hypot(dx, dy);
    if (r < 1e-12 * kernel.alpha) return -0.5 * kappa_x * speed_y;
    double z = r / kernel.alpha;
    if (z > 700.0) return 0.0;
    return -bessel_k1(z) / kernel.alpha * (dx * n_y.x + dy * n_y.y) / r * speed_y;
}

} // namespace mhelm
