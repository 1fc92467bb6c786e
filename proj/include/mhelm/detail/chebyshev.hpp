#pragma once

#include <cmath>
#include <vector>

// Chebyshev interpolation utilities for the cluster expansions: first-kind
// nodes, barycentric Lagrange basis evaluation, and the parent/child
// transfer matrices used by the upward and downward passes.

namespace mhelm::detail {

struct ChebBasis {
    int n;
    std::vector<double> nodes;  // on [-1, 1]
    std::vector<double> baryw;
    std::vector<double> t_lo;   // n x n: L_m^parent(child-lo node k)
    std::vector<double> t_hi;

    explicit ChebBasis(int order) : n(order) {
        nodes.resize(n);
        baryw.resize(n);
        for (int k = 0; k < n; ++k) {
            double th = M_PI * (2 * k + 1) / (2.0 * n);
            nodes[k] = std::cos(th);
            baryw[k] = (k % 2 ? -1.0 : 1.0) * std::sin(th);
        }
        t_lo.resize(n * n);
        t_hi.resize(n * n);
        std::vector<double> b(n);
        for (int k = 0; k < n; ++k) {
            basis_at(0.5 * (nodes[k] - 1.0), b.data());
            for (int m = 0; m < n; ++m) t_lo[m * n + k] = b[m];
            basis_at(0.5 * (nodes[k] + 1.0), b.data());
            for (int m = 0; m < n; ++m) t_hi[m * n + k] = b[m];
        }
    }

    // Lagrange basis values L_m(x), x in [-1, 1]
    void basis_at(double x, double* out) const {
        for (int k = 0; k < n; ++k) {
            if (x == nodes[k]) {
                for (int m = 0; m < n; ++m) out[m] = (m == k) ? 1.0 : 0.0;
                return;
            }
        }
        double denom = 0.0;
        for (int k = 0; k < n; ++k) {
            out[k] = baryw[k] / (x - nodes[k]);
            denom += out[k];
        }
        for (int k = 0; k < n; ++k) out[k] /= denom;
    }
};

// W_parent[m] += sum_k T[m][k] W_child[k], tensorized over the two axes.
// cx, cy select the child half along each axis.  n2 scratch of size n*n.
inline void transfer_up(const ChebBasis& cb, bool cx, bool cy, const double* wc, double* wp,
                        double* scratch) {
    int n = cb.n;
    const double* tx = cx ? cb.t_hi.data() : cb.t_lo.data();
    const double* ty = cy ? cb.t_hi.data() : cb.t_lo.data();
    // contract x: scratch[mi][kj] = sum_ki tx[mi][ki] wc[ki][kj]
    for (int mi = 0; mi < n; ++mi)
        for (int kj = 0; kj < n; ++kj) {
            double s = 0.0;
            for (int ki = 0; ki < n; ++ki) s += tx[mi * n + ki] * wc[ki * n + kj];
            scratch[mi * n + kj] = s;
        }
    for (int mi = 0; mi < n; ++mi)
        for (int mj = 0; mj < n; ++mj) {
            double s = 0.0;
            for (int kj = 0; kj < n; ++kj) s += ty[mj * n + kj] * scratch[mi * n + kj];
            wp[mi * n + mj] += s;
        }
}

// V_child[k] += sum_m T[m][k] V_parent[m]  (transpose of transfer_up)
inline void transfer_down(const ChebBasis& cb, bool cx, bool cy, const double* vp, double* vc,
                          double* scratch) {
    int n = cb.n;
    const double* tx = cx ? cb.t_hi.data() : cb.t_lo.data();
    const double* ty = cy ? cb.t_hi.data() : cb.t_lo.data();
    for (int ki = 0; ki < n; ++ki)
        for (int mj = 0; mj < n; ++mj) {
            double s = 0.0;
            for (int mi = 0; mi < n; ++mi) s += tx[mi * n + ki] * vp[mi * n + mj];
            scratch[ki * n + mj] = s;
        }
    for (int ki = 0; ki < n; ++ki)
        for (int kj = 0; kj < n; ++kj) {
            double s = 0.0;
            for (int mj = 0; mj < n; ++mj) s += ty[mj * n + kj] * scratch[ki * n + mj];
            vc[ki * n + kj] += s;
        }
}

} // namespace mhelm::detail
