#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mhelm/common.hpp"
#include "mhelm/detail/chebyshev.hpp"
#include "mhelm/geometry.hpp"
#include "mhelm/kernels.hpp"
#include "mhelm/quadtree.hpp"

// Volume potential of a piecewise-cubic density on the quadtree:
//
//   U(x) = sum_i  int_{D_i} G(x - y) sum_j c^i_j p_j((y - x^i)/hw_i) dA
//
// Near contributions (target inside or within twice the leaf width) are
// 10-moment integrals computed by adaptive tensor Gauss quadrature with
// dyadic splitting about the singularity; they are memoized per relative
// leaf configuration.  Far contributions are evaluated either directly by
// panel Gauss quadrature (reference backend) or through Chebyshev cluster
// expansions on the tree itself with screening truncation.

namespace mhelm {

// ---------------------------------------------------------------------------
// extension of the right-hand side to the whole unit square
// ---------------------------------------------------------------------------

class ExtendedField {
  public:
    using Field = std::function<double(Vec2)>;

    // bc_constants[k]: value used outside Gamma_0 (k = 0) / inside hole k
    ExtendedField(Field interior, std::vector<double> bc_constants,
                  std::span<const ClosedCurve> curves)
        : interior_(std::move(interior)), constants_(std::move(bc_constants)),
          cls_(curves), curves_(curves) {
        if (constants_.size() != curves.size())
            throw std::invalid_argument("ExtendedField: one constant per curve required");
        // spot check continuity of the extension near each curve
        for (const auto& c : curves) {
            double push = 1e-4;
            for (int j = 0; j < c.size(); j += std::max(1, c.size() / 16)) {
                Vec2 x = c.nodes()[j] - push * c.geom().normal[j]; // inward
                double v;
                try {
                    v = interior_(x);
                } catch (...) {
                    continue;
                }
                mismatch_ = std::max(mismatch_, std::abs(v - constants_[c.index()]));
            }
        }
    }

    double operator()(Vec2 x) const {
        switch (cls_(x)) {
            case Region::Omega: return interior_(x);
            case Region::Hole: return constants_.back();
            default: return constants_[0];
        }
    }

    // worst |B - C_k| observed near the boundary; large values mean the
    // extension is not continuous and the tree will over-refine
    double boundary_mismatch() const { return mismatch_; }
    bool mismatch_warning() const { return mismatch_ > 1e-3; }

  private:
    Field interior_;
    std::vector<double> constants_;
    PointClassifier cls_;
    std::span<const ClosedCurve> curves_;
    double mismatch_ = 0.0;
};

inline ExtendedField extend_rhs(ExtendedField::Field interior, std::vector<double> bc_constants,
                                std::span<const ClosedCurve> curves) {
    return ExtendedField(std::move(interior), std::move(bc_constants), curves);
}

// ---------------------------------------------------------------------------
// near-field moment integrals
// ---------------------------------------------------------------------------

namespace detail {

inline const std::array<double, 12>& gl12_nodes() {
    static const std::array<double, 12> x = {
        -0.9815606342467192, -0.9041172563704749, -0.7699026741943047, -0.5873179542866175,
        -0.3678314989981802, -0.1252334085114689, 0.1252334085114689,  0.3678314989981802,
        0.5873179542866175,  0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
    return x;
}

inline const std::array<double, 12>& gl12_weights() {
    static const std::array<double, 12> w = {
        0.0471753363865118, 0.1069393259953184, 0.1600783285433462, 0.2031674267230659,
        0.2334925365383548, 0.2491470458134028, 0.2491470458134028, 0.2334925365383548,
        0.2031674267230659, 0.1600783285433462, 0.1069393259953184, 0.0471753363865118};
    return w;
}

// generic Gauss-Legendre nodes/weights on [-1,1] for small q (Newton on P_q)
inline void gl_rule(int q, std::vector<double>& x, std::vector<double>& w) {
    x.resize(q);
    w.resize(q);
    for (int i = 0; i < q; ++i) {
        double xi = std::cos(M_PI * (i + 0.75) / (q + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= q; ++k) {
                double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = q * (xi * p1 - p0) / (xi * xi - 1.0);
            double dx = p1 / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = xi;
        for (int k = 2; k <= q; ++k) {
            double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = q * (xi * p1 - p0) / (xi * xi - 1.0);
        x[i] = xi;
        w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
}

struct Moments {
    std::array<double, kLeafCoeffs> m{};

    void add(const Moments& o) {
        for (int j = 0; j < kLeafCoeffs; ++j) m[j] += o.m[j];
    }
    double max_abs() const {
        double v = 0.0;
        for (double x : m) v = std::max(v, std::abs(x));
        return v;
    }
    double max_diff(const Moments& o) const {
        double v = 0.0;
        for (int j = 0; j < kLeafCoeffs; ++j) v = std::max(v, std::abs(m[j] - o.m[j]));
        return v;
    }
};

// 12x12 tensor Gauss of G(t - y) p_j((y-c)/hw) over [x0,x1]x[y0,y1]
inline Moments gauss_moments(Vec2 c, double hw, Vec2 t, double alpha, double x0, double x1,
                             double y0, double y1) {
    const auto& gx = gl12_nodes();
    const auto& gw = gl12_weights();
    Moments out;
    double sx = 0.5 * (x1 - x0), sy = 0.5 * (y1 - y0);
    double mx = 0.5 * (x0 + x1), my = 0.5 * (y0 + y1);
    double pref = 1.0 / (2.0 * M_PI * alpha * alpha);
    for (int a = 0; a < 12; ++a) {
        double yx = mx + sx * gx[a];
        for (int b = 0; b < 12; ++b) {
            double yy = my + sy * gx[b];
            double r = std::hypot(yx - t.x, yy - t.y);
            double z = r / alpha;
            if (z > 700.0) continue;
            double g = pref * bessel_k0(std::max(z, 1e-290)) * gw[a] * gw[b] * sx * sy;
            auto p = leaf_basis((yx - c.x) / hw, (yy - c.y) / hw);
            for (int j = 0; j < kLeafCoeffs; ++j) out.m[j] += g * p[j];
        }
    }
    return out;
}

// bound on |int_cell G| for a cell whose corner holds the singularity:
// enclosing disk of radius rho gives 1 - (rho/alpha) K1(rho/alpha)
inline double corner_cell_bound(double ax, double ay, double alpha) {
    double rho = std::hypot(ax, ay);
    double z = rho / alpha;
    if (z > 600.0) return 1.0;
    return 1.0 - z * bessel_k1(z);
}

struct NearIntegrator {
    Vec2 c;
    double hw;
    Vec2 t;
    double alpha;
    double budget; // absolute, per unit of source area fraction
    double area;
    int depth_cap = 48;
    bool depth_exceeded = false;

    Moments adapt(double x0, double x1, double y0, double y1, int depth) {
        Moments whole = gauss_moments(c, hw, t, alpha, x0, x1, y0, y1);
        double frac = (x1 - x0) * (y1 - y0) / area;
        if (depth >= depth_cap) {
            depth_exceeded = true;
            return whole;
        }
        double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
        Moments split;
        split.add(gauss_moments(c, hw, t, alpha, x0, xm, y0, ym));
        split.add(gauss_moments(c, hw, t, alpha, xm, x1, y0, ym));
        split.add(gauss_moments(c, hw, t, alpha, x0, xm, ym, y1));
        split.add(gauss_moments(c, hw, t, alpha, xm, x1, ym, y1));
        if (whole.max_diff(split) <= budget * frac) return split;
        Moments out;
        out.add(adapt(x0, xm, y0, ym, depth + 1));
        out.add(adapt(xm, x1, y0, ym, depth + 1));
        out.add(adapt(x0, xm, ym, y1, depth + 1));
        out.add(adapt(xm, x1, ym, y1, depth + 1));
        return out;
    }

    // rectangle with the singularity at corner (t.x, t.y); sx, sy are the
    // signed extents away from the corner
    Moments corner(double ex, double ey, int depth) {
        Moments out;
        double ax = std::abs(ex), ay = std::abs(ey);
        double pmax = 2.0; // each |p_j| <= 1 on the leaf, with slack
        if (corner_cell_bound(ax, ay, alpha) * pmax <= 0.25 * budget) return out;
        if (depth >= depth_cap) {
            depth_exceeded = true;
            return out;
        }
        double hx = 0.5 * ex, hy = 0.5 * ey;
        // three non-corner children
        auto rect = [&](double u0, double u1, double v0, double v1) {
            return adapt(std::min(u0, u1), std::max(u0, u1), std::min(v0, v1), std::max(v0, v1),
                         depth + 1);
        };
        out.add(rect(t.x + hx, t.x + ex, t.y, t.y + hy));
        out.add(rect(t.x, t.x + hx, t.y + hy, t.y + ey));
        out.add(rect(t.x + hx, t.x + ex, t.y + hy, t.y + ey));
        out.add(corner(hx, hy, depth + 1));
        return out;
    }
};

} // namespace detail

// The 10 moment integrals int_{D_i} G(t - y) p_j((y - c)/hw) dA to roughly
// `tol` times the largest moment.  Handles targets inside the leaf (log
// singularity), on its boundary, and anywhere outside.
inline std::array<double, kLeafCoeffs> leaf_near_integral(Vec2 center, double half_width, Vec2 t,
                                                          const ScreenedKernel& kernel,
                                                          double tol = 1e-10) {
    double x0 = center.x - half_width, x1 = center.x + half_width;
    double y0 = center.y - half_width, y1 = center.y + half_width;
    detail::NearIntegrator ni;
    ni.c = center;
    ni.hw = half_width;
    ni.t = t;
    ni.alpha = kernel.alpha;
    ni.area = (x1 - x0) * (y1 - y0);

    bool inside = t.x > x0 && t.x < x1 && t.y > y0 && t.y < y1;

    // crude scale estimate for the absolute budget
    detail::Moments scale_est;
    if (inside) {
        scale_est.add(detail::gauss_moments(center, half_width, t, kernel.alpha, x0, t.x, y0, t.y));
        scale_est.add(detail::gauss_moments(center, half_width, t, kernel.alpha, t.x, x1, y0, t.y));
        scale_est.add(detail::gauss_moments(center, half_width, t, kernel.alpha, x0, t.x, t.y, y1));
        scale_est.add(detail::gauss_moments(center, half_width, t, kernel.alpha, t.x, x1, t.y, y1));
    } else {
        scale_est = detail::gauss_moments(center, half_width, t, kernel.alpha, x0, x1, y0, y1);
    }
    ni.budget = tol * std::max(scale_est.max_abs(), 1e-280);

    detail::Moments total;
    if (inside) {
        total.add(ni.corner(x1 - t.x, y1 - t.y, 0));
        total.add(ni.corner(x0 - t.x, y1 - t.y, 0));
        total.add(ni.corner(x1 - t.x, y0 - t.y, 0));
        total.add(ni.corner(x0 - t.x, y0 - t.y, 0));
    } else {
        total.add(ni.adapt(x0, x1, y0, y1, 0));
    }
    if (ni.depth_exceeded)
        throw AccuracyError("leaf_near_integral: quadrature did not converge within depth cap");
    return total.m;
}

// ---------------------------------------------------------------------------
// far-field panel quadrature
// ---------------------------------------------------------------------------

namespace detail {

// Panel plan for Gauss quadrature of the far moments.  The error model
//   err(q) ~ 50 (1.42 W / (q s))^{2q},  s = min(2 alpha, (d + W)/2)
// is calibrated against the adaptive near integrals over W/alpha in
// [0.02, 3] and d/W in [2, 10].
struct PanelPlan {
    int q;
    int m;
};

inline const std::pair<std::vector<double>, std::vector<double>>& gl_cached(int q) {
    static const auto rules = [] {
        std::array<std::pair<std::vector<double>, std::vector<double>>, 13> r;
        for (int qq : {3, 4, 6, 8, 10, 12}) gl_rule(qq, r[qq].first, r[qq].second);
        return r;
    }();
    return rules[q];
}

inline PanelPlan plan_panels(double hw, double d, double alpha, double rel_tol) {
    double W = 2.0 * hw;
    double logtol = std::log(std::max(rel_tol, 1e-13));
    for (int q : {3, 4, 6, 8, 10, 12}) {
        double s = std::min(2.0 * alpha, 0.5 * (d + W));
        double logerr = std::log(50.0) + 2.0 * q * std::log(1.42 * W / (q * s));
        if (logerr <= logtol) return {q, 1};
    }
    // subdivide so q = 12 panels meet the budget
    int q = 12;
    double s = std::min(2.0 * alpha, 0.5 * (d + W));
    double target = q * s / 1.42 * std::exp((logtol - std::log(50.0)) / (2.0 * q));
    int m = std::max(1, (int)std::ceil(W / std::max(target, 1e-12)));
    return {q, std::min(m, 64)};
}

inline std::array<double, kLeafCoeffs> panel_moments_planned(Vec2 c, double hw, Vec2 t,
                                                             double alpha, PanelPlan plan) {
    const auto& [gx, gw] = gl_cached(plan.q);
    int q = plan.q, m = plan.m;
    std::array<double, kLeafCoeffs> out{};
    double pref = 1.0 / (2.0 * M_PI * alpha * alpha);
    double pw = 2.0 * hw / m;
    for (int px = 0; px < m; ++px)
        for (int py = 0; py < m; ++py) {
            double cx = c.x - hw + (px + 0.5) * pw;
            double cy = c.y - hw + (py + 0.5) * pw;
            for (int a = 0; a < q; ++a) {
                double yx = cx + 0.5 * pw * gx[a];
                for (int b = 0; b < q; ++b) {
                    double yy = cy + 0.5 * pw * gx[b];
                    double r = std::hypot(yx - t.x, yy - t.y);
                    double z = r / alpha;
                    if (z > 700.0) continue;
                    double g = pref * bessel_k0(z) * gw[a] * gw[b] * 0.25 * pw * pw;
                    auto p = leaf_basis((yx - c.x) / hw, (yy - c.y) / hw);
                    for (int j = 0; j < kLeafCoeffs; ++j) out[j] += g * p[j];
                }
            }
        }
    return out;
}

inline std::array<double, kLeafCoeffs> panel_moments(Vec2 c, double hw, Vec2 t, double alpha,
                                                     double rel_tol) {
    double dx = std::max(std::abs(t.x - c.x) - hw, 0.0);
    double dy = std::max(std::abs(t.y - c.y) - hw, 0.0);
    double d = std::hypot(dx, dy);
    return panel_moments_planned(c, hw, t, alpha, plan_panels(hw, d, alpha, rel_tol));
}

struct PairKey {
    int lt, ls, dx, dy;
    bool operator==(const PairKey& o) const {
        return lt == o.lt && ls == o.ls && dx == o.dx && dy == o.dy;
    }
};
struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        std::uint64_t h = (std::uint64_t)(std::uint32_t)k.dx;
        h = h * 0x100000001b3ull ^ (std::uint32_t)k.dy;
        h = h * 0x100000001b3ull ^ (std::uint32_t)(k.lt * 64 + k.ls);
        return (std::size_t)hash_mix(h);
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// whole-grid evaluation
// ---------------------------------------------------------------------------

enum class VolumeBackend { Direct, Hierarchical };

struct VolumeOptions {
    double tol = 1e-8;
    int cheb_order = 0; // 0: derived from tol
    double eta = 2.0;   // separation multiple (>= 2 so expansions never cover near pairs)
    double margin = 0.1;
    double m2l_kappa = 2.0;  // calibrated cluster-interpolation error model
    double m2l_safety = 100.0;
    double near_tol = 1e-10; // relative accuracy of tabulated near moments
};

// Evaluator bound to one screening length; near tables and translation
// matrices persist across calls (and across time steps).
class VolumePotential {
  public:
    VolumePotential(double alpha, VolumeOptions opts = {}) : kernel_(alpha), opts_(opts) {
        n_ = opts_.cheb_order > 0
                 ? opts_.cheb_order
                 : std::clamp((int)std::ceil(-std::log10(opts_.tol)) + 1, 6, 14);
        cb_ = std::make_unique<detail::ChebBasis>(n_);
        horizon_ = alpha * (std::log(1.0 / opts_.tol) + 14.0);
    }

    double alpha() const { return kernel_.alpha; }

    // Upward potential at every grid point of the tree from the per-leaf
    // cubic coefficients.
    GridField grid(const QuadTree& tree, const std::vector<std::array<double, kLeafCoeffs>>& coeffs,
                   VolumeBackend backend) {
        if ((int)coeffs.size() != tree.leaf_count())
            throw std::invalid_argument("VolumePotential::grid: coefficient/leaf mismatch");
        return backend == VolumeBackend::Direct ? grid_direct(tree, coeffs)
                                                : grid_hier(tree, coeffs);
    }

    // near-zone rule shared by both backends: strictly closer than twice the
    // source leaf width
    static bool near_rule(Vec2 t, const QuadTree::Node& s) {
        double W = 2.0 * s.half_width;
        double dx = std::max(std::abs(t.x - s.center.x) - s.half_width, 0.0);
        double dy = std::max(std::abs(t.y - s.center.y) - s.half_width, 0.0);
        return std::hypot(dx, dy) < 2.0 * W;
    }

  private:
    // ---- near tables -------------------------------------------------------
    // moments for all 16 grid points of the target leaf against one source
    // leaf, keyed by the relative configuration
    const std::array<double, 160>& near_table(const QuadTree& tree, const QuadTree::Node& tn,
                                              const QuadTree::Node& sn) {
        int lm = std::max(tn.level, sn.level);
        detail::PairKey key{tn.level, sn.level, (sn.ix << (lm - sn.level)) - (tn.ix << (lm - tn.level)),
                            (sn.iy << (lm - sn.level)) - (tn.iy << (lm - tn.level))};
        {
            std::lock_guard<std::mutex> lk(near_mutex_);
            auto it = near_cache_.find(key);
            if (it != near_cache_.end()) return it->second;
        }
        std::array<double, 160> vals;
        for (int i = 0; i < kLeafSamples; ++i) {
            Vec2 t = QuadTree::grid_point(tn, i);
            auto m = leaf_near_integral(sn.center, sn.half_width, t, kernel_, opts_.near_tol);
            for (int j = 0; j < kLeafCoeffs; ++j) vals[i * kLeafCoeffs + j] = m[j];
        }
        std::lock_guard<std::mutex> lk(near_mutex_);
        return near_cache_.emplace(key, vals).first->second;
    }

    // ---- direct backend ----------------------------------------------------
    GridField grid_direct(const QuadTree& tree,
                          const std::vector<std::array<double, kLeafCoeffs>>& coeffs) {
        GridField out = GridField::zeros(tree);
        parallel_for(tree.leaf_count(), [&](std::int64_t tl) {
            const auto& tn = tree.leaf((int)tl);
            for (int sl = 0; sl < tree.leaf_count(); ++sl) {
                const auto& sn = tree.leaf(sl);
                for (int i = 0; i < kLeafSamples; ++i) {
                    Vec2 t = QuadTree::grid_point(tn, i);
                    std::array<double, kLeafCoeffs> m;
                    if (near_rule(t, sn)) {
                        const auto& tab = near_table(tree, tn, sn);
                        for (int j = 0; j < kLeafCoeffs; ++j) m[j] = tab[i * kLeafCoeffs + j];
                    } else {
                        m = detail::panel_moments(sn.center, sn.half_width, t, kernel_.alpha, 1e-11);
                    }
                    double s = 0.0;
                    for (int j = 0; j < kLeafCoeffs; ++j) s += m[j] * coeffs[sl][j];
                    out.at((int)tl, i) += s;
                }
            }
        });
        return out;
    }

    // ---- hierarchical backend ----------------------------------------------
    GridField grid_hier(const QuadTree& tree,
                        const std::vector<std::array<double, kLeafCoeffs>>& coeffs) {
        const int n2 = n_ * n_;
        int nn = tree.node_count();
        weights_.assign((std::size_t)nn * n2, 0.0);
        locals_.assign((std::size_t)nn * n2, 0.0);

#ifdef MHELM_PROF
        auto tick = std::chrono::steady_clock::now();
        auto lap = [&](const char* tag) {
            auto now = std::chrono::steady_clock::now();
            std::fprintf(stderr, "[vol] %-10s %.2fs\n", tag,
                         std::chrono::duration<double>(now - tick).count());
            tick = now;
        };
#else
        auto lap = [&](const char*) {};
#endif
        upward(tree, coeffs, 0);
        lap("upward");

        m2l_.assign(nn, {});
        p2p_.assign(nn, {});
        traverse(tree, 0, 0);
        lap("traverse");

        // make sure all near tables exist before the parallel phase
        for (int t = 0; t < nn; ++t) {
            const auto& tn = tree.node(t);
            if (tn.leaf_id < 0) continue;
            for (int s : p2p_[t]) {
                const auto& sn = tree.node(s);
                double dx = std::max(std::abs(tn.center.x - sn.center.x) - tn.half_width
                                         - sn.half_width, 0.0);
                double dy = std::max(std::abs(tn.center.y - sn.center.y) - tn.half_width
                                         - sn.half_width, 0.0);
                if (std::hypot(dx, dy) < 2.0 * 2.0 * sn.half_width + 1e-12)
                    (void)near_table(tree, tn, sn);
            }
        }

        lap("tables");
        parallel_for(nn, [&](std::int64_t t) {
            for (const auto& e : m2l_[t]) apply_m2l(t, e);
        });
        lap("m2l");
        {
#ifdef MHELM_PROF
            std::size_t np = 0, nm = 0;
            for (auto& v : p2p_) np += v.size();
            for (auto& v : m2l_) nm += v.size();
            std::fprintf(stderr, "[vol] pairs: %zu p2p  %zu m2l  caches: %zu near  %zu m2l\n",
                         np, nm, near_cache_.size(), m2l_cache_.size());
#endif
        }

        // downward
        std::vector<double> scratch(n2);
        for (int t = 0; t < nn; ++t) {
            const auto& tn = tree.node(t);
            if (tn.child0 < 0) continue;
            for (int c = 0; c < 4; ++c)
                detail::transfer_down(*cb_, c & 1, (c >> 1) & 1, &locals_[(std::size_t)t * n2],
                                      &locals_[(std::size_t)(tn.child0 + c) * n2], scratch.data());
        }

        lap("downward");
        GridField out = GridField::zeros(tree);
        std::vector<int> leafnodes;
        for (int t = 0; t < nn; ++t)
            if (tree.node(t).leaf_id >= 0) leafnodes.push_back(t);
        parallel_for((std::int64_t)leafnodes.size(), [&](std::int64_t bi) {
            int t = leafnodes[bi];
            const auto& tn = tree.node(t);
            int tl = tn.leaf_id;
            std::vector<double> bx(n_), by(n_);
            // plan panel quadratures once per source leaf (conservative: box
            // distance under-estimates every target's distance)
            std::vector<detail::PanelPlan> plans(p2p_[t].size());
            for (std::size_t pi = 0; pi < p2p_[t].size(); ++pi) {
                const auto& sn = tree.node(p2p_[t][pi]);
                double dxn = std::max(std::abs(tn.center.x - sn.center.x) - tn.half_width
                                          - sn.half_width, 0.0);
                double dyn = std::max(std::abs(tn.center.y - sn.center.y) - tn.half_width
                                          - sn.half_width, 0.0);
                double dmin = std::hypot(dxn, dyn);
                double rel = std::min(1e-3, opts_.tol * opts_.margin
                                                 * std::exp(std::min(dmin / kernel_.alpha, 500.0)));
                plans[pi] = detail::plan_panels(sn.half_width, dmin, kernel_.alpha, rel);
            }
            for (int i = 0; i < kLeafSamples; ++i) {
                Vec2 tp = QuadTree::grid_point(tn, i);
                double acc = 0.0;
                for (std::size_t pi = 0; pi < p2p_[t].size(); ++pi) {
                    int s = p2p_[t][pi];
                    const auto& sn = tree.node(s);
                    int sl = sn.leaf_id;
                    std::array<double, kLeafCoeffs> m;
                    if (near_rule(tp, sn)) {
                        const auto& tab = near_table(tree, tn, sn);
                        for (int j = 0; j < kLeafCoeffs; ++j) m[j] = tab[i * kLeafCoeffs + j];
                    } else {
                        m = detail::panel_moments_planned(sn.center, sn.half_width, tp,
                                                          kernel_.alpha, plans[pi]);
                    }
                    double sdot = 0.0;
                    for (int j = 0; j < kLeafCoeffs; ++j) sdot += m[j] * coeffs[sl][j];
                    acc += sdot;
                }
                cb_->basis_at((tp.x - tn.center.x) / tn.half_width, bx.data());
                cb_->basis_at((tp.y - tn.center.y) / tn.half_width, by.data());
                double loc = 0.0;
                const double* v = &locals_[(std::size_t)t * n2];
                for (int a = 0; a < n_; ++a) {
                    double srow = 0.0;
                    for (int b = 0; b < n_; ++b) srow += v[a * n_ + b] * by[b];
                    loc += bx[a] * srow;
                }
                out.at(tl, i) = acc + loc;
            }
        });
        lap("leafeval");
        return out;
    }

    void upward(const QuadTree& tree, const std::vector<std::array<double, kLeafCoeffs>>& coeffs,
                int node) {
        const auto& nd = tree.node(node);
        const int n2 = n_ * n_;
        double* w = &weights_[(std::size_t)node * n2];
        if (nd.leaf_id >= 0) {
            // integrate the leaf cubic against the Chebyshev basis (8x8 Gauss
            // is exact to machine precision for cubic x degree-(n-1))
            int q = std::max(8, (n_ + 4) / 2 + 2);
            static thread_local std::vector<double> gx, gw;
            static thread_local int cq = -1;
            if (cq != q) {
                detail::gl_rule(q, gx, gw);
                cq = q;
            }
            std::vector<double> bx(n_), by(n_);
            const auto& c = coeffs[nd.leaf_id];
            for (int a = 0; a < q; ++a) {
                double xi = gx[a];
                for (int b = 0; b < q; ++b) {
                    double eta = gx[b];
                    double f = eval_leaf_poly(c, xi, eta) * gw[a] * gw[b] * nd.half_width
                               * nd.half_width;
                    cb_->basis_at(xi, bx.data());
                    cb_->basis_at(eta, by.data());
                    for (int mi = 0; mi < n_; ++mi)
                        for (int mj = 0; mj < n_; ++mj) w[mi * n_ + mj] += f * bx[mi] * by[mj];
                }
            }
            return;
        }
        std::vector<double> scratch(n2);
        for (int c = 0; c < 4; ++c) {
            int ch = nd.child0 + c;
            upward(tree, coeffs, ch);
            detail::transfer_up(*cb_, c & 1, (c >> 1) & 1, &weights_[(std::size_t)ch * n2], w,
                                scratch.data());
        }
    }

    struct M2LEntry {
        int sbox;
        const double* mat;
    };

    void traverse(const QuadTree& tree, int t, int s) {
        const auto& tn = tree.node(t);
        const auto& sn = tree.node(s);
        double dx = std::max(std::abs(tn.center.x - sn.center.x) - tn.half_width - sn.half_width,
                             0.0);
        double dy = std::max(std::abs(tn.center.y - sn.center.y) - tn.half_width - sn.half_width,
                             0.0);
        double d = std::hypot(dx, dy);
        if (d > horizon_) return;
        double wmax = 2.0 * std::max(tn.half_width, sn.half_width);
        if (d >= opts_.eta * wmax) {
            double scale = std::min(2.0 * kernel_.alpha, 0.5 * (d + wmax));
            double logest = std::log(opts_.m2l_safety)
                            + n_ * std::log(std::max(1e-300,
                                                     opts_.m2l_kappa * wmax / (n_ * scale)))
                            - d / kernel_.alpha;
            if (logest <= std::log(opts_.tol * opts_.margin)) {
                m2l_[t].push_back({s, fetch_matrix(tree, t, s)});
                return;
            }
        }
        bool tleaf = tn.leaf_id >= 0, sleaf = sn.leaf_id >= 0;
        if (tleaf && sleaf) {
            p2p_[t].push_back(s);
            return;
        }
        bool split_s = !sleaf && (tleaf || sn.half_width >= tn.half_width);
        if (split_s)
            for (int c = 0; c < 4; ++c) traverse(tree, t, sn.child0 + c);
        else
            for (int c = 0; c < 4; ++c) traverse(tree, tn.child0 + c, s);
    }

    const double* fetch_matrix(const QuadTree& tree, int t, int s) {
        const auto& tn = tree.node(t);
        const auto& sn = tree.node(s);
        int lm = std::max(tn.level, sn.level);
        detail::PairKey key{tn.level, sn.level, (sn.ix << (lm - sn.level)) - (tn.ix << (lm - tn.level)),
                            (sn.iy << (lm - sn.level)) - (tn.iy << (lm - tn.level))};
        auto it = m2l_cache_.find(key);
        if (it != m2l_cache_.end()) return it->second.data();
        const int n2 = n_ * n_;
        std::vector<double> m((std::size_t)n2 * n2);
        double pref = 1.0 / (2.0 * M_PI * kernel_.alpha * kernel_.alpha);
        for (int qa = 0; qa < n_; ++qa)
            for (int qb = 0; qb < n_; ++qb) {
                Vec2 tp{tn.center.x + tn.half_width * cb_->nodes[qa],
                        tn.center.y + tn.half_width * cb_->nodes[qb]};
                for (int ma = 0; ma < n_; ++ma)
                    for (int mb = 0; mb < n_; ++mb) {
                        Vec2 sp{sn.center.x + sn.half_width * cb_->nodes[ma],
                                sn.center.y + sn.half_width * cb_->nodes[mb]};
                        double z = norm(sp - tp) / kernel_.alpha;
                        m[(std::size_t)(qa * n_ + qb) * n2 + ma * n_ + mb] =
                            z > 700.0 ? 0.0 : pref * bessel_k0(z);
                    }
            }
        return m2l_cache_.emplace(key, std::move(m)).first->second.data();
    }

    void apply_m2l(std::int64_t t, const M2LEntry& e) {
        const int n2 = n_ * n_;
        double* v = &locals_[(std::size_t)t * n2];
        const double* w = &weights_[(std::size_t)e.sbox * n2];
        for (int q = 0; q < n2; ++q) {
            double s = 0.0;
            const double* row = e.mat + (std::size_t)q * n2;
            for (int m = 0; m < n2; ++m) s += row[m] * w[m];
            v[q] += s;
        }
    }

    ScreenedKernel kernel_;
    VolumeOptions opts_;
    int n_;
    double horizon_;
    std::unique_ptr<detail::ChebBasis> cb_;
    std::vector<double> weights_, locals_;
    std::vector<std::vector<M2LEntry>> m2l_;
    std::vector<std::vector<int>> p2p_;
    std::unordered_map<detail::PairKey, std::array<double, 160>, detail::PairKeyHash> near_cache_;
    std::unordered_map<detail::PairKey, std::vector<double>, detail::PairKeyHash> m2l_cache_;
    std::mutex near_mutex_;
};

// boundary values of the gridded potential through the per-leaf fits
inline std::vector<double> potential_on_boundary(const QuadTree& tree,
                                                 const std::vector<std::array<double, kLeafCoeffs>>& cfit,
                                                 std::span<const Vec2> targets) {
    std::vector<double> out(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        int l = tree.locate(targets[i]);
        out[i] = tree.eval(l, targets[i], cfit[l]);
    }
    return out;
}

} // namespace mhelm
