#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mhelm/common.hpp"
#include "mhelm/detail/chebyshev.hpp"
#include "mhelm/kernels.hpp"

// Hierarchical evaluation of screened-kernel sums
//
//   phi(t) = sum_s q_s K0(|t - s|/alpha) / (2 pi alpha^2)            (potential)
//   phi(t) = sum_s q_s (1/alpha) K1(|s-t|/alpha) (s-t).n_s / |s-t|   (directional)
//
// against a direct reference backend.  Sources and targets are clustered on
// a shared dyadic box hierarchy; well-separated box pairs whose widths
// resolve the screening length interact through Chebyshev interpolation of
// the kernel (cluster weights up, kernel matrix across, local values down),
// pairs beyond the screening horizon are dropped entirely, and everything
// else is summed directly.  All accumulation orders are fixed, so results
// are bitwise reproducible for any thread count.

namespace mhelm {

struct SumOptions {
    double tol = 1e-8;
    int cheb_order = 0;      // 0: derived from tol
    double eta = 1.5;        // box separation multiple for expansion pairs
    double margin = 1e-2;    // per-pair share of the error budget
    double dscale = 6.0;     // kernel analyticity scale: min(alpha, d / dscale)
    double min_leaf_width = 0.0;
    int leaf_capacity = 48;
    int max_level = 26;
    // optional circular exclusion: skip source/target pairs in the same
    // group with circular index distance < band (used for the punctured
    // trapezoid of the boundary operator)
    std::span<const int> source_group;
    std::span<const int> source_pos;
    std::span<const int> target_group;
    std::span<const int> target_pos;
    std::span<const int> group_size;
    int exclusion_band = 0;
};

namespace detail {

inline bool excluded_pair(const SumOptions& o, int t, int s) {
    if (o.exclusion_band <= 0 || o.source_group.empty() || o.target_group.empty()) return false;
    if (o.source_group[s] != o.target_group[t]) return false;
    int n = o.group_size[o.source_group[s]];
    int d = std::abs(o.source_pos[s] - o.target_pos[t]);
    d = std::min(d, n - d);
    return d < o.exclusion_band;
}

// contribution of source s (channels already folded) at target t
inline double p2p_kernel(const KernelSpec& spec, Vec2 t, Vec2 s, double q, double qx, double qy) {
    double dx = s.x - t.x, dy = s.y - t.y;
    double r = std::hypot(dx, dy);
    if (r == 0.0) throw std::domain_error("screened sum: coincident source and target");
    double z = r / spec.alpha;
    if (z > 700.0) return 0.0;
    if (spec.family == KernelFamily::K0Potential)
        return q * bessel_k0(z) / (2.0 * M_PI * spec.alpha * spec.alpha);
    return bessel_k1(z) / spec.alpha / r * (dx * qx + dy * qy);
}

} // namespace detail

// Reference backend: exact-order summation over a canonical source ordering
// (sorted by position, then strength), bitwise deterministic under input
// permutations.
inline std::vector<double> sum_direct(const KernelSpec& spec, std::span<const Vec2> sources,
                                      std::span<const double> strengths,
                                      std::span<const Vec2> normals,
                                      std::span<const Vec2> targets,
                                      const SumOptions& opts = {}) {
    std::size_t n = sources.size();
    bool dir = spec.family == KernelFamily::K1Directional;
    if (strengths.size() != n || (dir && normals.size() != n))
        throw std::invalid_argument("sum_direct: size mismatch");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (sources[a].x != sources[b].x) return sources[a].x < sources[b].x;
        if (sources[a].y != sources[b].y) return sources[a].y < sources[b].y;
        if (strengths[a] != strengths[b]) return strengths[a] < strengths[b];
        return a < b;
    });
    std::vector<double> out(targets.size(), 0.0);
    parallel_for((std::int64_t)targets.size(), [&](std::int64_t ti) {
        double acc = 0.0;
        for (int si : order) {
            if (detail::excluded_pair(opts, (int)ti, si)) continue;
            double q = strengths[si];
            double qx = dir ? q * normals[si].x : 0.0;
            double qy = dir ? q * normals[si].y : 0.0;
            acc += detail::p2p_kernel(spec, targets[ti], sources[si], q, qx, qy);
        }
        out[ti] = acc;
    });
    return out;
}

namespace detail {

struct SumBox {
    Vec2 center;
    double hw;
    int level, ix, iy;
    int child0 = -1;
    int start = 0, count = 0;
};

// dyadic cluster tree over a shared root square; points are permuted into
// contiguous per-box ranges, preserving input order inside each box
class SumTree {
  public:
    SumTree(std::span<const Vec2> pts, Vec2 root_c, double root_hw, int leaf_cap,
            double min_leaf_width, int max_level) {
        perm.resize(pts.size());
        std::iota(perm.begin(), perm.end(), 0);
        pos.assign(pts.begin(), pts.end());
        boxes.push_back({root_c, root_hw, 0, 0, 0, -1, 0, (int)pts.size()});
        std::vector<int> scratch(pts.size());
        build(0, leaf_cap, min_leaf_width, max_level, scratch);
    }

    std::vector<SumBox> boxes;
    std::vector<int> perm;    // box-ordered -> original index
    std::vector<Vec2> pos;    // box-ordered positions

    double edge_distance(const SumBox& a, const SumBox& b) const {
        double dx = std::max(std::abs(a.center.x - b.center.x) - a.hw - b.hw, 0.0);
        double dy = std::max(std::abs(a.center.y - b.center.y) - a.hw - b.hw, 0.0);
        return std::hypot(dx, dy);
    }

    // distance from p to the nearest point in the tree
    double nearest(Vec2 p) const {
        double best = 1e300;
        nearest_rec(0, p, best);
        return best;
    }

  private:
    void nearest_rec(int b, Vec2 p, double& best) const {
        const SumBox& bx = boxes[b];
        double ddx = std::max(std::abs(p.x - bx.center.x) - bx.hw, 0.0);
        double ddy = std::max(std::abs(p.y - bx.center.y) - bx.hw, 0.0);
        if (std::hypot(ddx, ddy) >= best) return;
        if (bx.child0 < 0) {
            for (int i = bx.start; i < bx.start + bx.count; ++i)
                best = std::min(best, norm(pos[i] - p));
            return;
        }
        for (int c = 0; c < 4; ++c) nearest_rec(bx.child0 + c, p, best);
    }

    void build(int b, int leaf_cap, double min_w, int max_level, std::vector<int>& scratch) {
        SumBox bx = boxes[b];
        if (bx.count <= leaf_cap || bx.level >= max_level || bx.hw <= min_w) return;
        // partition points into quadrants, stable
        int counts[4] = {0, 0, 0, 0};
        for (int i = bx.start; i < bx.start + bx.count; ++i) {
            int q = (pos[i].x > bx.center.x ? 1 : 0) + (pos[i].y > bx.center.y ? 2 : 0);
            ++counts[q];
        }
        int offs[4] = {bx.start, bx.start + counts[0], bx.start + counts[0] + counts[1],
                       bx.start + counts[0] + counts[1] + counts[2]};
        int cur[4] = {offs[0], offs[1], offs[2], offs[3]};
        std::vector<Vec2> tmp_pos(bx.count);
        for (int i = bx.start; i < bx.start + bx.count; ++i) {
            int q = (pos[i].x > bx.center.x ? 1 : 0) + (pos[i].y > bx.center.y ? 2 : 0);
            scratch[cur[q]] = perm[i];
            tmp_pos[cur[q] - bx.start] = pos[i];
            ++cur[q];
        }
        for (int i = 0; i < bx.count; ++i) {
            perm[bx.start + i] = scratch[bx.start + i];
            pos[bx.start + i] = tmp_pos[i];
        }
        int c0 = (int)boxes.size();
        boxes[b].child0 = c0;
        double hw = bx.hw / 2.0;
        for (int q = 0; q < 4; ++q) {
            SumBox ch;
            ch.center = {bx.center.x + ((q & 1) ? hw : -hw), bx.center.y + ((q & 2) ? hw : -hw)};
            ch.hw = hw;
            ch.level = bx.level + 1;
            ch.ix = 2 * bx.ix + (q & 1);
            ch.iy = 2 * bx.iy + ((q >> 1) & 1);
            ch.start = offs[q];
            ch.count = counts[q];
            boxes.push_back(ch);
        }
        for (int q = 0; q < 4; ++q) build(c0 + q, leaf_cap, min_w, max_level, scratch);
    }
};

struct M2LKey {
    int lt, ls, dx, dy, kernel;
    bool operator==(const M2LKey& o) const {
        return lt == o.lt && ls == o.ls && dx == o.dx && dy == o.dy && kernel == o.kernel;
    }
};

struct M2LKeyHash {
    std::size_t operator()(const M2LKey& k) const {
        std::uint64_t h = (std::uint64_t)(std::uint32_t)k.dx;
        h = h * 0x100000001b3ull ^ (std::uint32_t)k.dy;
        h = h * 0x100000001b3ull ^ (std::uint32_t)(k.lt * 64 + k.ls);
        h = h * 0x100000001b3ull ^ (std::uint32_t)k.kernel;
        return (std::size_t)hash_mix(h);
    }
};

} // namespace detail

// Dual-tree evaluator.  One instance per (kernel, sources, targets) tuple.
class ScreenedSum {
  public:
    ScreenedSum(const KernelSpec& spec, std::span<const Vec2> sources,
                std::span<const double> strengths, std::span<const Vec2> normals,
                std::span<const Vec2> targets, const SumOptions& opts)
        : spec_(spec), opts_(opts), strengths_(strengths.begin(), strengths.end()),
          normals_(normals.begin(), normals.end()),
          src_view_(sources), tgt_view_(targets) {
        if (opts_.tol < 1e-14)
            throw UnsupportedTolerance("sum_hierarchical: tolerance below 1e-14 unsupported");
        dir_ = spec.family == KernelFamily::K1Directional;
        if (strengths.size() != sources.size() || (dir_ && normals.size() != sources.size()))
            throw std::invalid_argument("sum_hierarchical: size mismatch");
        n_ = opts_.cheb_order > 0
                 ? opts_.cheb_order
                 : std::clamp((int)std::ceil(-std::log10(opts_.tol)) + 2, 6, 14);
        cb_ = std::make_unique<detail::ChebBasis>(n_);

        // shared root square over all points
        double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
        auto absorb = [&](Vec2 p) {
            xlo = std::min(xlo, p.x);
            xhi = std::max(xhi, p.x);
            ylo = std::min(ylo, p.y);
            yhi = std::max(yhi, p.y);
        };
        for (Vec2 p : sources) absorb(p);
        for (Vec2 p : targets) absorb(p);
        double w = std::max(xhi - xlo, yhi - ylo) * 0.5 * (1.0 + 1e-9) + 1e-12;
        Vec2 c{0.5 * (xlo + xhi), 0.5 * (ylo + yhi)};
        st_ = std::make_unique<detail::SumTree>(sources, c, w, opts_.leaf_capacity,
                                                opts_.min_leaf_width, opts_.max_level);
        tt_ = std::make_unique<detail::SumTree>(targets, c, w, opts_.leaf_capacity,
                                                opts_.min_leaf_width, opts_.max_level);
    }

    std::vector<double> run() {
        const int n2 = n_ * n_;
        int channels = dir_ ? 2 : 1;
        const auto& sb = st_->boxes;
        const auto& tb = tt_->boxes;

        // upward pass on the source tree
        weights_.assign((std::size_t)sb.size() * channels * n2, 0.0);
        upward(0);

        // traversal: per-target-box interaction lists
        m2l_.assign(tb.size(), {});
        p2p_.assign(tb.size(), {});
        d0max_.assign(tb.size(), -1.0);
        horizon_ = spec_.alpha * (std::log(1.0 / opts_.tol) + 14.0);
        traverse(0, 0);

        // M2L into per-box locals
        locals_.assign((std::size_t)tb.size() * n2, 0.0);
        parallel_for((std::int64_t)tb.size(), [&](std::int64_t t) {
            for (const auto& e : m2l_[t]) apply_m2l((int)t, e);
        });

        // downward pass
        std::vector<double> scratch(n2);
        for (std::size_t t = 0; t < tb.size(); ++t) {
            if (tb[t].child0 < 0) continue;
            for (int c = 0; c < 4; ++c) {
                int ch = tb[t].child0 + c;
                detail::transfer_down(*cb_, c & 1, (c >> 1) & 1, &locals_[t * n2],
                                      &locals_[(std::size_t)ch * n2], scratch.data());
            }
        }

        // leaf evaluation: P2P in list order, then the local expansion
        std::vector<double> out(tgt_view_.size(), 0.0);
        std::vector<int> leaf_boxes;
        for (int t = 0; t < (int)tb.size(); ++t)
            if (tb[t].child0 < 0 && tb[t].count > 0) leaf_boxes.push_back(t);
        parallel_for((std::int64_t)leaf_boxes.size(), [&](std::int64_t bi) {
            int t = leaf_boxes[bi];
            std::vector<double> bx(n_), by(n_);
            for (int i = tb[t].start; i < tb[t].start + tb[t].count; ++i) {
                int ti = tt_->perm[i];
                Vec2 tp = tt_->pos[i];
                double acc = 0.0;
                for (int sbi : p2p_[t]) {
                    const auto& sbx = sb[sbi];
                    for (int j = sbx.start; j < sbx.start + sbx.count; ++j) {
                        int si = st_->perm[j];
                        if (detail::excluded_pair(opts_, ti, si)) continue;
                        double q = strengths_[si];
                        double qx = dir_ ? q * normals_[si].x : 0.0;
                        double qy = dir_ ? q * normals_[si].y : 0.0;
                        acc += detail::p2p_kernel(spec_, tp, st_->pos[j], q, qx, qy);
                    }
                }
                // local expansion
                cb_->basis_at((tp.x - tb[t].center.x) / tb[t].hw, bx.data());
                cb_->basis_at((tp.y - tb[t].center.y) / tb[t].hw, by.data());
                double loc = 0.0;
                const double* v = &locals_[(std::size_t)t * n2];
                for (int a = 0; a < n_; ++a) {
                    double s = 0.0;
                    for (int b = 0; b < n_; ++b) s += v[a * n_ + b] * by[b];
                    loc += bx[a] * s;
                }
                out[ti] = acc + loc;
            }
        });
        return out;
    }

  private:
    struct M2LEntry {
        int sbox;
        const double* mat;  // n2 x n2 (channel 0) — K0 potential
        const double* maty; // channel 1 for directional
    };

    void upward(int b) {
        const auto& bx = st_->boxes[b];
        const int n2 = n_ * n_;
        int channels = dir_ ? 2 : 1;
        double* w = &weights_[(std::size_t)b * channels * n2];
        if (bx.child0 < 0) {
            std::vector<double> lx(n_), ly(n_);
            for (int i = bx.start; i < bx.start + bx.count; ++i) {
                int si = st_->perm[i];
                Vec2 p = st_->pos[i];
                cb_->basis_at((p.x - bx.center.x) / bx.hw, lx.data());
                cb_->basis_at((p.y - bx.center.y) / bx.hw, ly.data());
                double q0 = dir_ ? strengths_[si] * normals_[si].x : strengths_[si];
                for (int a = 0; a < n_; ++a)
                    for (int c = 0; c < n_; ++c) w[a * n_ + c] += q0 * lx[a] * ly[c];
                if (dir_) {
                    double q1 = strengths_[si] * normals_[si].y;
                    for (int a = 0; a < n_; ++a)
                        for (int c = 0; c < n_; ++c) w[n2 + a * n_ + c] += q1 * lx[a] * ly[c];
                }
            }
            return;
        }
        std::vector<double> scratch(n2);
        for (int c = 0; c < 4; ++c) {
            int ch = bx.child0 + c;
            upward(ch);
            for (int k = 0; k < channels; ++k)
                detail::transfer_up(*cb_, c & 1, (c >> 1) & 1,
                                    &weights_[((std::size_t)ch * channels + k) * n2],
                                    w + (std::size_t)k * n2, scratch.data());
        }
    }

    double d0max(int tbox) {
        if (d0max_[tbox] >= 0.0) return d0max_[tbox];
        const auto& b = tt_->boxes[tbox];
        double nn = st_->nearest(b.center);
        d0max_[tbox] = nn + b.hw * std::sqrt(2.0);
        return d0max_[tbox];
    }

    void traverse(int t, int s) {
        const auto& tbx = tt_->boxes[t];
        const auto& sbx = st_->boxes[s];
        if (tbx.count == 0 || sbx.count == 0) return;
        double d = st_->edge_distance(tbx, sbx);
        if (d > horizon_ + d0max(t)) return; // screened out entirely
        double wmax = 2.0 * std::max(tbx.hw, sbx.hw);
        if (d >= opts_.eta * wmax) {
            // Chebyshev error of the pair, allowing coarse boxes at large
            // separation where the screening decay pays for them:
            //   (e W / 4 n alpha)^n  exp(-(d - d0)/alpha) <= tol * margin
            double slack = std::max(0.0, d - d0max(t)) / spec_.alpha;
            double scale = std::min(spec_.alpha, d / opts_.dscale);
            double logest =
                n_ * std::log(std::max(1e-300, M_E * wmax / (4.0 * n_ * scale))) - slack;
            if (logest <= std::log(opts_.tol * opts_.margin)) {
                m2l_[t].push_back(make_entry(t, s));
                return;
            }
        }
        bool tleaf = tbx.child0 < 0, sleaf = sbx.child0 < 0;
        if (tleaf && sleaf) {
            p2p_[t].push_back(s);
            return;
        }
        bool split_s = !sleaf && (tleaf || sbx.hw >= tbx.hw);
        if (split_s) {
            for (int c = 0; c < 4; ++c) traverse(t, sbx.child0 + c);
        } else {
            for (int c = 0; c < 4; ++c) traverse(tbx.child0 + c, s);
        }
    }

    M2LEntry make_entry(int t, int s) {
        const auto& tbx = tt_->boxes[t];
        const auto& sbx = st_->boxes[s];
        int lm = std::max(tbx.level, sbx.level);
        int tix = tbx.ix << (lm - tbx.level), tiy = tbx.iy << (lm - tbx.level);
        int six = sbx.ix << (lm - sbx.level), siy = sbx.iy << (lm - sbx.level);
        detail::M2LKey key{tbx.level, sbx.level, six - tix, siy - tiy, 0};
        M2LEntry e;
        e.sbox = s;
        e.mat = fetch_matrix(key, t, s, false);
        e.maty = dir_ ? fetch_matrix({key.lt, key.ls, key.dx, key.dy, 1}, t, s, true) : nullptr;
        return e;
    }

    const double* fetch_matrix(const detail::M2LKey& key, int t, int s, bool ycomp) {
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second.data();
        const auto& tbx = tt_->boxes[t];
        const auto& sbx = st_->boxes[s];
        const int n2 = n_ * n_;
        std::vector<double> m((std::size_t)n2 * n2);
        for (int qa = 0; qa < n_; ++qa)
            for (int qb = 0; qb < n_; ++qb) {
                Vec2 tp{tbx.center.x + tbx.hw * cb_->nodes[qa],
                        tbx.center.y + tbx.hw * cb_->nodes[qb]};
                for (int ma = 0; ma < n_; ++ma)
                    for (int mb = 0; mb < n_; ++mb) {
                        Vec2 sp{sbx.center.x + sbx.hw * cb_->nodes[ma],
                                sbx.center.y + sbx.hw * cb_->nodes[mb]};
                        double val;
                        double dx = sp.x - tp.x, dy = sp.y - tp.y;
                        double r = std::hypot(dx, dy);
                        double z = r / spec_.alpha;
                        if (z > 700.0)
                            val = 0.0;
                        else if (spec_.family == KernelFamily::K0Potential)
                            val = bessel_k0(z) / (2.0 * M_PI * spec_.alpha * spec_.alpha);
                        else
                            val = bessel_k1(z) / spec_.alpha / r * (ycomp ? dy : dx);
                        m[(std::size_t)(qa * n_ + qb) * n2 + (ma * n_ + mb)] = val;
                    }
            }
        auto [ins, ok] = cache_.emplace(key, std::move(m));
        return ins->second.data();
    }

    void apply_m2l(int t, const M2LEntry& e) {
        const int n2 = n_ * n_;
        int channels = dir_ ? 2 : 1;
        double* v = &locals_[(std::size_t)t * n2];
        const double* w = &weights_[(std::size_t)e.sbox * channels * n2];
        for (int q = 0; q < n2; ++q) {
            double s = 0.0;
            const double* row = e.mat + (std::size_t)q * n2;
            for (int m = 0; m < n2; ++m) s += row[m] * w[m];
            v[q] += s;
        }
        if (dir_) {
            const double* wy = w + n2;
            for (int q = 0; q < n2; ++q) {
                double s = 0.0;
                const double* row = e.maty + (std::size_t)q * n2;
                for (int m = 0; m < n2; ++m) s += row[m] * wy[m];
                v[q] += s;
            }
        }
    }

    KernelSpec spec_;
    SumOptions opts_;
    bool dir_;
    int n_;
    std::vector<double> strengths_;
    std::vector<Vec2> normals_;
    std::span<const Vec2> src_view_, tgt_view_;
    std::unique_ptr<detail::ChebBasis> cb_;
    std::unique_ptr<detail::SumTree> st_, tt_;
    std::vector<double> weights_, locals_;
    std::vector<std::vector<M2LEntry>> m2l_;
    std::vector<std::vector<int>> p2p_;
    std::vector<double> d0max_;
    double horizon_ = 0.0;
    std::unordered_map<detail::M2LKey, std::vector<double>, detail::M2LKeyHash> cache_;
};

inline std::vector<double> sum_hierarchical(const KernelSpec& spec, std::span<const Vec2> sources,
                                            std::span<const double> strengths,
                                            std::span<const Vec2> normals,
                                            std::span<const Vec2> targets, double tol = 1e-8,
                                            SumOptions opts = {}) {
    opts.tol = tol;
    if (opts.tol < 1e-14)
        throw UnsupportedTolerance("sum_hierarchical: tolerance below 1e-14 unsupported");
    if (sources.size() <= 200) return sum_direct(spec, sources, strengths, normals, targets, opts);
    ScreenedSum eng(spec, sources, strengths, normals, targets, opts);
    return eng.run();
}

} // namespace mhelm
