#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mhelm/common.hpp"

// Adaptive quadtree on the unit square.  Childless nodes carry a
// cell-centered 4x4 sample grid; fields on the tree are approximated per
// leaf by a 10-term cubic in coordinates scaled by the leaf half-width.
// Refinement is driven by the fit error measured at the 16 cell-centers of
// each would-be child, and the tree is kept 2:1 balanced including corner
// neighbors.

namespace mhelm {

inline constexpr int kLeafSamples = 16;
inline constexpr int kLeafCoeffs = 10;

// offsets of the 4x4 cell centers in units of the half-width
inline constexpr double kCellOffset[4] = {-0.75, -0.25, 0.25, 0.75};

// cubic basis in scaled coordinates xi = (x - c) / hw
inline std::array<double, kLeafCoeffs> leaf_basis(double xi, double eta) {
    return {1.0, xi, eta, xi * xi, xi * eta, eta * eta,
            xi * xi * xi, xi * xi * eta, xi * eta * eta, eta * eta * eta};
}

namespace detail {

// least-squares pseudoinverse mapping 16 samples -> 10 coefficients; the
// design matrix is identical for every leaf in scaled coordinates
inline const std::array<std::array<double, kLeafSamples>, kLeafCoeffs>& leaf_fit_matrix() {
    static const auto P = [] {
        long double A[kLeafSamples][kLeafCoeffs];
        for (int i = 0; i < kLeafSamples; ++i) {
            auto row = leaf_basis(kCellOffset[i % 4], kCellOffset[i / 4]);
            for (int j = 0; j < kLeafCoeffs; ++j) A[i][j] = row[j];
        }
        long double M[kLeafCoeffs][kLeafCoeffs] = {};
        for (int a = 0; a < kLeafCoeffs; ++a)
            for (int b = 0; b < kLeafCoeffs; ++b)
                for (int i = 0; i < kLeafSamples; ++i) M[a][b] += A[i][a] * A[i][b];
        // invert M by Gauss-Jordan
        long double inv[kLeafCoeffs][kLeafCoeffs] = {};
        for (int a = 0; a < kLeafCoeffs; ++a) inv[a][a] = 1.0L;
        for (int col = 0; col < kLeafCoeffs; ++col) {
            int piv = col;
            for (int r = col + 1; r < kLeafCoeffs; ++r)
                if (std::abs((double)M[r][col]) > std::abs((double)M[piv][col])) piv = r;
            for (int c = 0; c < kLeafCoeffs; ++c) {
                std::swap(M[piv][c], M[col][c]);
                std::swap(inv[piv][c], inv[col][c]);
            }
            long double d = M[col][col];
            for (int c = 0; c < kLeafCoeffs; ++c) {
                M[col][c] /= d;
                inv[col][c] /= d;
            }
            for (int r = 0; r < kLeafCoeffs; ++r) {
                if (r == col) continue;
                long double f = M[r][col];
                for (int c = 0; c < kLeafCoeffs; ++c) {
                    M[r][c] -= f * M[col][c];
                    inv[r][c] -= f * inv[col][c];
                }
            }
        }
        std::array<std::array<double, kLeafSamples>, kLeafCoeffs> out{};
        for (int a = 0; a < kLeafCoeffs; ++a)
            for (int i = 0; i < kLeafSamples; ++i) {
                long double s = 0.0L;
                for (int b = 0; b < kLeafCoeffs; ++b) s += inv[a][b] * A[i][b];
                out[a][i] = static_cast<double>(s);
            }
        return out;
    }();
    return P;
}

} // namespace detail

// least-squares cubic fit of the 16 cell-centered samples (scaled basis)
inline std::array<double, kLeafCoeffs> fit_leaf_polynomial(
    const std::array<double, kLeafSamples>& values) {
    const auto& P = detail::leaf_fit_matrix();
    std::array<double, kLeafCoeffs> c{};
    for (int a = 0; a < kLeafCoeffs; ++a) {
        double s = 0.0;
        for (int i = 0; i < kLeafSamples; ++i) s += P[a][i] * values[i];
        c[a] = s;
    }
    return c;
}

inline double eval_leaf_poly(const std::array<double, kLeafCoeffs>& c, double xi, double eta) {
    auto p = leaf_basis(xi, eta);
    double s = 0.0;
    for (int j = 0; j < kLeafCoeffs; ++j) s += c[j] * p[j];
    return s;
}

struct TreeParams {
    double tol = 1e-7;
    int max_level = 10;
    int min_level = 2;
    std::size_t leaf_budget = 400000;
};

class QuadTree {
  public:
    struct Node {
        Vec2 center;
        double half_width;
        int level;
        int ix, iy;       // integer cell coordinates at `level`
        int child0 = -1;  // first of 4 children, -1 for leaves
        int parent = -1;
        int leaf_id = -1; // dense leaf numbering, -1 for internal nodes
    };

    using Field = std::function<double(Vec2)>;

    static QuadTree build(const Field& field, const TreeParams& params) {
        QuadTree t;
        t.params_ = params;
        t.nodes_.push_back({{0.5, 0.5}, 0.5, 0, 0, 0, -1, -1, -1});
        t.cellmap_[key(0, 0, 0)] = 0;
        t.refine_recursive(0, field);
        t.balance(field);
        t.index_leaves();
        return t;
    }

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int leaf_count() const { return static_cast<int>(leaf_nodes_.size()); }
    const Node& node(int i) const { return nodes_[i]; }
    int leaf_node(int leaf_id) const { return leaf_nodes_[leaf_id]; }
    const Node& leaf(int leaf_id) const { return nodes_[leaf_nodes_[leaf_id]]; }
    int find_cell(int level, int ix, int iy) const {
        auto it = cellmap_.find(key(level, ix, iy));
        return it == cellmap_.end() ? -1 : it->second;
    }
    int max_level() const { return max_level_seen_; }

    // samples of the field the tree was built on, 16 per leaf
    const std::vector<std::array<double, kLeafSamples>>& values() const { return values_; }

    static Vec2 grid_point(const Node& n, int i) {
        return {n.center.x + n.half_width * kCellOffset[i % 4],
                n.center.y + n.half_width * kCellOffset[i / 4]};
    }

    // the unique leaf whose closed square contains x; points on shared
    // edges resolve toward the lower-index child
    int locate(Vec2 p) const {
        if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0)
            throw std::domain_error("QuadTree::locate: point outside the unit square");
        int idx = 0;
        while (nodes_[idx].child0 >= 0) {
            const Node& n = nodes_[idx];
            int cx = p.x > n.center.x ? 1 : 0;
            int cy = p.y > n.center.y ? 1 : 0;
            idx = n.child0 + cx + 2 * cy;
        }
        return nodes_[idx].leaf_id;
    }

    double eval(int leaf_id, Vec2 p, const std::array<double, kLeafCoeffs>& c) const {
        const Node& n = leaf(leaf_id);
        double xi = (p.x - n.center.x) / n.half_width;
        double eta = (p.y - n.center.y) / n.half_width;
        if (std::abs(xi) > 1.0 + 1e-12 || std::abs(eta) > 1.0 + 1e-12)
            throw std::domain_error("QuadTree::eval: point outside the leaf");
        return eval_leaf_poly(c, xi, eta);
    }

    std::vector<std::array<double, kLeafCoeffs>> fit_all(
        const std::vector<std::array<double, kLeafSamples>>& vals) const {
        std::vector<std::array<double, kLeafCoeffs>> out(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) out[i] = fit_leaf_polynomial(vals[i]);
        return out;
    }

    // leaves intersecting the closed disk around p
    void leaves_in_ball(Vec2 p, double radius, std::vector<int>& out) const {
        out.clear();
        collect_ball(0, p, radius, out);
    }

    void dump(std::ostream& os) const {
        os << "level,cx,cy,half_width";
        for (int i = 0; i < kLeafSamples; ++i) os << ",v" << i;
        os << "\n";
        char buf[64];
        for (int l = 0; l < leaf_count(); ++l) {
            const Node& n = leaf(l);
            os << n.level;
            std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g", n.center.x, n.center.y,
                          n.half_width);
            os << buf;
            for (int i = 0; i < kLeafSamples; ++i) {
                std::snprintf(buf, sizeof buf, ",%.17g", values_[l][i]);
                os << buf;
            }
            os << "\n";
        }
    }

  private:
    static std::uint64_t key(int level, int ix, int iy) {
        return (std::uint64_t(level) << 58) | (std::uint64_t(ix) << 29) | std::uint64_t(iy);
    }

    void sample_node(int idx, const Field& field, std::array<double, kLeafSamples>& out) const {
        const Node& n = nodes_[idx];
        for (int i = 0; i < kLeafSamples; ++i) out[i] = field(grid_point(n, i));
    }

    void subdivide(int idx, const Field& field) {
        Node n = nodes_[idx]; // copy: nodes_ reallocates below
        int c0 = static_cast<int>(nodes_.size());
        nodes_[idx].child0 = c0;
        double hw = n.half_width / 2.0;
        for (int cy = 0; cy < 2; ++cy)
            for (int cx = 0; cx < 2; ++cx) {
                Node ch;
                ch.center = {n.center.x + (cx ? hw : -hw), n.center.y + (cy ? hw : -hw)};
                ch.half_width = hw;
                ch.level = n.level + 1;
                ch.ix = 2 * n.ix + cx;
                ch.iy = 2 * n.iy + cy;
                ch.parent = idx;
                nodes_.push_back(ch);
                cellmap_[key(ch.level, ch.ix, ch.iy)] = c0 + cx + 2 * cy;
            }
        (void)field;
        max_level_seen_ = std::max(max_level_seen_, n.level + 1);
    }

    bool needs_refinement(int idx, const Field& field) const {
        const Node& n = nodes_[idx];
        std::array<double, kLeafSamples> vals;
        sample_node(idx, field, vals);
        auto c = fit_leaf_polynomial(vals);
        double hw = n.half_width / 2.0;
        double err = 0.0;
        for (int cy = 0; cy < 2 && err <= params_.tol; ++cy)
            for (int cx = 0; cx < 2 && err <= params_.tol; ++cx) {
                Vec2 cc{n.center.x + (cx ? hw : -hw), n.center.y + (cy ? hw : -hw)};
                for (int i = 0; i < kLeafSamples; ++i) {
                    Vec2 p{cc.x + hw * kCellOffset[i % 4], cc.y + hw * kCellOffset[i / 4]};
                    double xi = (p.x - n.center.x) / n.half_width;
                    double eta = (p.y - n.center.y) / n.half_width;
                    err = std::max(err, std::abs(eval_leaf_poly(c, xi, eta) - field(p)));
                    if (err > params_.tol) break;
                }
            }
        return err > params_.tol;
    }

    void refine_recursive(int idx, const Field& field) {
        const Node n = nodes_[idx];
        bool split = n.level < params_.min_level
                     || (n.level < params_.max_level && needs_refinement(idx, field));
        if (!split) return;
        if (nodes_.size() / 3 > params_.leaf_budget)
            throw RefinementBudget("QuadTree::build: leaf budget exceeded");
        subdivide(idx, field);
        int c0 = nodes_[idx].child0;
        for (int c = 0; c < 4; ++c) refine_recursive(c0 + c, field);
    }

    // enforce 2:1 balance between edge- and corner-adjacent leaves
    void balance(const Field& field) {
        bool changed = true;
        while (changed) {
            changed = false;
            // snapshot: subdividing invalidates iteration otherwise
            std::vector<int> leaves;
            for (int i = 0; i < (int)nodes_.size(); ++i)
                if (nodes_[i].child0 < 0) leaves.push_back(i);
            for (int idx : leaves) {
                if (nodes_[idx].child0 >= 0) continue;
                const Node n = nodes_[idx];
                bool violated = false;
                for (int dy = -1; dy <= 1 && !violated; ++dy)
                    for (int dx = -1; dx <= 1 && !violated; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        int nx = n.ix + dx, ny = n.iy + dy;
                        if (nx < 0 || ny < 0 || nx >= (1 << n.level) || ny >= (1 << n.level))
                            continue;
                        int nb = find_cell(n.level, nx, ny);
                        if (nb < 0 || nodes_[nb].child0 < 0) continue;
                        // neighbor is subdivided; check its children facing us
                        int c0 = nodes_[nb].child0;
                        for (int c = 0; c < 4; ++c) {
                            const Node& ch = nodes_[c0 + c];
                            if (ch.child0 < 0) continue;
                            if (touches(ch, n)) {
                                violated = true;
                                break;
                            }
                        }
                    }
                if (violated) {
                    if (nodes_.size() / 3 > params_.leaf_budget)
                        throw RefinementBudget("QuadTree::balance: leaf budget exceeded");
                    subdivide(idx, field);
                    changed = true;
                }
            }
        }
    }

    static bool touches(const Node& a, const Node& b) {
        double gap = 1e-12;
        return std::abs(a.center.x - b.center.x) <= a.half_width + b.half_width + gap
               && std::abs(a.center.y - b.center.y) <= a.half_width + b.half_width + gap;
    }

    void index_leaves() {
        leaf_nodes_.clear();
        for (int i = 0; i < (int)nodes_.size(); ++i)
            if (nodes_[i].child0 < 0) {
                nodes_[i].leaf_id = static_cast<int>(leaf_nodes_.size());
                leaf_nodes_.push_back(i);
            }
        values_.resize(leaf_nodes_.size());
    }

    void collect_ball(int idx, Vec2 p, double radius, std::vector<int>& out) const {
        const Node& n = nodes_[idx];
        double dx = std::max(std::abs(p.x - n.center.x) - n.half_width, 0.0);
        double dy = std::max(std::abs(p.y - n.center.y) - n.half_width, 0.0);
        if (dx * dx + dy * dy > radius * radius) return;
        if (n.child0 < 0) {
            out.push_back(n.leaf_id);
            return;
        }
        for (int c = 0; c < 4; ++c) collect_ball(n.child0 + c, p, radius, out);
    }

    friend QuadTree build_tree(const QuadTree::Field&, const TreeParams&);

    TreeParams params_;
    std::vector<Node> nodes_;
    std::vector<int> leaf_nodes_;
    std::unordered_map<std::uint64_t, int> cellmap_;
    std::vector<std::array<double, kLeafSamples>> values_;
    int max_level_seen_ = 0;

  public:
    // sampled build: fills values() with field samples on every leaf
    static QuadTree build_sampled(const Field& field, const TreeParams& params) {
        QuadTree t = build(field, params);
        for (int l = 0; l < t.leaf_count(); ++l) t.sample_node(t.leaf_nodes_[l], field, t.values_[l]);
        return t;
    }
};

inline QuadTree build_tree(const QuadTree::Field& field, const TreeParams& params) {
    return QuadTree::build_sampled(field, params);
}

// scalar field living on the 16 M grid points of a tree
struct GridField {
    std::vector<double> v; // leaf_id * 16 + i

    static GridField zeros(const QuadTree& t) {
        GridField g;
        g.v.assign(std::size_t(t.leaf_count()) * kLeafSamples, 0.0);
        return g;
    }

    double& at(int leaf_id, int i) { return v[std::size_t(leaf_id) * kLeafSamples + i]; }
    double at(int leaf_id, int i) const { return v[std::size_t(leaf_id) * kLeafSamples + i]; }

    std::array<double, kLeafSamples> leaf_values(int leaf_id) const {
        std::array<double, kLeafSamples> out;
        for (int i = 0; i < kLeafSamples; ++i) out[i] = at(leaf_id, i);
        return out;
    }
};

// per-leaf cubic fits of a grid field
inline std::vector<std::array<double, kLeafCoeffs>> fit_field(const QuadTree& t,
                                                              const GridField& g) {
    std::vector<std::array<double, kLeafCoeffs>> out(t.leaf_count());
    for (int l = 0; l < t.leaf_count(); ++l) out[l] = fit_leaf_polynomial(g.leaf_values(l));
    return out;
}

} // namespace mhelm
