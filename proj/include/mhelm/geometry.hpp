#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mhelm/common.hpp"
#include "mhelm/fourier.hpp"

// Spectral representation of the smooth closed boundary components and the
// geometric data the layer potentials need.  Curves are sampled at N
// equispaced parameter values and stored counterclockwise; the outward
// normal points out of the physical domain on the outer component (index
// 0) and into the hole on inner components, with the curvature signed
// against the same normal.

namespace mhelm {

struct GeometryCache {
    std::vector<Vec2> d1;          // y'(alpha_j)
    std::vector<Vec2> d2;          // y''(alpha_j)
    std::vector<Vec2> normal;      // unit, out of the domain
    std::vector<double> speed;     // |y'|
    std::vector<double> curvature; // signed against `normal`
};

// geometry at an off-node parameter value
struct CurvePoint {
    Vec2 pos;
    Vec2 normal;
    double speed;
};

class ClosedCurve {
  public:
    // `index` 0 is the outer boundary; holes use index >= 1.
    ClosedCurve(int index, std::vector<Vec2> nodes) : index_(index), nodes_(std::move(nodes)) {
        n_ = static_cast<int>(nodes_.size());
        if (n_ < 16 || n_ % 2 != 0)
            throw std::invalid_argument("ClosedCurve: need even N >= 16");
        std::vector<double> xs(n_), ys(n_);
        for (int j = 0; j < n_; ++j) {
            xs[j] = nodes_[j].x;
            ys[j] = nodes_[j].y;
        }
        sx_ = trig_fit(xs);
        sy_ = trig_fit(ys);
        dx_ = sx_.derivative();
        dy_ = sy_.derivative();
        ddx_ = dx_.derivative();
        ddy_ = dy_.derivative();

        double omega = orientation_sign();
        double h = 2.0 * M_PI / n_;
        geom_.d1.resize(n_);
        geom_.d2.resize(n_);
        geom_.normal.resize(n_);
        geom_.speed.resize(n_);
        geom_.curvature.resize(n_);
        double area2 = 0.0;
        for (int j = 0; j < n_; ++j) {
            double al = j * h;
            Vec2 d1{dx_.eval(al), dy_.eval(al)};
            Vec2 d2{ddx_.eval(al), ddy_.eval(al)};
            double s = norm(d1);
            if (s < 1e-10)
                throw std::invalid_argument("ClosedCurve: degenerate parametrization (zero speed)");
            geom_.d1[j] = d1;
            geom_.d2[j] = d2;
            geom_.speed[j] = s;
            geom_.normal[j] = (omega / s) * Vec2{d1.y, -d1.x};
            geom_.curvature[j] = omega * (d1.x * d2.y - d1.y * d2.x) / (s * s * s);
            area2 += nodes_[j].x * nodes_[(j + 1) % n_].y - nodes_[(j + 1) % n_].x * nodes_[j].y;
        }
        if (area2 <= 0.0)
            throw std::invalid_argument("ClosedCurve: nodes must run counterclockwise");
        check_simple();
    }

    static ClosedCurve circle(int index, Vec2 center, double radius, int n) {
        std::vector<Vec2> pts(n);
        for (int j = 0; j < n; ++j) {
            double al = 2.0 * M_PI * j / n;
            pts[j] = {center.x + radius * std::cos(al), center.y + radius * std::sin(al)};
        }
        return ClosedCurve(index, std::move(pts));
    }

    static ClosedCurve ellipse(int index, Vec2 center, double a, double b, double rot, int n) {
        std::vector<Vec2> pts(n);
        double c = std::cos(rot), s = std::sin(rot);
        for (int j = 0; j < n; ++j) {
            double al = 2.0 * M_PI * j / n;
            double u = a * std::cos(al), v = b * std::sin(al);
            pts[j] = {center.x + c * u - s * v, center.y + s * u + c * v};
        }
        return ClosedCurve(index, std::move(pts));
    }

    // x(a) = cx[0] + sum cx[2k-1] cos(ka) + cx[2k] sin(ka), same for y
    static ClosedCurve fourier(int index, const std::vector<double>& cx,
                               const std::vector<double>& cy, int n) {
        std::vector<Vec2> pts(n);
        auto eval = [](const std::vector<double>& c, double al) {
            double v = c.empty() ? 0.0 : c[0];
            for (size_t i = 1; i + 1 < c.size() + 1; i += 2) {
                int k = static_cast<int>((i + 1) / 2);
                v += c[i] * std::cos(k * al);
                if (i + 1 < c.size()) v += c[i + 1] * std::sin(k * al);
            }
            return v;
        };
        for (int j = 0; j < n; ++j) {
            double al = 2.0 * M_PI * j / n;
            pts[j] = {eval(cx, al), eval(cy, al)};
        }
        return ClosedCurve(index, std::move(pts));
    }

    int index() const { return index_; }
    int size() const { return n_; }
    double h() const { return 2.0 * M_PI / n_; }
    const std::vector<Vec2>& nodes() const { return nodes_; }
    const GeometryCache& geom() const { return geom_; }

    double max_speed() const {
        double m = 0.0;
        for (double s : geom_.speed) m = std::max(m, s);
        return m;
    }

    double arclength() const {
        double s = 0.0;
        for (double v : geom_.speed) s += v;
        return s * h();
    }

    // geometry at parameter alpha, from the coordinate series (spectrally exact)
    CurvePoint at(double alpha) const {
        Vec2 p{sx_.eval(alpha), sy_.eval(alpha)};
        Vec2 d1{dx_.eval(alpha), dy_.eval(alpha)};
        double s = norm(d1);
        double omega = orientation_sign();
        return {p, (omega / s) * Vec2{d1.y, -d1.x}, s};
    }

    double orientation_sign() const { return index_ == 0 ? 1.0 : -1.0; }

  private:
    void check_simple() const {
        // no two non-adjacent chords of the node polygon intersect
        auto seg = [&](int i) {
            return std::pair<Vec2, Vec2>{nodes_[i], nodes_[(i + 1) % n_]};
        };
        auto orient = [](Vec2 a, Vec2 b, Vec2 c) {
            return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        };
        for (int i = 0; i < n_; ++i) {
            auto [a, b] = seg(i);
            for (int j = i + 2; j < n_; ++j) {
                if (i == 0 && j == n_ - 1) continue; // adjacent around the seam
                auto [c, d] = seg(j);
                double o1 = orient(a, b, c), o2 = orient(a, b, d);
                double o3 = orient(c, d, a), o4 = orient(c, d, b);
                if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)))
                    throw std::invalid_argument("ClosedCurve: curve is not simple");
            }
        }
    }

    int index_;
    int n_;
    std::vector<Vec2> nodes_;
    GeometryCache geom_;
    TrigSeries sx_, sy_, dx_, dy_, ddx_, ddy_;
};

// spec'd free-function views of the construction-time data
inline std::pair<std::vector<Vec2>, std::vector<Vec2>> spectral_derivatives(const ClosedCurve& c) {
    return {c.geom().d1, c.geom().d2};
}

inline const GeometryCache& normals_curvature(const ClosedCurve& c) { return c.geom(); }

enum class Region { Omega, Hole, Exterior };

// Even-odd crossing test against the node polygons, with a guard band:
// points within `tol` of any polygon edge are ambiguous and rejected.
// Segments are binned by their y-span so a query touches only the segments
// whose span contains the query ordinate.
class PointClassifier {
  public:
    explicit PointClassifier(std::span<const ClosedCurve> curves, double tol = 1e-10)
        : tol_(tol) {
        for (const auto& c : curves) {
            BinnedPoly bp;
            bp.curve = &c;
            const auto& v = c.nodes();
            int n = static_cast<int>(v.size());
            bp.ylo = 1e300;
            bp.yhi = -1e300;
            for (const Vec2& q : v) {
                bp.ylo = std::min(bp.ylo, q.y);
                bp.yhi = std::max(bp.yhi, q.y);
            }
            bp.nbins = std::max(16, n / 4);
            bp.bins.resize(bp.nbins);
            double span = std::max(bp.yhi - bp.ylo, 1e-30);
            for (int i = 0; i < n; ++i) {
                Vec2 a = v[i], b = v[(i + 1) % n];
                double lo = std::min(a.y, b.y) - tol, hi = std::max(a.y, b.y) + tol;
                int b0 = std::clamp(int((lo - bp.ylo) / span * bp.nbins), 0, bp.nbins - 1);
                int b1 = std::clamp(int((hi - bp.ylo) / span * bp.nbins), 0, bp.nbins - 1);
                for (int k = b0; k <= b1; ++k) bp.bins[k].push_back(i);
            }
            polys_.push_back(std::move(bp));
        }
    }

    Region operator()(Vec2 p) const {
        bool inside_outer = false, inside_hole = false;
        for (const auto& bp : polys_) {
            bool in = winding_inside(bp, p);
            if (bp.curve->index() == 0)
                inside_outer = in;
            else if (in)
                inside_hole = true;
        }
        if (!inside_outer) return Region::Exterior;
        return inside_hole ? Region::Hole : Region::Omega;
    }

  private:
    struct BinnedPoly {
        const ClosedCurve* curve;
        double ylo, yhi;
        int nbins;
        std::vector<std::vector<int>> bins;
    };

    bool winding_inside(const BinnedPoly& bp, Vec2 p) const {
        if (p.y < bp.ylo - tol_ || p.y > bp.yhi + tol_) return false;
        const auto& v = bp.curve->nodes();
        int n = static_cast<int>(v.size());
        double span = std::max(bp.yhi - bp.ylo, 1e-30);
        int bin = std::clamp(int((p.y - bp.ylo) / span * bp.nbins), 0, bp.nbins - 1);
        bool in = false;
        for (int i : bp.bins[bin]) {
            Vec2 a = v[i], b = v[(i + 1) % n];
            Vec2 ab = b - a, ap = p - a;
            double t = std::clamp(dot(ap, ab) / std::max(norm2(ab), 1e-300), 0.0, 1.0);
            Vec2 q = a + t * ab;
            if (norm(p - q) < tol_)
                throw AmbiguousPoint("classify_point: point on the boundary polygon");
            if ((a.y > p.y) != (b.y > p.y)) {
                double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if (p.x < xint) in = !in;
            }
        }
        return in;
    }

    std::vector<BinnedPoly> polys_;
    double tol_;
};

inline Region classify_point(Vec2 p, std::span<const ClosedCurve> curves) {
    return PointClassifier(curves)(p);
}

} // namespace mhelm
