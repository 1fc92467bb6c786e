#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "mhelm/quadtree.hpp"

using namespace mhelm;

namespace {

std::array<double, kLeafSamples> sample_square(Vec2 c, double hw,
                                               const std::function<double(Vec2)>& f) {
    std::array<double, kLeafSamples> v;
    for (int i = 0; i < kLeafSamples; ++i)
        v[i] = f({c.x + hw * kCellOffset[i % 4], c.y + hw * kCellOffset[i / 4]});
    return v;
}

// max fit error over a fixed probe lattice in scaled coordinates, so the
// same relative locations are compared across leaf sizes
double fit_error_at(Vec2 c, double hw, const std::function<double(Vec2)>& f) {
    auto coeffs = fit_leaf_polynomial(sample_square(c, hw, f));
    double err = 0.0;
    for (int a = 0; a <= 40; ++a)
        for (int b = 0; b <= 40; ++b) {
            double xi = -1.0 + a / 20.0, eta = -1.0 + b / 20.0;
            Vec2 p{c.x + hw * xi, c.y + hw * eta};
            err = std::max(err, std::abs(eval_leaf_poly(coeffs, xi, eta) - f(p)));
        }
    return err;
}

} // namespace

TEST_CASE("leaf fit reproduces constants and cubics") {
    std::array<double, kLeafSamples> ones;
    ones.fill(1.0);
    auto c = fit_leaf_polynomial(ones);
    CHECK(std::abs(c[0] - 1.0) < 1e-14);
    for (int j = 1; j < kLeafCoeffs; ++j) CHECK(std::abs(c[j]) < 1e-13);

    // f(x,y) = x^3 - 2 x y in global coordinates is cubic in leaf coordinates
    auto f = [](Vec2 p) { return p.x * p.x * p.x - 2.0 * p.x * p.y; };
    Vec2 ctr{0.4, 0.7};
    double hw = 0.1;
    auto vals = sample_square(ctr, hw, f);
    auto coeffs = fit_leaf_polynomial(vals);
    for (int i = 0; i < kLeafSamples; ++i) {
        double xi = kCellOffset[i % 4], eta = kCellOffset[i / 4];
        CHECK(std::abs(eval_leaf_poly(coeffs, xi, eta) - vals[i]) < 1e-12);
    }
}

TEST_CASE("leaf fit error decays at fourth order") {
    auto f = [](Vec2 p) { return std::exp(-(p.x * p.x + p.y * p.y)); };
    Vec2 c{0.53125, 0.46875};
    double e1 = fit_error_at(c, 1.0 / 32.0, f);
    double e2 = fit_error_at(c, 1.0 / 64.0, f);
    double order = std::log2(e1 / e2);
    CHECK(order >= 3.7);
}

TEST_CASE("constant and cubic fields build minimal trees") {
    TreeParams pr;
    pr.tol = 1e-6;
    pr.min_level = 0;
    auto t1 = build_tree([](Vec2) { return 3.5; }, pr);
    CHECK(t1.leaf_count() == 1);

    auto t2 = build_tree([](Vec2 p) { return p.x * p.x * p.x - p.y + 0.2 * p.x * p.y; }, pr);
    CHECK(t2.leaf_count() == 1);

    pr.min_level = 2;
    auto t3 = build_tree([](Vec2) { return 1.0; }, pr);
    CHECK(t3.leaf_count() == 16);
}

TEST_CASE("bump refinement concentrates and deepens with tighter tolerance") {
    Vec2 x0{0.37, 0.58};
    auto f = [&](Vec2 p) {
        double r2 = norm2(p - x0);
        return std::exp(-r2 / (0.05 * 0.05));
    };
    TreeParams pr;
    pr.tol = 1e-6;
    pr.max_level = 10;
    auto t = build_tree(f, pr);
    int deep_near = 0, deep_far = 0;
    for (int l = 0; l < t.leaf_count(); ++l) {
        const auto& n = t.leaf(l);
        if (n.level >= 6) (norm(n.center - x0) < 0.22 ? deep_near : deep_far)++;
        if (norm(n.center - x0) > 0.3) CHECK(n.level <= 4);
    }
    CHECK(deep_near > 0);
    CHECK(deep_far == 0);

    TreeParams pr16 = pr;
    pr16.tol = pr.tol / 16.0;
    auto t16 = build_tree(f, pr16);
    CHECK(t16.max_level() == t.max_level() + 1);
}

TEST_CASE("locate: root, edges, and brute-force containment") {
    TreeParams pr;
    pr.tol = 1e-6;
    pr.min_level = 0;
    auto t1 = build_tree([](Vec2) { return 0.0; }, pr);
    CHECK(t1.locate({0.5, 0.5}) == 0);

    Vec2 x0{0.5, 0.5};
    auto f = [&](Vec2 p) { return std::exp(-norm2(p - x0) / 0.01); };
    pr.min_level = 2;
    pr.max_level = 8;
    auto t = build_tree(f, pr);

    // deterministic tie-break on an internal edge
    int a = t.locate({0.5, 0.3});
    for (int rep = 0; rep < 5; ++rep) CHECK(t.locate({0.5, 0.3}) == a);
    const auto& an = t.leaf(a);
    CHECK(an.center.x < 0.5); // boundary point resolves to the left cell

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100000; ++i) {
        Vec2 p{u(rng), u(rng)};
        const auto& n = t.leaf(t.locate(p));
        CHECK(std::max(std::abs(p.x - n.center.x), std::abs(p.y - n.center.y))
              <= n.half_width + 1e-15);
    }
    CHECK_THROWS_AS(t.locate({1.2, 0.1}), std::domain_error);
}

TEST_CASE("eval on leaves") {
    TreeParams pr;
    pr.tol = 1e-6;
    pr.min_level = 2;
    pr.max_level = 9;
    auto f = [](Vec2 p) { return std::sin(3.0 * p.x) * std::cosh(p.y); };
    auto t = build_tree(f, pr);
    auto coeffs = t.fit_all(t.values());

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        Vec2 p{u(rng), u(rng)};
        int l = t.locate(p);
        CHECK(std::abs(t.eval(l, p, coeffs[l]) - f(p)) <= 4.0 * pr.tol);
    }
    // outside-leaf evaluation is rejected
    int l0 = t.locate({0.1, 0.1});
    CHECK_THROWS_AS(t.eval(l0, {0.9, 0.9}, coeffs[l0]), std::domain_error);
}

TEST_CASE("tiling is exact and balance holds") {
    Vec2 x0{0.2, 0.8};
    auto f = [&](Vec2 p) { return std::exp(-norm2(p - x0) / 0.004); };
    TreeParams pr;
    pr.tol = 1e-5;
    pr.max_level = 9;
    auto t = build_tree(f, pr);

    std::uint64_t total = 0;
    int lmax = t.max_level();
    for (int l = 0; l < t.leaf_count(); ++l)
        total += std::uint64_t(1) << (2 * (lmax - t.leaf(l).level));
    CHECK(total == std::uint64_t(1) << (2 * lmax));

    // 2:1 balance including corners
    for (int i = 0; i < t.leaf_count(); ++i) {
        for (int j = 0; j < t.leaf_count(); ++j) {
            const auto& a = t.leaf(i);
            const auto& b = t.leaf(j);
            if (std::abs(a.level - b.level) < 2) continue;
            bool touch = std::abs(a.center.x - b.center.x) <= a.half_width + b.half_width + 1e-12
                         && std::abs(a.center.y - b.center.y) <= a.half_width + b.half_width + 1e-12;
            CHECK(!touch);
        }
    }
}

TEST_CASE("refinement monotonicity for nested tolerances") {
    Vec2 x0{0.61, 0.33};
    auto f = [&](Vec2 p) { return std::exp(-norm2(p - x0) / 0.01) + 0.3 * p.x; };
    TreeParams fine, coarse;
    fine.tol = 1e-7;
    coarse.tol = 1e-5;
    fine.max_level = coarse.max_level = 9;
    auto tf = build_tree(f, fine);
    auto tc = build_tree(f, coarse);
    // every coarse leaf is a union of fine leaves: every fine leaf is
    // contained in exactly one coarse leaf of level <= its own
    for (int l = 0; l < tf.leaf_count(); ++l) {
        const auto& n = tf.leaf(l);
        int cl = tc.locate(n.center);
        CHECK(tc.leaf(cl).level <= n.level);
    }
}

TEST_CASE("refinement budget turns runaway refinement into an error") {
    // discontinuous field: would refine to max everywhere
    auto f = [](Vec2 p) { return p.x + p.y > 1.0 ? 1.0 : 0.0; };
    TreeParams pr;
    pr.tol = 1e-12;
    pr.max_level = 12;
    pr.leaf_budget = 500;
    CHECK_THROWS_AS(build_tree(f, pr), RefinementBudget);
}

TEST_CASE("grid dump emits one row per leaf") {
    TreeParams pr;
    pr.tol = 1e-3;
    auto t = build_tree([](Vec2 p) { return p.x; }, pr);
    std::ostringstream os;
    t.dump(os);
    std::string s = os.str();
    int rows = 0;
    for (char ch : s)
        if (ch == '\n') ++rows;
    CHECK(rows == t.leaf_count() + 1);
}
