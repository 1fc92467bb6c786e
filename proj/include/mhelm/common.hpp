#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mhelm {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }

// Errors thrown by the solver stages.  Config problems are reported with the
// offending key/line; numeric failures carry the stage context added by the
// driver.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class RootNotFound : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class AmbiguousPoint : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class AccuracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class RefinementBudget : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class BootstrapRequired : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NearBoundaryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedTolerance : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline void set_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

// OpenMP-safe parallel loop: exceptions are captured and rethrown after the
// region.  Work items must only write to their own slots, which also keeps
// results independent of the thread count.
template <class F>
inline void parallel_for(std::int64_t n, F&& f) {
    std::exception_ptr ep = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        if (ep) continue;
        try {
            f(i);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (!ep) ep = std::current_exception();
            }
        }
    }
    if (ep) std::rethrow_exception(ep);
}

// splitmix64; used for seeded per-point random fields
inline std::uint64_t hash_mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// uniform in [-1/2, 1/2], deterministic in (seed, x, y) bit patterns
inline double seeded_uniform(std::uint64_t seed, double x, double y) {
    std::uint64_t hx, hy;
    static_assert(sizeof(double) == 8);
    std::memcpy(&hx, &x, 8);
    std::memcpy(&hy, &y, 8);
    std::uint64_t h = hash_mix(seed ^ hash_mix(hx ^ hash_mix(hy)));
    return static_cast<double>(h >> 11) * 0x1.0p-53 - 0.5;
}

} // namespace mhelm
