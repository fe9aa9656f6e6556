#pragma once

#include <cstdint>

#include "qhf/quaternion.hpp"

namespace qhf {

// splitmix64: tiny, seedable, identical output on every platform.
// Standard-library distributions are not pinned across implementations,
// so every seeded code path goes through this.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform integer in [0, n)
    uint64_t next_below(uint64_t n) { return next_u64() % n; }

    Quaternion<double> quaternion(double lo = -1.0, double hi = 1.0) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

    Quaternion<double> unit_quaternion() {
        for (;;) {
            Quaternion<double> q = quaternion();
            double n = abs(q);
            if (n > 1e-3) return q * (1.0 / n);
        }
    }

    Quaternion<double> pure_imaginary(double lo = -1.0, double hi = 1.0) {
        return {0.0, uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

private:
    uint64_t state_;
};

}  // namespace qhf
