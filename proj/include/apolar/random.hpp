#ifndef APOLAR_RANDOM_HPP
#define APOLAR_RANDOM_HPP

#include <cstdint>
#include <random>

#include "apolar/linalg.hpp"

namespace apolar {

/// Seeded source for every randomized computation and property suite.
/// Integer draws avoid std distributions so streams match across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n) (n > 0).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool coin() { return (next() >> 17) & 1; }

    Scalar scalar(const Field& f) {
        if (f.is_rational()) return f.from_int(range(-5, 5));
        return f.from_int(static_cast<long long>(below(f.characteristic())));
    }
    Scalar nonzero_scalar(const Field& f) {
        while (true) {
            Scalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }
    Vec vec(const Field& f, std::size_t n) {
        Vec v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
        return v;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace apolar

#endif
