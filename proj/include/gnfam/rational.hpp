#ifndef GNFAM_RATIONAL_HPP
#define GNFAM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace gnfam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalPoint = std::vector<Rational>;

inline BigInt big_factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Seeded generator for rational test points p/q, p in [-20,20], q in [1,20].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<int> num(-20, 20);
        std::uniform_int_distribution<int> den(1, 20);
        return Rational(num(rng_), den(rng_));
    }

    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (r != 0) return r;
        }
    }

    RationalPoint point(int n, bool nonzero_coords) {
        RationalPoint p(static_cast<size_t>(n));
        for (auto& c : p) c = nonzero_coords ? next_nonzero() : next();
        return p;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace gnfam

#endif
