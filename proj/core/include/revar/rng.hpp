#pragma once

#include <cstdint>
#include <vector>

#include "revar/rational.hpp"

namespace revar {

/// Deterministic splitmix64 stream. Used for all seeded sampling so runs are
/// bit-identical across platforms and standard-library versions.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    long int_in(long lo, long hi) {  // inclusive range
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Nonzero numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational nonzero_rational(long max_num, long max_den) {
        long num = 0;
        while (num == 0) num = int_in(-max_num, max_num);
        return Rational(num, int_in(1, max_den));
    }

    Rational rational(long max_num, long max_den) {
        return Rational(int_in(-max_num, max_num), int_in(1, max_den));
    }

    /// Nonzero dyadic a/2^k with |a/2^k| <= 2^-4 (odd a, k in [kmin, kmax]).
    Rational small_dyadic(int kmin = 7, int kmax = 12) {
        long a = 2 * int_in(0, 3) + 1;  // 1,3,5,7
        if (below(2) == 0) a = -a;
        long k = int_in(kmin, kmax);
        long den = 1;
        for (long i = 0; i < k; ++i) den *= 2;
        return Rational(a, den);
    }

    std::vector<Rational> rational_point(int n, long max_num, long max_den) {
        std::vector<Rational> p;
        p.reserve(n);
        for (int i = 0; i < n; ++i) p.push_back(rational(max_num, max_den));
        return p;
    }

private:
    std::uint64_t s_;
};

}  // namespace revar
