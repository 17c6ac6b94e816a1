#pragma once

// small deterministic generators for the property tests

#include "shg/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace shg::test {

inline const std::vector<unsigned long> kSmallPrimes{5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    unsigned long prime(const std::vector<unsigned long>& from = kSmallPrimes) {
        return from[static_cast<std::size_t>(range(0, static_cast<long>(from.size()) - 1))];
    }

    BigRational rational(long bound = 40) {
        BigRational q(range(-bound, bound), range(1, bound));
        q.canonicalize();
        return q;
    }

    // v_p(q) >= 0
    BigRational p_integral(unsigned long p, long bound = 40) {
        for (;;) {
            BigRational q = rational(bound);
            if (valuation(q.get_den(), p) == 0) return q;
        }
    }

    BigRational p_unit(unsigned long p, long bound = 40) {
        for (;;) {
            BigRational q = p_integral(p, bound);
            if (q != 0 && valuation(q, p) == 0) return q;
        }
    }

    // exact valuation v
    BigRational with_valuation(unsigned long p, long v, long bound = 40) {
        BigRational u = p_unit(p, bound);
        BigRational pv = v >= 0 ? BigRational(prime_power(p, v)) : BigRational(1) / BigRational(prime_power(p, -v));
        return u * pv;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace shg::test
