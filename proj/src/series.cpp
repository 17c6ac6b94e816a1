#include "shg/errors.hpp"
#include "shg/hyper.hpp"

namespace shg {

RationalPowerSeries::RationalPowerSeries(long order)
    : c_(static_cast<std::size_t>(order) + 1, BigRational(0)), order_(order) {
    if (order < 0) throw DomainError("negative series order");
}

RationalPowerSeries::RationalPowerSeries(std::vector<BigRational> coeffs, long order)
    : c_(std::move(coeffs)), order_(order) {
    if (order < 0) throw DomainError("negative series order");
    c_.resize(static_cast<std::size_t>(order) + 1, BigRational(0));
}

RationalPowerSeries RationalPowerSeries::constant(const BigRational& c, long order) {
    RationalPowerSeries s(order);
    s.c_[0] = c;
    return s;
}

RationalPowerSeries RationalPowerSeries::variable(long order) {
    RationalPowerSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

RationalPowerSeries RationalPowerSeries::one_minus_z_pow(const BigRational& e, long order) {
    // coefficient k: (-e)_k / k!
    RationalPowerSeries s(order);
    BigRational c = 1;
    for (long k = 0; k <= order; ++k) {
        s.c_[static_cast<std::size_t>(k)] = c;
        c *= -e + k;
        c /= k + 1;
    }
    return s;
}

RationalPowerSeries RationalPowerSeries::hypergeometric(const std::vector<BigRational>& upper,
                                                        const std::vector<BigRational>& lower, long order) {
    RationalPowerSeries s(order);
    BigRational c = 1;
    for (long k = 0; k <= order; ++k) {
        s.c_[static_cast<std::size_t>(k)] = c;
        if (k == order) break;
        BigRational num = 1;
        for (const auto& a : upper) num *= a + k;
        if (num == 0) break;
        BigRational den = k + 1;
        for (const auto& b : lower) {
            BigRational f = b + k;
            if (f == 0) throw PoleError("lower parameter " + to_string(b) + " vanishes at k = " + std::to_string(k));
            den *= f;
        }
        c *= num;
        c /= den;
    }
    return s;
}

RationalPowerSeries operator+(const RationalPowerSeries& a, const RationalPowerSeries& b) {
    long m = std::min(a.order_, b.order_);
    RationalPowerSeries s(m);
    for (long k = 0; k <= m; ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
}

RationalPowerSeries operator-(const RationalPowerSeries& a, const RationalPowerSeries& b) {
    return a + BigRational(-1) * b;
}

RationalPowerSeries operator*(const RationalPowerSeries& a, const RationalPowerSeries& b) {
    long m = std::min(a.order_, b.order_);
    RationalPowerSeries s(m);
    for (long i = 0; i <= m; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; i + j <= m; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
}

RationalPowerSeries operator*(const BigRational& x, const RationalPowerSeries& a) {
    RationalPowerSeries s = a;
    for (auto& c : s.c_) c *= x;
    return s;
}

bool operator==(const RationalPowerSeries& a, const RationalPowerSeries& b) { return a.first_difference(b) < 0; }

long RationalPowerSeries::first_difference(const RationalPowerSeries& other) const {
    long m = std::min(order_, other.order_);
    for (long k = 0; k <= m; ++k)
        if (c_[k] != other.c_[k]) return k;
    return -1;
}

RationalPowerSeries RationalPowerSeries::compose(const RationalPowerSeries& inner) const {
    if (inner.c_[0] != 0) throw DomainError("compose needs an inner series without constant term");
    long m = std::min(order_, inner.order_);
    RationalPowerSeries acc = constant(c_[m], m);
    for (long k = m; k-- > 0;) acc = acc * inner + constant(c_[k], m);
    return acc;
}

std::pair<RationalPowerSeries, RationalPowerSeries> pfq_series_square(const BigRational& a, const BigRational& b,
                                                                      long M) {
    BigRational half(1, 2);
    // Count vanishing factors through order M, each as a simple zero of the parameters.
    // A net surplus of upper zeros makes every later term vanish; a lower zero that is
    // not outweighed leaves the coefficient undefined (or dependent on how it is approached).
    auto check = [M](const std::vector<BigRational>& upper, const std::vector<BigRational>& lower) {
        long net = 0;
        for (long j = 0; j < M; ++j) {
            long uz = 0, lz = 0;
            for (const auto& u : upper) uz += (u + j == 0);
            for (const auto& l : lower) lz += (l + j == 0);
            if (!uz && !lz) continue;
            net += uz - lz;
            if (net <= 0)
                throw PoleError("lower parameter hits a pole at index " + std::to_string(j) + " within order " +
                                std::to_string(M));
        }
    };
    check({a, b}, {a + b + half});
    check({2 * a, 2 * b, a + b}, {2 * a + 2 * b, a + b + half});
    auto f = RationalPowerSeries::hypergeometric({a, b}, {a + b + half}, M);
    auto g = RationalPowerSeries::hypergeometric({2 * a, 2 * b, a + b}, {2 * a + 2 * b, a + b + half}, M);
    return {f * f, g};
}

}  // namespace shg
