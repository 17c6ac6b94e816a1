#pragma once

#include "shg/padic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace shg {

struct HypergeometricSpec {
    std::vector<BigRational> upper;
    std::vector<BigRational> lower;
    BigRational argument;
    std::optional<long> truncation;  // empty: stop where an upper parameter hits zero

    // index of the last summed term
    long last_index() const;
};

HypergeometricSpec terminating(std::vector<BigRational> upper, std::vector<BigRational> lower, BigRational z);
HypergeometricSpec truncated(std::vector<BigRational> upper, std::vector<BigRational> lower, BigRational z,
                             long n);

BigRational pochhammer(const BigRational& a, long k);

// the terms t_0..t_n; stops early once an upper factor vanishes
std::vector<BigRational> pfq_terms(const HypergeometricSpec& spec);
BigRational pfq_rational(const HypergeometricSpec& spec);

struct PadicSeriesOptions {
    bool allow_negative_terms = false;
    long guard = 0;
};

PadicNumber pfq_padic(const HypergeometricSpec& spec, unsigned long p, long N,
                      const PadicSeriesOptions& opts = {});

class RationalPowerSeries {
public:
    explicit RationalPowerSeries(long order = 0);
    RationalPowerSeries(std::vector<BigRational> coeffs, long order);

    static RationalPowerSeries constant(const BigRational& c, long order);
    static RationalPowerSeries variable(long order);
    // (1 - z)^e for rational e
    static RationalPowerSeries one_minus_z_pow(const BigRational& e, long order);
    static RationalPowerSeries hypergeometric(const std::vector<BigRational>& upper,
                                              const std::vector<BigRational>& lower, long order);

    long order() const { return order_; }
    const BigRational& operator[](long k) const { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<BigRational>& coefficients() const { return c_; }

    // f(g(z)), g(0) = 0
    RationalPowerSeries compose(const RationalPowerSeries& inner) const;

    friend RationalPowerSeries operator+(const RationalPowerSeries& a, const RationalPowerSeries& b);
    friend RationalPowerSeries operator-(const RationalPowerSeries& a, const RationalPowerSeries& b);
    friend RationalPowerSeries operator*(const RationalPowerSeries& a, const RationalPowerSeries& b);
    friend RationalPowerSeries operator*(const BigRational& s, const RationalPowerSeries& a);
    friend bool operator==(const RationalPowerSeries& a, const RationalPowerSeries& b);

    // first differing index, or -1
    long first_difference(const RationalPowerSeries& other) const;

private:
    std::vector<BigRational> c_;
    long order_;
};

// (2F1(a,b;a+b+1/2;x)^2, 3F2(2a,2b,a+b;2a+2b,a+b+1/2;x)) through x^M
std::pair<RationalPowerSeries, RationalPowerSeries> pfq_series_square(const BigRational& a,
                                                                      const BigRational& b, long M);

}  // namespace shg
