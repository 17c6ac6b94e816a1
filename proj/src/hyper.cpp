#include "shg/hyper.hpp"

#include "shg/errors.hpp"

namespace shg {

long HypergeometricSpec::last_index() const {
    if (truncation) {
        if (*truncation < 0) throw DomainError("negative truncation index");
        return *truncation;
    }
    std::optional<long> n;
    for (const auto& a : upper) {
        if (!is_nonpositive_integer(a)) continue;
        BigInt m = -a.get_num();
        if (!m.fits_slong_p()) throw DomainError("terminating index too large");
        long k = m.get_si();
        if (!n || k < *n) n = k;
    }
    if (!n) throw DomainError("series does not terminate: no nonpositive integer upper parameter");
    return *n;
}

HypergeometricSpec terminating(std::vector<BigRational> upper, std::vector<BigRational> lower, BigRational z) {
    return {std::move(upper), std::move(lower), std::move(z), std::nullopt};
}

HypergeometricSpec truncated(std::vector<BigRational> upper, std::vector<BigRational> lower, BigRational z,
                             long n) {
    return {std::move(upper), std::move(lower), std::move(z), n};
}

BigRational pochhammer(const BigRational& a, long k) {
    if (k < 0) throw DomainError("pochhammer needs k >= 0");
    BigRational r = 1;
    BigRational x = a;
    for (long j = 0; j < k; ++j) {
        if (x == 0) return 0;
        r *= x;
        x += 1;
    }
    return r;
}

namespace {

// t_{k+1}/t_k = prod(a_i+k) z / (prod(b_i+k) (k+1)); an upper zero ends the series first
struct Ratio {
    BigRational num;
    BigRational den;
    bool stops;
};

Ratio step_ratio(const HypergeometricSpec& s, long k) {
    Ratio r{1, 1, false};
    for (const auto& a : s.upper) {
        BigRational f = a + k;
        if (f == 0) {
            r.stops = true;
            return r;
        }
        r.num *= f;
    }
    for (const auto& b : s.lower) {
        BigRational f = b + k;
        if (f == 0) throw PoleError("lower parameter " + to_string(b) + " vanishes at k = " + std::to_string(k));
        r.den *= f;
    }
    r.num *= s.argument;
    r.den *= k + 1;
    return r;
}

}  // namespace

std::vector<BigRational> pfq_terms(const HypergeometricSpec& spec) {
    long n = spec.last_index();
    std::vector<BigRational> terms;
    terms.reserve(static_cast<std::size_t>(n) + 1);
    BigRational t = 1;
    terms.push_back(t);
    for (long k = 0; k < n; ++k) {
        Ratio r = step_ratio(spec, k);
        if (r.stops) break;
        t *= r.num;
        t /= r.den;
        terms.push_back(t);
        if (t == 0) break;
    }
    return terms;
}

BigRational pfq_rational(const HypergeometricSpec& spec) {
    long n = spec.last_index();
    BigRational t = 1;
    BigRational sum = 1;
    for (long k = 0; k < n; ++k) {
        Ratio r = step_ratio(spec, k);
        if (r.stops) break;
        t *= r.num;
        t /= r.den;
        if (t == 0) break;
        sum += t;
    }
    return sum;
}

PadicNumber pfq_padic(const HypergeometricSpec& spec, unsigned long p, long N, const PadicSeriesOptions& opts) {
    require_prime(p);
    long n = spec.last_index();
    long W = N + opts.guard;
    auto embed = [&](const BigRational& q) { return PadicNumber::from_rational(q, p, valuation(q, p) + W); };
    PadicNumber t = PadicNumber::one(p, W);
    PadicNumber sum = t;
    for (long k = 0; k < n; ++k) {
        Ratio r = step_ratio(spec, k);
        if (r.stops || spec.argument == 0) break;
        PadicNumber f = PadicNumber::one(p, W);
        for (const auto& a : spec.upper) f = f * embed(a + k);
        f = f * embed(spec.argument);
        for (const auto& b : spec.lower) f = f / embed(b + k);
        f = f / embed(BigRational(k + 1));
        t = t * f;
        if (t.valuation() < 0 && !opts.allow_negative_terms)
            throw DomainError("term " + std::to_string(k + 1) + " has negative valuation at p = " +
                              std::to_string(p));
        sum = sum + t;
    }
    if (sum.abs_prec() < N) throw PrecisionError(N, sum.abs_prec());
    return sum.with_abs_prec(N);
}

}  // namespace shg
