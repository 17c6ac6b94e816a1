#pragma once

#include "shg/padic.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace shg {

enum class Backend { Naive, Fast, Auto };

std::string_view to_string(Backend b);
// Auto resolves to Fast once p^N (the naive loop length) exceeds 2^20
Backend resolve_backend(Backend b, unsigned long p, long N);

// prod_{1 <= k < m, p does not divide k} k  mod p^N
BigInt unit_product(const BigInt& m, unsigned long p, long N, Backend backend = Backend::Auto);

PadicNumber gamma_p(const BigRational& a, unsigned long p, long N, Backend backend = Backend::Auto);

struct ResidueData {
    BigRational a;
    unsigned long p = 0;
    unsigned long a_zero = 0;
    std::optional<unsigned long> i;
    std::optional<BigRational> a_prime;
};

ResidueData residue_data(const BigRational& a, unsigned long p);

struct GammaDerivatives {
    struct Entry {
        int k;
        PadicNumber value;
        long guaranteed_abs_prec;
    };
    BigRational base_point;
    unsigned long p = 0;
    int r = 0;
    std::vector<Entry> entries;

    const PadicNumber& G(int k) const { return entries.at(static_cast<std::size_t>(k)).value; }
};

// lower bound for v((G_k(a)/k!) (m p^r)^k) over all k > t, m a p-adic integer
long taylor_tail_valuation(unsigned long p, int t, int r);

GammaDerivatives gamma_derivatives(const BigRational& a, unsigned long p, int k_max, int r,
                                   Backend backend = Backend::Auto);

// sum_{k<=t} G_k(a)/k! (m p^r)^k, abs_prec (t+1) r
PadicNumber taylor_gamma_ratio(const BigRational& a, const PadicNumber& m, int r, int t, unsigned long p,
                               Backend backend = Backend::Auto);
PadicNumber taylor_gamma_ratio(const GammaDerivatives& g, const PadicNumber& m, int t);

}  // namespace shg
