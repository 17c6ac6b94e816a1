#include "shg/gamma_p.hpp"

#include "shg/errors.hpp"

#include <algorithm>

namespace shg {

PadicNumber gamma_p(const BigRational& a, unsigned long p, long N, Backend backend) {
    require_prime(p);
    if (N < 1) throw DomainError("gamma_p needs N >= 1");
    if (a != 0 && valuation(a, p) < 0) throw DomainError("gamma_p needs v_p(a) >= 0, got " + to_string(a));
    BigInt m = reduce_mod(a, prime_power(p, N));
    BigInt u = unit_product(m, p, N, backend);
    if (mpz_odd_p(m.get_mpz_t())) u = -u;
    return PadicNumber::from_integer(u, p, N);
}

ResidueData residue_data(const BigRational& a, unsigned long p) {
    require_prime(p);
    long v = valuation(a, p);
    if (v < 0) throw DomainError("residue_data needs v_p(a) >= 0");
    ResidueData d;
    d.a = a;
    d.p = p;
    unsigned long r = reduce_mod(a, BigInt(p)).get_ui();
    d.a_zero = r == 0 ? p : r;
    if (v == 0) {
        d.i = p - r;
        BigRational ap = (a + BigRational(static_cast<long>(*d.i))) / BigRational(static_cast<long>(p));
        ap.canonicalize();
        d.a_prime = ap;
    }
    return d;
}

long taylor_tail_valuation(unsigned long p, int t, int r) {
    // v(G_k/k!) >= 0 for k < p, >= -k (1/p + 1/(p-1)) in general
    long P = static_cast<long>(p);
    long den = P * (P - 1);
    long best = kInfiniteValuation;
    long kmax = 2L * (t + 1) * r + 2 * P + 2;
    for (long k = t + 1; k <= kmax; ++k) {
        long bound;
        if (k < P) {
            bound = k * r;
        } else {
            long num = k * r * den - k * (2 * P - 1);
            bound = (num + den - 1) / den;
        }
        best = std::min(best, bound);
    }
    return best;
}

namespace {

// inverse of V_{jk} = j^k, j,k = 1..n
std::vector<std::vector<BigRational>> vandermonde_inverse(int n) {
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n));
    for (int j = 0; j < n; ++j) {
        BigRational pw = 1;
        for (int k = 0; k < n; ++k) {
            pw *= j + 1;
            a[j][k] = pw;
        }
        a[j][n + j] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (a[piv][c] == 0) ++piv;
        std::swap(a[piv], a[c]);
        BigRational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            BigRational f = a[r][c];
            for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<BigRational>> out(n, std::vector<BigRational>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out[j][k] = a[j][n + k];
    return out;
}

}  // namespace

GammaDerivatives gamma_derivatives(const BigRational& a, unsigned long p, int k_max, int r, Backend backend) {
    require_prime(p);
    if (k_max < 0) throw DomainError("gamma_derivatives needs k_max >= 0");
    if (r < 1) throw DomainError("gamma_derivatives needs r >= 1");
    if (a != 0 && valuation(a, p) < 0) throw DomainError("gamma_derivatives needs v_p(a) >= 0");

    GammaDerivatives out;
    out.base_point = a;
    out.p = p;
    out.r = r;
    long M = taylor_tail_valuation(p, k_max, r);
    out.entries.push_back({0, PadicNumber::one(p, M), M});
    if (k_max == 0) return out;

    PadicNumber g0 = gamma_p(a, p, M, backend);
    BigRational step(prime_power(p, r));
    std::vector<PadicNumber> d;
    for (int j = 1; j <= k_max; ++j) {
        PadicNumber rj = gamma_p(a + BigRational(j) * step, p, M, backend) / g0;
        d.push_back(rj - PadicNumber::one(p, M));
    }
    auto vinv = vandermonde_inverse(k_max);
    for (int k = 1; k <= k_max; ++k) {
        PadicNumber u = PadicNumber::zero(p, kInfiniteValuation);
        for (int j = 0; j < k_max; ++j) {
            const BigRational& c = vinv[k - 1][j];
            if (c == 0) continue;
            u = u + c * d[j];
        }
        BigRational scale(factorial(static_cast<unsigned long>(k)), prime_power(p, static_cast<long>(k) * r));
        scale.canonicalize();
        PadicNumber gk = scale * u;
        long guaranteed = gk.abs_prec();
        if (k_max <= 4 && guaranteed <= 0) throw PrecisionError(1, guaranteed);
        out.entries.push_back({k, gk, guaranteed});
    }
    return out;
}

PadicNumber taylor_gamma_ratio(const GammaDerivatives& g, const PadicNumber& m, int t) {
    unsigned long p = g.p;
    if (m.prime() != p) throw PrimeMismatch(m.prime(), p);
    if (!m.is_zero() && m.valuation() < 0) throw DomainError("taylor_gamma_ratio needs v_p(m) >= 0");
    if (t < 0 || static_cast<std::size_t>(t) >= g.entries.size()) throw DomainError("not enough derivatives");
    long target = static_cast<long>(t + 1) * g.r;
    PadicNumber x = BigRational(prime_power(p, g.r)) * m;
    PadicNumber sum = g.G(0).with_abs_prec(target);
    PadicNumber pw = PadicNumber::one(p, target);
    for (int k = 1; k <= t; ++k) {
        pw = pw * x;
        BigRational inv_fact(1, factorial(static_cast<unsigned long>(k)));
        sum = sum + inv_fact * (g.G(k) * pw);
    }
    return sum.with_abs_prec(target);
}

PadicNumber taylor_gamma_ratio(const BigRational& a, const PadicNumber& m, int r, int t, unsigned long p,
                               Backend backend) {
    require_prime(p);
    if (t != 0 && t != 1 && t != 2 && t != 4) throw DomainError("taylor_gamma_ratio needs t in {0,1,2,4}");
    if (t == 4 && p < 11) throw DomainError("t = 4 needs p >= 11");
    return taylor_gamma_ratio(gamma_derivatives(a, p, t, r, backend), m, t);
}

}  // namespace shg
