#include "shg/errors.hpp"
#include "shg/gamma_p.hpp"

#include <cstdint>
#include <vector>

namespace shg {

namespace {

// Z/p^N with p^N < 2^63
struct WordRing {
    using T = std::uint64_t;
    T m;
    T one() const { return 1 % m; }
    T mul(T a, T b) const { return static_cast<T>(static_cast<unsigned __int128>(a) * b % m); }
    T add(T a, T b) const {
        T s = a + b;
        return s >= m ? s - m : s;
    }
    T from(const BigInt& x) const {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
        return r.get_ui();
    }
    T from(unsigned long x) const { return x % m; }
    BigInt to_big(T x) const { return BigInt(static_cast<unsigned long>(x)); }
};

struct BigRing {
    using T = BigInt;
    BigInt m;
    T one() const { return 1; }
    T mul(const T& a, const T& b) const {
        T r = a * b;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        return r;
    }
    T add(const T& a, const T& b) const {
        T s = a + b;
        if (s >= m) s -= m;
        return s;
    }
    T from(const BigInt& x) const {
        T r;
        mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        return r;
    }
    T from(unsigned long x) const { return from(BigInt(x)); }
    BigInt to_big(const T& x) const { return x; }
};

bool fits_word(const BigInt& modulus) { return mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 62; }

BigInt naive_product(const BigInt& m, unsigned long p, const BigInt& modulus) {
    if (!m.fits_ulong_p()) throw DomainError("naive unit_product: m too large");
    unsigned long top = m.get_ui();
    if (fits_word(modulus)) {
        std::uint64_t mod = modulus.get_ui();
        unsigned __int128 acc = 1 % mod;
        unsigned long next_skip = p;
        for (unsigned long k = 1; k < top; ++k) {
            if (k == next_skip) {
                next_skip += p;
                continue;
            }
            acc = acc * k % mod;
        }
        return BigInt(static_cast<unsigned long>(acc));
    }
    BigInt acc = 1;
    for (unsigned long k = 1; k < top; ++k) {
        if (k % p == 0) continue;
        acc *= k;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
    }
    return acc;
}

template <class R>
using Poly = std::vector<typename R::T>;

template <class R>
Poly<R> mul_trunc(const R& ring, const Poly<R>& a, const Poly<R>& b, std::size_t n) {
    Poly<R> c(std::min(n, a.size() + b.size() - 1), typename R::T(0));
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            c[i + j] = ring.add(c[i + j], ring.mul(a[i], b[j]));
    }
    return c;
}

template <class R>
typename R::T eval(const R& ring, const Poly<R>& g, const typename R::T& y) {
    typename R::T acc(0);
    for (std::size_t d = g.size(); d-- > 0;) acc = ring.add(ring.mul(acc, y), g[d]);
    return acc;
}

// z -> g(c + p z)
template <class R>
Poly<R> shift_scale(const R& ring, Poly<R> g, const typename R::T& c, const typename R::T& pe) {
    std::size_t n = g.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;) g[j] = ring.add(g[j], ring.mul(c, g[j + 1]));
    typename R::T scale = ring.one();
    for (std::size_t e = 0; e < n; ++e) {
        g[e] = ring.mul(g[e], scale);
        scale = ring.mul(scale, pe);
    }
    return g;
}

// prod_{j < J} g(j); coefficient d of g is divisible by p^d, so degree < N suffices
template <class R>
typename R::T product_over_range(const R& ring, Poly<R> g, BigInt J, unsigned long p) {
    typename R::T acc = ring.one();
    typename R::T pe = ring.from(p);
    std::size_t n = g.size();
    while (J > 0) {
        BigInt J1;
        unsigned long s = mpz_fdiv_q_ui(J1.get_mpz_t(), J.get_mpz_t(), p);
        typename R::T base = ring.from(BigInt(J1 * p));
        for (unsigned long i = 0; i < s; ++i) acc = ring.mul(acc, eval(ring, g, ring.add(base, ring.from(i))));
        if (J1 == 0) break;
        Poly<R> h{ring.one()};
        for (unsigned long i = 0; i < p; ++i) h = mul_trunc(ring, h, shift_scale(ring, g, ring.from(i), pe), n);
        h.resize(n, typename R::T(0));
        g = std::move(h);
        J = J1;
    }
    return acc;
}

template <class R>
BigInt fast_product(const R& ring, const BigInt& m, unsigned long p, long N) {
    if (m <= 1) return ring.to_big(ring.one());
    BigInt M = m - 1;
    BigInt J;
    unsigned long s = mpz_fdiv_q_ui(J.get_mpz_t(), M.get_mpz_t(), p);
    std::size_t n = static_cast<std::size_t>(N);
    // f(x) = prod_{i<p} (x+i), then g(y) = f(p y)
    Poly<R> f{ring.one()};
    for (unsigned long i = 1; i < p; ++i) f = mul_trunc(ring, f, Poly<R>{ring.from(i), ring.one()}, n);
    f.resize(n, typename R::T(0));
    Poly<R> g = shift_scale(ring, f, typename R::T(0), ring.from(p));
    typename R::T acc = product_over_range(ring, g, J, p);
    typename R::T base = ring.from(BigInt(J * p));
    for (unsigned long i = 1; i <= s; ++i) acc = ring.mul(acc, ring.add(base, ring.from(i)));
    return ring.to_big(acc);
}

}  // namespace

std::string_view to_string(Backend b) {
    switch (b) {
        case Backend::Naive: return "naive";
        case Backend::Fast: return "fast";
        case Backend::Auto: return "auto";
    }
    return "auto";
}

Backend resolve_backend(Backend b, unsigned long p, long N) {
    if (b != Backend::Auto) return b;
    BigInt cost = prime_power(p, N);
    return cost > (1UL << 20) ? Backend::Fast : Backend::Naive;
}

BigInt unit_product(const BigInt& m, unsigned long p, long N, Backend backend) {
    if (N < 1) throw DomainError("unit_product needs N >= 1");
    if (m < 0) throw DomainError("unit_product needs m >= 0");
    BigInt modulus = prime_power(p, N);
    if (backend == Backend::Auto) backend = m > (1UL << 20) ? Backend::Fast : Backend::Naive;
    if (backend == Backend::Naive) return naive_product(m, p, modulus);
    if (fits_word(modulus)) return fast_product(WordRing{modulus.get_ui()}, m, p, N);
    return fast_product(BigRing{modulus}, m, p, N);
}

}  // namespace shg
