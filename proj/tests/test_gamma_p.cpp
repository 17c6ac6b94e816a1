#include "gen.hpp"

#include "shg/errors.hpp"
#include "shg/gamma_p.hpp"
#include "shg/hyper.hpp"

#include <doctest.h>

using namespace shg;
using shg::test::Gen;

namespace {

BigInt naive_units(long m, unsigned long p, long N) {
    BigInt mod = prime_power(p, N), r = 1;
    for (long k = 1; k < m; ++k)
        if (k % static_cast<long>(p)) r = r * k % mod;
    return r;
}

PadicNumber embed(const BigRational& q, unsigned long p, long N) { return PadicNumber::from_rational(q, p, N); }

}  // namespace

TEST_CASE("unit_product oracles") {
    for (Backend b : {Backend::Naive, Backend::Fast}) {
        CHECK(unit_product(1, 5, 2, b) == 1);
        CHECK(unit_product(0, 5, 2, b) == 1);
        CHECK(unit_product(25, 5, 2, b) == 24);
        CHECK(unit_product(1000, 7, 4, b) == 2367);
        CHECK(unit_product(123456, 11, 3, b) == 691);
    }
    CHECK_THROWS_AS(unit_product(5, 5, 0), DomainError);
}

TEST_CASE("fast backend matches the naive loop") {
    Gen g(21);
    for (int i = 0; i < 300; ++i) {
        unsigned long p = g.prime();
        long N = g.range(1, 6);
        BigInt m = g.range(0, 1000000);
        CHECK(unit_product(m, p, N, Backend::Fast) == unit_product(m, p, N, Backend::Naive));
    }
    // BigRing path: p^N beyond a machine word
    CHECK(unit_product(200000, 37, 14, Backend::Fast) == unit_product(200000, 37, 14, Backend::Naive));
    CHECK(naive_units(5000, 13, 3) == unit_product(5000, 13, 3, Backend::Fast));
}

TEST_CASE("resolve_backend") {
    CHECK(resolve_backend(Backend::Naive, 37, 9) == Backend::Naive);
    CHECK(resolve_backend(Backend::Auto, 5, 3) == Backend::Naive);
    CHECK(resolve_backend(Backend::Auto, 31, 7) == Backend::Fast);
}

TEST_CASE("gamma_p values") {
    CHECK(gamma_p(BigRational(1, 3), 13, 4).residue(4) == 27735);
    CHECK(gamma_p(BigRational(1, 2), 5, 3).residue(3) == 68);
    CHECK(gamma_p(BigRational(1, 4), 7, 3).residue(3) == 302);
    CHECK(gamma_p(BigRational(1, 4), 5, 2).residue(2) == 21);
    CHECK(gamma_p(BigRational(-2, 3), 7, 3).residue(3) == 62);
    CHECK(gamma_p(5, 11, 2).residue(2) == 97);
    for (Backend b : {Backend::Naive, Backend::Fast})
        CHECK(gamma_p(BigRational(1, 3), 19, 6, b).residue(6) == 43095429);
    CHECK(gamma_p(0, 7, 3).residue(3) == 1);
    CHECK(gamma_p(1, 7, 3).residue(3) == 342);
    PadicNumber h = gamma_p(BigRational(1, 2), 5, 3);
    CHECK((h * h).residue(3) == 124);
    CHECK_THROWS_AS(gamma_p(BigRational(1, 5), 5, 3), DomainError);
    CHECK_THROWS_AS(gamma_p(BigRational(1, 2), 3, 3), UnsupportedPrime);
}

TEST_CASE("gamma_p axioms") {
    Gen g(22);
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
        const long N = 5;
        for (int i = 0; i < 60; ++i) {
            BigRational x = g.p_integral(p);
            PadicNumber gx = gamma_p(x, p, N);
            PadicNumber gx1 = gamma_p(x + 1, p, N);
            bool unit = x != 0 && valuation(x, p) == 0;
            PadicNumber expect = unit ? BigRational(-x) * gx : -gx;
            CHECK(congruent(gx1, expect, N));

            ResidueData d = residue_data(x, p);
            PadicNumber refl = gx * gamma_p(1 - x, p, N);
            CHECK(refl.residue(N) == reduce_mod(d.a_zero % 2 ? -1 : 1, prime_power(p, N)));

            // 1-Lipschitz
            long k = g.range(1, N);
            BigRational y = x + BigRational(prime_power(p, k)) * g.p_integral(p);
            CHECK(congruent(gx, gamma_p(y, p, N), k));
        }
        PadicNumber h = gamma_p(BigRational(1, 2), p, N);
        long s = (p + 1) / 2 % 2 ? -1 : 1;
        CHECK((h * h).residue(N) == reduce_mod(s, prime_power(p, N)));
    }
}

TEST_CASE("Pochhammer bridge") {
    Gen g(23);
    for (int i = 0; i < 100; ++i) {
        unsigned long p = g.prime({5, 7, 11, 13});
        const long N = 4;
        BigRational a = g.p_unit(p);
        // a..a+n-1 all units
        long n = 0;
        while (n < 12 && valuation(a + n, p) == 0 && a + n != 0) ++n;
        if (n == 0) continue;
        long sgn = n % 2 ? -1 : 1;
        PadicNumber rhs = BigRational(sgn) * (gamma_p(a + n, p, N) / gamma_p(a, p, N));
        CHECK(congruent(embed(pochhammer(a, n), p, N), rhs, N));
    }
}

TEST_CASE("Pochhammer over whole periods against a'") {
    Gen g(24);
    for (int i = 0; i < 60; ++i) {
        unsigned long p = g.prime({5, 7, 11});
        int r = static_cast<int>(g.range(1, 2));
        long m = g.range(1, 2);
        BigRational a = g.p_unit(p, 12);
        BigRational ap = *residue_data(a, p).a_prime;
        long hi = m * prime_power(p, r).get_si(), lo = m * prime_power(p, r - 1).get_si();
        const long N = 4;
        BigRational den = pochhammer(ap, lo);
        if (den == 0) continue;  // a' a nonpositive integer
        BigRational q = pochhammer(a, hi) / den;
        PadicNumber rhs = BigRational(hi % 2 ? -1 : 1) * BigRational(prime_power(p, lo)) *
                          (gamma_p(a + hi, p, N) / gamma_p(a, p, N));
        CHECK(congruent(embed(q, p, N + lo), rhs, N + lo));
    }
}

TEST_CASE("residue_data") {
    ResidueData q = residue_data(BigRational(1, 4), 13);
    CHECK(*q.a_prime == BigRational(1, 4));
    ResidueData t = residue_data(BigRational(1, 3), 5);
    CHECK(*t.i == 3);
    CHECK(*t.a_prime == BigRational(2, 3));
    CHECK(residue_data(BigRational(1, 2), 5).a_zero == 3);
    CHECK(residue_data(BigRational(10), 5).a_zero == 5);
    CHECK_FALSE(residue_data(BigRational(10), 5).i.has_value());
}

TEST_CASE("derivative extraction bookkeeping") {
    GammaDerivatives d = gamma_derivatives(BigRational(1, 3), 7, 2, 1);
    REQUIRE(d.entries.size() == 3);
    CHECK(d.entries[0].value.residue(3) == 1);
    CHECK(d.entries[0].guaranteed_abs_prec == 3);
    CHECK(d.entries[1].guaranteed_abs_prec == 2);
    CHECK(d.entries[2].guaranteed_abs_prec == 1);

    GammaDerivatives e = gamma_derivatives(BigRational(1, 4), 13, 4, 2);
    for (int k = 0; k <= 4; ++k) CHECK(e.entries[static_cast<std::size_t>(k)].guaranteed_abs_prec == (5 - k) * 2);

    GammaDerivatives v = gamma_derivatives(0, 5, 5, 2);
    std::vector<long> want{7, 6, 4, 2, 0};
    for (int k = 1; k <= 5; ++k) CHECK(v.entries[static_cast<std::size_t>(k)].guaranteed_abs_prec == want[k - 1]);

    CHECK(taylor_tail_valuation(13, 2, 1) == 3);
    // k = 5 = p already drops to ceil(5 - 5 * 9 / 20) = 3 < 5, hence t = 4 needs p >= 11
    CHECK(taylor_tail_valuation(5, 4, 1) == 3);
}

TEST_CASE("G_1 valuations at 0") {
    for (unsigned long p : {5UL, 13UL}) CHECK(gamma_derivatives(0, p, 2, 2).G(1).valuation() == 1);
    for (unsigned long p : {7UL, 11UL, 17UL, 19UL, 23UL}) CHECK(gamma_derivatives(0, p, 2, 2).G(1).valuation() == 0);
}

// v(G_i(0)) >= 0 for 1 < i < p and v(G_p(0)) = -1 at p = 5
TEST_CASE("valuation suite at p = 5") {
    GammaDerivatives d = gamma_derivatives(0, 5, 5, 2);
    for (int k = 2; k <= 4; ++k) {
        const auto& e = d.entries[static_cast<std::size_t>(k)];
        REQUIRE(e.guaranteed_abs_prec > 0);
        PadicNumber x = e.value.with_abs_prec(e.guaranteed_abs_prec);
        CHECK((x.is_zero() || x.valuation() >= 0));
    }
    const auto& e5 = d.entries[5];
    // the value is known to p^0 (relative digits beyond its valuation -1)
    CHECK(e5.guaranteed_abs_prec >= 0);
    CHECK(e5.value.valuation() == -1);
}

TEST_CASE("reflection identities for G_k") {
    Gen g(25);
    for (int i = 0; i < 40; ++i) {
        unsigned long p = g.prime({5, 7, 11, 13});
        BigRational a = g.p_integral(p, 20);
        GammaDerivatives x = gamma_derivatives(a, p, 2, 2);
        GammaDerivatives y = gamma_derivatives(1 - a, p, 2, 2);
        long k1 = std::min(x.entries[1].guaranteed_abs_prec, y.entries[1].guaranteed_abs_prec);
        long k2 = std::min(x.entries[2].guaranteed_abs_prec, y.entries[2].guaranteed_abs_prec);
        CHECK(congruent(x.G(1), y.G(1), k1));
        CHECK(congruent(x.G(2) + y.G(2), BigRational(2) * (x.G(1) * x.G(1)), std::min(k1, k2)));
    }
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
        GammaDerivatives z = gamma_derivatives(0, p, 2, 2);
        CHECK(congruent(z.G(2), z.G(1) * z.G(1), z.entries[2].guaranteed_abs_prec));
    }
}

TEST_CASE("taylor_gamma_ratio contract") {
    PadicNumber m = PadicNumber::from_integer(3, 7, 4);
    PadicNumber one = taylor_gamma_ratio(BigRational(1, 3), m, 2, 0, 7);
    CHECK(one.residue(2) == 1);
    CHECK(one.abs_prec() == 2);
    CHECK_THROWS_AS(taylor_gamma_ratio(BigRational(1, 3), m, 1, 3, 7), DomainError);
    CHECK_THROWS_AS(taylor_gamma_ratio(BigRational(1, 3), m, 1, 4, 7), DomainError);
}

namespace {

void truncate_cell(Gen& g, unsigned long p, int r, int t) {
    long N = static_cast<long>(t + 1) * r;
    for (int i = 0; i < 50; ++i) {
        BigRational a = g.p_integral(p);
        PadicNumber m = PadicNumber::from_rational(g.p_unit(p), p, N);
        BigRational shift = m.lift() * BigRational(prime_power(p, r));
        PadicNumber lhs = gamma_p(a + shift, p, N) / gamma_p(a, p, N);
        PadicNumber rhs = taylor_gamma_ratio(a, m, r, t, p);
        CHECK_MESSAGE(congruent(lhs, rhs, N), "p=" << p << " r=" << r << " t=" << t << " a=" << to_string(a));
    }
}

}  // namespace

TEST_CASE("truncate: Taylor ratio for t in {0,1,2}") {
    Gen g(26);
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL})
        for (int r = 1; r <= 3; ++r)
            for (int t : {0, 1, 2}) truncate_cell(g, p, r, t);
}

TEST_CASE("truncate: Taylor ratio for t = 4") {
    Gen g(27);
    for (unsigned long p : {11UL, 13UL})
        for (int r = 1; r <= 2; ++r) truncate_cell(g, p, r, 4);
}
