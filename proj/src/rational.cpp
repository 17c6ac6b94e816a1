#include "shg/rational.hpp"

#include "shg/errors.hpp"

#include <cctype>

namespace shg {

BigRational rat(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("not a rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("not a rational: '" + std::string(whole) + "'");
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    auto b = text.find_first_not_of(" \t");
    auto e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw ParseError("empty rational");
    std::string_view s = text.substr(b, e - b + 1);
    auto slash = s.find('/');
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = 1;
    if (slash != std::string_view::npos) den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime(unsigned long p) {
    if (p < 5 || !is_prime(p)) throw UnsupportedPrime(p);
}

BigInt prime_power(unsigned long p, long e) {
    if (e < 0) throw DomainError("negative exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

long valuation(const BigInt& n, unsigned long p) {
    if (n == 0) return kInfiniteValuation;
    BigInt pp = p;
    BigInt rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

long valuation(const BigRational& q, unsigned long p) {
    if (q == 0) return kInfiniteValuation;
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

bool is_nonpositive_integer(const BigRational& q) { return q.get_den() == 1 && q.get_num() <= 0; }

BigInt floor(const BigRational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigRational frac(const BigRational& q) { return q - BigRational(floor(q)); }

BigInt reduce_mod(const BigRational& q, const BigInt& modulus) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), modulus.get_mpz_t()) == 0) {
        if (modulus == 1) return 0;
        throw DomainError("denominator of " + to_string(q) + " is not invertible mod " +
                          modulus.get_str());
    }
    BigInt r = q.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

}  // namespace shg
