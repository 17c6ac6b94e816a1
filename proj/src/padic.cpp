#include "shg/padic.hpp"

#include "shg/errors.hpp"

#include <algorithm>

namespace shg {

namespace {

void check_same(const PadicNumber& x, const PadicNumber& y) {
    if (x.prime() != y.prime()) throw PrimeMismatch(x.prime(), y.prime());
}

// strips p from n, returns the exponent removed
long strip(BigInt& n, unsigned long p) {
    if (n == 0) return kInfiniteValuation;
    BigInt pp = p;
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

}  // namespace

PadicNumber PadicNumber::zero(unsigned long p, long abs_floor) {
    require_prime(p);
    PadicNumber z;
    z.p_ = p;
    z.prec_ = abs_floor;
    return z;
}

PadicNumber PadicNumber::make(unsigned long p, long v, BigInt u, long rel) {
    if (rel <= 0) return zero(p, v + rel);
    PadicNumber x;
    x.p_ = p;
    x.v_ = v;
    x.prec_ = rel;
    x.mod_ = prime_power(p, rel);
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), x.mod_.get_mpz_t());
    x.u_ = std::move(u);
    return x;
}

PadicNumber PadicNumber::one(unsigned long p, long rel_prec) {
    require_prime(p);
    return make(p, 0, 1, rel_prec);
}

PadicNumber PadicNumber::from_rational(const BigRational& q, unsigned long p, long abs_prec) {
    require_prime(p);
    if (q == 0) return zero(p, abs_prec);
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    long v = strip(num, p);
    v -= strip(den, p);
    long rel = abs_prec - v;
    if (rel <= 0) return zero(p, abs_prec);
    BigInt mod = prime_power(p, rel);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    return make(p, v, num * inv, rel);
}

PadicNumber PadicNumber::from_integer(const BigInt& n, unsigned long p, long abs_prec) {
    return from_rational(BigRational(n), p, abs_prec);
}

BigInt PadicNumber::residue(long k) const {
    if (k > abs_prec()) throw PrecisionError(k, abs_prec());
    if (k <= 0) return 0;
    if (is_zero() || v_ >= k) return 0;
    if (v_ < 0) throw DomainError("residue of a non-integral p-adic number");
    BigInt r = u_ * prime_power(p_, v_);
    BigInt m = prime_power(p_, k);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::string PadicNumber::to_string() const {
    if (is_zero() || v_ >= 0) return residue(std::max(abs_prec(), 0L)).get_str();
    return u_.get_str() + "/" + std::to_string(p_) + "^" + std::to_string(-v_);
}

PadicNumber PadicNumber::with_abs_prec(long abs) const {
    if (abs >= abs_prec()) return *this;
    if (is_zero()) return zero(p_, abs);
    return make(p_, v_, u_, abs - v_);
}

BigRational PadicNumber::lift() const {
    if (is_zero()) return 0;
    if (v_ >= 0) return BigRational(u_ * prime_power(p_, v_));
    BigRational q(u_, prime_power(p_, -v_));
    q.canonicalize();
    return q;
}

PadicNumber padic_add(const PadicNumber& x, const PadicNumber& y) {
    check_same(x, y);
    long a = std::min(x.abs_prec(), y.abs_prec());
    if (x.is_zero()) return y.with_abs_prec(a);
    if (y.is_zero()) return x.with_abs_prec(a);
    unsigned long p = x.p_;
    long v = std::min(x.v_, y.v_);
    if (a - v <= 0) return PadicNumber::zero(p, a);
    BigInt s = x.u_ * prime_power(p, x.v_ - v) + y.u_ * prime_power(p, y.v_ - v);
    BigInt m = prime_power(p, a - v);
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
    if (s == 0) return PadicNumber::zero(p, a);
    long w = strip(s, p);
    return PadicNumber::make(p, v + w, std::move(s), a - v - w);
}

PadicNumber padic_mul(const PadicNumber& x, const PadicNumber& y) {
    check_same(x, y);
    unsigned long p = x.p_;
    if (x.is_zero() && y.is_zero()) return PadicNumber::zero(p, x.prec_ + y.prec_);
    if (x.is_zero()) return PadicNumber::zero(p, x.prec_ + y.v_);
    if (y.is_zero()) return PadicNumber::zero(p, y.prec_ + x.v_);
    long rel = std::min(x.prec_, y.prec_);
    return PadicNumber::make(p, x.v_ + y.v_, x.u_ * y.u_, rel);
}

PadicNumber padic_neg(const PadicNumber& x) {
    if (x.is_zero()) return x;
    return PadicNumber::make(x.p_, x.v_, -x.u_, x.prec_);
}

PadicNumber padic_inv(const PadicNumber& x) {
    if (x.is_zero()) throw DivisionByZero("inverse of p-adic zero");
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), x.u_.get_mpz_t(), x.mod_.get_mpz_t());
    return PadicNumber::make(x.p_, -x.v_, std::move(inv), x.prec_);
}

PadicNumber padic_pow_int(const PadicNumber& x, long e) {
    if (e == 0) {
        long rel = x.is_zero() ? std::max(x.abs_prec(), 1L) : x.rel_prec();
        return PadicNumber::one(x.prime(), rel);
    }
    if (e < 0) return padic_pow_int(padic_inv(x), -e);
    PadicNumber base = x;
    PadicNumber acc;
    bool have = false;
    while (e > 0) {
        if (e & 1) {
            acc = have ? acc * base : base;
            have = true;
        }
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

PadicNumber operator*(const BigRational& q, const PadicNumber& x) {
    unsigned long p = x.prime();
    if (q == 0) return PadicNumber::zero(p, std::max(x.abs_prec(), 0L));
    long vq = valuation(q, p);
    if (x.is_zero()) return PadicNumber::zero(p, x.abs_prec() + vq);
    return PadicNumber::from_rational(q, p, vq + x.rel_prec()) * x;
}

PadicNumber operator+(const BigRational& q, const PadicNumber& x) {
    return PadicNumber::from_rational(q, x.prime(), x.abs_prec()) + x;
}

PadicNumber log_p(const PadicNumber& x) {
    unsigned long p = x.prime();
    if (x.is_zero() || x.valuation() != 0 || x.unit() % p != 1)
        throw DomainError("log_p needs x = 1 mod p");
    long a = x.abs_prec();
    PadicNumber y = x - PadicNumber::one(p, a);
    if (y.is_zero()) return PadicNumber::zero(p, a);
    long vy = y.valuation();
    if (vy >= a) return PadicNumber::zero(p, a);

    // n*vy - floor(log_p n) is nondecreasing in n
    auto floor_log = [p](long n) {
        long k = 0;
        for (long q = n; q >= static_cast<long>(p); q /= static_cast<long>(p)) ++k;
        return k;
    };
    long nmax = 1;
    while ((nmax + 1) * vy - floor_log(nmax + 1) < a) ++nmax;
    long extra = floor_log(nmax);
    BigInt wmod = prime_power(p, a + extra);
    BigInt amod = prime_power(p, a);
    BigInt yy = y.residue(a);
    BigInt pw = 1;
    BigInt sum = 0;
    for (long n = 1; n <= nmax; ++n) {
        pw = pw * yy % wmod;
        BigInt nn = n;
        long vn = strip(nn, p);
        BigInt t = pw;
        if (vn > 0) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prime_power(p, vn).get_mpz_t());
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), nn.get_mpz_t(), amod.get_mpz_t());
        t = t * inv;
        if (n % 2 == 0) t = -t;
        sum += t;
    }
    mpz_mod(sum.get_mpz_t(), sum.get_mpz_t(), amod.get_mpz_t());
    return PadicNumber::from_integer(sum, p, a);
}

PadicNumber exp_p(const PadicNumber& x) {
    unsigned long p = x.prime();
    long a = x.abs_prec();
    if (x.is_zero()) return PadicNumber::one(p, std::max(a, 1L));
    if (x.valuation() < 1) throw DomainError("exp_p needs v_p(x) >= 1");
    long v = x.valuation();
    if (v >= a) return PadicNumber::one(p, a);
    // v(x^n/n!) >= n*v - (n-1)/(p-1)
    long pm1 = static_cast<long>(p) - 1;
    long nmax = 0;
    while (true) {
        long n = nmax + 1;
        long lower = n * v - (n - 1) / pm1;
        if (lower >= a) break;
        nmax = n;
    }
    long extra = 0;
    for (long n = 1; n <= nmax; ++n) extra = std::max(extra, valuation(factorial(n), p));
    BigInt wmod = prime_power(p, a + extra);
    BigInt amod = prime_power(p, a);
    BigInt xx = x.residue(a);
    BigInt pw = 1;
    BigInt sum = 1;
    BigInt fact = 1;
    for (long n = 1; n <= nmax; ++n) {
        pw = pw * xx % wmod;
        fact *= n;
        BigInt f = fact;
        long vf = strip(f, p);
        BigInt t = pw;
        if (vf > 0) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prime_power(p, vf).get_mpz_t());
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), f.get_mpz_t(), amod.get_mpz_t());
        sum += t * inv;
    }
    mpz_mod(sum.get_mpz_t(), sum.get_mpz_t(), amod.get_mpz_t());
    return PadicNumber::from_integer(sum, p, a);
}

int sign_two(unsigned long p) {
    if (p % 2 == 0) throw DomainError("sign_two needs an odd prime");
    return ((p * p - 1) / 8) % 2 ? -1 : 1;
}

bool congruent(const PadicNumber& x, const PadicNumber& y, long k) {
    long avail = std::min(x.abs_prec(), y.abs_prec());
    if (avail < k) throw PrecisionError(k, avail);
    PadicNumber d = x - y;
    return d.is_zero() || d.valuation() >= k;
}

}  // namespace shg
