#pragma once

#include "shg/rational.hpp"

#include <string>

namespace shg {

// p^valuation * (unit + O(p^rel_prec)); exact zero keeps an abs_prec floor
class PadicNumber {
public:
    PadicNumber() = default;

    static PadicNumber zero(unsigned long p, long abs_floor);
    static PadicNumber one(unsigned long p, long rel_prec);
    static PadicNumber from_rational(const BigRational& q, unsigned long p, long abs_prec);
    static PadicNumber from_integer(const BigInt& n, unsigned long p, long abs_prec);

    unsigned long prime() const { return p_; }
    bool is_zero() const { return v_ == kInfiniteValuation; }
    long valuation() const { return v_; }
    long rel_prec() const { return is_zero() ? 0 : prec_; }
    long abs_prec() const { return is_zero() ? prec_ : v_ + prec_; }
    const BigInt& unit() const { return u_; }

    // value mod p^k in [0, p^k); needs k <= abs_prec and a p-integral value
    BigInt residue(long k) const;
    // canonical representative mod p^abs_prec; p-adic fractions print as "u/p^k"
    std::string to_string() const;
    std::string residue_string(long k) const { return residue(k).get_str(); }

    PadicNumber with_abs_prec(long abs) const;
    BigRational lift() const;

    friend PadicNumber padic_add(const PadicNumber& x, const PadicNumber& y);
    friend PadicNumber padic_mul(const PadicNumber& x, const PadicNumber& y);
    friend PadicNumber padic_neg(const PadicNumber& x);
    friend PadicNumber padic_inv(const PadicNumber& x);

private:
    static PadicNumber make(unsigned long p, long v, BigInt u, long rel);

    unsigned long p_ = 0;
    long v_ = kInfiniteValuation;
    long prec_ = 0;  // rel_prec, or the abs floor for zero
    BigInt u_ = 0;
    BigInt mod_ = 1;  // p^rel_prec
};

PadicNumber padic_add(const PadicNumber& x, const PadicNumber& y);
PadicNumber padic_mul(const PadicNumber& x, const PadicNumber& y);
PadicNumber padic_neg(const PadicNumber& x);
PadicNumber padic_inv(const PadicNumber& x);
PadicNumber padic_pow_int(const PadicNumber& x, long e);

inline PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) { return padic_add(x, y); }
inline PadicNumber operator-(const PadicNumber& x) { return padic_neg(x); }
inline PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return padic_add(x, padic_neg(y)); }
inline PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) { return padic_mul(x, y); }
inline PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) { return padic_mul(x, padic_inv(y)); }

// exact rational scalars, embedded at the other operand's relative precision
PadicNumber operator*(const BigRational& q, const PadicNumber& x);
PadicNumber operator+(const BigRational& q, const PadicNumber& x);

PadicNumber log_p(const PadicNumber& x);
PadicNumber exp_p(const PadicNumber& x);

int sign_two(unsigned long p);

bool congruent(const PadicNumber& x, const PadicNumber& y, long k);

}  // namespace shg
