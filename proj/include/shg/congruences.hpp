#pragma once

#include "shg/gamma_p.hpp"
#include "shg/hyper.hpp"
#include "shg/identities.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shg {

enum class Verdict { Holds, HoldsUpToSign, Fails, Inconclusive, Error };
std::string_view to_string(Verdict v);

struct CongruenceReport {
    std::string check_id;
    unsigned long prime = 0;
    std::optional<int> r;
    int modulus_exponent = 0;
    std::string lhs;  // residues in [0, p^modulus_exponent)
    std::string rhs;
    Verdict verdict = Verdict::Error;
    long elapsed_ms = 0;
    Backend backend = Backend::Naive;
    std::string notes;

    bool holds() const { return verdict == Verdict::Holds; }
};

struct VerifyOptions {
    Backend backend = Backend::Auto;
    int guard = 1;       // extra digits on the series side
    int max_raise = 3;   // automatic precision raises before Inconclusive
};

struct HarmonicSums {
    long k = 0;
    BigRational A;  // sum_{j<k} 1/(2j+1)
    BigRational B;  // sum_{i<j<k} 1/((2i+1)(2j+1))
};

HarmonicSums harmonic_sums(long k);

CongruenceReport verify_notsuper(unsigned long p, int r, const VerifyOptions& o = {});
CongruenceReport verify_theorem1(unsigned long p, int r, const VerifyOptions& o = {});
CongruenceReport verify_theorem2(unsigned long p, int modulus_exponent, const VerifyOptions& o = {});
CongruenceReport verify_theorem3(unsigned long p, const VerifyOptions& o = {});
CongruenceReport verify_morethirds(unsigned long p, const VerifyOptions& o = {});
CongruenceReport verify_minus_one_eighth(unsigned long p, const VerifyOptions& o = {});
CongruenceReport verify_kazandzidis(unsigned long p, int r, long n, long m);
CongruenceReport verify_ckko(const BigRational& a, unsigned long p, int r, const VerifyOptions& o = {});
CongruenceReport verify_ckko_corollary(long n, unsigned long p);
CongruenceReport verify_g14g12(unsigned long p, int s, int r = 1, const VerifyOptions& o = {});
CongruenceReport verify_two_power(unsigned long p, const VerifyOptions& o = {});
// base 1/2 uses A_k, B_k; base 1 uses E_k, F_k; k = 0 means every k in 1..(p-1)/2
CongruenceReport verify_expansion(unsigned long p, const BigRational& M, const BigRational& base, long k = 0);
CongruenceReport verify_3f2_machinery(unsigned long p, long C, long D, const VerifyOptions& o = {});

struct CheckInfo {
    std::string id;
    std::string summary;
    std::function<bool(unsigned long, const ParamMap&)> admissible;
    std::function<CongruenceReport(unsigned long, const ParamMap&, const VerifyOptions&)> run;
};

const std::vector<CheckInfo>& registered_checks();
const CheckInfo* find_check(std::string_view id);

// single prime; DomainError when p is outside the statement's hypotheses
CongruenceReport verify(std::string_view check_id, unsigned long p, const ParamMap& params,
                        const VerifyOptions& o = {});

struct PrimeRange {
    unsigned long lo = 5;
    unsigned long hi = 5;
};

// reports for every admissible prime in [lo, hi], in prime order whatever the parallelism;
// per-prime exceptions become Error reports
std::vector<CongruenceReport> sweep(std::string_view check_id, PrimeRange primes, const ParamMap& params,
                                    int parallelism, const VerifyOptions& o = {},
                                    const std::function<void(const CongruenceReport&)>& sink = {});

}  // namespace shg
