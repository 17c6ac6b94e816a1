#pragma once

#include "shg/hyper.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shg {

enum class IdentityId {
    PFAFF,
    KUMMER,
    CLAUSEN,
    GAUSS_CV,
    PFAFF_SAALSCHUTZ,
    DIXON,
    THOMAE_57,
    WHIPPLE_76,
    DOUGALL_76,
    KARLSSON_KA,
    KARLSSON_KA2,
    PFAFF2,
    KUMMER_QUAD,
    GAUSS_TO_KUMMER,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);
const std::vector<IdentityId>& all_identity_ids();

enum class VerdictKind { Equal, Unequal, Skipped };
std::string_view to_string(VerdictKind v);

struct IdentityCase {
    IdentityId id{};
    std::vector<std::pair<std::string, BigRational>> parameters;
    VerdictKind verdict = VerdictKind::Skipped;
    std::string lhs;  // exact values, or residues for KARLSSON_KA2
    std::string rhs;
    std::string reason;  // failed precondition when Skipped
    std::string note;

    bool equal() const { return verdict == VerdictKind::Equal; }
};

using ParamMap = std::map<std::string, BigRational>;

// prod Gamma(nums) / prod Gamma(dens) as an exact rational; empty when some
// fractional class does not pair up. PoleError if a numerator sits at a pole.
std::optional<BigRational> gamma_quotient(const std::vector<BigRational>& nums,
                                          const std::vector<BigRational>& dens);

IdentityCase check_pfaff(long n, const BigRational& b, const BigRational& c, const BigRational& x);
IdentityCase check_kummer_terminating(const BigRational& a, long b);
IdentityCase check_clausen(const BigRational& a, const BigRational& b, long M = 12);
IdentityCase check_gauss_cv(long n, const BigRational& a, const BigRational& c);
IdentityCase check_pfaff_saalschutz(long n, const BigRational& a, const BigRational& b, const BigRational& c);
IdentityCase check_dixon_terminating(const BigRational& a, long b, long c);
IdentityCase check_3f2_transform(long n, const BigRational& a, const BigRational& b, const BigRational& d,
                                 const BigRational& e);
IdentityCase check_whipple(const BigRational& a, const BigRational& b, const BigRational& c,
                           const BigRational& d, const BigRational& e, long f);
IdentityCase check_dougall(const BigRational& a, const BigRational& b, const BigRational& c,
                           const BigRational& d, long f);
IdentityCase check_karlsson(long a);
IdentityCase check_karlsson_negative(unsigned long p, long N);
IdentityCase check_quadratic_transforms(IdentityId id, const ParamMap& params);

// dispatch on id with named parameters (CLI surface)
IdentityCase check_identity(IdentityId id, const ParamMap& params);

struct FuzzOptions {
    std::uint64_t seed = 20240611;
    int cases = 200;
    int reduced_cases = 100;  // WHIPPLE_76, DOUGALL_76, DIXON
    std::vector<IdentityId> ids;  // empty: all
    int threads = 1;
};

struct FuzzSummary {
    IdentityId id{};
    std::uint64_t seed = 0;
    int equal = 0;
    int unequal = 0;
    int skipped = 0;
    int pole_redraws = 0;
    std::vector<IdentityCase> unequal_cases;
    std::vector<std::string> notes;
};

std::vector<FuzzSummary> fuzz_identities(const FuzzOptions& opts);

}  // namespace shg
