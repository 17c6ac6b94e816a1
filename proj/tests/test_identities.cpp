#include "shg/errors.hpp"
#include "shg/identities.hpp"

#include <doctest.h>

using namespace shg;

namespace {

BigRational q(long n, long d = 1) { return BigRational(n, d); }

IdentityCase run(const char* id, ParamMap m) { return check_identity(*parse_identity_id(id), m); }

}  // namespace

TEST_CASE("identity ids round-trip") {
    CHECK(all_identity_ids().size() == 14);
    for (IdentityId id : all_identity_ids()) CHECK(parse_identity_id(to_string(id)) == id);
    CHECK_FALSE(parse_identity_id("NOPE").has_value());
}

TEST_CASE("gamma_quotient") {
    CHECK(*gamma_quotient({3}, {1}) == 2);
    CHECK(*gamma_quotient({q(5, 2)}, {q(1, 2)}) == q(3, 4));
    CHECK(*gamma_quotient({q(1, 3)}, {q(7, 3)}) == q(9, 4));
    CHECK(*gamma_quotient({q(1, 2), q(1, 3)}, {q(3, 2), q(4, 3)}) == 6);
    CHECK(*gamma_quotient({2}, {-1}) == 0);
    CHECK_FALSE(gamma_quotient({q(1, 2)}, {1}).has_value());
    CHECK_THROWS_AS(gamma_quotient({-2}, {1}), PoleError);
}

TEST_CASE("Pfaff") {
    CHECK(check_pfaff(0, q(1, 3), q(2, 5), q(7)).equal());
    CHECK(check_pfaff(1, q(1, 2), 1, 2).equal());
    // x = 2, b = 1/2, c = 1 turns the theorem1 sum at r = 1 into a 2F1 at -1
    for (long p : {5L, 13L}) CHECK(check_pfaff((p - 1) / 2, q(1, 2), 1, 2).equal());
    CHECK(check_pfaff(12, q(-7, 3), q(11, 4), q(-5, 6)).equal());
}

TEST_CASE("Kummer terminating") {
    IdentityCase c = check_kummer_terminating(1, -1);
    CHECK(c.equal());
    CHECK(c.rhs == "4/3");
    CHECK(check_kummer_terminating(q(2, 7), -1).equal());
    CHECK(check_kummer_terminating(q(-9, 4), -7).equal());
}

TEST_CASE("Clausen through order 12") {
    CHECK(check_clausen(q(1, 2), q(1, 2)).equal());
    CHECK(check_clausen(0, 0).equal());
    CHECK(check_clausen(q(-3, 7), q(5, 11)).equal());
}

TEST_CASE("Chu-Vandermonde and Pfaff-Saalschutz") {
    CHECK(check_gauss_cv(1, q(2, 3), q(5, 7)).equal());
    IdentityCase c = check_gauss_cv(2, 1, 3);
    CHECK(c.equal());
    CHECK(c.lhs == "1/2");
    CHECK(check_pfaff_saalschutz(0, q(1, 3), q(1, 5), q(2, 7)).equal());
    CHECK(check_pfaff_saalschutz(1, q(1, 3), q(1, 5), q(2, 7)).equal());
    CHECK(check_pfaff_saalschutz(9, q(-1, 3), q(4, 5), q(12, 7)).equal());
}

TEST_CASE("Dixon") {
    CHECK(check_dixon_terminating(q(3, 5), 0, 0).equal());
    CHECK(check_dixon_terminating(q(3, 5), 1, 0).equal());
    CHECK(check_dixon_terminating(q(3, 5), 4, 6).equal());
}

TEST_CASE("3F2 transformation") {
    CHECK(check_3f2_transform(1, q(2, 3), q(1, 7), q(9, 5), q(3, 2)).equal());
    // p = 7, a = (1+p)/2, b = 1/2, d = e = 1, n = (p-1)/2: both sides vanish
    IdentityCase c = check_3f2_transform(3, 4, q(1, 2), 1, 1);
    CHECK(c.equal());
    CHECK(c.lhs == "0");
}

TEST_CASE("Whipple and Dougall") {
    CHECK(check_whipple(q(2, 3), q(1, 5), q(3, 7), q(5, 9), q(7, 11), -1).equal());
    CHECK(check_whipple(q(13, 3), q(1, 5), q(3, 7), q(5, 9), q(7, 11), -4).equal());
    CHECK(check_dougall(q(2, 3), q(1, 5), q(3, 7), q(5, 9), -1).equal());
    // the well-poised shape behind theorem2, p replaced by a rational
    BigRational t(2, 9);
    CHECK(check_dougall(q(1, 3), q(1, 3) + t, q(1, 3) - t, q(1, 3), -3).equal());
}

TEST_CASE("Karlsson constant") {
    IdentityCase one = check_karlsson(1);
    CHECK(one.equal());
    CHECK(one.lhs == "1");
    CHECK(one.rhs == "1");
    for (long a = 2; a <= 8; ++a) CHECK(check_karlsson(a).equal());
}

TEST_CASE("Karlsson at a negative p-adic parameter") {
    CHECK(check_karlsson_negative(5, 4).equal());
    CHECK(check_karlsson_negative(13, 3).equal());
    CHECK(check_karlsson_negative(7, 4).verdict == VerdictKind::Skipped);
}

TEST_CASE("quadratic transforms") {
    CHECK(run("PFAFF2", {{"a", q(3, 4)}, {"b", -1}, {"c", q(5, 3)}}).equal());
    CHECK(run("PFAFF2", {{"a", q(3, 4)}, {"b", q(2, 7)}, {"c", q(5, 3)}}).equal());
    CHECK(run("KUMMER_QUAD", {{"a", q(3, 4)}, {"b", q(2, 7)}}).equal());
    CHECK(run("KUMMER_QUAD", {{"a", q(3, 4)}, {"b", -2}}).verdict == VerdictKind::Skipped);
    CHECK(run("GAUSS_TO_KUMMER", {{"a", 2}, {"b", -1}}).equal());
    CHECK(run("GAUSS_TO_KUMMER", {{"a", q(1, 2)}, {"b", -1}}).verdict == VerdictKind::Skipped);
}

TEST_CASE("dispatch errors") {
    CHECK_THROWS_AS(run("PFAFF", {{"n", 2}}), DomainError);
    CHECK_THROWS_AS(run("PFAFF", {{"n", q(1, 2)}, {"b", 1}, {"c", 1}, {"x", 1}}), DomainError);
}

TEST_CASE("fuzzer finds nothing and is deterministic") {
    FuzzOptions o;
    o.cases = 25;
    o.reduced_cases = 10;
    auto a = fuzz_identities(o);
    o.threads = 3;
    auto b = fuzz_identities(o);
    REQUIRE(a.size() == 14);
    REQUIRE(b.size() == 14);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].unequal == 0);
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].equal == b[i].equal);
        CHECK(a[i].skipped == b[i].skipped);
        CHECK(a[i].pole_redraws == b[i].pole_redraws);
    }
}
