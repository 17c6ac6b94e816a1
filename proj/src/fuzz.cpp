#include "shg/errors.hpp"
#include "shg/identities.hpp"

#include <future>
#include <random>

namespace shg {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    BigRational rational() {
        BigRational q(integer(-40, 40), integer(1, 40));
        q.canonicalize();
        return q;
    }
    BigRational non_integer() {
        for (;;) {
            BigRational q = rational();
            if (!is_integer(q)) return q;
        }
    }
    bool coin() { return integer(0, 1) == 1; }

private:
    std::mt19937_64 rng_;
};

const std::vector<unsigned long>& ka2_primes() {
    static const std::vector<unsigned long> ps = [] {
        std::vector<unsigned long> v;
        for (unsigned long p = 5; p < 120; ++p)
            if (p % 4 == 1 && is_prime(p)) v.push_back(p);
        return v;
    }();
    return ps;
}

IdentityCase draw_case(IdentityId id, Draw& d) {
    auto R = [&] { return d.rational(); };
    switch (id) {
        case IdentityId::PFAFF: return check_pfaff(d.integer(0, 12), R(), R(), R());
        case IdentityId::KUMMER: return check_kummer_terminating(R(), -d.integer(1, 10));
        case IdentityId::CLAUSEN: return check_clausen(R(), R(), 12);
        case IdentityId::GAUSS_CV: return check_gauss_cv(d.integer(0, 12), R(), R());
        case IdentityId::PFAFF_SAALSCHUTZ: return check_pfaff_saalschutz(d.integer(0, 10), R(), R(), R());
        case IdentityId::DIXON: return check_dixon_terminating(R(), d.integer(0, 6), d.integer(0, 6));
        case IdentityId::THOMAE_57: return check_3f2_transform(d.integer(1, 12), R(), R(), R(), R());
        case IdentityId::WHIPPLE_76: return check_whipple(R(), R(), R(), R(), R(), -d.integer(1, 5));
        case IdentityId::DOUGALL_76: return check_dougall(R(), R(), R(), R(), -d.integer(1, 4));
        case IdentityId::KARLSSON_KA: return check_karlsson(d.integer(1, 12));
        case IdentityId::KARLSSON_KA2: {
            const auto& ps = ka2_primes();
            unsigned long p = ps[static_cast<std::size_t>(d.integer(0, static_cast<long>(ps.size()) - 1))];
            return check_karlsson_negative(p, d.integer(1, 4));
        }
        case IdentityId::PFAFF2: {
            ParamMap m;
            if (d.coin()) {
                long b = -d.integer(1, 12);
                BigRational a = R();
                while (a <= b) a = R();
                m = {{"a", a}, {"b", BigRational(b)}, {"c", R()}};
            } else {
                BigRational b = d.non_integer();
                m = {{"a", BigRational(-d.integer(0, 12))}, {"b", b}, {"c", R()}};
                if (d.coin()) m["a"] = R();
            }
            return check_quadratic_transforms(id, m);
        }
        case IdentityId::KUMMER_QUAD: {
            BigRational b = d.coin() ? BigRational(d.integer(0, 12)) : d.non_integer();
            BigRational a = d.coin() ? BigRational(-d.integer(0, 12)) : R();
            return check_quadratic_transforms(id, {{"a", a}, {"b", b}});
        }
        case IdentityId::GAUSS_TO_KUMMER: {
            ParamMap m;
            if (d.coin())
                m = {{"a", BigRational(-d.integer(0, 12))}, {"b", R()}};
            else
                m = {{"a", BigRational(d.integer(1, 12))}, {"b", BigRational(-d.integer(0, 12))}};
            return check_quadratic_transforms(id, m);
        }
    }
    throw DomainError("unknown identity");
}

FuzzSummary run_one(IdentityId id, std::uint64_t seed, int cases) {
    FuzzSummary s;
    s.id = id;
    s.seed = seed;
    Draw d(seed);
    int budget = cases * 50;
    int done = 0;
    while (done < cases && budget-- > 0) {
        IdentityCase c;
        try {
            c = draw_case(id, d);
        } catch (const PoleError&) {
            ++s.pole_redraws;
            continue;
        }
        ++done;
        switch (c.verdict) {
            case VerdictKind::Equal: ++s.equal; break;
            case VerdictKind::Skipped: ++s.skipped; break;
            case VerdictKind::Unequal:
                ++s.unequal;
                s.unequal_cases.push_back(std::move(c));
                break;
        }
    }
    if (done < cases) s.notes.push_back("redraw budget exhausted after " + std::to_string(done) + " cases");
    if (id == IdentityId::KARLSSON_KA) {
        IdentityCase one = check_karlsson(1);
        s.notes.push_back("a=1 oracle: lhs " + one.lhs + ", rhs " + one.rhs + " with constant 2^(3a-3)");
    }
    return s;
}

}  // namespace

std::vector<FuzzSummary> fuzz_identities(const FuzzOptions& opts) {
    std::vector<IdentityId> ids = opts.ids.empty() ? all_identity_ids() : opts.ids;
    std::vector<FuzzSummary> out(ids.size());
    auto job = [&](std::size_t i) {
        IdentityId id = ids[i];
        bool reduced = id == IdentityId::WHIPPLE_76 || id == IdentityId::DOUGALL_76 || id == IdentityId::DIXON;
        std::uint64_t seed = opts.seed * 1000003ULL + static_cast<std::uint64_t>(id);
        out[i] = run_one(id, seed, reduced ? opts.reduced_cases : opts.cases);
    };
    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) job(i);
        return out;
    }
    std::vector<std::future<void>> pending;
    std::size_t next = 0;
    while (next < ids.size() || !pending.empty()) {
        while (next < ids.size() && pending.size() < static_cast<std::size_t>(threads))
            pending.push_back(std::async(std::launch::async, job, next++));
        pending.front().get();
        pending.erase(pending.begin());
    }
    return out;
}

}  // namespace shg
