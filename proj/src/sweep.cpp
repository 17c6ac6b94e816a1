#include "shg/congruences.hpp"

#include "shg/errors.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace shg {

namespace {

BigRational param(const ParamMap& m, const std::string& key, const BigRational& fallback) {
    auto it = m.find(key);
    return it == m.end() ? fallback : it->second;
}

long int_param(const ParamMap& m, const std::string& key, long fallback) {
    BigRational v = param(m, key, BigRational(fallback));
    if (!is_integer(v) || !v.get_num().fits_slong_p())
        throw DomainError("parameter " + key + " must be an integer, got " + to_string(v));
    return v.get_num().get_si();
}

bool any_prime(unsigned long, const ParamMap&) { return true; }
bool one_mod_four(unsigned long p, const ParamMap&) { return p % 4 == 1; }

std::pair<long, long> machinery_cd(unsigned long p, const ParamMap& m) {
    bool one = p % 4 == 1;
    return {int_param(m, "C", one ? 5 : 3), int_param(m, "D", one ? 9 : 7)};
}

std::vector<CheckInfo> build_registry() {
    std::vector<CheckInfo> v;
    v.push_back({"notsuper", "2F1 at -1 ratio vs Gamma_p(1/4)^2/Gamma_p(1/2) mod p^2r", one_mod_four,
                 [](unsigned long p, const ParamMap& m, const VerifyOptions& o) {
                     return verify_notsuper(p, int_param(m, "r", 1), o);
                 }});
    v.push_back({"theorem1", "2F1 at 2 ratio vs Gamma_p(1/4)^2/Gamma_p(1/2) mod p^2r", one_mod_four,
                 [](unsigned long p, const ParamMap& m, const VerifyOptions& o) {
                     return verify_theorem1(p, int_param(m, "r", 1), o);
                 }});
    v.push_back({"theorem2", "7F6 truncated at p-1 vs Gamma_p(1/3)^9 mod p^6", any_prime,
                 [](unsigned long p, const ParamMap& m, const VerifyOptions& o) {
                     return verify_theorem2(p, int_param(m, "e", 6), o);
                 }});
    v.push_back({"theorem2_mod7", "the same 7F6 congruence at p^7", any_prime,
                 [](unsigned long p, const ParamMap&, const VerifyOptions& o) { return verify_theorem2(p, 7, o); }});
    v.push_back({"theorem3", "3F2(1/2,1/2,1/2;1,1;1) vs Gamma_p(1/4)^4 mod p^3", any_prime,
                 [](unsigned long p, const ParamMap&, const VerifyOptions& o) { return verify_theorem3(p, o); }});
    v.push_back({"morethirds", "3F2(1/3,1/3,1/3;1,1;1) vs Gamma_p(1/3)^6 mod p^3", any_prime,
                 [](unsigned long p, const ParamMap&, const VerifyOptions& o) { return verify_morethirds(p, o); }});
    v.push_back({"minus_one_eighth", "3F2(1/2,1/2,1/2;1,1;-1/8) vs Gamma_p(1/4)^4 mod p^3", one_mod_four,
                 [](unsigned long p, const ParamMap&, const VerifyOptions& o) {
                     return verify_minus_one_eighth(p, o);
                 }});
    v.push_back({"kazandzidis", "binom(p^r n, p^r m) vs binom(p^(r-1) n, p^(r-1) m) mod p^3r", any_prime,
                 [](unsigned long p, const ParamMap& m, const VerifyOptions&) {
                     return verify_kazandzidis(p, static_cast<int>(int_param(m, "r", 1)), int_param(m, "n", 2),
                                               int_param(m, "m", 1));
                 }});
    v.push_back({"ckko", "(a)_{p^r}/(a')_{p^(r-1)} vs the same at 1-a", 
                 [](unsigned long p, const ParamMap& m) {
                     return valuation(param(m, "a", BigRational(1, 4)), p) == 0;
                 },
                 [](unsigned long p, const ParamMap& m, const VerifyOptions& o) {
                     return verify_ckko(param(m, "a", BigRational(1, 4)), p, static_cast<int>(int_param(m, "r", 1)),
                                        o);
                 }});
    v.push_back({"ckko_corollary", "(1-1/n)_p vs (n-1)(1/n)_p mod p^3",
                 [](unsigned long p, const ParamMap& m) {
                     long n = int_param(m, "n", 4);
                     return n >= 2 && p % static_cast<unsigned long>(n) == 1;
                 },
                 [](unsigned long p, const ParamMap& m, const VerifyOptions&) {
                     return verify_ckko_corollary(int_param(m, "n", 4), p);
                 }});
    v.push_back({"g14g12", "log_p(4^(p-1))/p vs 2G_1(1/2) - 2G_1(1/4)", any_prime,
                 [](unsigned long p, const ParamMap& m, const VerifyOptions& o) {
                     return verify_g14g12(p, static_cast<int>(int_param(m, "s", 2)),
                                          static_cast<int>(int_param(m, "r", 1)), o);
                 }});
    v.push_back({"two_power", "2^((p-1)/2) and 2^(3(p-1)/2) via G_1(0) - G_1(1/4) mod p^3", any_prime,
                 [](unsigned long p, const ParamMap&, const VerifyOptions& o) { return verify_two_power(p, o); }});
    v.push_back({"expansion", "rising factorial expansion through A_k, B_k mod p^3", any_prime,
                 [](unsigned long p, const ParamMap& m, const VerifyOptions&) {
                     return verify_expansion(p, param(m, "M", BigRational(3)), param(m, "base", BigRational(1, 2)),
                                             int_param(m, "k", 0));
                 }});
    v.push_back({"3f2_machinery", "3F2(C) - 3F2(D) by harmonic sums and by Gamma_p",
                 [](unsigned long p, const ParamMap& m) {
                     auto [C, D] = machinery_cd(p, m);
                     long c = static_cast<long>(p % 4);
                     return C > 0 && D > 0 && C % 4 == c && D % 4 == c;
                 },
                 [](unsigned long p, const ParamMap& m, const VerifyOptions& o) {
                     auto [C, D] = machinery_cd(p, m);
                     return verify_3f2_machinery(p, C, D, o);
                 }});
    return v;
}

}  // namespace

const std::vector<CheckInfo>& registered_checks() {
    static const std::vector<CheckInfo> registry = build_registry();
    return registry;
}

const CheckInfo* find_check(std::string_view id) {
    for (const auto& c : registered_checks())
        if (c.id == id) return &c;
    return nullptr;
}

CongruenceReport verify(std::string_view check_id, unsigned long p, const ParamMap& params, const VerifyOptions& o) {
    const CheckInfo* c = find_check(check_id);
    if (!c) throw DomainError("unknown check id: " + std::string(check_id));
    require_prime(p);
    return c->run(p, params, o);
}

std::vector<CongruenceReport> sweep(std::string_view check_id, PrimeRange primes, const ParamMap& params,
                                    int parallelism, const VerifyOptions& o,
                                    const std::function<void(const CongruenceReport&)>& sink) {
    const CheckInfo* c = find_check(check_id);
    if (!c) throw DomainError("unknown check id: " + std::string(check_id));
    if (parallelism < 1) throw DomainError("parallelism must be >= 1");

    std::vector<unsigned long> ps;
    for (unsigned long p = std::max(primes.lo, 5UL); p <= primes.hi; ++p) {
        if (!is_prime(p)) continue;
        bool ok = false;
        try {
            ok = c->admissible(p, params);
        } catch (const Error&) {
            ok = true;  // let the verifier report the problem
        }
        if (ok) ps.push_back(p);
    }

    std::vector<CongruenceReport> out(ps.size());
    std::vector<char> done(ps.size(), 0);
    std::atomic<size_t> next{0};
    std::mutex mu;
    size_t emitted = 0;

    auto worker = [&] {
        for (size_t i = next++; i < ps.size(); i = next++) {
            CongruenceReport rep;
            try {
                rep = c->run(ps[i], params, o);
            } catch (const std::exception& e) {
                rep.check_id = c->id;
                rep.prime = ps[i];
                rep.verdict = Verdict::Error;
                rep.notes = e.what();
            }
            std::lock_guard<std::mutex> lk(mu);
            out[i] = std::move(rep);
            done[i] = 1;
            while (emitted < ps.size() && done[emitted]) {
                if (sink) sink(out[emitted]);
                ++emitted;
            }
        }
    };

    int n = std::min<int>(parallelism, static_cast<int>(std::max<size_t>(ps.size(), 1)));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace shg
