#include "shg/cli.hpp"

#include "shg/congruences.hpp"
#include "shg/errors.hpp"
#include "shg/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace shg {

namespace {

constexpr unsigned long kLongRunningBound = 100;

struct Settings {
    unsigned long p = 0;
    long N = 4;
    std::string format = "jsonl";
    std::string out;
    int threads = 1;
    std::uint64_t seed = FuzzOptions{}.seed;
    std::string backend = "auto";
    bool no_timing = false;

    std::string at;
    int kmax = 2;
    int r = 0;
    std::string upper, lower, z = "1";
    long trunc = -1;

    std::string id;
    std::vector<std::string> params;
    int cases = FuzzOptions{}.cases;
    int reduced_cases = FuzzOptions{}.reduced_cases;
    std::string ids;

    std::string primes;
    int mod_exp = 0;
    bool long_running_ack = false;
};

class UsageError : public Error {
public:
    using Error::Error;
};

Backend parse_backend(const std::string& s) {
    if (s == "naive") return Backend::Naive;
    if (s == "fast") return Backend::Fast;
    if (s == "auto") return Backend::Auto;
    throw UsageError("unknown backend: " + s);
}

std::vector<BigRational> parse_list(const std::string& s) {
    std::vector<BigRational> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) v.push_back(parse_rational(item));
    return v;
}

ParamMap parse_params(const std::vector<std::string>& kv) {
    ParamMap m;
    for (const auto& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got " + s);
        m[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
    }
    return m;
}

PrimeRange parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("--primes expects A..B, got " + s);
    try {
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("--primes expects A..B, got " + s);
    }
}

std::string upper_case(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

std::string mod_string(unsigned long p, long N) { return std::to_string(p) + "^" + std::to_string(N); }

int cmd_gamma(const Settings& s, std::ostream& out) {
    BigRational a = parse_rational(s.at);
    PadicNumber g = gamma_p(a, s.p, s.N, parse_backend(s.backend));
    out << g.residue_string(s.N) << " mod " << mod_string(s.p, s.N) << '\n';
    return 0;
}

int cmd_gder(const Settings& s, std::ostream& out) {
    BigRational a = parse_rational(s.at);
    GammaDerivatives g = gamma_derivatives(a, s.p, s.kmax, s.r > 0 ? s.r : 1, parse_backend(s.backend));
    for (const auto& e : g.entries) {
        out << "G_" << e.k << "(" << to_string(a) << ") = ";
        if (e.guaranteed_abs_prec <= 0)
            out << "no guaranteed digits\n";
        else
            out << e.value.with_abs_prec(e.guaranteed_abs_prec).to_string() << " mod "
                << mod_string(s.p, e.guaranteed_abs_prec) << '\n';
    }
    return 0;
}

int cmd_pfq(const Settings& s, std::ostream& out) {
    std::vector<BigRational> up = parse_list(s.upper), lo = parse_list(s.lower);
    BigRational z = parse_rational(s.z);
    HypergeometricSpec spec = s.trunc >= 0 ? truncated(up, lo, z, s.trunc) : terminating(up, lo, z);
    BigRational q = pfq_rational(spec);
    out << to_string(q) << '\n';
    if (s.p) out << pfq_padic(spec, s.p, s.N).to_string() << " mod " << mod_string(s.p, s.N) << '\n';
    return 0;
}

nlohmann::ordered_json case_json(const IdentityCase& c) {
    nlohmann::ordered_json j;
    j["id"] = std::string(to_string(c.id));
    nlohmann::ordered_json ps = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.parameters) ps[k] = to_string(v);
    j["parameters"] = ps;
    j["verdict"] = std::string(to_string(c.verdict));
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["reason"] = c.reason;
    j["note"] = c.note;
    return j;
}

IdentityId identity_from(const std::string& name) {
    auto id = parse_identity_id(upper_case(name));
    if (!id) throw UsageError("unknown identity id: " + name);
    return *id;
}

int cmd_identity(const Settings& s, std::ostream& out) {
    ParamMap m = parse_params(s.params);
    if (s.p && !m.count("p")) m["p"] = static_cast<long>(s.p);
    IdentityCase c = check_identity(identity_from(s.id), m);
    out << case_json(c).dump() << '\n';
    switch (c.verdict) {
        case VerdictKind::Equal: return 0;
        case VerdictKind::Unequal: return 1;
        case VerdictKind::Skipped: return 2;
    }
    return 2;
}

int cmd_fuzz(const Settings& s, std::ostream& out) {
    FuzzOptions o;
    o.seed = s.seed;
    o.cases = s.cases;
    o.reduced_cases = s.reduced_cases;
    o.threads = s.threads;
    std::stringstream ss(s.ids);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) o.ids.push_back(identity_from(item));
    int code = 0;
    for (const auto& f : fuzz_identities(o)) {
        nlohmann::ordered_json j;
        j["id"] = std::string(to_string(f.id));
        j["seed"] = f.seed;
        j["equal"] = f.equal;
        j["unequal"] = f.unequal;
        j["skipped"] = f.skipped;
        j["pole_redraws"] = f.pole_redraws;
        nlohmann::ordered_json bad = nlohmann::ordered_json::array();
        for (const auto& c : f.unequal_cases) bad.push_back(case_json(c));
        j["unequal_cases"] = bad;
        j["notes"] = f.notes;
        out << j.dump() << '\n';
        if (f.unequal) code = 1;
    }
    return code;
}

ParamMap check_params(const Settings& s) {
    ParamMap m = parse_params(s.params);
    if (s.r) m["r"] = s.r;
    if (s.mod_exp) {
        if (s.id == "theorem2")
            m["e"] = s.mod_exp;
        else if (s.id == "theorem2_mod7") {
            if (s.mod_exp != 7) throw UsageError("theorem2_mod7 is fixed at modulus exponent 7");
        } else if (s.id == "g14g12")
            m["s"] = s.mod_exp;
        else
            throw UsageError("--mod-exp applies to theorem2 and g14g12 only");
    }
    return m;
}

int cmd_verify(const Settings& s, std::ostream& out, bool require_range) {
    if (!find_check(s.id)) throw UsageError("unknown check id: " + s.id);
    if (s.p && !s.primes.empty()) throw UsageError("give either -p or --primes, not both");
    if (require_range && s.primes.empty()) throw UsageError("sweep needs --primes A..B");
    if (!s.p && s.primes.empty()) throw UsageError("verify needs -p P or --primes A..B");
    ParamMap m = check_params(s);
    VerifyOptions o;
    o.backend = parse_backend(s.backend);
    ReportWriter w(out, parse_format(s.format), !s.no_timing);
    bool all = true;
    if (s.p) {
        CongruenceReport rep = verify(s.id, s.p, m, o);
        w.write(rep);
        all = rep.holds();
    } else {
        PrimeRange range = parse_range(s.primes);
        if (range.hi > kLongRunningBound && !s.long_running_ack)
            throw UsageError("primes above " + std::to_string(kLongRunningBound) +
                             " make a long-running sweep; pass --long-running-ack");
        auto reps = sweep(s.id, range, m, s.threads, o, [&](const CongruenceReport& rep) { w.write(rep); });
        all = std::all_of(reps.begin(), reps.end(), [](const CongruenceReport& r) { return r.holds(); });
    }
    w.finish();
    return all ? 0 : 1;
}

int cmd_list(std::ostream& out) {
    for (const auto& c : registered_checks()) out << c.id << "  " << c.summary << '\n';
    return 0;
}

int default_threads() {
    if (const char* env = std::getenv("SHG_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Settings s;
    s.threads = default_threads();

    CLI::App app{"p-adic Gamma values, truncated hypergeometric sums and supercongruence checks", "shg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-p,--prime", s.p, "prime p >= 5");
    app.add_option("-N,--precision", s.N, "p-adic precision")->check(CLI::PositiveNumber);
    app.add_option("--format", s.format, "report format")->check(CLI::IsMember({"jsonl", "md", "csv"}));
    app.add_option("--out", s.out, "write output to FILE");
    app.add_option("--threads", s.threads, "worker threads (env SHG_THREADS)")->check(CLI::PositiveNumber);
    app.add_option("--seed", s.seed, "fuzzer seed");
    app.add_option("--backend", s.backend, "unit_product backend")->check(CLI::IsMember({"naive", "fast", "auto"}));
    app.add_flag("--no-timing", s.no_timing, "write elapsed_ms as 0");

    auto* gamma = app.add_subcommand("gamma", "Gamma_p(a) mod p^N");
    gamma->add_option("--at", s.at, "rational point num/den")->required();

    auto* gder = app.add_subcommand("gder", "G_k(a) = Gamma_p^(k)(a)/Gamma_p(a), k = 1..kmax");
    gder->add_option("--at", s.at, "rational point num/den")->required();
    gder->add_option("--kmax", s.kmax, "largest k")->check(CLI::Range(1, 12));
    gder->add_option("-r", s.r, "sample spacing exponent");

    auto* pfq = app.add_subcommand("pfq", "truncated or terminating pFq as an exact rational");
    pfq->add_option("--upper", s.upper, "comma separated upper parameters")->required();
    pfq->add_option("--lower", s.lower, "comma separated lower parameters");
    pfq->add_option("--z", s.z, "argument");
    pfq->add_option("--trunc", s.trunc, "last index kept; omit for a terminating series");

    auto* ident = app.add_subcommand("identity", "check one classical identity instance");
    ident->add_option("id", s.id, "identity id, e.g. PFAFF")->required();
    ident->add_option("--param", s.params, "key=value, repeatable");

    auto* fuzz = app.add_subcommand("fuzz", "randomised identity checks");
    fuzz->add_option("--cases", s.cases, "cases per identity")->check(CLI::PositiveNumber);
    fuzz->add_option("--reduced-cases", s.reduced_cases, "cases for WHIPPLE_76, DOUGALL_76, DIXON")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--ids", s.ids, "comma separated identity ids (default: all)");

    auto* ver = app.add_subcommand("verify", "run a named congruence check");
    auto* swp = app.add_subcommand("sweep", "run a named congruence check over a prime range");
    for (auto* sub : {ver, swp}) {
        sub->add_option("check", s.id, "check id (see `shg list`)")->required();
        sub->add_option("--primes", s.primes, "prime range A..B");
        sub->add_option("-r", s.r, "exponent r");
        sub->add_option("--mod-exp", s.mod_exp, "modulus exponent");
        sub->add_option("--param", s.params, "key=value, repeatable");
        sub->add_flag("--long-running-ack", s.long_running_ack, "allow prime ranges above 100");
    }

    auto* list = app.add_subcommand("list", "registered congruence checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    std::ofstream file;
    if (!s.out.empty()) {
        file.open(s.out);
        if (!file) {
            err << "error: cannot open " << s.out << '\n';
            return 2;
        }
    }
    std::ostream& os = s.out.empty() ? out : file;

    try {
        if ((gamma->parsed() || gder->parsed()) && !s.p) throw UsageError("-p is required");
        if (gamma->parsed()) return cmd_gamma(s, os);
        if (gder->parsed()) return cmd_gder(s, os);
        if (pfq->parsed()) return cmd_pfq(s, os);
        if (ident->parsed()) return cmd_identity(s, os);
        if (fuzz->parsed()) return cmd_fuzz(s, os);
        if (ver->parsed()) return cmd_verify(s, os, false);
        if (swp->parsed()) return cmd_verify(s, os, true);
        if (list->parsed()) return cmd_list(os);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const UnsupportedPrime& e) {
        err << "UnsupportedPrime: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace shg
