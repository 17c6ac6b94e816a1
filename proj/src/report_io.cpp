#include "shg/report.hpp"

#include "shg/errors.hpp"

#include <json.hpp>

namespace shg {

namespace {

std::string notes_field(const CongruenceReport& rep) {
    std::string s = "verdict=" + std::string(to_string(rep.verdict));
    if (!rep.notes.empty()) s += "; " + rep.notes;
    return s;
}

std::string modulus(const CongruenceReport& rep) {
    return std::to_string(rep.prime) + "^" + std::to_string(rep.modulus_exponent);
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "jsonl") return Format::Jsonl;
    if (s == "md") return Format::Md;
    if (s == "csv") return Format::Csv;
    throw ParseError("unknown format: " + std::string(s));
}

std::string to_jsonl(const CongruenceReport& rep, bool timing) {
    nlohmann::ordered_json j;
    j["check_id"] = rep.check_id;
    j["prime"] = rep.prime;
    if (rep.r)
        j["r"] = *rep.r;
    else
        j["r"] = nullptr;
    j["modulus_exponent"] = rep.modulus_exponent;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["holds"] = rep.holds();
    j["elapsed_ms"] = timing ? rep.elapsed_ms : 0;
    j["backend"] = std::string(to_string(rep.backend));
    j["notes"] = notes_field(rep);
    return j.dump();
}

void ReportWriter::write(const CongruenceReport& rep) {
    long ms = timing_ ? rep.elapsed_ms : 0;
    std::string r = rep.r ? std::to_string(*rep.r) : "";
    switch (format_) {
        case Format::Jsonl:
            os_ << to_jsonl(rep, timing_) << '\n';
            break;
        case Format::Csv:
            if (!header_done_) os_ << "check_id,prime,r,modulus_exponent,lhs,rhs,holds,elapsed_ms,backend,notes\n";
            os_ << csv_cell(rep.check_id) << ',' << rep.prime << ',' << r << ',' << rep.modulus_exponent << ','
                << rep.lhs << ',' << rep.rhs << ',' << (rep.holds() ? "true" : "false") << ',' << ms << ','
                << to_string(rep.backend) << ',' << csv_cell(notes_field(rep)) << '\n';
            break;
        case Format::Md:
            if (!header_done_)
                os_ << "| statement | p | r | modulus | lhs | rhs | verdict | ms | backend | notes |\n"
                    << "|---|---|---|---|---|---|---|---|---|---|\n";
            os_ << "| " << md_cell(rep.check_id) << " | " << rep.prime << " | " << r << " | " << modulus(rep)
                << " | " << rep.lhs << " | " << rep.rhs << " | " << to_string(rep.verdict) << " | " << ms << " | "
                << to_string(rep.backend) << " | " << md_cell(rep.notes) << " |\n";
            break;
    }
    header_done_ = true;
    os_.flush();
}

void ReportWriter::finish() { os_.flush(); }

}  // namespace shg
