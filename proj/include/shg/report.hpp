#pragma once

#include "shg/congruences.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace shg {

enum class Format { Jsonl, Md, Csv };
Format parse_format(std::string_view s);

// {check_id, prime, r, modulus_exponent, lhs, rhs, holds, elapsed_ms, backend, notes}, one line
std::string to_jsonl(const CongruenceReport& rep, bool timing = true);

class ReportWriter {
public:
    ReportWriter(std::ostream& os, Format f, bool timing = true) : os_(os), format_(f), timing_(timing) {}
    void write(const CongruenceReport& rep);
    void finish();

private:
    std::ostream& os_;
    Format format_;
    bool timing_;
    bool header_done_ = false;
};

}  // namespace shg
