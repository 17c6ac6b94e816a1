#pragma once

#include <ostream>

namespace shg {

// 0: everything requested holds; 1: some congruence or identity failed; 2: usage or domain error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shg
