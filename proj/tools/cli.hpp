#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nilcent::cli {

inline constexpr const char* kSchema = "nilcent.report/1";

// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.
// args excludes the program name. The report goes to --out if given (with a
// one-line summary on out), else to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcent::cli
