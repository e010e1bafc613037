// Command-line surface. run_cli is the whole program behind a testable
// interface; exit codes are 0 (success), 1 (predicate false / mismatches,
// where applicable), 2 (usage error).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linres {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linres
