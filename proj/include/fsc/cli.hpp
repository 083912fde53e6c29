#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsc::cli {

/// Dispatches one command and writes a single JSON document to `out`
/// (diagnostics go to `err`). Exit codes: 0 solved/feasible, 1 infeasible,
/// 2 usage/parse/precondition error, 3 enumeration budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsc::cli
