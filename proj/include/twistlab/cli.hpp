#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace twistlab {

/// args excludes the program name. Reports go to out (or --output); exit
/// codes are 0 on success, 1 on a failed precondition or check, 2 on
/// unparsable input or usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The Heisenberg pipeline behind `demo heisenberg`.
nlohmann::json heisenberg_demo(long n);

}  // namespace twistlab
