#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ids {

/// Exit codes: 0 success, 1 check-equiv found a difference, 2 usage or
/// input error.
int cli_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ids
