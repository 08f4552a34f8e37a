#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permchar {

/// Exit codes: 0 when every requested check holds (for falsify-klingen, when
/// a witness is found), 1 when a check fails, 2 for usage and input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permchar
