#pragma once

// In-process command-line front end.  Exit codes: 0 success/consistent,
// 1 usage error, 2 hypothesis failed, 3 anomaly found, 4 undecided at the
// precision ceiling.

#include <iosfwd>
#include <string>
#include <vector>

namespace lcert {

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

}  // namespace lcert
