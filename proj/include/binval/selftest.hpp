#pragma once

#include <iosfwd>

namespace binval {

/// Runs the invariant suite at desk scale, printing one line per check.
/// Returns true when every check passes.
bool run_selftest(std::ostream& out);

}  // namespace binval
