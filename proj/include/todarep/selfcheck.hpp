#pragma once

#include <iosfwd>

namespace todarep {

/// Runs the cross-module invariant suite, printing one line per check.
/// Returns true iff every check passed.
bool run_selfcheck(std::ostream& out, unsigned seed = 12345);

}  // namespace todarep
