#pragma once

#include <ostream>

namespace fxcli {

/// Run the built-in golden checks (documented toolbox behaviours frozen
/// as exact expectations), printing one line per case with expected and
/// actual values.  Returns the number of failing cases.
int run_selftest(std::ostream& out);

} // namespace fxcli
