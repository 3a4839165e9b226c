#ifndef QSAMPLING_ACCEPTANCE_HPP
#define QSAMPLING_ACCEPTANCE_HPP

#include <iosfwd>

namespace qsampling {

/// Runs the full validation suite, printing one PASS/FAIL line per
/// criterion. Returns true when every criterion passes.
bool run_acceptance(std::ostream& out);

}  // namespace qsampling

#endif
