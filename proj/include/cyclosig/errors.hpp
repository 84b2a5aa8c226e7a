#pragma once

#include <stdexcept>

namespace cyclosig {

// Thrown when a computation contradicts one of the pinned mathematical
// statements this toolkit exists to confirm (parity patterns, exact ranks,
// the composite rank formula). Distinct from ordinary input errors so the
// CLI can map it to its own exit code.
class falsification_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclosig
