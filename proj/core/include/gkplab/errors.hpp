#pragma once

#include <stdexcept>
#include <string>

namespace gkplab {

/// Raised when a requested computation has no feasible answer: a PNRD
/// evaluation below the no-cloning bound, an optimizer search space with no
/// feasible point, or a waterfall search on a configuration whose key rate is
/// already zero at distance 0. Distinct from std::invalid_argument, which
/// covers malformed inputs.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gkplab
