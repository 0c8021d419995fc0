#pragma once

#include <stdexcept>
#include <string>

namespace sosggm {

/// Thrown when a requested joint table would exceed the configured entry
/// budget. Callers should fall back to edge_marginal_exact.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal cross-check fails: a solver returned a candidate
/// that does not pass its verification oracles, or two independent routes to
/// the same quantity disagree. Always a bug, never a data point.
struct OracleFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sosggm
