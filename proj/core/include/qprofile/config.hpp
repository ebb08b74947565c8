#pragma once

#include <stdexcept>

namespace qprofile {

// Hard cap on degrees of symmetric functions and partition sizes. Everything
// in this library is exact, so blowing past this silently would mean minutes
// of bignum churn instead of an error.
inline constexpr int kDegreeCap = 12;

// Upper bound on the number of subspaces the oracle is willing to enumerate.
inline constexpr long long kSubspaceBudget = 1'000'000;

// Thrown when an enumeration would exceed its declared budget. The CLI maps
// this to its own exit code, distinct from validation errors.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qprofile
