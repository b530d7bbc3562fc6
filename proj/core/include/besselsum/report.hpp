#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "besselsum/types.hpp"

namespace besselsum {

/// One side of an identity: its value and the bound on its truncation and
/// approximation error.
struct Side {
  Complex value{};
  double error = 0.0;
  std::size_t terms = 0;
  /// Sum of magnitudes of the pieces that were added (sets the rounding scale).
  double magnitude = 0.0;
};

using ParamValue = std::variant<std::int64_t, double, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

/// Both sides of an identity at one parameter point and the verdict.
/// pass iff residual <= budget, with
/// budget = lhs.error + rhs.error + 1000 eps * max(1, |lhs|, |rhs|, magnitudes).
struct IdentityReport {
  std::string identity_id;
  ParamList params;
  Side lhs;
  Side rhs;
  double residual = 0.0;
  double budget = 0.0;
  bool pass = false;
  std::size_t terms_used = 0;
  /// False when some tail in the budget is an a-posteriori estimate rather
  /// than a proven bound.
  bool certified = true;
};

/// Rounding slack multiplier applied to the magnitude scale.
inline constexpr double kRoundingSlackEps = 1000.0;

IdentityReport make_report(std::string identity_id, ParamList params, Side lhs, Side rhs,
                           bool certified = true);

}  // namespace besselsum
