#include "besselsum/report.hpp"

#include <algorithm>
#include <cmath>

#include "besselsum/numeric.hpp"

namespace besselsum {

IdentityReport make_report(std::string identity_id, ParamList params, Side lhs, Side rhs,
                           bool certified) {
  IdentityReport report;
  report.identity_id = std::move(identity_id);
  report.params = std::move(params);
  report.lhs = lhs;
  report.rhs = rhs;
  report.residual = std::abs(lhs.value - rhs.value);
  const double scale = std::max({1.0, std::abs(lhs.value), std::abs(rhs.value), lhs.magnitude, rhs.magnitude});
  report.budget = lhs.error + rhs.error + kRoundingSlackEps * kEps * scale;
  report.pass = std::isfinite(report.residual) && report.residual <= report.budget;
  report.terms_used = lhs.terms + rhs.terms;
  report.certified = certified;
  return report;
}

}  // namespace besselsum
