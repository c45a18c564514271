#pragma once

#include <json.hpp>
#include <vector>

#include "macorr/errors.hpp"

namespace macorr {

/// Least-squares line through (log x, log y) with a 95% Student-t interval on the slope.
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  int points = 0;
};

void to_json(nlohmann::json& j, const LogLogFit& f);

/// Requires at least two points, positive data and y strictly monotone in x; throws FitError otherwise.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Two-sided 97.5% quantile of Student's t with `dof` degrees of freedom.
double t_quantile_975(int dof);

}  // namespace macorr
