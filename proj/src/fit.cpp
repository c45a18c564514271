#include "macorr/fit.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/distributions/students_t.hpp>

namespace macorr {

void to_json(nlohmann::json& j, const LogLogFit& f) {
  j = nlohmann::json{{"slope", f.slope},       {"intercept", f.intercept}, {"std_error", f.std_error},
                     {"ci_low", f.ci_low},     {"ci_high", f.ci_high},     {"points", f.points}};
}

double t_quantile_975(int dof) {
  if (dof < 1) return std::numeric_limits<double>::infinity();
  const boost::math::students_t dist(dof);
  return boost::math::quantile(boost::math::complement(dist, 0.025));
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  if (m != y.size()) throw FitError("fit needs equally many abscissae and values");
  if (m < 2) throw FitError("fit needs at least two points");
  for (std::size_t i = 0; i < m; ++i)
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(y[i]))
      throw FitError("fit needs positive finite data, got y = " + std::to_string(y[i]));
  int sign = 0;
  for (std::size_t i = 1; i < m; ++i) {
    const int s = (y[i] > y[i - 1]) - (y[i] < y[i - 1]);
    if (s == 0 || (sign != 0 && s != sign))
      throw FitError("non-monotone data at point " + std::to_string(i));
    sign = s;
  }
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / double(m);
  const double my = sy / double(m);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (!(sxx > 0.0)) throw FitError("fit needs distinct abscissae");
  LogLogFit f;
  f.points = int(m);
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (m > 2) {
    double rss = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = std::log(y[i]) - f.intercept - f.slope * std::log(x[i]);
      rss += r * r;
    }
    f.std_error = std::sqrt(rss / double(m - 2) / sxx);
  }
  const double t = m > 2 ? t_quantile_975(int(m) - 2) : 0.0;
  f.ci_low = f.slope - t * f.std_error;
  f.ci_high = f.slope + t * f.std_error;
  return f;
}

}  // namespace macorr
