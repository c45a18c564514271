#include "macorr/profile.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace macorr {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

double TrigProfile::operator()(double t) const { return offset + amplitude * std::sin(frequency * t + phase); }

TrigProfile TrigProfile::derivative(int times) const {
  TrigProfile p = *this;
  p.offset = times > 0 ? 0.0 : offset;
  for (int k = 0; k < times; ++k) {
    p.amplitude *= p.frequency;
    p.phase += kHalfPi;
  }
  return p;
}

TrigProfile TrigProfile::gamma() { return {2.0, 1.0, 0.0, 0.0}; }
TrigProfile TrigProfile::gamma_bar() { return {0.5, 2.0, kHalfPi, 0.0}; }
TrigProfile TrigProfile::gamma_bar_bar() { return {-0.5, 2.0, 0.0, 0.0}; }
TrigProfile TrigProfile::gamma_tilde() { return {-0.5, 2.0, kHalfPi, 1.0}; }
TrigProfile TrigProfile::gamma_tilde_shifted() { return {-0.5, 2.0, kHalfPi, 0.0}; }

TrigProfile antiderivative(const TrigProfile& p, int times) {
  if (!(p.frequency > 0.0)) throw ParameterError("profile frequency must be positive");
  if (!p.zero_mean()) throw ParameterError("only zero-mean profiles have periodic primitives");
  TrigProfile q = p;
  for (int k = 0; k < times; ++k) {
    q.amplitude /= q.frequency;
    q.phase -= kHalfPi;
  }
  return q;
}

ScalarField oscillation(const Grid2& g, const TrigProfile& p, int lambda, int axis) {
  if (axis != 1 && axis != 2) throw ParameterError("axis must be 1 or 2");
  const double m_real = p.frequency * lambda;
  const long m = std::lround(m_real);
  if (lambda < 1 || std::abs(m_real - static_cast<double>(m)) > 1e-9 || m < 1) {
    throw ParameterError("oscillation frequency must be a positive integer");
  }
  if (m > g.max_active_freq()) {
    std::ostringstream msg;
    msg << "oscillation frequency " << m << " exceeds the active budget " << g.max_active_freq() << " at n = " << g.n();
    throw ResolutionError(msg.str());
  }
  const int n = g.n();
  std::vector<double> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const long turns = (m * i) % n;
    line[static_cast<std::size_t>(i)] =
        p.offset + p.amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(turns) / n + p.phase);
  }
  std::vector<double> v(g.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      v[static_cast<std::size_t>(i) * n + j] = line[static_cast<std::size_t>(axis == 1 ? i : j)];
    }
  }
  const int mi = static_cast<int>(m);
  return ScalarField(g, std::move(v), axis == 1 ? Band{mi, 0} : Band{0, mi});
}

}  // namespace macorr
