#pragma once

#include "macorr/fields.hpp"

namespace macorr {

/// t ↦ offset + α·sin(βt + φ).
struct TrigProfile {
  double amplitude = 1.0;
  double frequency = 1.0;
  double phase = 0.0;
  double offset = 0.0;

  double operator()(double t) const;
  bool zero_mean() const { return offset == 0.0; }
  /// d/dt applied `times` times (the offset drops).
  TrigProfile derivative(int times = 1) const;

  /// Γ(t) = 2 sin t.
  static TrigProfile gamma();
  /// Γ̄(t) = ½ cos 2t.
  static TrigProfile gamma_bar();
  /// Γ̄̄(t) = −½ sin 2t.
  static TrigProfile gamma_bar_bar();
  /// Γ̃(t) = 1 − ½ cos 2t.
  static TrigProfile gamma_tilde();
  /// Γ̃ − 1 = −½ cos 2t.
  static TrigProfile gamma_tilde_shifted();
};

/// Closed-form primitive iterated `times` times; requires a zero-mean profile.
TrigProfile antiderivative(const TrigProfile& p, int times);

/// Samples p(λ x_axis) exactly: λβ must be an integer within the frequency budget.
ScalarField oscillation(const Grid2& g, const TrigProfile& p, int lambda, int axis);

}  // namespace macorr
