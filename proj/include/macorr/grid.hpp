#pragma once

#include <array>
#include <numbers>

#include "macorr/errors.hpp"

namespace macorr {

/// Uniform n×n grid on the torus [0,2π)².
class Grid2 {
 public:
  explicit Grid2(int n);

  int n() const { return n_; }
  double spacing() const { return 2.0 * std::numbers::pi / n_; }
  /// Largest per-axis frequency treated as alias-free.
  int max_active_freq() const { return n_ / 4; }
  int nyquist() const { return n_ / 2; }
  double coord(int i) const { return spacing() * i; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  bool operator==(const Grid2& o) const { return n_ == o.n_; }

 private:
  int n_;
};

/// Per-axis bound on the Fourier support: coefficients with |k_a| > band[a] vanish.
struct Band {
  int k1 = 0;
  int k2 = 0;

  static Band full(const Grid2& g) { return {g.nyquist(), g.nyquist()}; }
  int max() const { return k1 > k2 ? k1 : k2; }
  bool within(int budget) const { return k1 <= budget && k2 <= budget; }
  bool operator==(const Band&) const = default;
};

inline Band join(Band a, Band b) { return {a.k1 > b.k1 ? a.k1 : b.k1, a.k2 > b.k2 ? a.k2 : b.k2}; }
inline Band sum(Band a, Band b) { return {a.k1 + b.k1, a.k2 + b.k2}; }

void require_same_grid(const Grid2& a, const Grid2& b);

}  // namespace macorr
