#pragma once

#include <complex>
#include <vector>

#include "macorr/fields.hpp"

namespace macorr {

using Complex = std::complex<double>;

/// Energy fraction above the budget tolerated before a truncation is refused.
inline constexpr double kTailTolerance = 1e-8;

/// Normalized half-spectrum: row r ↔ k1 = wrap(r), column c ↔ k2 = c ∈ [0, n/2].
class Spectrum {
 public:
  explicit Spectrum(const Grid2& g);

  const Grid2& grid() const { return grid_; }
  int rows() const { return grid_.n(); }
  int cols() const { return grid_.n() / 2 + 1; }
  Complex& at(int r, int c) { return coeffs_[static_cast<std::size_t>(r) * cols() + c]; }
  const Complex& at(int r, int c) const { return coeffs_[static_cast<std::size_t>(r) * cols() + c]; }
  std::vector<Complex>& coeffs() { return coeffs_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Signed frequency of row r.
  int k1(int r) const { return r <= grid_.n() / 2 ? r : r - grid_.n(); }
  /// Multiplicity of column c in the full spectrum (real-field symmetry).
  double weight(int c) const { return (c == 0 || c == grid_.n() / 2) ? 1.0 : 2.0; }

  /// Energy (Parseval sum of |c_k|²) with |k1| or k2 above the budget, over total energy.
  double tail_fraction(int budget) const;
  /// Smallest band containing every coefficient above rel_floor·max|c|.
  Band measured_band(double rel_floor) const;
  /// Zeroes every coefficient outside the band.
  void truncate(Band b);

 private:
  Grid2 grid_;
  std::vector<Complex> coeffs_;
};

Spectrum forward(const ScalarField& f);
ScalarField inverse(const Spectrum& s, Band band);

/// Number of FFT threads, read once from MACORR_THREADS (default 1).
int thread_count();

/// Keeps large field buffers in the process heap between operations (glibc).
void tune_allocator();

/// Returns f with its band inside the budget, truncating a negligible tail;
/// throws ResolutionError when the tail energy fraction exceeds kTailTolerance.
ScalarField resolve(const ScalarField& f);
bool is_resolved(const ScalarField& f);

/// Pointwise square root of a non-negative field, resolved.
ScalarField sqrt_field(const ScalarField& f);

}  // namespace macorr
