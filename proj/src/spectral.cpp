#include "macorr/spectral.hpp"

#include <fftw3.h>
#include <malloc.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

namespace macorr {
namespace {

std::mutex g_registry_mutex;

class FftEngine {
 public:
  explicit FftEngine(int n) : n_(n) {
    const std::size_t real_count = static_cast<std::size_t>(n) * n;
    const std::size_t complex_count = static_cast<std::size_t>(n) * (n / 2 + 1);
    real_ = fftw_alloc_real(real_count);
    spec_ = fftw_alloc_complex(complex_count);
    fftw_plan_with_nthreads(thread_count());
    r2c_ = fftw_plan_dft_r2c_2d(n, n, real_, spec_, FFTW_ESTIMATE);
    c2r_ = fftw_plan_dft_c2r_2d(n, n, spec_, real_, FFTW_ESTIMATE);
  }
  ~FftEngine() {
    fftw_destroy_plan(r2c_);
    fftw_destroy_plan(c2r_);
    fftw_free(real_);
    fftw_free(spec_);
  }
  FftEngine(const FftEngine&) = delete;
  FftEngine& operator=(const FftEngine&) = delete;

  void forward(const double* in, Complex* out) {
    std::lock_guard lock(mutex_);
    const std::size_t real_count = static_cast<std::size_t>(n_) * n_;
    std::memcpy(real_, in, real_count * sizeof(double));
    fftw_execute(r2c_);
    const std::size_t complex_count = static_cast<std::size_t>(n_) * (n_ / 2 + 1);
    const double scale = 1.0 / static_cast<double>(real_count);
    for (std::size_t k = 0; k < complex_count; ++k) out[k] = Complex(spec_[k][0] * scale, spec_[k][1] * scale);
  }

  void backward(const Complex* in, double* out) {
    std::lock_guard lock(mutex_);
    const std::size_t complex_count = static_cast<std::size_t>(n_) * (n_ / 2 + 1);
    std::memcpy(spec_, in, complex_count * sizeof(fftw_complex));
    fftw_execute(c2r_);
    std::memcpy(out, real_, static_cast<std::size_t>(n_) * n_ * sizeof(double));
  }

  static FftEngine& get(int n) {
    static std::map<int, std::unique_ptr<FftEngine>> engines;
    std::lock_guard lock(g_registry_mutex);
    static bool threads_ready = false;
    if (!threads_ready) {
      fftw_init_threads();
      threads_ready = true;
    }
    auto& slot = engines[n];
    if (!slot) slot = std::make_unique<FftEngine>(n);
    return *slot;
  }

 private:
  int n_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan r2c_;
  fftw_plan c2r_;
  std::mutex mutex_;
};

}  // namespace

int thread_count() {
  static const int count = [] {
    const char* env = std::getenv("MACORR_THREADS");
    if (env == nullptr) return 1;
    const int v = std::atoi(env);
    return v >= 1 ? v : 1;
  }();
  return count;
}

void tune_allocator() {
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
}

Spectrum::Spectrum(const Grid2& g)
    : grid_(g), coeffs_(static_cast<std::size_t>(g.n()) * (g.n() / 2 + 1), Complex(0.0, 0.0)) {}

double Spectrum::tail_fraction(int budget) const {
  double total = 0.0;
  double tail = 0.0;
  for (int r = 0; r < rows(); ++r) {
    const bool row_out = std::abs(k1(r)) > budget;
    for (int c = 0; c < cols(); ++c) {
      const double e = weight(c) * std::norm(at(r, c));
      total += e;
      if (row_out || c > budget) tail += e;
    }
  }
  return total > 0.0 ? tail / total : 0.0;
}

Band Spectrum::measured_band(double rel_floor) const {
  double peak = 0.0;
  for (const Complex& z : coeffs_) peak = std::max(peak, std::abs(z));
  Band b{0, 0};
  if (peak == 0.0) return b;
  const double floor = rel_floor * peak;
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) {
      if (std::abs(at(r, c)) > floor) {
        b.k1 = std::max(b.k1, std::abs(k1(r)));
        b.k2 = std::max(b.k2, c);
      }
    }
  }
  return b;
}

void Spectrum::truncate(Band b) {
  for (int r = 0; r < rows(); ++r) {
    const bool row_out = std::abs(k1(r)) > b.k1;
    for (int c = 0; c < cols(); ++c) {
      if (row_out || c > b.k2) at(r, c) = Complex(0.0, 0.0);
    }
  }
}

Spectrum forward(const ScalarField& f) {
  Spectrum s(f.grid());
  FftEngine::get(f.n()).forward(f.values().data(), s.coeffs().data());
  return s;
}

ScalarField inverse(const Spectrum& s, Band band) {
  std::vector<double> out(s.grid().size());
  FftEngine::get(s.grid().n()).backward(s.coeffs().data(), out.data());
  return ScalarField(s.grid(), std::move(out), band);
}

bool is_resolved(const ScalarField& f) { return f.band().within(f.grid().max_active_freq()); }

ScalarField resolve(const ScalarField& f) {
  if (is_resolved(f)) return f;
  Spectrum s = forward(f);
  const int budget = f.grid().max_active_freq();
  const double tail = s.tail_fraction(budget);
  if (tail > kTailTolerance) {
    std::ostringstream msg;
    msg << "spectral tail above frequency " << budget << " carries energy fraction " << tail
        << " (tolerance " << kTailTolerance << ") at n = " << f.n();
    throw ResolutionError(msg.str());
  }
  s.truncate({budget, budget});
  const Band b = s.measured_band(1e-15);
  s.truncate(b);
  return inverse(s, b);
}

ScalarField sqrt_field(const ScalarField& f) {
  std::vector<double> v(f.values());
  for (double& x : v) {
    if (x < 0.0) throw CalibrationError("square root of a negative value", 0, x);
    x = std::sqrt(x);
  }
  const bool constant = f.band() == Band{0, 0};
  return resolve(ScalarField(f.grid(), std::move(v), constant ? Band{0, 0} : Band::full(f.grid())));
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid());
  std::optional<ScalarField> ta;
  std::optional<ScalarField> tb;
  const ScalarField* pa = &a;
  const ScalarField* pb = &b;
  if (!is_resolved(a)) pa = &ta.emplace(resolve(a));
  if (!is_resolved(b)) pb = &tb.emplace(resolve(b));
  const ScalarField& ra = *pa;
  const ScalarField& rb = *pb;
  std::vector<double> v(ra.values());
  const std::vector<double>& w = rb.values();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] *= w[k];
  ScalarField out(a.grid(), std::move(v), sum(ra.band(), rb.band()));
  return is_resolved(out) ? out : resolve(out);
}

}  // namespace macorr
