#include "macorr/grid.hpp"

#include <string>

namespace macorr {

Grid2::Grid2(int n) : n_(n) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw ParameterError("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
}

void require_same_grid(const Grid2& a, const Grid2& b) {
  if (!(a == b)) {
    throw ParameterError("grid mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

}  // namespace macorr
