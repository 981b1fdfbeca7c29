#pragma once

#include <hilbert/powseries.hpp>

#include <cstddef>
#include <vector>

namespace hilbert {

/// Dense square matrix over Z[t], row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  IntPoly& operator()(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
  const IntPoly& operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }

 private:
  std::size_t n_;
  std::vector<IntPoly> cells_;
};

/// Cramer form of the solution of A x = b: x_i = numerators[i] / determinant.
struct FractionFreeSolution {
  std::vector<IntPoly> numerators;
  IntPoly determinant;
};

/// Bareiss fraction-free elimination over Z[t] followed by fraction-free back
/// substitution. Every division is exact by Sylvester's identity, so no
/// rational functions appear. Throws NonInvertibleError when A is singular.
FractionFreeSolution solve_fraction_free(PolyMatrix a, std::vector<IntPoly> b);

}  // namespace hilbert
