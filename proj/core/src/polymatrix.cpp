#include <hilbert/errors.hpp>
#include <hilbert/polymatrix.hpp>

#include <utility>

namespace hilbert {

FractionFreeSolution solve_fraction_free(PolyMatrix a, std::vector<IntPoly> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InvalidSpecError("right-hand side has the wrong length");
  if (n == 0) return {{}, IntPoly::constant(1)};

  IntPoly previous = IntPoly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Pivot: lowest-degree nonzero entry in column k keeps intermediate
    // degrees small; for I - tM every leading minor has constant term 1.
    std::size_t pivot_row = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (pivot_row == n || a(i, k).degree() < a(pivot_row, k).degree()) pivot_row = i;
    }
    if (pivot_row == n) throw NonInvertibleError("singular matrix in fraction-free solve");
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot_row, j));
      std::swap(b[k], b[pivot_row]);
      sign = -sign;
    }
    const IntPoly pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const IntPoly factor = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_divide(pivot * a(i, j) - factor * a(k, j), previous);
      }
      b[i] = exact_divide(pivot * b[i] - factor * b[k], previous);
      a(i, k) = IntPoly{};
    }
    previous = pivot;
  }

  // a(n-1, n-1) is det(A) up to the row-swap sign; a(i, i) divides the
  // numerator at every step because det(A) x_i is a polynomial.
  const IntPoly det = a(n - 1, n - 1);
  std::vector<IntPoly> numerators(n);
  for (std::size_t i = n; i-- > 0;) {
    IntPoly acc = det * b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * numerators[j];
    numerators[i] = exact_divide(acc, a(i, i));
  }
  if (sign < 0) {
    for (auto& x : numerators) x = -x;
    return {std::move(numerators), -det};
  }
  return {std::move(numerators), det};
}

}  // namespace hilbert
