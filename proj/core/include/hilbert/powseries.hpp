#pragma once

// Exact truncated power series and polynomials over the integers, rational
// functions in canonical form, and generators for the concrete series used as
// prescribed Hilbert-series inputs.

#include <hilbert/integer.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hilbert {

/// Polynomial with integer coefficients, lowest degree first. The stored
/// coefficient vector never ends in a zero, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  /// (1 - c t)^k
  static IntPoly one_minus_power(long c, unsigned k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^k; zero past the degree.
  Integer operator[](std::size_t k) const;
  /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
  Integer content() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  IntPoly pow(unsigned exponent) const;
  /// Value at an integer point.
  Integer evaluate(const Integer& x) const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b in Z[t]; throws NonIntegralError when b does not divide a.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// Monic-normalized gcd over Q, returned as a primitive integer polynomial
/// with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Human-readable form such as `1 - t - t^2` or `3 + 2t^4`.
std::string to_string(const IntPoly& p);
/// Inverse of to_string; also accepts `*` between coefficient and `t` and an
/// optional pair of surrounding parentheses.
IntPoly parse_poly(std::string_view text);

/// Coefficients of degrees 0..N of a power series, N inclusive.
class IntSeries {
 public:
  /// Zero series truncated at `order`.
  explicit IntSeries(std::size_t order);
  /// Series whose truncation order is coeffs.size() - 1; coeffs must be non-empty.
  explicit IntSeries(std::vector<Integer> coeffs);
  IntSeries(std::initializer_list<long> coeffs);

  static IntSeries one(std::size_t order);
  static IntSeries from_poly(const IntPoly& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }
  Integer& operator[](std::size_t k) { return coeffs_.at(k); }

  bool all_nonnegative() const;
  /// First `order + 1` coefficients; order must not exceed this->order().
  IntSeries truncate(std::size_t order) const;
  /// Multiplication by t^k, truncated at the same order.
  IntSeries shifted(std::size_t k) const;

  friend bool operator==(const IntSeries& a, const IntSeries& b) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Coefficient-wise sum. Throws OrderMismatchError on different truncation orders.
IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
/// Cauchy product truncated at the common order.
IntSeries mul(const IntSeries& a, const IntSeries& b);

inline IntSeries operator+(const IntSeries& a, const IntSeries& b) { return add(a, b); }
inline IntSeries operator-(const IntSeries& a, const IntSeries& b) { return sub(a, b); }
inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return mul(a, b); }

/// First N+1 coefficients of num/den. The constant term of den must be +1 or -1.
IntSeries expand_rational(const IntPoly& num, const IntPoly& den, std::size_t order);

/// num/den with gcd(num, den) = 1, primitive integer denominator and den(0) = 1.
struct RationalFn {
  IntPoly numerator;
  IntPoly denominator;

  friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

/// Reduce by the gcd over Q, then scale so the denominator is a primitive
/// integer polynomial with constant term 1.
///
/// Throws NonInvertibleError for a zero denominator or a denominator with zero
/// constant term, and NonIntegralError when the reduced fraction has no
/// integer power-series expansion (e.g. 1/(2+t)).
RationalFn normalize_rational(const IntPoly& num, const IntPoly& den);

IntSeries expand(const RationalFn& f, std::size_t order);

/// `(1 + t) / (1 - t - t^2)`
std::string to_string(const RationalFn& f);

// ---------------------------------------------------------------------------
// Series zoo

namespace series {

/// num/den expanded as a power series; den(0) must be a unit.
struct RationalSeries {
  IntPoly numerator;
  IntPoly denominator;
};

/// prod_{n>=1} 1/(1-t^n): the partition numbers.
struct Partition {};

/// prod_{n>=1} 1/(1-t^n)^{b_n}; exponents[0] holds b_1, missing b_n are 0.
struct EulerProduct {
  std::vector<std::uint64_t> exponents;
};

/// Ones at the degrees n! for n >= 1.
struct LacunaryFactorial {};

/// Ones at the degrees base^n for n >= 0; base >= 2.
struct LacunaryPowers {
  std::uint64_t base = 2;
};

/// a_n = alpha(n) for a multiplicative alpha, a_0 = 0.
///
/// By default the i-th prime maps to the (i+1)-th prime and alpha is
/// completely multiplicative. `prime_images` overrides alpha(p) for single
/// primes; `prime_power_values` pins alpha(p^k) for explicit prime powers
/// (k >= 1) and takes precedence.
struct Multiplicative {
  std::map<std::uint64_t, Integer> prime_images;
  std::map<std::uint64_t, Integer> prime_power_values;
};

/// Binary planar rooted trees counted by leaves: T = t + T^2.
struct CatalanTrees {};

/// Coefficients read from a file.
struct Explicit {
  std::vector<Integer> coeffs;
  std::string source;
};

}  // namespace series

using SeriesSpec =
    std::variant<series::RationalSeries, series::Partition, series::EulerProduct,
                 series::LacunaryFactorial, series::LacunaryPowers, series::Multiplicative,
                 series::CatalanTrees, series::Explicit>;

/// The zero series, as RATIONAL(0, 1).
SeriesSpec zero_series();

/// Exact coefficients 0..N of the series described by `spec`.
/// Throws InvalidSpecError for out-of-range parameters and DataShortageError
/// when an explicit coefficient list is shorter than N+1.
IntSeries generate(const SeriesSpec& spec, std::size_t order);

/// Parses the textual series names: `partition`, `lacunary-factorial`,
/// `lacunary-powers:<d>`, `multiplicative:shift`, `catalan`,
/// `rational:<num>/<den>`, `euler:<b1>,<b2>,...`, `file:<path>`, `zero`.
SeriesSpec parse_series_spec(std::string_view text);

/// Canonical text of a spec, suitable for parse_series_spec (explicit
/// coefficient lists print as `file:<source>`).
std::string describe(const SeriesSpec& spec);

/// Coefficient file: one decimal integer per line, line k is the degree k-1
/// coefficient, blank lines and `#` comments ignored.
std::vector<Integer> read_coefficients(std::istream& in);
std::vector<Integer> load_coefficients(const std::filesystem::path& path);

}  // namespace hilbert
