#pragma once

// Forbidden-word sets: explicit finite monomial presentations and the
// infinite families produced by the constructions, both exposed through
// forbidden(n), the minimal forbidden words of degree n.

#include <hilbert/monoid.hpp>
#include <hilbert/powseries.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hilbert {

enum class Variant {
  kTheorem1,     ///< monomial algebra, H = 1/(1-dt) + t/(1-dt)^2 + t^2 a/(1-dt)^p
  kCorollary12,  ///< graded algebra, symmetrized sides, t^2 a/((1-dt)^p (1-t)^{dq})
  kRemark13,     ///< monomial algebra with x_i y x_j killed
  kTheorem14,    ///< graded algebra with commuting x's, denominators (1-t)^{dp}
};

/// `theorem1`, `corollary12`, `remark13`, `theorem14`
std::string to_string(Variant v);
Variant parse_variant(std::string_view text);

/// True for the variants whose defining relations are all monomials.
constexpr bool is_monomial(Variant v) { return v == Variant::kTheorem1 || v == Variant::kRemark13; }

struct ConstructionSpec {
  Variant variant = Variant::kTheorem1;
  unsigned d = 1;
  unsigned p = 2;
  unsigned q = 0;  ///< kCorollary12 only.
  SeriesSpec base = zero_series();
};

/// Throws InvalidSpecError unless d >= 1, p <= 2, and q = 0 (or p + q <= 2
/// for kCorollary12).
void validate(const ConstructionSpec& spec);

std::string describe(const ConstructionSpec& spec);

/// How one side u_1 or u_2 of a two-y basis word u_1 y v y u_2 behaves.
enum class Side { kKilled, kSymmetrized, kFree };

/// Side behaviour left to right. Killed sides are assigned first, then
/// symmetrized ones, then free ones, so kTheorem1 with p = 1 kills u_1 and
/// kCorollary12 with p = q = 1 symmetrizes u_1. kTheorem14 reports its
/// non-killed sides as kSymmetrized (commuting x's). Not defined for
/// kRemark13.
std::pair<Side, Side> side_layout(const ConstructionSpec& spec);

/// The reduced degree-n slice of the forbidden set of a monomial variant.
/// Words never contain another forbidden word of smaller degree as a factor.
/// Throws UnsupportedVariantError for kCorollary12 and kTheorem14.
std::vector<Word> construction_forbidden(const ConstructionSpec& spec, const ASetRealization& a,
                                         std::size_t n);

/// Either an explicit finite word list or a construction-driven family.
class Presentation {
 public:
  /// Finite presentation; the list is reduced (duplicates and words that
  /// contain another listed word as a factor are dropped).
  static Presentation finite(Alphabet alphabet, std::vector<Word> words);
  /// Monomial construction over X_d + {y}; forbidden(n) is available for
  /// n <= a.order() + 2.
  static Presentation structured(ConstructionSpec spec, ASetRealization a);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  bool is_finite() const noexcept { return std::holds_alternative<FiniteWords>(kind_); }

  /// Minimal forbidden words of degree n, in lexicographic order.
  std::vector<Word> forbidden(std::size_t n) const;
  /// forbidden(0) through forbidden(n), concatenated.
  std::vector<Word> forbidden_up_to(std::size_t n) const;

  /// The reduced word list of a finite presentation.
  const std::vector<Word>& words() const;
  /// Words dropped while reducing a finite presentation.
  const std::vector<Word>& redundant() const;
  /// Construction behind a structured presentation, nullptr otherwise.
  const ConstructionSpec* construction() const noexcept;
  /// Largest degree forbidden() can answer, nullopt when unbounded.
  std::optional<std::size_t> max_degree() const;

 private:
  struct FiniteWords {
    std::vector<Word> words;
    std::vector<Word> redundant;
  };
  struct Structured {
    ConstructionSpec spec;
    ASetRealization a;
  };

  Presentation(Alphabet alphabet, std::variant<FiniteWords, Structured> kind)
      : alphabet_(alphabet), kind_(std::move(kind)) {}

  Alphabet alphabet_;
  std::variant<FiniteWords, Structured> kind_;
};

/// Structured presentation of a monomial construction, with A realized up to
/// degree `order` (enough for counting through degree order + 2).
Presentation make_presentation(const ConstructionSpec& spec, std::size_t order);

/// Presentation file: header `alphabet d=<d> y=<0|1>`, then one forbidden
/// word per line; blank lines and `#` comments are ignored.
/// Throws ParseError with the offending line number.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

std::string format_presentation(const Presentation& p);

}  // namespace hilbert
