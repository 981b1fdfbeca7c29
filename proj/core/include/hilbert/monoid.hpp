#pragma once

// Words over X_d and X_d + {y}, commutative monomials over X_d, and the
// degree-wise choice of the monomial sets A_n that drive the constructions.

#include <hilbert/integer.hpp>
#include <hilbert/powseries.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hilbert {

/// x_i is stored as i-1; the distinguished letter y is stored as d.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr unsigned kMaxAlphabet = 64;

/// x_1..x_d, optionally followed by y.
struct Alphabet {
  unsigned d = 1;
  bool has_y = false;

  unsigned size() const noexcept { return d + (has_y ? 1U : 0U); }
  Letter y() const noexcept { return static_cast<Letter>(d); }
  bool is_y(Letter l) const noexcept { return has_y && l == d; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Whitespace-separated letters, e.g. `x1 x2 y x1`; `1` denotes the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& word, const Alphabet& alphabet);

/// True when `needle` occurs as a contiguous factor of `haystack`.
bool contains_factor(const Word& haystack, const Word& needle);

/// All d^n y-free words of degree n in lexicographic order, x_1 < ... < x_d.
std::vector<Word> enumerate_words(unsigned d, std::size_t n);

/// The first `count` words of enumerate_words(d, n), generated without
/// materializing the rest.
std::vector<Word> first_words(unsigned d, std::size_t n, std::size_t count);

/// Exponent vector of a monomial in the commuting variables x_1..x_d.
struct CommMonomial {
  std::vector<unsigned> exponents;

  std::size_t degree() const noexcept;
  friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;
};

/// All C(n+d-1, d-1) exponent vectors of total degree n, lexicographically
/// ascending, e.g. (0,2), (1,1), (2,0).
std::vector<CommMonomial> enumerate_comm(unsigned d, std::size_t n);

/// Letter counts of a y-free word.
CommMonomial commutative_image(const Word& word, unsigned d);

/// Number of degree-n monomials: d^n, or C(n+d-1, d-1) when commutative.
Integer capacity(unsigned d, std::size_t n, bool commutative);

/// Position of a word inside enumerate_words(d, |w|).
Integer lex_rank(const Word& word, unsigned d);
/// Position of a monomial inside enumerate_comm(d, degree).
Integer lex_rank(const CommMonomial& m);

/// The sets A_0..A_N with |A_n| = a_n, each A_n being the lexicographically
/// first a_n monomials of degree n. Construct through realize_A.
class ASetRealization {
 public:
  unsigned d() const noexcept { return d_; }
  bool commutative() const noexcept { return commutative_; }
  std::size_t order() const noexcept { return sizes_.order(); }
  const IntSeries& sizes() const noexcept { return sizes_; }
  const Integer& size(std::size_t n) const { return sizes_[n]; }
  bool contains_empty() const { return sizes_[0] == 1; }

  /// Membership of a y-free word; for commutative realizations the word is
  /// tested through its commutative image. Degrees above order() are
  /// rejected with InvalidSpecError.
  bool contains(const Word& word) const;
  bool contains(const CommMonomial& monomial) const;

  /// Members of A_n as words (non-commutative realizations).
  std::vector<Word> words(std::size_t n) const;
  /// Members of A_n as exponent vectors (commutative realizations).
  std::vector<CommMonomial> monomials(std::size_t n) const;

 private:
  friend ASetRealization realize_A(const IntSeries& a, unsigned d, bool commutative);
  ASetRealization(IntSeries sizes, unsigned d, bool commutative)
      : sizes_(std::move(sizes)), d_(d), commutative_(commutative) {}

  IntSeries sizes_;
  unsigned d_;
  bool commutative_;
};

/// Throws CapacityError naming the first degree with a_n above capacity(d, n).
ASetRealization realize_A(const IntSeries& a, unsigned d, bool commutative);

/// Least d >= 1 for which realize_A(a, d, commutative) succeeds. Throws
/// CapacityError when a_0 > 1, which no alphabet can realize.
unsigned minimal_d(const IntSeries& a, bool commutative);

}  // namespace hilbert
