#include <hilbert/errors.hpp>
#include <hilbert/monoid.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace hilbert {

namespace {

void check_alphabet(unsigned d) {
  if (d < 1 || d > kMaxAlphabet) {
    throw InvalidSpecError("alphabet size d must lie in 1.." + std::to_string(kMaxAlphabet));
  }
}

// Odometer step over words in lexicographic order; false after the last word.
bool advance(Word& w, unsigned d) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] + 1U < d) {
      ++w[i];
      return true;
    }
    w[i] = 0;
  }
  return false;
}

void enumerate_comm_into(unsigned d, std::size_t remaining, std::vector<unsigned>& prefix,
                         std::vector<CommMonomial>& out) {
  if (prefix.size() + 1 == d) {
    prefix.push_back(static_cast<unsigned>(remaining));
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  for (std::size_t e = 0; e <= remaining; ++e) {
    prefix.push_back(static_cast<unsigned>(e));
    enumerate_comm_into(d, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

std::size_t to_count(const Integer& value, std::size_t n) {
  if (!value.fits_ulong_p() || value.get_ui() > std::numeric_limits<std::size_t>::max() / 64) {
    throw SizeGuardError("A_" + std::to_string(n) + " has " + value.get_str() +
                         " members, too many to list");
  }
  return static_cast<std::size_t>(value.get_ui());
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::string token;
  Word word;
  bool saw_one = false;
  while (in >> token) {
    if (token == "1") {
      saw_one = true;
      continue;
    }
    if (token == "y") {
      if (!alphabet.has_y) throw ParseError(0, "letter 'y' is not in the alphabet");
      word.push_back(alphabet.y());
      continue;
    }
    if (token.size() < 2 || token[0] != 'x' ||
        !std::all_of(token.begin() + 1, token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError(0, "unknown letter '" + token + "'");
    }
    const unsigned long index = std::stoul(token.substr(1));
    if (index < 1 || index > alphabet.d) {
      throw ParseError(0, "letter '" + token + "' is out of range x1..x" + std::to_string(alphabet.d));
    }
    word.push_back(static_cast<Letter>(index - 1));
  }
  if (saw_one && !word.empty()) throw ParseError(0, "'1' (empty word) cannot be combined with letters");
  return word;
}

std::string format_word(const Word& word, const Alphabet& alphabet) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    if (alphabet.is_y(word[i])) {
      out += 'y';
    } else {
      out += 'x' + std::to_string(word[i] + 1U);
    }
  }
  return out;
}

bool contains_factor(const Word& haystack, const Word& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

std::vector<Word> enumerate_words(unsigned d, std::size_t n) {
  check_alphabet(d);
  return first_words(d, n, std::numeric_limits<std::size_t>::max());
}

std::vector<Word> first_words(unsigned d, std::size_t n, std::size_t count) {
  check_alphabet(d);
  std::vector<Word> out;
  if (count == 0) return out;
  Word w(n, 0);
  do {
    out.push_back(w);
  } while (out.size() < count && advance(w, d));
  return out;
}

std::size_t CommMonomial::degree() const noexcept {
  std::size_t total = 0;
  for (unsigned e : exponents) total += e;
  return total;
}

std::vector<CommMonomial> enumerate_comm(unsigned d, std::size_t n) {
  check_alphabet(d);
  std::vector<CommMonomial> out;
  std::vector<unsigned> prefix;
  enumerate_comm_into(d, n, prefix, out);
  return out;
}

CommMonomial commutative_image(const Word& word, unsigned d) {
  CommMonomial m{std::vector<unsigned>(d, 0)};
  for (Letter l : word) {
    if (l >= d) throw InvalidSpecError("commutative image of a word containing y");
    ++m.exponents[l];
  }
  return m;
}

Integer capacity(unsigned d, std::size_t n, bool commutative) {
  if (commutative) return binomial(n + d - 1, d - 1);
  return pow_integer(Integer(d), n);
}

Integer lex_rank(const Word& word, unsigned d) {
  Integer rank = 0;
  for (Letter l : word) rank = rank * d + l;
  return rank;
}

Integer lex_rank(const CommMonomial& m) {
  // Count exponent vectors of the same degree that agree on a prefix and are
  // smaller at the next position.
  const std::size_t d = m.exponents.size();
  std::size_t remaining = m.degree();
  Integer rank = 0;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const std::size_t vars_after = d - i - 1;
    for (unsigned v = 0; v < m.exponents[i]; ++v) {
      const std::size_t rest = remaining - v;
      rank += binomial(rest + vars_after - 1, vars_after - 1);
    }
    remaining -= m.exponents[i];
  }
  return rank;
}

bool ASetRealization::contains(const Word& word) const {
  if (commutative_) return contains(commutative_image(word, d_));
  if (word.size() > order()) {
    throw InvalidSpecError("A is realized only up to degree " + std::to_string(order()));
  }
  for (Letter l : word) {
    if (l >= d_) throw InvalidSpecError("A contains y-free words only");
  }
  const Integer& limit = sizes_[word.size()];
  if (sgn(limit) == 0) return false;
  return lex_rank(word, d_) < limit;
}

bool ASetRealization::contains(const CommMonomial& monomial) const {
  if (monomial.exponents.size() != d_) throw InvalidSpecError("monomial has the wrong number of variables");
  const std::size_t n = monomial.degree();
  if (n > order()) throw InvalidSpecError("A is realized only up to degree " + std::to_string(order()));
  const Integer& limit = sizes_[n];
  if (sgn(limit) == 0) return false;
  return lex_rank(monomial) < limit;
}

std::vector<Word> ASetRealization::words(std::size_t n) const {
  if (commutative_) throw InvalidSpecError("commutative realization: use monomials()");
  return first_words(d_, n, to_count(sizes_[n], n));
}

std::vector<CommMonomial> ASetRealization::monomials(std::size_t n) const {
  if (!commutative_) throw InvalidSpecError("non-commutative realization: use words()");
  auto all = enumerate_comm(d_, n);
  all.resize(std::min(all.size(), to_count(sizes_[n], n)));
  return all;
}

ASetRealization realize_A(const IntSeries& a, unsigned d, bool commutative) {
  check_alphabet(d);
  if (!a.all_nonnegative()) throw InvalidSpecError("the prescribed series has a negative coefficient");
  for (std::size_t n = 0; n <= a.order(); ++n) {
    const Integer bound = capacity(d, n, commutative);
    if (a[n] > bound) throw CapacityError(n, a[n].get_str(), bound.get_str());
  }
  return ASetRealization(a, d, commutative);
}

unsigned minimal_d(const IntSeries& a, bool commutative) {
  if (!a.all_nonnegative()) throw InvalidSpecError("the prescribed series has a negative coefficient");
  if (a[0] > 1) throw CapacityError(0, a[0].get_str(), "1");
  unsigned best = 1;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    if (capacity(best, n, commutative) >= a[n]) continue;
    if (!commutative) {
      // Smallest d with d^n >= a_n: ceiling of the n-th root.
      Integer root;
      const bool exact = mpz_root(root.get_mpz_t(), a[n].get_mpz_t(), n) != 0;
      if (!exact) ++root;
      if (!root.fits_uint_p() || root.get_ui() > kMaxAlphabet) {
        throw CapacityError(n, a[n].get_str(), std::to_string(kMaxAlphabet) + "^" + std::to_string(n));
      }
      best = std::max(best, static_cast<unsigned>(root.get_ui()));
    } else {
      while (capacity(best, n, true) < a[n]) {
        if (++best > kMaxAlphabet) {
          throw CapacityError(n, a[n].get_str(), "the capacity of " + std::to_string(kMaxAlphabet) + " variables");
        }
      }
    }
  }
  return best;
}

}  // namespace hilbert
