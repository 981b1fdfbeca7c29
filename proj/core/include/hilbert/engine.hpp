#pragma once

// Counting normal words (words with no forbidden factor) three ways:
// explicit enumeration, dynamic programming over a factor automaton, and an
// exact rational generating function for finite presentations.

#include <hilbert/monoid.hpp>
#include <hilbert/powseries.hpp>
#include <hilbert/presentations.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hilbert {

/// Aho-Corasick automaton of a forbidden-word set. States are trie nodes;
/// a state is dead when its path, or any suffix of it, is a forbidden word.
/// Live states carry a transition for every letter; dead states carry none.
class FactorAutomaton {
 public:
  using State = std::uint32_t;
  static constexpr State kNone = UINT32_MAX;

  std::size_t state_count() const noexcept { return dead_.size(); }
  std::size_t live_count() const noexcept { return live_count_; }
  unsigned alphabet_size() const noexcept { return sigma_; }
  State start() const noexcept { return 0; }
  bool is_dead(State s) const { return dead_.at(s) != 0; }
  /// Successor of a live state; may be a dead state.
  State next(State s, Letter letter) const;
  /// Live states in breadth-first (trie) order, start first.
  std::vector<State> live_states() const;

 private:
  friend FactorAutomaton build_automaton(std::span<const Word> words, unsigned alphabet_size,
                                         std::size_t max_states);
  unsigned sigma_ = 1;
  std::size_t live_count_ = 0;
  std::vector<State> delta_;  // state * sigma + letter
  std::vector<std::uint8_t> dead_;
};

inline constexpr std::size_t kDefaultMaxStates = 20'000'000;

/// Throws DegenerateError when the list contains the empty word and
/// SizeGuardError when the trie could exceed `max_states` nodes.
FactorAutomaton build_automaton(std::span<const Word> words, unsigned alphabet_size,
                                std::size_t max_states = kDefaultMaxStates);

enum class CountMethod { kBruteForce, kAutomaton };

std::string to_string(CountMethod m);

struct CountReport {
  IntSeries dims;
  CountMethod method;
  /// Largest degree of forbidden words consulted.
  std::size_t forbidden_degree;
};

inline constexpr double kBruteForceLimit = 1e8;

/// Enumerates every normal word of degree <= N depth-first, checking the
/// suffixes of each extension against a reversed trie of forbidden words.
/// Throws SizeGuardError when alphabet_size^N exceeds `limit`.
CountReport count_bruteforce(const Presentation& pres, std::size_t order,
                             double limit = kBruteForceLimit);

/// Degree-major path counting over the live states of the automaton built
/// from all forbidden words of degree <= N.
CountReport count_automaton(const Presentation& pres, std::size_t order,
                            std::size_t max_states = kDefaultMaxStates);

inline constexpr std::size_t kMaxRationalizeStates = 400;

/// Exact Hilbert series of a finite presentation: with M the live-state
/// transition-count matrix, solves (I - tM^T) x = e_start by fraction-free
/// elimination and sums the entries of x. A presentation forbidding the
/// empty word yields 0.
RationalFn rationalize(const Presentation& pres, std::size_t max_states = kMaxRationalizeStates);

}  // namespace hilbert
