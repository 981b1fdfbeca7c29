#include <hilbert/engine.hpp>
#include <hilbert/errors.hpp>
#include <hilbert/polymatrix.hpp>

#include <algorithm>
#include <cmath>
#include <deque>

namespace hilbert {

namespace {

bool has_empty_word(const std::vector<Word>& words) {
  return std::any_of(words.begin(), words.end(), [](const Word& w) { return w.empty(); });
}

std::vector<Word> forbidden_for_counting(const Presentation& pres, std::size_t order) {
  if (auto limit = pres.max_degree(); limit && order > *limit) {
    throw InvalidSpecError("presentation is enumerable only to degree " + std::to_string(*limit));
  }
  return pres.forbidden_up_to(order);
}

// Trie over reversed forbidden words; matching walks a word backwards from
// its last letter.
class SuffixTrie {
 public:
  SuffixTrie(const std::vector<Word>& words, unsigned sigma) : sigma_(sigma) {
    add_node();
    for (const Word& w : words) {
      std::uint32_t node = 0;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        std::uint32_t& child = children_[node * sigma_ + *it];
        if (child == 0) {
          const auto fresh = add_node();
          children_[node * sigma_ + *it] = fresh;
          node = fresh;
        } else {
          node = child;
        }
      }
      terminal_[node] = 1;
    }
  }

  // True when some forbidden word is a suffix of word[0..length).
  bool has_forbidden_suffix(const Word& word, std::size_t length) const {
    std::uint32_t node = 0;
    for (std::size_t i = length; i-- > 0;) {
      node = children_[node * sigma_ + word[i]];
      if (node == 0) return false;
      if (terminal_[node] != 0) return true;
    }
    return false;
  }

 private:
  std::uint32_t add_node() {
    children_.resize(children_.size() + sigma_, 0);
    terminal_.push_back(0);
    return static_cast<std::uint32_t>(terminal_.size() - 1);
  }

  unsigned sigma_;
  std::vector<std::uint32_t> children_;
  std::vector<std::uint8_t> terminal_;
};

void enumerate_normal(const SuffixTrie& trie, unsigned sigma, std::size_t order, Word& word,
                      std::vector<Integer>& counts) {
  const std::size_t depth = word.size();
  ++counts[depth];
  if (depth == order) return;
  word.push_back(0);
  for (unsigned c = 0; c < sigma; ++c) {
    word.back() = static_cast<Letter>(c);
    if (!trie.has_forbidden_suffix(word, word.size())) enumerate_normal(trie, sigma, order, word, counts);
  }
  word.pop_back();
}

}  // namespace

FactorAutomaton::State FactorAutomaton::next(State s, Letter letter) const {
  if (is_dead(s)) throw InvalidSpecError("dead states have no transitions");
  return delta_.at(static_cast<std::size_t>(s) * sigma_ + letter);
}

std::vector<FactorAutomaton::State> FactorAutomaton::live_states() const {
  std::vector<State> out;
  out.reserve(live_count_);
  for (State s = 0; s < dead_.size(); ++s) {
    if (dead_[s] == 0) out.push_back(s);
  }
  return out;
}

FactorAutomaton build_automaton(std::span<const Word> words, unsigned alphabet_size, std::size_t max_states) {
  using State = FactorAutomaton::State;
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) throw InvalidSpecError("alphabet size out of range");
  if (std::any_of(words.begin(), words.end(), [](const Word& w) { return w.empty(); })) {
    throw DegenerateError("the empty word is forbidden, so every word is");
  }

  FactorAutomaton fa;
  fa.sigma_ = alphabet_size;
  std::vector<std::uint8_t> terminal;
  const auto add_node = [&]() -> State {
    if (terminal.size() >= max_states) {
      throw SizeGuardError("factor automaton exceeds " + std::to_string(max_states) +
                           " states; lower the degree or use a smaller alphabet");
    }
    fa.delta_.resize(fa.delta_.size() + alphabet_size, FactorAutomaton::kNone);
    terminal.push_back(0);
    return static_cast<State>(terminal.size() - 1);
  };
  add_node();

  for (const Word& w : words) {
    State node = 0;
    bool shadowed = false;
    for (Letter l : w) {
      if (l >= alphabet_size) throw InvalidSpecError("forbidden word uses a letter outside the alphabet");
      if (terminal[node] != 0) {
        shadowed = true;  // a prefix is already forbidden
        break;
      }
      State child = fa.delta_[static_cast<std::size_t>(node) * alphabet_size + l];
      if (child == FactorAutomaton::kNone) {
        child = add_node();
        fa.delta_[static_cast<std::size_t>(node) * alphabet_size + l] = child;
      }
      node = child;
    }
    if (!shadowed) terminal[node] = 1;
  }

  // Breadth-first completion of goto and failure links.
  const std::size_t n = terminal.size();
  std::vector<State> fail(n, 0);
  fa.dead_.assign(n, 0);
  fa.dead_[0] = terminal[0];
  std::deque<State> queue{0};
  while (!queue.empty()) {
    const State u = queue.front();
    queue.pop_front();
    for (unsigned c = 0; c < alphabet_size; ++c) {
      const std::size_t slot = static_cast<std::size_t>(u) * alphabet_size + c;
      const State child = fa.delta_[slot];
      const State fallback =
          u == 0 ? 0 : fa.delta_[static_cast<std::size_t>(fail[u]) * alphabet_size + c];
      if (child != FactorAutomaton::kNone) {
        fail[child] = fallback;
        fa.dead_[child] = static_cast<std::uint8_t>(terminal[child] | fa.dead_[u] | fa.dead_[fallback]);
        queue.push_back(child);
      } else {
        fa.delta_[slot] = fallback;
      }
    }
  }
  for (State s = 0; s < n; ++s) {
    if (fa.dead_[s] == 0) {
      ++fa.live_count_;
    } else {
      std::fill_n(fa.delta_.begin() + static_cast<long>(s) * alphabet_size, alphabet_size, FactorAutomaton::kNone);
    }
  }
  return fa;
}

std::string to_string(CountMethod m) {
  return m == CountMethod::kBruteForce ? "bruteforce" : "automaton";
}

CountReport count_bruteforce(const Presentation& pres, std::size_t order, double limit) {
  const unsigned sigma = pres.alphabet().size();
  const double work = std::pow(static_cast<double>(sigma), static_cast<double>(order));
  if (work > limit) {
    throw SizeGuardError("brute force over " + std::to_string(sigma) + "^" + std::to_string(order) +
                         " words exceeds the guard; use the automaton method");
  }
  const auto words = forbidden_for_counting(pres, order);
  std::vector<Integer> counts(order + 1);
  if (!has_empty_word(words)) {
    const SuffixTrie trie(words, sigma);
    Word word;
    word.reserve(order);
    enumerate_normal(trie, sigma, order, word, counts);
  }
  return {IntSeries(std::move(counts)), CountMethod::kBruteForce, order};
}

CountReport count_automaton(const Presentation& pres, std::size_t order, std::size_t max_states) {
  const auto words = forbidden_for_counting(pres, order);
  if (has_empty_word(words)) return {IntSeries(order), CountMethod::kAutomaton, order};

  const unsigned sigma = pres.alphabet().size();
  const FactorAutomaton fa = build_automaton(words, sigma, max_states);

  // Compact live states to 0..L-1; dead successors become -1.
  const auto live = fa.live_states();
  std::vector<std::int64_t> index(fa.state_count(), -1);
  for (std::size_t i = 0; i < live.size(); ++i) index[live[i]] = static_cast<std::int64_t>(i);
  std::vector<std::int64_t> step(live.size() * sigma);
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (unsigned c = 0; c < sigma; ++c) step[i * sigma + c] = index[fa.next(live[i], static_cast<Letter>(c))];
  }

  std::vector<Integer> dims(order + 1);
  std::vector<Integer> current(live.size());
  std::vector<Integer> upcoming(live.size());
  current[0] = 1;
  for (std::size_t n = 0;; ++n) {
    Integer total = 0;
    for (const auto& c : current) total += c;
    dims[n] = total;
    if (n == order) break;
    for (auto& u : upcoming) u = 0;
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (sgn(current[i]) == 0) continue;
      for (unsigned c = 0; c < sigma; ++c) {
        const std::int64_t target = step[i * sigma + c];
        if (target >= 0) upcoming[static_cast<std::size_t>(target)] += current[i];
      }
    }
    std::swap(current, upcoming);
  }
  return {IntSeries(std::move(dims)), CountMethod::kAutomaton, order};
}

RationalFn rationalize(const Presentation& pres, std::size_t max_states) {
  if (!pres.is_finite()) throw UnsupportedVariantError("rationalize needs a finite presentation");
  const auto& words = pres.words();
  if (has_empty_word(words)) return {IntPoly{}, IntPoly{1}};

  const unsigned sigma = pres.alphabet().size();
  const FactorAutomaton fa = build_automaton(words, sigma);
  const auto live = fa.live_states();
  if (live.size() > max_states) {
    throw SizeGuardError("transfer matrix has " + std::to_string(live.size()) + " states, above the limit of " +
                         std::to_string(max_states));
  }
  std::vector<std::int64_t> index(fa.state_count(), -1);
  for (std::size_t i = 0; i < live.size(); ++i) index[live[i]] = static_cast<std::int64_t>(i);

  // Row j of I - t M^T: subtract t for every letter moving some state i to j.
  PolyMatrix system(live.size());
  for (std::size_t i = 0; i < live.size(); ++i) system(i, i) = IntPoly{1};
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (unsigned c = 0; c < sigma; ++c) {
      const std::int64_t j = index[fa.next(live[i], static_cast<Letter>(c))];
      if (j >= 0) system(static_cast<std::size_t>(j), i) -= IntPoly{0, 1};
    }
  }
  std::vector<IntPoly> rhs(live.size());
  rhs[0] = IntPoly{1};
  const auto solution = solve_fraction_free(std::move(system), std::move(rhs));
  IntPoly numerator;
  for (const auto& x : solution.numerators) numerator += x;
  return normalize_rational(numerator, solution.determinant);
}

}  // namespace hilbert
