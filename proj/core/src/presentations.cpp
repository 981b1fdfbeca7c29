#include <hilbert/errors.hpp>
#include <hilbert/presentations.hpp>

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace hilbert {

namespace {

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* w : parts) out.insert(out.end(), w->begin(), w->end());
  return out;
}

// Words of degree n outside A_n: everything after the first a_n in lex order.
std::vector<Word> complement_of_a(const ASetRealization& a, std::size_t n) {
  auto all = enumerate_words(a.d(), n);
  const Integer& taken = a.size(n);
  const std::size_t skip = std::min<std::size_t>(all.size(), taken.get_ui());
  all.erase(all.begin(), all.begin() + static_cast<long>(skip));
  return all;
}

void require_realized(const ASetRealization& a, std::size_t degree) {
  if (degree > a.order()) {
    throw InvalidSpecError("forbidden words need A up to degree " + std::to_string(degree) +
                           ", realized only to " + std::to_string(a.order()));
  }
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kTheorem1:
      return "theorem1";
    case Variant::kCorollary12:
      return "corollary12";
    case Variant::kRemark13:
      return "remark13";
    case Variant::kTheorem14:
      return "theorem14";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  for (Variant v : {Variant::kTheorem1, Variant::kCorollary12, Variant::kRemark13, Variant::kTheorem14}) {
    if (text == to_string(v)) return v;
  }
  throw InvalidSpecError("unknown variant '" + std::string(text) +
                         "' (expected theorem1, corollary12, remark13 or theorem14)");
}

void validate(const ConstructionSpec& spec) {
  if (spec.d < 1 || spec.d > kMaxAlphabet) {
    throw InvalidSpecError("d must lie in 1.." + std::to_string(kMaxAlphabet));
  }
  if (spec.p > 2) throw InvalidSpecError("p must be 0, 1 or 2");
  if (spec.variant == Variant::kCorollary12) {
    if (spec.p + spec.q > 2) throw InvalidSpecError("corollary12 requires p + q <= 2");
  } else if (spec.q != 0) {
    throw InvalidSpecError("q is only meaningful for corollary12");
  }
}

std::string describe(const ConstructionSpec& spec) {
  std::string out = to_string(spec.variant) + " d=" + std::to_string(spec.d);
  if (spec.variant != Variant::kRemark13) out += " p=" + std::to_string(spec.p);
  if (spec.variant == Variant::kCorollary12) out += " q=" + std::to_string(spec.q);
  return out + " series=" + describe(spec.base);
}

std::pair<Side, Side> side_layout(const ConstructionSpec& spec) {
  validate(spec);
  unsigned killed = 0;
  unsigned symmetrized = 0;
  switch (spec.variant) {
    case Variant::kTheorem1:
      killed = 2 - spec.p;
      break;
    case Variant::kCorollary12:
      killed = 2 - spec.p - spec.q;
      symmetrized = spec.q;
      break;
    case Variant::kTheorem14:
      killed = 2 - spec.p;
      symmetrized = spec.p;
      break;
    case Variant::kRemark13:
      throw UnsupportedVariantError("remark13 has no side layout");
  }
  const auto side_at = [&](unsigned position) {
    if (position < killed) return Side::kKilled;
    if (position < killed + symmetrized) return Side::kSymmetrized;
    return Side::kFree;
  };
  return {side_at(0), side_at(1)};
}

std::vector<Word> construction_forbidden(const ConstructionSpec& spec, const ASetRealization& a,
                                         std::size_t n) {
  validate(spec);
  if (!is_monomial(spec.variant)) {
    throw UnsupportedVariantError(to_string(spec.variant) +
                                  " is not a monomial algebra; it has no forbidden-word presentation");
  }
  if (a.commutative() || a.d() != spec.d) throw InvalidSpecError("A must be a non-commutative set over X_d");
  if (n < 2) return {};
  require_realized(a, n - 2);

  const Word y{static_cast<Letter>(spec.d)};
  const bool has_one = a.contains_empty();
  std::vector<Word> out;

  // y w y with w outside A.
  for (const Word& w : complement_of_a(a, n - 2)) out.push_back(concat({&y, &w, &y}));

  if (n >= 3) {
    const std::size_t m = n - 3;
    const Word empty;
    if (spec.variant == Variant::kTheorem1) {
      // y v1 y v2 y with v1, v2 in A. A non-empty v1 already contains the
      // p <= 1 word x_i y v2 y; a non-empty v2 contains the p = 0 word y v1 y x_j.
      for (std::size_t i = 0; i <= m; ++i) {
        if (spec.p <= 1 && i > 0) break;
        if (spec.p == 0 && m - i > 0) continue;
        for (const Word& v1 : a.words(i)) {
          for (const Word& v2 : a.words(m - i)) out.push_back(concat({&y, &v1, &y, &v2, &y}));
        }
      }
      const auto a_m = a.words(m);
      for (Letter x = 0; x < spec.d; ++x) {
        const Word xi{x};
        for (const Word& v : a_m) {
          if (spec.p <= 1) out.push_back(concat({&xi, &y, &v, &y}));
          if (spec.p == 0) out.push_back(concat({&y, &v, &y, &xi}));
        }
      }
    } else if (m == 0) {
      // kRemark13: every other y v1 y v2 y contains x_i y x_j, x_i y y or y y x_j.
      for (Letter xi = 0; xi < spec.d; ++xi) {
        for (Letter xj = 0; xj < spec.d; ++xj) out.push_back({xi, y[0], xj});
      }
      if (has_one) {
        out.push_back({y[0], y[0], y[0]});
        for (Letter x = 0; x < spec.d; ++x) {
          out.push_back({x, y[0], y[0]});
          out.push_back({y[0], y[0], x});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Presentation Presentation::finite(Alphabet alphabet, std::vector<Word> words) {
  if (alphabet.d < 1 || alphabet.size() > kMaxAlphabet) throw InvalidSpecError("alphabet size out of range");
  for (const Word& w : words) {
    for (Letter l : w) {
      if (l >= alphabet.size()) throw InvalidSpecError("word uses a letter outside the alphabet");
    }
  }
  // Shorter words first so a word is only tested against possible factors.
  std::stable_sort(words.begin(), words.end(), [](const Word& u, const Word& v) {
    return u.size() != v.size() ? u.size() < v.size() : u < v;
  });
  FiniteWords data;
  for (Word& w : words) {
    const bool covered = std::any_of(data.words.begin(), data.words.end(),
                                     [&](const Word& kept) { return contains_factor(w, kept); });
    if (covered) {
      data.redundant.push_back(std::move(w));
    } else {
      data.words.push_back(std::move(w));
    }
  }
  return Presentation(alphabet, std::move(data));
}

Presentation Presentation::structured(ConstructionSpec spec, ASetRealization a) {
  validate(spec);
  if (!is_monomial(spec.variant)) {
    throw UnsupportedVariantError(to_string(spec.variant) + " is not a monomial algebra");
  }
  if (a.d() != spec.d || a.commutative()) throw InvalidSpecError("A must be a non-commutative set over X_d");
  return Presentation(Alphabet{spec.d, true}, Structured{std::move(spec), std::move(a)});
}

std::vector<Word> Presentation::forbidden(std::size_t n) const {
  if (const auto* f = std::get_if<FiniteWords>(&kind_)) {
    std::vector<Word> out;
    for (const Word& w : f->words) {
      if (w.size() == n) out.push_back(w);
    }
    return out;
  }
  const auto& s = std::get<Structured>(kind_);
  return construction_forbidden(s.spec, s.a, n);
}

std::vector<Word> Presentation::forbidden_up_to(std::size_t n) const {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto slice = forbidden(k);
    out.insert(out.end(), std::make_move_iterator(slice.begin()), std::make_move_iterator(slice.end()));
  }
  return out;
}

const std::vector<Word>& Presentation::words() const {
  if (const auto* f = std::get_if<FiniteWords>(&kind_)) return f->words;
  throw UnsupportedVariantError("a structured presentation has no finite word list");
}

const std::vector<Word>& Presentation::redundant() const {
  static const std::vector<Word> kNone;
  if (const auto* f = std::get_if<FiniteWords>(&kind_)) return f->redundant;
  return kNone;
}

const ConstructionSpec* Presentation::construction() const noexcept {
  if (const auto* s = std::get_if<Structured>(&kind_)) return &s->spec;
  return nullptr;
}

std::optional<std::size_t> Presentation::max_degree() const {
  if (std::holds_alternative<FiniteWords>(kind_)) return std::nullopt;
  return std::get<Structured>(kind_).a.order() + 2;
}

Presentation make_presentation(const ConstructionSpec& spec, std::size_t order) {
  validate(spec);
  auto a = realize_A(generate(spec.base, order), spec.d, false);
  return Presentation::structured(spec, std::move(a));
}

Presentation parse_presentation(std::string_view text) {
  static const std::regex kHeader(R"(^\s*alphabet\s+d\s*=\s*(\d+)\s+y\s*=\s*([01])\s*$)");
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Alphabet> alphabet;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!alphabet) {
      std::smatch match;
      if (!std::regex_match(line, match, kHeader)) {
        throw ParseError(line_no, "expected header 'alphabet d=<d> y=<0|1>'");
      }
      const unsigned long d = std::stoul(match[1].str());
      if (d < 1 || d + 1 > kMaxAlphabet) throw ParseError(line_no, "alphabet size out of range");
      alphabet = Alphabet{static_cast<unsigned>(d), match[2].str() == "1"};
      continue;
    }
    try {
      words.push_back(parse_word(line, *alphabet));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!alphabet) throw ParseError(line_no, "missing header 'alphabet d=<d> y=<0|1>'");
  return Presentation::finite(*alphabet, std::move(words));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open presentation file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

std::string format_presentation(const Presentation& p) {
  std::string out = "alphabet d=" + std::to_string(p.alphabet().d) + " y=" + (p.alphabet().has_y ? "1" : "0") + "\n";
  for (const Word& w : p.words()) out += format_word(w, p.alphabet()) + "\n";
  return out;
}

}  // namespace hilbert
