#include <hilbert/errors.hpp>
#include <hilbert/powseries.hpp>

#include <fstream>
#include <istream>
#include <sstream>

namespace hilbert {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

IntSeries partition_series(std::size_t order) {
  // prod 1/(1-t^k), one factor at a time: multiplying by 1/(1-t^k) is the
  // in-place recurrence a[n] += a[n-k].
  IntSeries a = IntSeries::one(order);
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t n = k; n <= order; ++n) a[n] += a[n - k];
  }
  return a;
}

IntSeries euler_product(const series::EulerProduct& spec, std::size_t order) {
  IntSeries a = IntSeries::one(order);
  for (std::size_t n = 1; n <= order && n <= spec.exponents.size(); ++n) {
    const std::uint64_t b = spec.exponents[n - 1];
    if (b == 0) continue;
    // 1/(1-t^n)^b = sum_k C(b+k-1, k) t^{nk}
    std::vector<Integer> weights;
    for (std::size_t k = 0; k * n <= order; ++k) weights.push_back(binomial(b + k - 1, k));
    IntSeries next(order);
    for (std::size_t m = 0; m <= order; ++m) {
      for (std::size_t k = 0; k * n <= m; ++k) {
        mpz_addmul(next[m].get_mpz_t(), weights[k].get_mpz_t(), a[m - k * n].get_mpz_t());
      }
    }
    a = std::move(next);
  }
  return a;
}

IntSeries lacunary_factorial(std::size_t order) {
  IntSeries a(order);
  std::size_t f = 1;
  for (std::size_t n = 1; f <= order; ++n) {
    a[f] = 1;
    if (f > order / (n + 1)) break;
    f *= n + 1;
  }
  return a;
}

IntSeries lacunary_powers(const series::LacunaryPowers& spec, std::size_t order) {
  if (spec.base < 2) throw InvalidSpecError("lacunary-powers base must be at least 2");
  IntSeries a(order);
  for (std::uint64_t e = 1; e <= order; e *= spec.base) {
    a[e] = 1;
    if (e > order / spec.base) break;
  }
  return a;
}

std::vector<std::size_t> smallest_prime_factors(std::size_t limit) {
  std::vector<std::size_t> spf(limit + 1, 0);
  for (std::size_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::size_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

IntSeries multiplicative(const series::Multiplicative& spec, std::size_t order) {
  for (const auto& [p, value] : spec.prime_images) {
    if (!is_prime(p)) throw InvalidSpecError("multiplicative: " + std::to_string(p) + " is not prime");
  }
  for (const auto& [q, value] : spec.prime_power_values) {
    if (!is_prime_power(q)) {
      throw InvalidSpecError("multiplicative: " + std::to_string(q) + " is not a prime power");
    }
  }
  // Bertrand: the prime after p <= order lies below 2p.
  const std::size_t limit = std::max<std::size_t>(2 * order + 2, 4);
  const auto spf = smallest_prime_factors(limit);
  std::vector<std::size_t> next_prime(limit + 1, 0);
  std::size_t upcoming = 0;
  for (std::size_t i = limit + 1; i-- > 2;) {
    if (spf[i] == i) {
      next_prime[i] = upcoming;
      upcoming = i;
    }
  }

  IntSeries a(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Integer value = 1;
    std::size_t rest = n;
    while (rest > 1) {
      const std::size_t p = spf[rest];
      unsigned k = 0;
      std::uint64_t prime_power = 1;
      while (rest % p == 0) {
        rest /= p;
        prime_power *= p;
        ++k;
      }
      if (auto it = spec.prime_power_values.find(prime_power); it != spec.prime_power_values.end()) {
        value *= it->second;
      } else if (auto img = spec.prime_images.find(p); img != spec.prime_images.end()) {
        value *= pow_integer(img->second, k);
      } else {
        value *= pow_integer(Integer(static_cast<unsigned long>(next_prime[p])), k);
      }
    }
    a[n] = value;
  }
  return a;
}

IntSeries catalan_trees(std::size_t order) {
  IntSeries a(order);
  if (order >= 1) a[1] = 1;
  for (std::size_t n = 2; n <= order; ++n) {
    Integer sum = 0;
    for (std::size_t i = 1; i < n; ++i) mpz_addmul(sum.get_mpz_t(), a[i].get_mpz_t(), a[n - i].get_mpz_t());
    a[n] = sum;
  }
  return a;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_unsigned(std::string_view text, const std::string& what) {
  if (text.empty()) throw InvalidSpecError(what + ": missing number");
  std::uint64_t value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw InvalidSpecError(what + ": '" + std::string(text) + "' is not a number");
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return value;
}

}  // namespace

SeriesSpec zero_series() { return series::RationalSeries{IntPoly{}, IntPoly{1}}; }

IntSeries generate(const SeriesSpec& spec, std::size_t order) {
  return std::visit(
      Overloaded{
          [&](const series::RationalSeries& s) {
            return expand_rational(s.numerator, s.denominator, order);
          },
          [&](const series::Partition&) { return partition_series(order); },
          [&](const series::EulerProduct& s) { return euler_product(s, order); },
          [&](const series::LacunaryFactorial&) { return lacunary_factorial(order); },
          [&](const series::LacunaryPowers& s) { return lacunary_powers(s, order); },
          [&](const series::Multiplicative& s) { return multiplicative(s, order); },
          [&](const series::CatalanTrees&) { return catalan_trees(order); },
          [&](const series::Explicit& s) {
            if (s.coeffs.size() < order + 1) {
              throw DataShortageError("coefficient list '" + s.source + "' has " +
                                      std::to_string(s.coeffs.size()) + " entries, degree " +
                                      std::to_string(order) + " needs " + std::to_string(order + 1));
            }
            return IntSeries(std::vector<Integer>(s.coeffs.begin(),
                                                  s.coeffs.begin() + static_cast<long>(order) + 1));
          },
      },
      spec);
}

SeriesSpec parse_series_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  const auto no_arg = [&] {
    if (has_arg) throw InvalidSpecError("series '" + std::string(head) + "' takes no argument");
  };

  if (head == "zero") {
    no_arg();
    return zero_series();
  }
  if (head == "partition") {
    no_arg();
    return series::Partition{};
  }
  if (head == "catalan") {
    no_arg();
    return series::CatalanTrees{};
  }
  if (head == "lacunary-factorial") {
    no_arg();
    return series::LacunaryFactorial{};
  }
  if (head == "lacunary-powers") {
    const std::uint64_t base = parse_unsigned(arg, "lacunary-powers");
    if (base < 2) throw InvalidSpecError("lacunary-powers base must be at least 2");
    return series::LacunaryPowers{base};
  }
  if (head == "multiplicative") {
    if (has_arg && arg != "shift") throw InvalidSpecError("multiplicative: only 'shift' is supported");
    return series::Multiplicative{};
  }
  if (head == "euler") {
    series::EulerProduct spec;
    for (auto part : split(arg, ',')) spec.exponents.push_back(parse_unsigned(part, "euler"));
    return spec;
  }
  if (head == "rational") {
    const auto parts = split(arg, '/');
    if (parts.size() > 2) throw InvalidSpecError("rational: expected <num>/<den>");
    try {
      IntPoly num = parse_poly(parts[0]);
      IntPoly den = parts.size() == 2 ? parse_poly(parts[1]) : IntPoly{1};
      if (den.is_zero()) throw InvalidSpecError("rational: zero denominator");
      return series::RationalSeries{std::move(num), std::move(den)};
    } catch (const ParseError& e) {
      throw InvalidSpecError(std::string("rational: ") + e.what());
    }
  }
  if (head == "file") {
    if (arg.empty()) throw InvalidSpecError("file: missing path");
    return series::Explicit{load_coefficients(std::string(arg)), std::string(arg)};
  }
  throw InvalidSpecError("unknown series '" + std::string(text) + "'");
}

std::string describe(const SeriesSpec& spec) {
  return std::visit(
      Overloaded{
          [](const series::RationalSeries& s) -> std::string {
            if (s.numerator.is_zero()) return "zero";
            return "rational:" + to_string(s.numerator) + "/" + to_string(s.denominator);
          },
          [](const series::Partition&) -> std::string { return "partition"; },
          [](const series::EulerProduct& s) -> std::string {
            std::string out = "euler:";
            for (std::size_t i = 0; i < s.exponents.size(); ++i) {
              if (i > 0) out += ',';
              out += std::to_string(s.exponents[i]);
            }
            return out;
          },
          [](const series::LacunaryFactorial&) -> std::string { return "lacunary-factorial"; },
          [](const series::LacunaryPowers& s) -> std::string {
            return "lacunary-powers:" + std::to_string(s.base);
          },
          [](const series::Multiplicative& s) -> std::string {
            return s.prime_images.empty() && s.prime_power_values.empty() ? "multiplicative:shift"
                                                                           : "multiplicative:custom";
          },
          [](const series::CatalanTrees&) -> std::string { return "catalan"; },
          [](const series::Explicit& s) -> std::string { return "file:" + s.source; },
      },
      spec);
}

std::vector<Integer> read_coefficients(std::istream& in) {
  std::vector<Integer> coeffs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "expected one integer per line");
    Integer value;
    if (value.set_str(token, 10) != 0) throw ParseError(line_no, "'" + token + "' is not an integer");
    coeffs.push_back(std::move(value));
  }
  return coeffs;
}

std::vector<Integer> load_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpecError("cannot open coefficient file '" + path.string() + "'");
  return read_coefficients(in);
}

}  // namespace hilbert
