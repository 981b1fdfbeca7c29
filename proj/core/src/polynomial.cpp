#include <hilbert/errors.hpp>
#include <hilbert/powseries.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hilbert {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly to_rational(const IntPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// Remainder of a by b over Q; b nonzero.
QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Scales a rational polynomial to a primitive integer polynomial.
IntPoly primitive_part(const QPoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.emplace_back(c.get_num() * (den_lcm / c.get_den()));
  IntPoly result(std::move(coeffs));
  const Integer content = result.content();
  if (content > 1) result = exact_divide(result, IntPoly::constant(content));
  return result;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::one_minus_power(long c, unsigned k) { return IntPoly{1, -c}.pow(k); }

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> product(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      mpz_addmul(product[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPoly IntPoly::pow(unsigned exponent) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
  return value;
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw NonInvertibleError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NonIntegralError("polynomial division is not exact");
  std::vector<Integer> remainder = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const Integer& lead = b.coeffs().back();
  std::vector<Integer> quotient(remainder.size() - db);
  for (std::size_t k = quotient.size(); k-- > 0;) {
    Integer& top = remainder[k + db];
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NonIntegralError("polynomial division is not exact");
    }
    mpz_divexact(quotient[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) {
      mpz_submul(remainder[k + i].get_mpz_t(), quotient[k].get_mpz_t(), b.coeffs()[i].get_mpz_t());
    }
  }
  for (const auto& r : remainder) {
    if (sgn(r) != 0) throw NonIntegralError("polynomial division is not exact");
  }
  return IntPoly(std::move(quotient));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  QPoly x = to_rational(a);
  QPoly y = to_rational(b);
  if (x.empty() && y.empty()) return {};
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  IntPoly g = primitive_part(x);
  if (sgn(g.coeffs().back()) < 0) g = -g;
  return g;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Integer& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    const Integer magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || magnitude != 1) out << magnitude.get_str();
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw ParseError(0, "empty polynomial");

  std::vector<Integer> coeffs;
  std::size_t i = 0;
  const auto fail = [&](const std::string& why) {
    throw ParseError(0, "polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!coeffs.empty() || i != 0) {
      fail("expected '+' or '-'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer coefficient = 1;
    const bool has_number = i > start;
    if (has_number) coefficient = Integer(s.substr(start, i - start));
    if (i < s.size() && s[i] == '*') {
      if (!has_number) fail("'*' without coefficient");
      ++i;
      if (i >= s.size() || s[i] != 't') fail("expected 't' after '*'");
    }
    std::size_t degree = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("missing exponent");
        degree = std::stoul(s.substr(start, i - start));
      }
    } else if (!has_number) {
      fail("expected a coefficient or 't'");
    }
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += sign * coefficient;
  }
  return IntPoly(std::move(coeffs));
}

RationalFn normalize_rational(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw NonInvertibleError("zero denominator");
  if (sgn(den.coeffs().front()) == 0) throw NonInvertibleError("denominator has zero constant term");
  if (num.is_zero()) return {IntPoly{}, IntPoly::constant(1)};

  // g is primitive, so by Gauss's lemma the division is exact in Z[t].
  const IntPoly g = gcd(num, den);
  IntPoly reduced_num = num;
  IntPoly reduced_den = den;
  if (g.degree() > 0) {
    reduced_num = exact_divide(num, g);
    reduced_den = exact_divide(den, g);
  }

  // Primitive denominator with positive constant term; the same factor on
  // the numerator, which must stay integral.
  Integer den_content = reduced_den.content();
  if (sgn(reduced_den.coeffs().front()) < 0) den_content = -den_content;
  std::vector<Integer> out_num;
  for (const auto& c : reduced_num.coeffs()) {
    Rational v(c, den_content);
    v.canonicalize();
    if (v.get_den() != 1) {
      throw NonIntegralError("rational function " + to_string(num) + " / " + to_string(den) +
                             " has no integer expansion");
    }
    out_num.push_back(v.get_num());
  }
  IntPoly out_den = exact_divide(reduced_den, IntPoly::constant(den_content));
  if (out_den.coeffs().front() != 1) {
    throw NonIntegralError("rational function " + to_string(num) + " / " + to_string(den) +
                           " has no integer expansion");
  }
  return {IntPoly(std::move(out_num)), std::move(out_den)};
}

std::string to_string(const RationalFn& f) {
  return "(" + to_string(f.numerator) + ") / (" + to_string(f.denominator) + ")";
}

}  // namespace hilbert
