#include <hilbert/errors.hpp>
#include <hilbert/powseries.hpp>

namespace hilbert {

namespace {

void require_same_order(const IntSeries& a, const IntSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw OrderMismatchError(std::string(op) + ": truncation orders differ (" +
                             std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
  }
}

}  // namespace

IntSeries::IntSeries(std::size_t order) : coeffs_(order + 1) {}

IntSeries::IntSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidSpecError("a series needs at least the degree-0 coefficient");
}

IntSeries::IntSeries(std::initializer_list<long> coeffs) {
  if (coeffs.size() == 0) throw InvalidSpecError("a series needs at least the degree-0 coefficient");
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
}

IntSeries IntSeries::one(std::size_t order) {
  IntSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

IntSeries IntSeries::from_poly(const IntPoly& p, std::size_t order) {
  IntSeries s(order);
  for (std::size_t k = 0; k <= order && k < p.coeffs().size(); ++k) s.coeffs_[k] = p.coeffs()[k];
  return s;
}

bool IntSeries::all_nonnegative() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) < 0) return false;
  }
  return true;
}

IntSeries IntSeries::truncate(std::size_t order) const {
  if (order > this->order()) {
    throw OrderMismatchError("cannot truncate a series of order " + std::to_string(this->order()) +
                             " to order " + std::to_string(order));
  }
  return IntSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

IntSeries IntSeries::shifted(std::size_t k) const {
  IntSeries s(order());
  for (std::size_t i = 0; i + k <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

IntSeries add(const IntSeries& a, const IntSeries& b) {
  require_same_order(a, b, "add");
  IntSeries out = a;
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] += b[k];
  return out;
}

IntSeries sub(const IntSeries& a, const IntSeries& b) {
  require_same_order(a, b, "sub");
  IntSeries out = a;
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] -= b[k];
  return out;
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  require_same_order(a, b, "mul");
  const std::size_t n = a.order();
  std::vector<Integer> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntSeries(std::move(out));
}

IntSeries expand_rational(const IntPoly& num, const IntPoly& den, std::size_t order) {
  if (den.is_zero()) throw NonInvertibleError("zero denominator");
  const Integer& head = den.coeffs().front();
  if (head != 1 && head != -1) {
    throw NonInvertibleError("denominator constant term " + head.get_str() +
                             " is not a unit in Z[[t]]");
  }
  const bool negate = head == -1;
  std::vector<Integer> out(order + 1);
  const auto& d = den.coeffs();
  for (std::size_t n = 0; n <= order; ++n) {
    Integer value = num[n];
    const std::size_t reach = std::min(n, d.size() - 1);
    for (std::size_t i = 1; i <= reach; ++i) {
      mpz_submul(value.get_mpz_t(), d[i].get_mpz_t(), out[n - i].get_mpz_t());
    }
    out[n] = negate ? Integer(-value) : value;
  }
  return IntSeries(std::move(out));
}

IntSeries expand(const RationalFn& f, std::size_t order) {
  return expand_rational(f.numerator, f.denominator, order);
}

}  // namespace hilbert
