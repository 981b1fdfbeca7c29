#include <hilbert/analysis.hpp>
#include <hilbert/errors.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hilbert {

namespace {

// Any solution of the linear system rows * x = rhs (last column), free
// variables set to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_consistent(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][col];
    for (std::size_t j = col; j <= unknowns; ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][col]) == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = col; j <= unknowns; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (sgn(rows[i][unknowns]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(unknowns, 0);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = rows[r][unknowns];
  return x;
}

std::optional<RecurrenceCertificate> fit_order(std::span<const Integer> a, std::size_t k) {
  const std::size_t length = a.size();
  std::vector<Rational> relation(k + 1);
  relation[0] = 1;
  if (k > 0) {
    // a_n + c_1 a_{n-1} + ... + c_k a_{n-k} = 0 for n = k..L-1
    std::vector<std::vector<Rational>> rows;
    rows.reserve(length - k);
    for (std::size_t n = k; n < length; ++n) {
      std::vector<Rational> row(k + 1);
      for (std::size_t i = 1; i <= k; ++i) row[i - 1] = a[n - i];
      row[k] = -a[n];
      rows.push_back(std::move(row));
    }
    auto solution = solve_consistent(std::move(rows), k);
    if (!solution) return std::nullopt;
    for (std::size_t i = 1; i <= k; ++i) relation[i] = (*solution)[i - 1];
  } else if (std::any_of(a.begin(), a.end(), [](const Integer& v) { return sgn(v) != 0; })) {
    return std::nullopt;
  }

  Integer scale = 1;
  for (const auto& c : relation) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> coeffs;
  Integer content = 0;
  for (const auto& c : relation) {
    coeffs.emplace_back(c.get_num() * (scale / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), coeffs.back().get_mpz_t());
  }
  for (auto& c : coeffs) c /= content;

  // Numerator: (Q A) mod t^k.
  std::vector<Integer> numerator(k);
  for (std::size_t n = 0; n < k && n < length; ++n) {
    for (std::size_t i = 0; i <= n; ++i) numerator[n] += coeffs[i] * a[n - i];
  }
  RationalFn rational;
  try {
    rational = normalize_rational(IntPoly(numerator), IntPoly(coeffs));
  } catch (const NonIntegralError&) {
    return std::nullopt;
  }
  const IntSeries replay = expand(rational, length - 1);
  if (!std::equal(a.begin(), a.end(), replay.coeffs().begin())) return std::nullopt;
  return RecurrenceCertificate{k, std::move(coeffs), std::move(rational), k, length - 1};
}

struct Window {
  std::size_t low, mid, high;
};

Window dyadic_window(std::size_t last) { return {last / 4, last / 2, last}; }

std::vector<Integer> partial_sums(std::span<const Integer> a) {
  std::vector<Integer> g(a.size());
  Integer running = 0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    running += a[n];
    g[n] = running;
  }
  return g;
}

const char* verdict_name(VerdictTag t) {
  switch (t) {
    case VerdictTag::kRational:
      return "RATIONAL";
    case VerdictTag::kCandidateTranscendental:
      return "CANDIDATE_TRANSCENDENTAL";
    case VerdictTag::kExponentialNoClaim:
      return "EXPONENTIAL_NO_CLAIM";
    case VerdictTag::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace

GkEstimate gk_estimate(const IntSeries& dims) {
  if (dims.size() < 16) throw DataShortageError("GK estimation needs at least 16 coefficients");
  if (!dims.all_nonnegative()) throw InvalidSpecError("dimensions must be nonnegative");
  GkEstimate out{std::nullopt, dims.order() / 2, dims.order(), partial_sums(dims.coeffs())};
  const Integer& low = out.growth[out.window_low];
  const Integer& high = out.growth[out.window_high];
  if (sgn(low) > 0 && high >= 2) {
    out.estimate = (log_integer(high) - log_integer(low)) / std::log(2.0);
  }
  return out;
}

std::optional<RecurrenceCertificate> detect_recurrence(std::span<const Integer> coeffs, std::size_t max_order,
                                                       std::size_t guard) {
  if (coeffs.size() < 2 * max_order + guard) {
    throw DataShortageError("recurrence search to order " + std::to_string(max_order) + " with guard " +
                            std::to_string(guard) + " needs " + std::to_string(2 * max_order + guard) +
                            " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (std::size_t k = 0; k <= max_order; ++k) {
    if (auto cert = fit_order(coeffs, k)) return cert;
  }
  return std::nullopt;
}

std::string to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::kPolynomial:
      return "POLYNOMIAL";
    case GrowthClass::kIntermediate:
      return "INTERMEDIATE";
    case GrowthClass::kExponential:
      return "EXPONENTIAL";
    case GrowthClass::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

GrowthReport growth_classify(std::span<const Integer> coeffs, const GrowthOptions& options) {
  if (coeffs.size() < 32) throw DataShortageError("growth classification needs at least 32 coefficients");
  const Window w = dyadic_window(coeffs.size() - 1);
  GrowthReport report{GrowthClass::kInconclusive, std::nullopt, w.low, w.high, partial_sums(coeffs)};

  // Running maximum: the envelope of the nonzero coefficients.
  std::vector<Integer> envelope(coeffs.size());
  Integer best = 0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] > best) best = coeffs[n];
    envelope[n] = best;
  }
  if (sgn(envelope[w.low]) <= 0) return report;

  const double e0 = log_integer(envelope[w.low]);
  const double e1 = log_integer(envelope[w.mid]);
  const double e2 = log_integer(envelope[w.high]);
  const double x0 = std::log(static_cast<double>(w.low + 1));
  const double x1 = std::log(static_cast<double>(w.mid + 1));
  const double x2 = std::log(static_cast<double>(w.high + 1));

  const double rate_early = (e1 - e0) / static_cast<double>(w.mid - w.low);
  const double rate_late = (e2 - e1) / static_cast<double>(w.high - w.mid);
  if (rate_late > std::log1p(options.exponential_margin) &&
      std::abs(rate_late - rate_early) <= options.slope_stability * rate_late) {
    report.growth_class = GrowthClass::kExponential;
    report.estimate = std::exp(rate_late);
    return report;
  }

  const double slope_early = (e1 - e0) / (x1 - x0);
  const double slope_late = (e2 - e1) / (x2 - x1);
  if (std::abs(slope_late - slope_early) < options.slope_stability) {
    report.growth_class = GrowthClass::kPolynomial;
    report.estimate = slope_late;
    return report;
  }

  const auto& g = report.partial_sums;
  if (sgn(g[w.low]) > 0) {
    const double g0 = log_integer(g[w.low]);
    const double g1 = log_integer(g[w.mid]);
    const double g2 = log_integer(g[w.high]);
    if ((g2 - g1) / (x2 - x1) > (g1 - g0) / (x1 - x0) + options.slope_stability) {
      report.growth_class = GrowthClass::kIntermediate;
    }
  }
  return report;
}

std::string to_string(VerdictTag t) { return verdict_name(t); }

DichotomyVerdict fatou_verdict(std::span<const Integer> coeffs, const FatouOptions& options) {
  auto certificate = detect_recurrence(coeffs, options.max_order, options.guard);
  GrowthReport growth = growth_classify(coeffs, options.growth);

  std::ostringstream bounds;
  bounds << "recurrence search to order K=" << options.max_order << " with guard G=" << options.guard << " over "
         << coeffs.size() << " coefficients (degrees 0.." << coeffs.size() - 1 << ")";

  DichotomyVerdict v{VerdictTag::kInconclusive, std::nullopt, growth, "", options, coeffs.size()};
  if (certificate) {
    v.tag = VerdictTag::kRational;
    v.explanation = "linear recurrence of order " + std::to_string(certificate->order) +
                    " reproduces every coefficient; series " + to_string(certificate->rational) + " (" +
                    bounds.str() + ")";
    v.certificate = std::move(certificate);
    return v;
  }
  switch (growth.growth_class) {
    case GrowthClass::kPolynomial:
      v.tag = VerdictTag::kCandidateTranscendental;
      v.explanation =
          "no recurrence found and the coefficients are polynomially bounded on the evidence window; an integer "
          "series with polynomially bounded coefficients is rational or transcendental (Fatou), so it is a "
          "transcendence candidate. Heuristic, not a proof: " +
          bounds.str();
      break;
    case GrowthClass::kIntermediate:
      if (options.intermediate_is_transcendental) {
        v.tag = VerdictTag::kCandidateTranscendental;
        v.explanation =
            "no recurrence found and the growth looks intermediate (super-polynomial, sub-exponential); series of "
            "intermediate growth are transcendental, so it is a transcendence candidate. Heuristic, not a proof: " +
            bounds.str();
      } else {
        v.explanation = "no recurrence found; intermediate growth not mapped to a verdict (" + bounds.str() + ")";
      }
      break;
    case GrowthClass::kExponential:
      v.tag = VerdictTag::kExponentialNoClaim;
      v.explanation =
          "no recurrence found and the coefficients grow exponentially; algebraic irrational series are possible "
          "here, so no claim is made (" +
          bounds.str() + ")";
      break;
    case GrowthClass::kInconclusive:
      v.explanation = "no recurrence found and the growth evidence is inconclusive (" + bounds.str() + ")";
      break;
  }
  return v;
}

std::string to_json(const DichotomyVerdict& v) {
  nlohmann::ordered_json out;
  out["verdict"] = verdict_name(v.tag);
  nlohmann::ordered_json growth;
  growth["class"] = to_string(v.growth.growth_class);
  growth["estimate"] = v.growth.estimate ? nlohmann::ordered_json(*v.growth.estimate) : nlohmann::ordered_json();
  out["growth"] = growth;
  if (v.certificate) {
    nlohmann::ordered_json rec;
    rec["order"] = v.certificate->order;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : v.certificate->coeffs) coeffs.push_back(c.get_str());
    rec["coeffs"] = coeffs;
    rec["rational"] = to_string(v.certificate->rational);
    out["recurrence"] = rec;
  } else {
    out["recurrence"] = nullptr;
  }
  nlohmann::ordered_json bounds;
  bounds["K"] = v.bounds.max_order;
  bounds["G"] = v.bounds.guard;
  bounds["N"] = v.coefficient_count == 0 ? 0 : v.coefficient_count - 1;
  out["bounds"] = bounds;
  out["explanation"] = v.explanation;
  return out.dump(2);
}

}  // namespace hilbert
