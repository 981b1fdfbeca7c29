#include <hilbert/constructions.hpp>
#include <hilbert/engine.hpp>
#include <hilbert/errors.hpp>

#include <chrono>
#include <cmath>

namespace hilbert {

namespace {

IntSeries realized_base(const ConstructionSpec& spec, std::size_t order) {
  validate(spec);
  IntSeries a = generate(spec.base, order);
  realize_A(a, spec.d, spec.variant == Variant::kTheorem14);
  return a;
}

IntSeries ratio(const IntPoly& num, const IntPoly& den, std::size_t order) {
  return expand_rational(num, den, order);
}

// Basis words of one side at each length 0..N.
IntSeries side_counts(Side side, unsigned d, std::size_t order) {
  IntSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) {
    switch (side) {
      case Side::kKilled:
        s[k] = k == 0 ? 1 : 0;
        break;
      case Side::kSymmetrized:
        s[k] = binomial(k + d - 1, d - 1);
        break;
      case Side::kFree:
        s[k] = pow_integer(Integer(d), k);
        break;
    }
  }
  return s;
}

}  // namespace

IntSeries closed_form(const ConstructionSpec& spec, std::size_t order) {
  const IntSeries a = realized_base(spec, order);
  const long d = spec.d;
  const IntSeries t2a = a.shifted(2);
  const IntPoly t{0, 1};
  switch (spec.variant) {
    case Variant::kTheorem1:
      return ratio(IntPoly{1}, IntPoly::one_minus_power(d, 1), order) +
             ratio(t, IntPoly::one_minus_power(d, 2), order) +
             t2a * ratio(IntPoly{1}, IntPoly::one_minus_power(d, spec.p), order);
    case Variant::kCorollary12:
      return ratio(IntPoly{1}, IntPoly::one_minus_power(d, 1), order) +
             ratio(t, IntPoly::one_minus_power(d, 2), order) +
             t2a * ratio(IntPoly{1},
                         IntPoly::one_minus_power(d, spec.p) * IntPoly::one_minus_power(1, spec.d * spec.q),
                         order);
    case Variant::kRemark13:
      return ratio(IntPoly{1, 2}, IntPoly::one_minus_power(d, 1), order) - IntSeries::from_poly(t, order) + t2a;
    case Variant::kTheorem14:
      return ratio(IntPoly{1}, IntPoly::one_minus_power(1, spec.d), order) +
             ratio(t, IntPoly::one_minus_power(1, 2 * spec.d), order) +
             t2a * ratio(IntPoly{1}, IntPoly::one_minus_power(1, spec.d * spec.p), order);
  }
  throw InvalidSpecError("unknown variant");
}

IntSeries structured_count(const ConstructionSpec& spec, std::size_t order) {
  const IntSeries a = realized_base(spec, order);
  const unsigned d = spec.d;
  IntSeries dims(order);

  if (spec.variant == Variant::kRemark13) {
    // u; y u_2 or u_1 y (one side empty); y v y with v in A.
    for (std::size_t n = 0; n <= order; ++n) {
      dims[n] = pow_integer(Integer(d), n);
      if (n >= 1) dims[n] += 2 * pow_integer(Integer(d), n - 1) - (n == 1 ? 1 : 0);
      if (n >= 2) dims[n] += a[n - 2];
    }
    return dims;
  }

  const Side plain = spec.variant == Variant::kTheorem14 ? Side::kSymmetrized : Side::kFree;
  const IntSeries u = side_counts(plain, d, order);
  const auto [left, right] = side_layout(spec);
  const IntSeries left_counts = side_counts(left, d, order);
  const IntSeries right_counts = side_counts(right, d, order);

  for (std::size_t n = 0; n <= order; ++n) {
    Integer total = u[n];
    // u_1 y u_2, |u_1| + |u_2| = n - 1
    for (std::size_t i = 0; i + 1 <= n; ++i) total += u[i] * u[n - 1 - i];
    // u_1 y v y u_2, |u_1| + |v| + |u_2| = n - 2
    if (n >= 2) {
      const std::size_t rest = n - 2;
      for (std::size_t i = 0; i <= rest; ++i) {
        if (sgn(left_counts[i]) == 0) continue;
        for (std::size_t m = 0; i + m <= rest; ++m) {
          if (sgn(a[m]) == 0) continue;
          total += left_counts[i] * a[m] * right_counts[rest - i - m];
        }
      }
    }
    dims[n] = std::move(total);
  }
  return dims;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kClosedForm:
      return "closed-form";
    case Method::kStructured:
      return "structured";
    case Method::kAutomaton:
      return "automaton";
    case Method::kBruteForce:
      return "bruteforce";
  }
  return "?";
}

EngineChoice parse_engine(std::string_view text) {
  if (text == "auto") return EngineChoice::kAuto;
  if (text == "automaton") return EngineChoice::kAutomaton;
  if (text == "bruteforce") return EngineChoice::kBruteForce;
  if (text == "structured") return EngineChoice::kStructured;
  throw InvalidSpecError("unknown engine '" + std::string(text) + "' (expected auto, automaton, bruteforce or structured)");
}

VerificationReport verify(const ConstructionSpec& spec, std::size_t order, const VerifyOptions& options) {
  validate(spec);
  const bool monomial = is_monomial(spec.variant);
  if (!monomial && (options.engine == EngineChoice::kAutomaton || options.engine == EngineChoice::kBruteForce)) {
    throw UnsupportedVariantError(to_string(spec.variant) +
                                  " is not a monomial algebra; only the structured engine applies");
  }

  VerificationReport report{spec, order, {}, std::nullopt, true, {}};
  const auto timed = [&](Method method, auto&& run) {
    const auto start = std::chrono::steady_clock::now();
    IntSeries dims = run();
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    report.results.push_back({method, std::move(dims), elapsed.count()});
  };

  timed(Method::kClosedForm, [&] {
    IntSeries s = closed_form(spec, order);
    if (options.perturb_closed_form_at && *options.perturb_closed_form_at <= order) {
      s[*options.perturb_closed_form_at] += 1;
    }
    return s;
  });
  timed(Method::kStructured, [&] { return structured_count(spec, order); });

  if (monomial) {
    // forbidden(n) needs A through degree n - 2.
    const auto presentation = [&] { return make_presentation(spec, order >= 2 ? order - 2 : 0); };
    const bool want_automaton = options.engine == EngineChoice::kAuto || options.engine == EngineChoice::kAutomaton;
    bool want_brute = options.engine == EngineChoice::kBruteForce;
    if (options.engine == EngineChoice::kAuto) {
      const double work = std::pow(static_cast<double>(spec.d + 1), static_cast<double>(order));
      want_brute = work <= options.auto_bruteforce_limit;
      if (!want_brute) report.notes.push_back("brute force skipped: (d+1)^N above the auto limit");
    }
    if (want_automaton) timed(Method::kAutomaton, [&] { return count_automaton(presentation(), order).dims; });
    if (want_brute) timed(Method::kBruteForce, [&] { return count_bruteforce(presentation(), order).dims; });
  } else {
    report.notes.push_back("word-counting engines skipped: " + to_string(spec.variant) +
                           " is not a monomial algebra");
  }

  const IntSeries& reference = report.results.front().dims;
  for (std::size_t n = 0; n <= order; ++n) {
    for (const auto& r : report.results) {
      if (r.dims[n] != reference[n]) {
        report.first_mismatch = n;
        break;
      }
    }
    if (report.first_mismatch) break;
  }
  report.agreement = !report.first_mismatch.has_value();
  return report;
}

}  // namespace hilbert
