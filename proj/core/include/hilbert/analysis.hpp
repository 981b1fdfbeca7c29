#pragma once

// Coefficient-sequence analytics: growth classification, Gelfand-Kirillov
// dimension estimates, exact linear-recurrence detection, rational versus
// candidate-transcendental verdicts, and the Hardy-Ramanujan comparison.
//
// Every verdict is evidence-bounded: it depends only on the supplied
// coefficients and the configured search bounds, and says so.

#include <hilbert/powseries.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hilbert {

struct GkEstimate {
  /// log2(g(N) / g(floor(N/2))); nullopt when the sums are too small to
  /// take the ratio (g(floor(N/2)) = 0 or g(N) < 2).
  std::optional<double> estimate;
  std::size_t window_low;
  std::size_t window_high;
  /// g(n) = dims[0] + ... + dims[n]
  std::vector<Integer> growth;
};

/// Two-point dyadic log-slope estimate of the Gelfand-Kirillov dimension.
/// Throws DataShortageError for fewer than 16 coefficients and
/// InvalidSpecError for a negative coefficient.
GkEstimate gk_estimate(const IntSeries& dims);

/// sum_i coeffs[i] a_{n-i} = 0 for every n in [validated_from, validated_to].
struct RecurrenceCertificate {
  std::size_t order;
  std::vector<Integer> coeffs;  ///< c_0 > 0, integer, content 1
  RationalFn rational;
  std::size_t validated_from;
  std::size_t validated_to;
};

/// Least k <= max_order admitting an integer relation of length k+1 that
/// holds at every position of the data, found by exact rational
/// elimination. Needs at least 2 * max_order + guard coefficients
/// (DataShortageError otherwise), so every fit is checked against at least
/// `guard` terms beyond the 2k it is determined by.
std::optional<RecurrenceCertificate> detect_recurrence(std::span<const Integer> coeffs, std::size_t max_order,
                                                       std::size_t guard);

enum class GrowthClass { kPolynomial, kIntermediate, kExponential, kInconclusive };
std::string to_string(GrowthClass c);

struct GrowthOptions {
  double exponential_margin = 0.05;  ///< rate must exceed 1 + margin
  double slope_stability = 0.25;     ///< max change between dyadic windows
};

struct GrowthReport {
  GrowthClass growth_class;
  /// Degree for kPolynomial, rate for kExponential.
  std::optional<double> estimate;
  std::size_t window_low;
  std::size_t window_high;
  std::vector<Integer> partial_sums;
};

/// Compares the last two dyadic windows [N/4, N/2] and [N/2, N] of the
/// running-maximum envelope: a stable log-rate above log(1 + margin) is
/// exponential, a stable log-log slope is polynomial, and a partial-sum
/// sequence with increasing log-log slope is intermediate.
/// Throws DataShortageError for fewer than 32 coefficients.
GrowthReport growth_classify(std::span<const Integer> coeffs, const GrowthOptions& options = {});

enum class VerdictTag { kRational, kCandidateTranscendental, kExponentialNoClaim, kInconclusive };
std::string to_string(VerdictTag t);

struct FatouOptions {
  std::size_t max_order = 12;
  std::size_t guard = 20;
  GrowthOptions growth;
  /// Map INTERMEDIATE growth to CANDIDATE_TRANSCENDENTAL.
  bool intermediate_is_transcendental = true;
};

struct DichotomyVerdict {
  VerdictTag tag;
  std::optional<RecurrenceCertificate> certificate;
  GrowthReport growth;
  std::string explanation;
  FatouOptions bounds;
  std::size_t coefficient_count;
};

/// Rational when a recurrence is found; otherwise polynomially bounded (or
/// intermediate) integer coefficients make the series a transcendence
/// candidate, and exponential growth yields no claim.
DichotomyVerdict fatou_verdict(std::span<const Integer> coeffs, const FatouOptions& options = {});

/// {verdict, growth:{class, estimate}, recurrence:{order, coeffs}|null,
///  bounds:{K, G, N}, explanation}
std::string to_json(const DichotomyVerdict& v);

struct HardyRamanujan {
  std::size_t n;
  Integer exact;           ///< p_n
  std::string asymptotic;  ///< exp(pi sqrt(2n/3)) / (4 n sqrt 3), 30 significant digits
  double ratio;            ///< p_n / asymptotic
};

/// Throws InvalidSpecError for n = 0.
HardyRamanujan hr_compare(std::size_t n);

}  // namespace hilbert
