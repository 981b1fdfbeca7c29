#pragma once

// Hilbert series of the four constructions: the closed formulas, direct
// counting from the basis descriptions, and a cross-check harness.

#include <hilbert/powseries.hpp>
#include <hilbert/presentations.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hilbert {

/// Exact expansion of the variant's Hilbert-series formula through degree N:
///   theorem1     1/(1-dt) + t/(1-dt)^2 + t^2 a(t)/(1-dt)^p
///   corollary12  1/(1-dt) + t/(1-dt)^2 + t^2 a(t)/((1-dt)^p (1-t)^{dq})
///   remark13     (1+2t)/(1-dt) - t + t^2 a(t)
///   theorem14    1/(1-t)^d + t/(1-t)^{2d} + t^2 a(t)/(1-t)^{dp}
/// The base series must be realizable over X_d (CapacityError otherwise).
IntSeries closed_form(const ConstructionSpec& spec, std::size_t order);

/// Dimension counts read off the basis u, u_1 y u_2, u_1 y v y u_2 (v in A),
/// with each side contributing d^k (free), C(k+d-1, d-1) (symmetrized or
/// commuting) or [k = 0] (killed) at length k.
IntSeries structured_count(const ConstructionSpec& spec, std::size_t order);

enum class Method { kClosedForm, kStructured, kAutomaton, kBruteForce };
std::string to_string(Method m);

enum class EngineChoice { kAuto, kAutomaton, kBruteForce, kStructured };
EngineChoice parse_engine(std::string_view text);

struct VerifyOptions {
  EngineChoice engine = EngineChoice::kAuto;
  /// kAuto adds brute force when alphabet^N stays below this bound.
  double auto_bruteforce_limit = 1e6;
  /// Test hook: add 1 to the closed-form coefficient at this degree.
  std::optional<std::size_t> perturb_closed_form_at;
};

struct MethodResult {
  Method method;
  IntSeries dims;
  double millis;
};

struct VerificationReport {
  ConstructionSpec spec;
  std::size_t order;
  std::vector<MethodResult> results;
  std::optional<std::size_t> first_mismatch;
  bool agreement;
  std::vector<std::string> notes;
};

/// Runs closed_form and structured_count, plus the word-counting engines the
/// options select for monomial variants, and compares everything degree by
/// degree. A mismatch is reported, not thrown. Requesting the automaton or
/// brute-force engine for a non-monomial variant throws UnsupportedVariantError.
VerificationReport verify(const ConstructionSpec& spec, std::size_t order, const VerifyOptions& options = {});

}  // namespace hilbert
