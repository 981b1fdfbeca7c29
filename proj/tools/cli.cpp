#include "cli.hpp"

#include <hilbert/analysis.hpp>
#include <hilbert/constructions.hpp>
#include <hilbert/engine.hpp>
#include <hilbert/errors.hpp>
#include <hilbert/powseries.hpp>
#include <hilbert/presentations.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace hilbert::cli {

namespace {

enum class Format { kList, kTable, kCsv, kJson };

struct Options {
  std::string series = "zero";
  std::size_t max_degree = 10;
  std::string variant = "theorem1";
  unsigned d = 2;
  unsigned p = 2;
  unsigned q = 0;
  std::string engine = "auto";
  std::string presentation;
  std::string coeffs_file;
  std::size_t max_order = 12;
  std::size_t guard = 20;
  std::size_t hr_n = 100;
  std::string format = "list";
  std::optional<std::size_t> perturb;
  bool timings = false;
};

Format parse_format(const std::string& text) {
  if (text == "list") return Format::kList;
  if (text == "table") return Format::kTable;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw InvalidSpecError("unknown format '" + text + "'");
}

void print_coefficients(std::ostream& out, const IntSeries& s, Format format) {
  switch (format) {
    case Format::kList:
      for (std::size_t n = 0; n < s.size(); ++n) out << (n ? "," : "") << s[n].get_str();
      out << '\n';
      break;
    case Format::kTable: {
      std::size_t width = std::string("degree").size();
      width = std::max(width, std::to_string(s.order()).size());
      out << std::setw(static_cast<int>(width)) << "degree" << "  coefficient\n";
      for (std::size_t n = 0; n < s.size(); ++n) {
        out << std::setw(static_cast<int>(width)) << n << "  " << s[n].get_str() << '\n';
      }
      break;
    }
    case Format::kCsv:
      out << "degree,coefficient\n";
      for (std::size_t n = 0; n < s.size(); ++n) out << n << ',' << s[n].get_str() << '\n';
      break;
    case Format::kJson: {
      auto array = nlohmann::json::array();
      for (const auto& c : s.coeffs()) array.push_back(c.get_str());
      out << array.dump() << '\n';
      break;
    }
  }
}

std::string join(const IntSeries& s) {
  std::string text;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (n) text += ',';
    text += s[n].get_str();
  }
  return text;
}

ConstructionSpec construction_from(const Options& o) {
  ConstructionSpec spec{parse_variant(o.variant), o.d, o.p, o.q, parse_series_spec(o.series)};
  validate(spec);
  return spec;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const ConstructionSpec spec = construction_from(o);
  VerifyOptions options;
  options.engine = parse_engine(o.engine);
  options.perturb_closed_form_at = o.perturb;
  const VerificationReport report = verify(spec, o.max_degree, options);

  out << describe(spec) << " through degree " << o.max_degree << '\n';
  std::size_t width = 0;
  for (const auto& r : report.results) width = std::max(width, to_string(r.method).size());
  for (const auto& r : report.results) {
    out << std::left << std::setw(static_cast<int>(width)) << to_string(r.method) << std::right << "  " << join(r.dims)
        << '\n';
    if (o.timings) err << to_string(r.method) << ": " << std::fixed << std::setprecision(3) << r.millis << " ms\n";
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  if (report.agreement) {
    out << "agreement: " << report.results.size() << " methods agree through degree " << o.max_degree << '\n';
    return kOk;
  }
  out << "MISMATCH at degree " << *report.first_mismatch << '\n';
  return kMismatch;
}

int do_hr(const Options& o, std::ostream& out) {
  const HardyRamanujan hr = hr_compare(o.hr_n);
  std::ostringstream ratio;
  ratio << std::fixed << std::setprecision(12) << hr.ratio;
  out << "n = " << hr.n << '\n'
      << "p(n) = " << hr.exact.get_str() << '\n'
      << "asymptotic = " << hr.asymptotic << '\n'
      << "ratio = " << ratio.str() << '\n';
  return kOk;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CapacityError*>(&e) || dynamic_cast<const SizeGuardError*>(&e)) return kCapacity;
  if (dynamic_cast<const DataShortageError*>(&e)) return kDataShortage;
  return kUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert series of monomial and graded algebras with prescribed growth", "hilbert"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format: list (default), table, csv or json")
        ->check(CLI::IsMember({"list", "table", "csv", "json"}));
  };
  const auto add_construction = [&](CLI::App* cmd) {
    cmd->add_option("--variant", o.variant, "theorem1, corollary12, remark13 or theorem14")->required();
    cmd->add_option("--d", o.d, "Number of x generators")->required()->check(CLI::Range(1u, 63u));
    cmd->add_option("--p", o.p, "Number of free (non-killed) sides, 0..2")->check(CLI::Range(0u, 2u));
    cmd->add_option("--q", o.q, "Symmetrized sides (corollary12)")->check(CLI::Range(0u, 2u));
    cmd->add_option("--series", o.series, "Prescribed series a(t)");
    cmd->add_option("--max-degree", o.max_degree, "Largest degree N")->required();
  };

  auto* expand_cmd = app.add_subcommand("expand", "Print the coefficients of a series");
  expand_cmd->add_option("--series", o.series, "Series spec")->required();
  expand_cmd->add_option("--max-degree", o.max_degree, "Largest degree N")->required();
  add_format(expand_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Closed-form Hilbert series of a construction");
  add_construction(construct_cmd);
  add_format(construct_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check a construction by independent counting");
  add_construction(verify_cmd);
  verify_cmd->add_option("--engine", o.engine, "auto, automaton, bruteforce or structured")
      ->check(CLI::IsMember({"auto", "automaton", "bruteforce", "structured"}));
  verify_cmd->add_flag("--timings", o.timings, "Report per-method timings on stderr");
  verify_cmd->add_option("--perturb-closed-form-at", o.perturb, "Testing aid: corrupt one closed-form coefficient");

  auto* rationalize_cmd = app.add_subcommand("rationalize", "Exact rational Hilbert series of a presentation file");
  rationalize_cmd->add_option("--presentation", o.presentation, "Presentation file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Rational versus candidate-transcendental verdict");
  analyze_cmd->add_option("--coeffs-file", o.coeffs_file, "One coefficient per line")->required();
  analyze_cmd->add_option("--max-order", o.max_order, "Recurrence order bound K");
  analyze_cmd->add_option("--guard", o.guard, "Extra validation terms G");

  auto* hr_cmd = app.add_subcommand("hr", "Compare p(n) with the Hardy-Ramanujan asymptotic");
  hr_cmd->add_option("--n", o.hr_n, "Index n >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*expand_cmd) {
      print_coefficients(out, generate(parse_series_spec(o.series), o.max_degree), parse_format(o.format));
    } else if (*construct_cmd) {
      print_coefficients(out, closed_form(construction_from(o), o.max_degree), parse_format(o.format));
    } else if (*verify_cmd) {
      return do_verify(o, out, err);
    } else if (*rationalize_cmd) {
      out << to_string(rationalize(load_presentation(o.presentation))) << '\n';
    } else if (*analyze_cmd) {
      FatouOptions options;
      options.max_order = o.max_order;
      options.guard = o.guard;
      out << to_json(fatou_verdict(load_coefficients(o.coeffs_file), options)) << '\n';
    } else if (*hr_cmd) {
      return do_hr(o, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace hilbert::cli
