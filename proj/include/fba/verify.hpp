#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fba/lincomb.hpp"

namespace fba {

/// Settings shared by the CLI and the verification suites. Unset fields fall
/// back to each suite's own defaults.
struct RunConfig {
  std::optional<std::vector<std::string>> omega;
  std::optional<std::vector<std::string>> xset;
  std::optional<std::size_t> max_vertices;
  std::optional<Rational> eval_lambda;
  std::optional<Rational> eval_mu;
  std::optional<Rational> eval_nu;
  bool json = false;
  std::size_t workers = 1;

  bool evaluates() const { return eval_lambda || eval_mu || eval_nu; }
  /// `omega`/`xset` when given, otherwise the fallback lists.
  Alphabet alphabet(std::vector<std::string> omega_default, std::vector<std::string> xset_default) const;
};

struct Failure {
  std::string check;
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // the first few, in enumeration order
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool ok() const { return failure_count == 0; }
  std::string text(bool with_time = true) const;
  /// {"suite", "cases", "failures", "ok", ...}; stable key order.
  std::string json(bool with_time = true) const;
};

/// Number of failures kept verbatim in a report.
inline constexpr std::size_t kKeptFailures = 20;

const std::vector<std::string>& suite_names();

/// Runs one suite. Throws UnknownSuiteError for a bad name and PoleError
/// when an evaluation point hits lambda = 0 against a negative power.
SuiteReport run_suite(const std::string& name, const RunConfig& config);

/// One golden fixture: a paper display transcribed by hand, and the value the
/// library computes for the same input.
struct GoldenCase {
  std::string name;
  std::string expected;  // canonical text of the transcription
  std::string actual;    // canonical text of the computed value
};
std::vector<GoldenCase> golden_cases();

namespace detail {

/// Collects failures from cases numbered 0..n-1, possibly on several
/// workers, and merges them in case order.
class CaseRunner {
 public:
  CaseRunner(const RunConfig& config, SuiteReport& report) : config_(config), report_(report) {}

  /// `body(i, fail)` checks case i and calls `fail(...)` for each violation.
  using FailFn = std::function<void(Failure)>;
  void run(std::size_t n, const std::function<void(std::size_t, const FailFn&)>& body);

 private:
  const RunConfig& config_;
  SuiteReport& report_;
};

}  // namespace detail

}  // namespace fba
