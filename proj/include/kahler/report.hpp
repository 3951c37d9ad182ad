#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace kahler {

/// One counterexample from a randomized check.  All three fields are
/// canonical prints, so a witness can be fed back through the parser and
/// re-evaluated.
struct CheckFailure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

/// Result of one check suite (one axiom / one law).
struct CheckReport {
  std::string axiom;        // e.g. "d2", "leibniz", "mu-assoc"
  std::uint64_t seed = 0;
  std::size_t samples = 0;  // number of instances checked
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
  nlohmann::ordered_json to_json() const;
};

bool all_ok(const std::vector<CheckReport>& reports);
nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& rs);
/// Human-readable one-line-per-suite summary.
std::string summarize(const std::vector<CheckReport>& rs);

/// Knobs shared by every randomized checker.  Defaults follow the library
/// convention: 100 samples, degree <= 4, coefficients in [-9, 9].
struct CheckConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::uint32_t max_degree = 4;
  std::size_t max_terms = 4;
  bool parallel = true;  // sample sweeps may run on OpenMP threads
};

}  // namespace kahler
