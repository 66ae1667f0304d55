#pragma once

// Batteries of exact checks, grouped in named suites, with structured reports.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace drsocle {

struct VerifyConfig {
  int q_order = 20;
  int w_order = 8;
  int g_max = 6;
  int n_max = 6;
  std::uint64_t seed = 20240601;
  /// Restrict the topweight suite to one genus / one vertex count.
  std::optional<int> g;
  std::optional<int> m;
};

struct CheckResult {
  std::string id;
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  /// Mismatch location or both sides of a failed identity.
  std::optional<nlohmann::json> witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  nlohmann::json config;

  [[nodiscard]] bool all_pass() const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite. "all" runs every suite.
SuiteReport run_suite(const std::string& suite, const VerifyConfig& config);

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const VerifyConfig& c);

}  // namespace drsocle
