#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autoconj/linear_operator.hpp"

// Property suites shared by `autoconj verify` and the acceptance binary.
// Each check records the measured quantity next to the bound it was held to.

namespace autoconj::suites {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  bool pass() const;
  std::string summary() const;
};

struct CoincidenceConfig {
  int max_dim = 3;
  int trials = 20;
  int points = 50;
  std::uint64_t seed = 20240601;
};

SuiteResult coincidence(const CoincidenceConfig& cfg = {});
SuiteResult rotation_forms();
/// Without an operator: Id, the two coordinate slices of diag(1,2) and the
/// scalar 2 on [-3,3]^2 with m = 241. With one: its Ghoussoub representer on
/// a joint grid with m nodes per axis.
SuiteResult autoconj(const std::optional<Matrix>& op = std::nullopt, int m = 0);
SuiteResult graph(const std::optional<Matrix>& op = std::nullopt);
SuiteResult neglog_domains();
SuiteResult idfam();
SuiteResult sum_identity(int pairs = 10, std::uint64_t seed = 7);
SuiteResult hoe(int operators = 10, std::uint64_t seed = 11);
SuiteResult truncation(long long n_max = 1000000);

/// Names accepted by run_named: coincidence, rotation, autoconj, graph,
/// neglog-domains, idfam, sum-identity, hoe, truncation.
const std::vector<std::string>& suite_names();

}  // namespace autoconj::suites
