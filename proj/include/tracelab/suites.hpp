#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracelab/harness.hpp"
#include "tracelab/params.hpp"

namespace tracelab {

struct SuiteOptions {
  std::size_t trials = 300;
  std::uint64_t seed = 42;
  /// Overrides the suite's own tolerance.
  std::optional<double> tol;
  /// Caps the largest sampled dimension; each suite keeps its own lower bound.
  std::optional<std::size_t> max_dim;
  ParamMap params;
  unsigned threads = 1;
};

struct Suite {
  std::string name;
  Claim claim;
  double default_tol;
  std::string summary;
  std::function<PropertyReport(const SuiteOptions&)> run;
};

/// All registered suites in a fixed order.
const std::vector<Suite>& suite_registry();

/// nullptr when no suite has this name.
const Suite* find_suite(std::string_view name);

/// Runs one suite and stamps seed, tolerance and runtime on the report.
PropertyReport run_suite(const Suite& suite, const SuiteOptions& options);

}  // namespace tracelab
