#pragma once

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracelab/matcore.hpp"

namespace tracelab {

enum class Claim { Convex, Concave, JointlyConvex, JointlyConcave, Monotone, PSD, Identity, Inequality };
enum class Direction { Increasing, Decreasing };

std::string_view to_string(Claim claim);

/// Outcome of one sampled verification. `passed` is true iff
/// max_violation <= tolerance; evaluator errors set max_violation to +inf.
struct PropertyReport {
  std::string suite;
  Claim claim = Claim::Identity;
  std::size_t trials = 0;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  double max_violation = 0.0;
  nlohmann::json witness;  // null when nothing was recorded
  std::size_t errors = 0;
  std::string first_error;
  double runtime_ms = 0.0;
  bool passed = true;

  void finalize() { passed = max_violation <= tolerance; }
};

/// One sampled point: two argument tuples to combine plus per-trial context
/// that is held fixed (e.g. K in Tr K*g(L_A,R_B)(K)).
struct Draw {
  std::vector<ComplexMatrix> first;
  std::vector<ComplexMatrix> second;
  std::vector<ComplexMatrix> fixed;
  std::vector<double> scalars;
  std::size_t dim = 0;
};

enum class ArgKind { PositiveDefinite, Hermitian, Contraction, UnitInterval };

struct FunctionalUnderTest {
  std::string name;
  /// Zero accepts any tuple length as long as both tuples agree.
  std::size_t arity = 1;
  std::function<Draw(Rng&)> sampler;
  std::function<double(std::span<const ComplexMatrix>, const Draw&)> evaluator;
};

struct MatrixClaimUnderTest {
  std::string name;
  std::function<Draw(Rng&)> sampler;
  std::function<HermitianMatrix(const Draw&)> evaluator;
};

struct HarnessOptions {
  unsigned threads = 1;
  /// Condition-number cap for PositiveDefinite arguments.
  double cond_cap = 100.0;
};

/// Sampler drawing dim uniformly in [dim_lo, dim_hi] and one square matrix per kind.
std::function<Draw(Rng&)> standard_sampler(std::vector<ArgKind> kinds, std::size_t dim_lo,
                                           std::size_t dim_hi, double cond_cap = 100.0);

/// Per trial: lambda in {1/2, uniform(0,1)}; violation is
/// +-[F(lam u + (1-lam) v) - lam F(u) - (1-lam) F(v)] / (1 + max|F|).
PropertyReport jensen_test(const FunctionalUnderTest& fut, Claim claim, std::size_t trials,
                           const Rng& rng, double tol, const HarnessOptions& options = {});

/// Per trial: A from the sampler's first argument, D a random PSD increment;
/// violation is the normalized amount by which F(A + D) moves against `direction`.
PropertyReport order_monotone_test(const FunctionalUnderTest& fut, Direction direction,
                                   std::size_t trials, const Rng& rng, double tol,
                                   const HarnessOptions& options = {});

/// Violation = max(0, -lambda_min(M)) / (1 + |M|).
PropertyReport psd_claim_test(const MatrixClaimUnderTest& claim, std::size_t trials, const Rng& rng,
                              double tol, const HarnessOptions& options = {});

/// Result of one trial of a custom check.
struct TrialOutcome {
  double violation = 0.0;
  nlohmann::json witness;
  std::size_t dim = 0;
};

/// Generic driver: trial i runs `trial(rng.split(i), i)`. Reduction keeps the
/// largest violation, ties resolved by the lowest trial index, so the report
/// does not depend on `threads`.
PropertyReport run_trials(std::string suite, Claim claim, std::size_t trials, const Rng& rng,
                          double tol, const std::function<TrialOutcome(Rng&, std::size_t)>& trial,
                          unsigned threads = 1);

/// Combines sub-reports of one suite (e.g. a parameter grid); the witness of
/// the worst case is kept and tagged with its label.
PropertyReport merge_reports(std::string suite, Claim claim, double tol,
                             const std::vector<std::pair<std::string, PropertyReport>>& parts);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json draw_to_json(const Draw& draw);
Draw draw_from_json(const nlohmann::json& j);

/// {suite, claim, trials, dim, seed, tol, max_violation, verdict, witness?, runtime_ms}
nlohmann::json report_to_json(const PropertyReport& report, bool include_runtime = true);

}  // namespace tracelab
