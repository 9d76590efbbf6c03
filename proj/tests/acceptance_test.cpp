// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tracelab/carlen.hpp"
#include "tracelab/cli.hpp"
#include "tracelab/entlab.hpp"
#include "tracelab/errors.hpp"
#include "tracelab/frechet.hpp"
#include "tracelab/orderineq.hpp"
#include "tracelab/reprmeasure.hpp"
#include "tracelab/suites.hpp"

namespace {

using namespace tracelab;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 42;
constexpr double kSampledTol = 1e-9;
constexpr double kIdentityTol = 1e-10;
constexpr double kBlockTol = 1e-9;
constexpr double kReconstructionTol = 1e-5;
constexpr double kHpZeroTol = 1e-12;
constexpr double kHalfPowerTol = 1e-10;
constexpr double kWitnessTol = 1e-9;
constexpr double kScalarEqualityTol = 1e-12;
constexpr double kFiniteDifferenceTol = 1e-6;
constexpr double kRoundTripTol = 1e-9;
constexpr double kDirectionalTol = 1e-5;
constexpr double kEntropySuiteSeconds = 10.0;
constexpr double kFullRunSeconds = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "[x] ") + what;
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

PropertyReport suite(const std::string& name, std::size_t trials) {
  SuiteOptions o;
  o.trials = trials;
  o.seed = kSeed;
  return run_suite(*find_suite(name), o);
}

void require_suite(Outcome& out, const std::string& name, std::size_t trials) {
  const auto r = suite(name, trials);
  out.require(r.passed, name + " max " + sci(r.max_violation) + " (tol " + sci(r.tolerance) + ")");
}

Outcome criterion1() {
  Outcome out;
  const auto start = Clock::now();
  const auto r = suite("theorem1", 500);
  const double secs = seconds_since(start);
  out.require(r.passed && r.dim == 6, "theorem1 n=m in 2..6, max " + sci(r.max_violation) + " (tol " + sci(kSampledTol) + ")");
  out.require(secs < kEntropySuiteSeconds, "runtime " + sci(secs) + " s");
  return out;
}

Outcome criterion2() {
  Outcome out;
  require_suite(out, "residual-entropy", 500);
  Rng base(kSeed, 2);
  double identity = 0, positive = -1e300, block = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng r = base.split(i);
    const auto n = static_cast<Eigen::Index>(r.uniform_int(2, 6));
    std::vector<PositiveMatrix> blocks;
    for (std::uint64_t j = 0, k = r.uniform_int(2, 4); j < k; ++j) blocks.push_back(random_pd(n, r, 100.0));
    const BlockFamily fam(blocks);
    const double v = residual_entropy(fam);
    identity = std::max(identity, std::abs(v - residual_entropy_via_relative(fam)));
    positive = std::max(positive, v);
    block = std::max(block, std::abs(v - residual_entropy_via_blocks(fam)));
  }
  out.require(identity <= kIdentityTol, "relative-entropy identity " + sci(identity));
  out.require(positive <= kIdentityTol, "max value " + sci(positive) + " <= 1e-10");
  out.require(block <= kBlockTol, "block construction " + sci(block));
  return out;
}

Outcome criterion3() {
  Outcome out;
  require_suite(out, "entropy-gain", 300);
  require_suite(out, "multi-channel-gain", 300);
  Rng base(kSeed, 3);
  double unitary = 0, residual = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng r = base.split(i);
    const auto n = static_cast<Eigen::Index>(r.uniform_int(1, 4));
    const auto m = static_cast<Eigen::Index>(r.uniform_int(1, 4));
    const auto need = std::max<Eigen::Index>((n + m - 1) / m, 1);
    const auto k = static_cast<Eigen::Index>(r.uniform_int(static_cast<std::uint64_t>(need), 5));
    residual = std::max(residual, random_channel(n, m, k, r).normalization_residual());
    const KrausChannel u = KrausChannel::unitary(random_unitary(n, r));
    unitary = std::max(unitary, std::abs(entropy_gain(u, random_pd(n, r, 100.0))));
  }
  out.require(unitary <= kIdentityTol, "unitary gain " + sci(unitary));
  out.require(residual <= kIdentityTol, "Kraus residual " + sci(residual));
  return out;
}

Outcome criterion4() {
  Outcome out;
  require_suite(out, "carlen-concave", 300);
  require_suite(out, "carlen-convex", 300);
  require_suite(out, "eq1-kform-concave", 300);
  return out;
}

Outcome criterion5() {
  Outcome out;
  const auto r = suite("eq2-reconstruction", 1);
  std::string worst = r.witness.is_object() && r.witness.contains("p") ? " at p=" + r.witness["p"].dump() : "";
  out.require(r.passed && r.tolerance == kReconstructionTol,
              "reconstruction max rel " + sci(r.max_violation) + worst + " (tol " + sci(kReconstructionTol) + ")");
  bool signs = true;
  for (const double p : {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75}) {
    for (int i = 0; i < 30; ++i) {
      const double lam = std::pow(10.0, -3.0 + 6.0 * i / 29.0);
      const double h = weight_hp(lam, p);
      if (p < 1 && h < 0) signs = false;
      if (p > 1 && h > 0) signs = false;
      if (p == 1 && std::abs(h) > kHpZeroTol) signs = false;
    }
  }
  out.require(signs, "h_p sign pattern");
  double half = 0;
  for (int i = 0; i < 30; ++i) {
    const double lam = std::pow(10.0, -3.0 + 6.0 * i / 29.0);
    const double exact = 2 * std::sqrt(lam) / std::numbers::pi;
    half = std::max(half, std::abs(weight_hp(lam, 0.5) - exact) / std::max(1.0, exact));
  }
  out.require(half <= kHalfPowerTol, "h_1/2 closed form " + sci(half));
  return out;
}

Outcome criterion6() {
  Outcome out;
  require_suite(out, "op-monotone-proot", 300);
  require_suite(out, "op-convex-proot", 300);
  const Rng rng(kSeed, 6);
  const auto mono = op_monotone_check(ScalarFunction::power(2), 3, 300, rng);
  out.require(!mono.passed && mono.witness.contains("first"), "Power(2) monotone control fails, violation " + sci(mono.max_violation));
  const auto conv = op_convex_check(ScalarFunction::power(3), 3, 300, rng);
  out.require(!conv.passed && conv.witness.contains("first"), "Power(3) convex control fails, violation " + sci(conv.max_violation));
  return out;
}

Outcome criterion7() {
  Outcome out;
  require_suite(out, "variational", 200);
  Rng base(kSeed, 7);
  double witness = 0, scalar = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng r = base.split(i);
    const auto n = static_cast<Eigen::Index>(r.uniform_int(1, 5));
    const ComplexMatrix u = random_unitary(n, r);
    RealVector la(n), lb(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      la(j) = std::exp(r.uniform(-2.3, 2.3));
      lb(j) = std::exp(r.uniform(-2.3, 2.3));
    }
    const PositiveMatrix a(HermitianMatrix(ComplexMatrix(u * la.cast<Complex>().asDiagonal() * u.adjoint())));
    const PositiveMatrix b(HermitianMatrix(ComplexMatrix(u * lb.cast<Complex>().asDiagonal() * u.adjoint())));
    for (const double p : {0.3, 0.5, 0.8}) {
      const auto s = variational_bound(a, b, variational_witness(a, b, p), p);
      witness = std::max(witness, std::abs(s.lhs - s.rhs));
      const double x = la(0), y = lb(0);
      const double star = std::pow(x, p) / (std::pow(x, p) + std::pow(y, p));
      const auto sc = scalar_variational(x, y, star, p);
      scalar = std::max(scalar, std::abs(sc.lhs - sc.rhs) / (1 + sc.lhs));
    }
  }
  out.require(witness <= kWitnessTol, "commuting witness " + sci(witness));
  out.require(scalar <= kScalarEqualityTol, "scalar equality " + sci(scalar));
  return out;
}

Outcome criterion8() {
  Outcome out;
  require_suite(out, "dd-integral-identity", 1);
  require_suite(out, "divided-diff-concave", 300);
  return out;
}

Outcome criterion9() {
  Outcome out;
  Rng base(kSeed, 9);
  const std::vector<ScalarFunction> fs{ScalarFunction::power(0.3), ScalarFunction::power(0.7), ScalarFunction::xlogx(),
                                       ScalarFunction::log()};
  double fd = 0, round = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng r = base.split(i);
    const auto n = static_cast<Eigen::Index>(r.uniform_int(2, 5));
    const auto& f = fs[i % fs.size()];
    const PositiveMatrix x = random_pd(n, r, 100.0);
    const HermitianMatrix h = random_hermitian(n, r);
    const double eps = 1e-5 / (1 + max_abs(h.matrix()));
    const ComplexMatrix plus = apply_fn(f, HermitianMatrix(ComplexMatrix(x.matrix() + eps * h.matrix()))).matrix();
    const ComplexMatrix minus = apply_fn(f, HermitianMatrix(ComplexMatrix(x.matrix() - eps * h.matrix()))).matrix();
    const ComplexMatrix oracle = (plus - minus) / (2 * eps);
    fd = std::max(fd, max_abs(frechet_diff(f, x, h).matrix() - oracle) / max_abs(oracle));
    const auto pw = ScalarFunction::power(0.3 + 0.7 * r.uniform());
    const ComplexMatrix back = frechet_diff(pw, x, frechet_inv(pw, x, h)).matrix();
    round = std::max(round, max_abs(back - h.matrix()) / (1 + max_abs(h.matrix())));
  }
  out.require(fd <= kFiniteDifferenceTol, "finite difference " + sci(fd));
  out.require(round <= kRoundTripTol, "inverse round trip " + sci(round));
  require_suite(out, "thm41-concave", 500);
  require_suite(out, "thm42-joint-convex", 500);
  require_suite(out, "power-mixture", 300);
  require_suite(out, "logmean-concave", 300);
  return out;
}

Outcome criterion10() {
  Outcome out;
  require_suite(out, "psi-psd", 300);
  require_suite(out, "phiq-decreasing", 300);
  Rng base(kSeed, 10);
  double directional = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng r = base.split(i);
    const double q = -1.0 + 0.25 * static_cast<double>(i % 9);
    const auto n = static_cast<Eigen::Index>(r.uniform_int(2, 5));
    const PositiveMatrix a = random_pd(n, r, 100.0);
    const ComplexMatrix k = random_contraction(n, n, r);
    const HermitianMatrix d = random_hermitian(n, r);
    const double eps = 1e-5;
    const double numeric = (phi_q(PositiveMatrix(a.hermitian() + eps * d), k, QParam(q)) -
                            phi_q(PositiveMatrix(a.hermitian() - eps * d), k, QParam(q))) /
                           (2 * eps);
    directional = std::max(directional, std::abs(numeric - phi_q_directional(a, k, QParam(q), d)) / (1 + std::abs(numeric)));
  }
  out.require(directional <= kDirectionalTol, "d phi = -Tr psi D " + sci(directional));
  require_suite(out, "jensen-contraction", 300);
  // The sign flips strictly: below s = 1 the gap is PSD with a positive bottom
  // eigenvalue, above it negative definite.
  bool flip = true;
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng r = base.split(1000 + i);
    const PositiveMatrix a = random_pd(3, r, 100.0);
    const ComplexMatrix k = r.uniform(0.2, 0.9) * random_unitary(3, r);
    for (const double s : {0.25, 0.5, 0.75}) {
      if (!(jensen_contraction_check(a, k, s).witness["min_eigenvalue"].get<double>() > 0)) flip = false;
    }
    for (const double s : {1.25, 1.5, 2.0}) {
      if (!(jensen_contraction_check(a, k, s).witness["max_eigenvalue"].get<double>() < 0)) flip = false;
    }
  }
  out.require(flip, "strict sign flip at s = 1");
  return out;
}

nlohmann::json strip_runtime(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  for (auto& r : j) r.erase("runtime_ms");
  return j;
}

Outcome criterion11() {
  Outcome out;
  const std::vector<std::string> args{"verify", "--suite", "all", "--seed", "42"};
  std::ostringstream first, second, err;
  const auto start = Clock::now();
  const int code = run_cli(args, first, err);
  const double secs = seconds_since(start);
  run_cli(args, second, err);
  out.require(code == 0 || code == 1, "exit code " + std::to_string(code));
  out.require(strip_runtime(first.str()).dump() == strip_runtime(second.str()).dump(), "byte-identical JSON without runtime_ms");
  out.require(secs < kFullRunSeconds, "full run " + sci(secs) + " s");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"entropy functional convexity", criterion1},
      {"residual entropy", criterion2},
      {"entropy gain", criterion3},
      {"power-sum trace concavity/convexity", criterion4},
      {"representing measure", criterion5},
      {"operator monotone/convex", criterion6},
      {"variational bound", criterion7},
      {"divided-difference identity", criterion8},
      {"Frechet layer", criterion9},
      {"contraction order inequalities", criterion10},
      {"whole-suite determinism", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
