#include "tracelab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "tracelab/errors.hpp"

namespace tracelab {

namespace {

using nlohmann::json;

struct Best {
  double violation = -std::numeric_limits<double>::infinity();
  std::size_t index = 0;
  json witness;
  std::size_t dim = 0;
  std::size_t errors = 0;
  std::size_t first_error_index = std::numeric_limits<std::size_t>::max();
  std::string first_error;
  bool seen = false;

  void offer(double v, std::size_t i, json w, std::size_t d) {
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    dim = std::max(dim, d);
    if (!seen || v > violation || (v == violation && i < index)) {
      violation = v;
      index = i;
      witness = std::move(w);
      seen = true;
    }
  }

  void error(std::size_t i, std::string message) {
    ++errors;
    if (i < first_error_index) {
      first_error_index = i;
      first_error = std::move(message);
    }
  }

  void absorb(Best&& other) {
    errors += other.errors;
    if (other.first_error_index < first_error_index) {
      first_error_index = other.first_error_index;
      first_error = std::move(other.first_error);
    }
    dim = std::max(dim, other.dim);
    if (other.seen) offer(other.violation, other.index, std::move(other.witness), other.dim);
  }
};

double scale_of(std::initializer_list<double> values) {
  double s = 0.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return 1.0 + s;
}

std::vector<ComplexMatrix> combine(const std::vector<ComplexMatrix>& u,
                                   const std::vector<ComplexMatrix>& v, double lam) {
  std::vector<ComplexMatrix> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.emplace_back(lam * u[i] + (1.0 - lam) * v[i]);
  return out;
}

}  // namespace

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::Convex: return "Convex";
    case Claim::Concave: return "Concave";
    case Claim::JointlyConvex: return "JointlyConvex";
    case Claim::JointlyConcave: return "JointlyConcave";
    case Claim::Monotone: return "Monotone";
    case Claim::PSD: return "PSD";
    case Claim::Identity: return "Identity";
    case Claim::Inequality: return "Inequality";
  }
  return "Unknown";
}

std::function<Draw(Rng&)> standard_sampler(std::vector<ArgKind> kinds, std::size_t dim_lo,
                                           std::size_t dim_hi, double cond_cap) {
  if (dim_lo < 1 || dim_hi < dim_lo) throw ArgumentError("standard_sampler: bad dimension range");
  return [kinds = std::move(kinds), dim_lo, dim_hi, cond_cap](Rng& rng) {
    Draw draw;
    draw.dim = rng.uniform_int(dim_lo, dim_hi);
    const auto n = static_cast<Eigen::Index>(draw.dim);
    auto sample = [&](ArgKind kind) -> ComplexMatrix {
      switch (kind) {
        case ArgKind::PositiveDefinite: return random_pd(n, rng, cond_cap).matrix();
        case ArgKind::Hermitian: return random_hermitian(n, rng).matrix();
        case ArgKind::Contraction: return random_contraction(n, n, rng);
        case ArgKind::UnitInterval: {
          RealVector u(n);
          for (Eigen::Index i = 0; i < n; ++i) u(i) = rng.uniform(1e-3, 1.0 - 1e-3);
          const ComplexMatrix v = random_unitary(n, rng);
          return v * u.cast<Complex>().asDiagonal() * v.adjoint();
        }
      }
      return {};
    };
    for (ArgKind k : kinds) draw.first.push_back(sample(k));
    for (ArgKind k : kinds) draw.second.push_back(sample(k));
    return draw;
  };
}

PropertyReport run_trials(std::string suite, Claim claim, std::size_t trials, const Rng& rng,
                          double tol, const std::function<TrialOutcome(Rng&, std::size_t)>& trial,
                          unsigned threads) {
  if (trials < 1) throw ArgumentError("run_trials: trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));

  auto worker = [&](unsigned w) {
    Best best;
    for (std::size_t i = w; i < trials; i += threads) {
      Rng local = rng.split(i);
      try {
        TrialOutcome out = trial(local, i);
        out.witness["trial"] = i;
        best.offer(out.violation, i, std::move(out.witness), out.dim);
      } catch (const std::exception& e) {
        best.error(i, e.what());
        best.offer(std::numeric_limits<double>::infinity(), i,
                   json{{"trial", i}, {"error", e.what()}}, 0);
      }
    }
    return best;
  };

  Best total;
  if (threads == 1) {
    total = worker(0);
  } else {
    std::vector<Best> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back([&, w] { partial[w] = worker(w); });
    for (auto& t : pool) t.join();
    for (auto& p : partial) total.absorb(std::move(p));
  }

  PropertyReport report;
  report.suite = std::move(suite);
  report.claim = claim;
  report.trials = trials;
  report.dim = total.dim;
  report.seed = rng.seed();
  report.tolerance = tol;
  report.max_violation = total.violation;
  report.witness = std::move(total.witness);
  report.errors = total.errors;
  report.first_error = std::move(total.first_error);
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.finalize();
  return report;
}

PropertyReport jensen_test(const FunctionalUnderTest& fut, Claim claim, std::size_t trials,
                           const Rng& rng, double tol, const HarnessOptions& options) {
  const double sign = (claim == Claim::Concave || claim == Claim::JointlyConcave) ? -1.0 : 1.0;
  if (claim != Claim::Convex && claim != Claim::Concave && claim != Claim::JointlyConvex &&
      claim != Claim::JointlyConcave) {
    throw ArgumentError("jensen_test: claim must be a convexity or concavity claim");
  }
  auto trial = [&](Rng& local, std::size_t) {
    const Draw draw = fut.sampler(local);
    const bool arity_ok = fut.arity == 0 ? draw.first.size() == draw.second.size()
                                         : draw.first.size() == fut.arity && draw.second.size() == fut.arity;
    if (!arity_ok) {
      throw ArgumentError("jensen_test: sampler arity does not match functional arity");
    }
    const double fu = fut.evaluator(draw.first, draw);
    const double fv = fut.evaluator(draw.second, draw);
    TrialOutcome out;
    out.dim = draw.dim;
    out.violation = -std::numeric_limits<double>::infinity();
    for (const double lam : {0.5, local.uniform_open()}) {
      const auto mix = combine(draw.first, draw.second, lam);
      const double fm = fut.evaluator(mix, draw);
      double gap = sign * (fm - lam * fu - (1.0 - lam) * fv) / scale_of({fu, fv, fm});
      if (std::isnan(gap)) gap = std::numeric_limits<double>::infinity();
      if (gap > out.violation) {
        out.violation = gap;
        out.witness = draw_to_json(draw);
        out.witness["lambda"] = lam;
        out.witness["values"] = {{"f_first", fu}, {"f_second", fv}, {"f_mix", fm}};
      }
    }
    return out;
  };
  return run_trials(fut.name, claim, trials, rng, tol, trial, options.threads);
}

PropertyReport order_monotone_test(const FunctionalUnderTest& fut, Direction direction,
                                   std::size_t trials, const Rng& rng, double tol,
                                   const HarnessOptions& options) {
  if (fut.arity != 1) throw ArgumentError("order_monotone_test: functional must have arity 1");
  auto trial = [&](Rng& local, std::size_t) {
    Draw draw = fut.sampler(local);
    const ComplexMatrix& a = draw.first.at(0);
    const ComplexMatrix d = random_psd_increment(a.rows(), local).matrix();
    const double fa = fut.evaluator(std::span<const ComplexMatrix>(&a, 1), draw);
    const ComplexMatrix moved = a + d;
    const double fb = fut.evaluator(std::span<const ComplexMatrix>(&moved, 1), draw);
    const double against = direction == Direction::Increasing ? fa - fb : fb - fa;
    TrialOutcome out;
    out.dim = draw.dim;
    out.violation = against / scale_of({fa, fb});
    draw.second = {d};
    out.witness = draw_to_json(draw);
    out.witness["values"] = {{"f_a", fa}, {"f_a_plus_d", fb}};
    return out;
  };
  return run_trials(fut.name, Claim::Monotone, trials, rng, tol, trial, options.threads);
}

PropertyReport psd_claim_test(const MatrixClaimUnderTest& claim, std::size_t trials, const Rng& rng,
                              double tol, const HarnessOptions& options) {
  auto trial = [&](Rng& local, std::size_t) {
    const Draw draw = claim.sampler(local);
    const HermitianMatrix m = claim.evaluator(draw);
    const auto eig = eigh(m);
    const double low = eig.dim() > 0 ? eig.lambda(0) : 0.0;
    const double norm = eig.dim() > 0 ? eig.lambda.cwiseAbs().maxCoeff() : 0.0;
    TrialOutcome out;
    out.dim = draw.dim;
    out.violation = std::max(0.0, -low) / (1.0 + norm);
    out.witness = draw_to_json(draw);
    out.witness["values"] = {{"min_eigenvalue", low}, {"norm", norm}};
    return out;
  };
  return run_trials(claim.name, Claim::PSD, trials, rng, tol, trial, options.threads);
}

PropertyReport merge_reports(std::string suite, Claim claim, double tol,
                             const std::vector<std::pair<std::string, PropertyReport>>& parts) {
  PropertyReport merged;
  merged.suite = std::move(suite);
  merged.claim = claim;
  merged.tolerance = tol;
  merged.max_violation = -std::numeric_limits<double>::infinity();
  bool first = true;
  for (const auto& [label, part] : parts) {
    if (first) merged.seed = part.seed;
    merged.trials += part.trials;
    merged.dim = std::max(merged.dim, part.dim);
    merged.runtime_ms += part.runtime_ms;
    merged.errors += part.errors;
    if (merged.first_error.empty() && !part.first_error.empty()) {
      merged.first_error = label + ": " + part.first_error;
    }
    if (first || part.max_violation > merged.max_violation) {
      merged.max_violation = part.max_violation;
      merged.witness = part.witness;
      if (merged.witness.is_null()) merged.witness = json::object();
      merged.witness["case"] = label;
    }
    first = false;
  }
  merged.finalize();
  return merged;
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != rows * cols ||
      static_cast<Eigen::Index>(im.size()) != rows * cols) {
    throw ArgumentError("matrix_from_json: entry count does not match shape");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j2 = 0; j2 < cols; ++j2) {
      const auto idx = static_cast<std::size_t>(i * cols + j2);
      m(i, j2) = Complex(re[idx].get<double>(), im[idx].get<double>());
    }
  }
  return m;
}

json draw_to_json(const Draw& draw) {
  auto list = [](const std::vector<ComplexMatrix>& ms) {
    json arr = json::array();
    for (const auto& m : ms) arr.push_back(matrix_to_json(m));
    return arr;
  };
  return {{"dim", draw.dim},
          {"first", list(draw.first)},
          {"second", list(draw.second)},
          {"fixed", list(draw.fixed)},
          {"scalars", draw.scalars}};
}

Draw draw_from_json(const json& j) {
  Draw draw;
  draw.dim = j.at("dim").get<std::size_t>();
  for (const auto& m : j.at("first")) draw.first.push_back(matrix_from_json(m));
  for (const auto& m : j.at("second")) draw.second.push_back(matrix_from_json(m));
  for (const auto& m : j.at("fixed")) draw.fixed.push_back(matrix_from_json(m));
  draw.scalars = j.at("scalars").get<std::vector<double>>();
  return draw;
}

json report_to_json(const PropertyReport& report, bool include_runtime) {
  json j = {{"suite", report.suite},
            {"claim", std::string(to_string(report.claim))},
            {"trials", report.trials},
            {"dim", report.dim},
            {"seed", report.seed},
            {"tol", report.tolerance}};
  if (std::isfinite(report.max_violation)) {
    j["max_violation"] = report.max_violation;
  } else {
    j["max_violation"] = report.max_violation > 0 ? "inf" : "-inf";
  }
  j["verdict"] = report.passed ? "pass" : "fail";
  if (!report.passed && !report.witness.is_null()) j["witness"] = report.witness;
  if (report.errors > 0) {
    j["errors"] = report.errors;
    j["first_error"] = report.first_error;
  }
  if (include_runtime) j["runtime_ms"] = report.runtime_ms;
  return j;
}

}  // namespace tracelab
