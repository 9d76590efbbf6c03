#include "tracelab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "tracelab/carlen.hpp"
#include "tracelab/entlab.hpp"
#include "tracelab/errors.hpp"
#include "tracelab/frechet.hpp"
#include "tracelab/orderineq.hpp"
#include "tracelab/reprmeasure.hpp"
#include "tracelab/superop.hpp"

namespace tracelab {

namespace {

using json = nlohmann::json;
using Args = std::span<const ComplexMatrix>;
using Parts = std::vector<std::pair<std::string, PropertyReport>>;

constexpr double kCond = 100.0;

// FNV-1a keeps each suite on its own stream independent of which other suites run.
std::uint64_t stream_of(std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

struct Context {
  const SuiteOptions& opts;
  std::string name;
  double tol;
  std::size_t lo;
  std::size_t hi;
  Rng rng;
  HarnessOptions harness;

  Context(const SuiteOptions& o, std::string suite, double default_tol, std::size_t dim_lo,
          std::size_t dim_hi)
      : opts(o),
        name(std::move(suite)),
        tol(o.tol.value_or(default_tol)),
        hi(o.max_dim.value_or(dim_hi)),
        rng(o.seed, stream_of(name)) {
    lo = std::min(dim_lo, hi);
    harness.threads = o.threads;
    harness.cond_cap = kCond;
  }

  std::vector<double> grid(const std::string& key, std::vector<double> fallback) const {
    const auto it = opts.params.find(key);
    return it == opts.params.end() ? fallback : it->second;
  }

  // Sub-case c draws from its own split so grid entries stay independent.
  Rng sub(std::size_t c) const { return rng.split(0x5eedull + c); }

  Eigen::Index draw_dim(Rng& r) const {
    return static_cast<Eigen::Index>(r.uniform_int(lo, hi));
  }

  PropertyReport finish(PropertyReport rep) const {
    rep.suite = name;
    rep.dim = hi;
    rep.seed = opts.seed;
    rep.tolerance = tol;
    rep.finalize();
    return rep;
  }

  PropertyReport merge(Claim claim, const Parts& parts) const {
    return finish(merge_reports(name, claim, tol, parts));
  }
};

std::string label(std::initializer_list<std::pair<const char*, double>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ",";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%g", k, v);
    out += buf;
  }
  return out;
}

PositiveMatrix pd(const ComplexMatrix& m) { return PositiveMatrix(HermitianMatrix(m)); }

Draw pd_pair_draw(Rng& r, Eigen::Index n, std::size_t count) {
  Draw d;
  d.dim = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < count; ++i) d.first.push_back(random_pd(n, r, kCond).matrix());
  for (std::size_t i = 0; i < count; ++i) d.second.push_back(random_pd(n, r, kCond).matrix());
  return d;
}

// ---- entlab ---------------------------------------------------------------

PropertyReport suite_theorem1(const SuiteOptions& o) {
  Context c(o, "theorem1", 1e-9, 2, 6);
  FunctionalUnderTest fut;
  fut.name = c.name;
  fut.sampler = [&c](Rng& r) {
    const Eigen::Index n = c.draw_dim(r);
    Draw d = pd_pair_draw(r, n, 1);
    d.fixed.push_back(random_gaussian(n, n, r));
    return d;
  };
  fut.evaluator = [](Args a, const Draw& d) { return theorem1_functional(pd(a[0]), d.fixed[0]); };
  return c.finish(jensen_test(fut, Claim::Convex, o.trials, c.rng, c.tol, c.harness));
}

PropertyReport suite_residual_entropy(const SuiteOptions& o) {
  Context c(o, "residual-entropy", 1e-9, 2, 6);
  FunctionalUnderTest fut;
  fut.name = c.name;
  fut.arity = 0;
  fut.sampler = [&c](Rng& r) {
    const Eigen::Index n = c.draw_dim(r);
    const auto k = static_cast<std::size_t>(r.uniform_int(2, 4));
    return pd_pair_draw(r, n, k);
  };
  fut.evaluator = [](Args a, const Draw&) {
    std::vector<PositiveMatrix> blocks;
    for (const auto& m : a) blocks.push_back(pd(m));
    return residual_entropy(BlockFamily(std::move(blocks)));
  };
  return c.finish(jensen_test(fut, Claim::JointlyConvex, o.trials, c.rng, c.tol, c.harness));
}

// Enough Kraus terms that the output stays strictly positive.
Eigen::Index kraus_count(Eigen::Index n, Eigen::Index m, Rng& r) {
  const Eigen::Index need = std::max((n + m - 1) / m, (m + n - 1) / n);
  const Eigen::Index top = std::max<Eigen::Index>(need, 5);
  return static_cast<Eigen::Index>(
      r.uniform_int(static_cast<std::uint64_t>(need), static_cast<std::uint64_t>(top)));
}

PropertyReport suite_entropy_gain(const SuiteOptions& o) {
  Context c(o, "entropy-gain", 1e-9, 2, 4);
  FunctionalUnderTest fut;
  fut.name = c.name;
  fut.sampler = [&c](Rng& r) {
    const Eigen::Index n = c.draw_dim(r);
    const Eigen::Index m = c.draw_dim(r);
    const KrausChannel ch = random_channel(n, m, kraus_count(n, m, r), r);
    Draw d = pd_pair_draw(r, n, 1);
    d.fixed = ch.kraus();
    return d;
  };
  fut.evaluator = [](Args a, const Draw& d) {
    return entropy_gain(KrausChannel(d.fixed), pd(a[0]));
  };
  return c.finish(jensen_test(fut, Claim::Convex, o.trials, c.rng, c.tol, c.harness));
}

PropertyReport suite_multi_channel_gain(const SuiteOptions& o) {
  Context c(o, "multi-channel-gain", 1e-9, 2, 4);
  FunctionalUnderTest fut;
  fut.name = c.name;
  fut.arity = 0;
  fut.sampler = [&c](Rng& r) {
    const auto count = static_cast<std::size_t>(r.uniform_int(2, 3));
    const Eigen::Index m = c.draw_dim(r);
    Draw d;
    d.dim = static_cast<std::size_t>(m);
    std::vector<Eigen::Index> inputs;
    for (std::size_t i = 0; i < count; ++i) {
      const Eigen::Index n = c.draw_dim(r);
      const KrausChannel ch = random_channel(n, m, kraus_count(n, m, r), r);
      d.scalars.push_back(static_cast<double>(ch.kraus().size()));
      for (const auto& a : ch.kraus()) d.fixed.push_back(a);
      inputs.push_back(n);
    }
    for (const Eigen::Index n : inputs) d.first.push_back(random_pd(n, r, kCond).matrix());
    for (const Eigen::Index n : inputs) d.second.push_back(random_pd(n, r, kCond).matrix());
    return d;
  };
  fut.evaluator = [](Args a, const Draw& d) {
    std::vector<KrausChannel> channels;
    std::size_t at = 0;
    for (const double count : d.scalars) {
      const auto k = static_cast<std::size_t>(count);
      channels.emplace_back(std::vector<ComplexMatrix>(d.fixed.begin() + at, d.fixed.begin() + at + k));
      at += k;
    }
    std::vector<PositiveMatrix> blocks;
    for (const auto& m : a) blocks.push_back(pd(m));
    return multi_channel_gain(channels, blocks);
  };
  return c.finish(jensen_test(fut, Claim::JointlyConvex, o.trials, c.rng, c.tol, c.harness));
}

// ---- carlen ---------------------------------------------------------------

std::vector<std::pair<double, double>> concave_pairs(const Context& c) {
  const auto ps = c.grid("p", {0.3, 0.5, 0.7, 1.0});
  const auto rs = c.grid("r", {0.3, 0.5, 0.7, 1.0});
  std::vector<std::pair<double, double>> out;
  for (const double p : ps) {
    for (const double r : rs) {
      if (p <= r) out.emplace_back(p, r);
    }
  }
  if (out.empty()) throw ArgumentError("no (p, r) pair with p <= r in the grid");
  return out;
}

PropertyReport carlen_suite(const SuiteOptions& o, const std::string& name, bool kform) {
  Context c(o, name, 1e-9, 2, 5);
  Parts parts;
  std::size_t idx = 0;
  for (const auto& [p, r] : concave_pairs(c)) {
    const PRParams params = PRParams::concave(p, r);
    FunctionalUnderTest fut;
    fut.name = name;
    fut.arity = 2;
    fut.sampler = [&c, kform](Rng& g) {
      const Eigen::Index n = c.draw_dim(g);
      Draw d = pd_pair_draw(g, n, 2);
      if (kform) d.fixed.push_back(random_gaussian(n, n, g));
      return d;
    };
    fut.evaluator = [params, kform](Args a, const Draw& d) {
      return kform ? kform_pr(pd(a[0]), pd(a[1]), d.fixed[0], params)
                   : trace_pr(pd(a[0]), pd(a[1]), params);
    };
    parts.emplace_back(label({{"p", p}, {"r", r}}),
                       jensen_test(fut, Claim::JointlyConcave, o.trials, c.sub(idx++), c.tol, c.harness));
  }
  return c.merge(Claim::JointlyConcave, parts);
}

PropertyReport suite_carlen_concave(const SuiteOptions& o) { return carlen_suite(o, "carlen-concave", false); }

PropertyReport suite_eq1_kform(const SuiteOptions& o) { return carlen_suite(o, "eq1-kform-concave", true); }

PropertyReport suite_carlen_convex(const SuiteOptions& o) {
  Context c(o, "carlen-convex", 1e-9, 2, 5);
  Parts parts;
  std::size_t idx = 0;
  for (const double p : c.grid("p", {1.0, 1.3, 1.7, 2.0})) {
    const PRParams params = PRParams::convex(p);
    FunctionalUnderTest fut;
    fut.name = c.name;
    fut.arity = 2;
    fut.sampler = [&c](Rng& g) { return pd_pair_draw(g, c.draw_dim(g), 2); };
    fut.evaluator = [params](Args a, const Draw&) { return trace_pr(pd(a[0]), pd(a[1]), params); };
    parts.emplace_back(label({{"p", p}}),
                       jensen_test(fut, Claim::JointlyConvex, o.trials, c.sub(idx++), c.tol, c.harness));
  }
  return c.merge(Claim::JointlyConvex, parts);
}

PropertyReport suite_variational(const SuiteOptions& o) {
  Context c(o, "variational", 1e-9, 2, 5);
  Parts parts;
  std::size_t idx = 0;
  for (const double p : c.grid("p", {0.3, 0.5, 0.8})) {
    if (!(p > 0.0 && p < 1.0)) throw ArgumentError("variational: p must lie in (0, 1)");
    auto trial = [&c, p](Rng& g, std::size_t) {
      const Eigen::Index n = c.draw_dim(g);
      const PositiveMatrix a = random_pd(n, g, kCond);
      const PositiveMatrix b = random_pd(n, g, kCond);
      const HermitianMatrix x = random_unit_interval_matrix(n, g);
      const VariationalSides s = variational_bound(a, b, x, p);
      TrialOutcome out;
      out.dim = static_cast<std::size_t>(n);
      out.violation = (s.lhs - s.rhs) / (1.0 + std::abs(s.rhs));
      out.witness = {{"a", matrix_to_json(a.matrix())},
                     {"b", matrix_to_json(b.matrix())},
                     {"x", matrix_to_json(x.matrix())},
                     {"values", {{"lhs", s.lhs}, {"rhs", s.rhs}}}};
      return out;
    };
    parts.emplace_back(label({{"p", p}}),
                       run_trials(c.name, Claim::Inequality, o.trials, c.sub(idx++), c.tol, trial, o.threads));
  }
  return c.merge(Claim::Inequality, parts);
}

// ---- reprmeasure ----------------------------------------------------------

PropertyReport suite_op_monotone(const SuiteOptions& o) {
  Context c(o, "op-monotone-proot", 1e-9, 2, 4);
  Parts parts;
  std::size_t idx = 0;
  const auto n = static_cast<std::size_t>(c.hi);
  for (const double p : c.grid("p", {0.25, 0.5, 0.75, 1.0})) {
    parts.emplace_back(label({{"p", p}}),
                       op_monotone_check(ScalarFunction::power_plus_one_root(p), n, o.trials,
                                         c.sub(idx++), c.tol, c.harness));
    for (const double w : c.grid("w", {0.25, 0.5, 0.75})) {
      parts.emplace_back(label({{"p", p}, {"w", w}}),
                         op_monotone_check(ScalarFunction::weighted_power_root(p, w), n, o.trials,
                                           c.sub(idx++), c.tol, c.harness));
    }
  }
  return c.merge(Claim::Monotone, parts);
}

PropertyReport suite_op_convex(const SuiteOptions& o) {
  Context c(o, "op-convex-proot", 1e-9, 2, 4);
  Parts parts;
  std::size_t idx = 0;
  for (const double p : c.grid("p", {1.0, 1.25, 1.5, 1.75, 2.0})) {
    parts.emplace_back(label({{"p", p}}),
                       op_convex_check(ScalarFunction::power_plus_one_root(p), c.hi, o.trials,
                                       c.sub(idx++), c.tol, c.harness));
  }
  return c.merge(Claim::Convex, parts);
}

PropertyReport suite_eq2(const SuiteOptions& o) {
  Context c(o, "eq2-reconstruction", 1e-5, 1, 1);
  const auto ts = c.grid("t", {0.0, 0.1, 1.0, 10.0, 100.0});
  const auto ps = c.grid("p", {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75});
  auto trial = [&](Rng&, std::size_t i) {
    const double t = ts[i % ts.size()];
    const double p = ps[i / ts.size()];
    TrialOutcome out;
    out.dim = 1;
    out.witness = {{"t", t}, {"p", p}};
    const double exact = proot_closed_form(t, p);
    try {
      const double rep = eval_integral_rep(t, p);
      out.violation = std::abs(rep - exact) / std::abs(exact);
      out.witness["values"] = {{"representation", rep}, {"closed_form", exact}};
    } catch (const QuadratureError& e) {
      out.violation = std::numeric_limits<double>::infinity();
      out.witness["error"] = e.what();
      out.witness["values"] = {{"last_estimate", e.estimate()}, {"closed_form", exact}};
    }
    return out;
  };
  PropertyReport rep = run_trials(c.name, Claim::Identity, ts.size() * ps.size(), c.rng, c.tol, trial, o.threads);
  rep = c.finish(rep);
  rep.dim = 1;
  return rep;
}

PropertyReport suite_dd_identity(const SuiteOptions& o) {
  Context c(o, "dd-integral-identity", 1e-9, 1, 1);
  const auto ts = c.grid("t", {0.1, 1.0, 3.0, 10.0});
  const auto ss = c.grid("s", ts);
  const auto ps = c.grid("p", {0.25, 0.5, 0.75, 1.0});
  const std::size_t per_p = ts.size() * ss.size();
  auto trial = [&](Rng&, std::size_t i) {
    const double p = ps[i / per_p];
    const double t = ts[(i % per_p) / ss.size()];
    const double s = ss[i % ss.size()];
    const IdentitySides sides = divided_diff_identity(t, s, p);
    TrialOutcome out;
    out.dim = 1;
    out.violation = std::abs(sides.lhs - sides.rhs) / std::abs(sides.lhs);
    out.witness = {{"t", t}, {"s", s}, {"p", p}, {"values", {{"lhs", sides.lhs}, {"rhs", sides.rhs}}}};
    return out;
  };
  PropertyReport rep = run_trials(c.name, Claim::Identity, per_p * ps.size(), c.rng, c.tol, trial, o.threads);
  rep = c.finish(rep);
  rep.dim = 1;
  return rep;
}

// ---- frechet --------------------------------------------------------------

std::vector<double> unit_exponents(const Context& c) {
  auto ps = c.grid("p", {0.25, 0.5, 0.75, 1.0});
  for (const double p : ps) {
    if (!(p > 0.0 && p <= 1.0)) throw ArgumentError(c.name + ": p must lie in (0, 1]");
  }
  return ps;
}

PropertyReport suite_divided_diff(const SuiteOptions& o) {
  Context c(o, "divided-diff-concave", 1e-9, 2, 5);
  Parts parts;
  std::size_t idx = 0;
  for (const double p : unit_exponents(c)) {
    FunctionalUnderTest fut;
    fut.name = c.name;
    fut.arity = 2;
    fut.sampler = [&c](Rng& g) { return pd_pair_draw(g, c.draw_dim(g), 2); };
    fut.evaluator = [p](Args a, const Draw&) { return divided_diff_trace(pd(a[0]), pd(a[1]), p); };
    parts.emplace_back(label({{"p", p}}),
                       jensen_test(fut, Claim::JointlyConcave, o.trials, c.sub(idx++), c.tol, c.harness));
  }
  return c.merge(Claim::JointlyConcave, parts);
}

// x varies, h is held fixed.
FunctionalUnderTest concave_in_x(const Context& c, std::function<double(const PositiveMatrix&, const HermitianMatrix&)> f) {
  FunctionalUnderTest fut;
  fut.name = c.name;
  fut.sampler = [&c](Rng& g) {
    const Eigen::Index n = c.draw_dim(g);
    Draw d = pd_pair_draw(g, n, 1);
    d.fixed.push_back(random_hermitian(n, g).matrix());
    return d;
  };
  fut.evaluator = [f = std::move(f)](Args a, const Draw& d) {
    return f(pd(a[0]), HermitianMatrix(d.fixed[0]));
  };
  return fut;
}

// (x, h) vary jointly.
FunctionalUnderTest convex_in_pair(const Context& c, std::function<double(const PositiveMatrix&, const HermitianMatrix&, const Draw&)> f,
                                   std::function<void(Rng&, Draw&)> extra = {}) {
  FunctionalUnderTest fut;
  fut.name = c.name;
  fut.arity = 2;
  fut.sampler = [&c, extra = std::move(extra)](Rng& g) {
    const Eigen::Index n = c.draw_dim(g);
    Draw d;
    d.dim = static_cast<std::size_t>(n);
    d.first = {random_pd(n, g, kCond).matrix(), random_hermitian(n, g).matrix()};
    d.second = {random_pd(n, g, kCond).matrix(), random_hermitian(n, g).matrix()};
    if (extra) extra(g, d);
    return d;
  };
  fut.evaluator = [f = std::move(f)](Args a, const Draw& d) {
    return f(pd(a[0]), HermitianMatrix(a[1]), d);
  };
  return fut;
}

PropertyReport suite_thm41(const SuiteOptions& o) {
  Context c(o, "thm41-concave", 1e-9, 2, 5);
  Parts parts;
  std::size_t idx = 0;
  for (const double p : unit_exponents(c)) {
    const ScalarFunction f = ScalarFunction::power(p);
    const auto fut = concave_in_x(c, [f](const PositiveMatrix& x, const HermitianMatrix& h) {
      return quad_form_inv(f, x, h);
    });
    parts.emplace_back(label({{"p", p}}),
                       jensen_test(fut, Claim::Concave, o.trials, c.sub(idx++), c.tol, c.harness));
  }
  return c.merge(Claim::Concave, parts);
}

PropertyReport suite_thm42(const SuiteOptions& o) {
  Context c(o, "thm42-joint-convex", 1e-9, 2, 5);
  Parts parts;
  std::size_t idx = 0;
  for (const double p : unit_exponents(c)) {
    const ScalarFunction f = ScalarFunction::power(p);
    const auto fut = convex_in_pair(c, [f](const PositiveMatrix& x, const HermitianMatrix& h, const Draw&) {
      return quad_form(f, x, h);
    });
    parts.emplace_back(label({{"p", p}}),
                       jensen_test(fut, Claim::JointlyConvex, o.trials, c.sub(idx++), c.tol, c.harness));
  }
  return c.merge(Claim::JointlyConvex, parts);
}

ScalarFunction mixture_from(const std::vector<double>& scalars) {
  std::vector<ScalarFunction::Atom> atoms;
  for (std::size_t i = 0; i + 1 < scalars.size(); i += 2) atoms.push_back({scalars[i], scalars[i + 1]});
  return ScalarFunction::power_mixture(std::move(atoms));
}

PropertyReport suite_power_mixture(const SuiteOptions& o) {
  Context c(o, "power-mixture", 1e-9, 2, 5);
  Parts parts;
  auto random_atoms = [](Rng& g, Draw& d) {
    const std::uint64_t count = g.uniform_int(1, 4);
    for (std::uint64_t i = 0; i < count; ++i) {
      d.scalars.push_back(g.uniform(0.1, 1.0));
      d.scalars.push_back(g.uniform(0.0, 1.0));
    }
  };
  const auto random_fut = convex_in_pair(
      c, [](const PositiveMatrix& x, const HermitianMatrix& h, const Draw& d) {
        return power_mixture_quad_form(mixture_from(d.scalars), x, h);
      },
      random_atoms);
  parts.emplace_back("random-atoms", jensen_test(random_fut, Claim::JointlyConvex, o.trials, c.sub(0), c.tol, c.harness));
  const ScalarFunction lebesgue = ScalarFunction::lebesgue_mixture(64);
  const auto lebesgue_fut = convex_in_pair(c, [lebesgue](const PositiveMatrix& x, const HermitianMatrix& h, const Draw&) {
    return power_mixture_quad_form(lebesgue, x, h);
  });
  parts.emplace_back("lebesgue-64", jensen_test(lebesgue_fut, Claim::JointlyConvex, o.trials, c.sub(1), c.tol, c.harness));
  return c.merge(Claim::JointlyConvex, parts);
}

PropertyReport suite_logmean(const SuiteOptions& o) {
  Context c(o, "logmean-concave", 1e-9, 2, 5);
  const auto fut = concave_in_x(c, [](const PositiveMatrix& x, const HermitianMatrix& h) {
    return logmean_quad_form(x, h);
  });
  return c.finish(jensen_test(fut, Claim::Concave, o.trials, c.rng, c.tol, c.harness));
}

// ---- orderineq ------------------------------------------------------------

std::vector<double> q_grid(const Context& c) {
  std::vector<double> fallback;
  for (int i = -4; i <= 4; ++i) fallback.push_back(0.25 * i);
  return c.grid("q", fallback);
}

PropertyReport suite_psi(const SuiteOptions& o) {
  Context c(o, "psi-psd", 1e-10, 2, 5);
  Parts parts;
  std::size_t idx = 0;
  for (const double q : q_grid(c)) {
    const QParam qp(q);
    MatrixClaimUnderTest claim;
    claim.name = c.name;
    claim.sampler = [&c](Rng& g) {
      const Eigen::Index n = c.draw_dim(g);
      Draw d;
      d.dim = static_cast<std::size_t>(n);
      d.first.push_back(random_pd(n, g, kCond).matrix());
      d.fixed.push_back(random_contraction(n, n, g));
      return d;
    };
    claim.evaluator = [qp](const Draw& d) { return psi(pd(d.first[0]), d.fixed[0], qp); };
    parts.emplace_back(label({{"q", q}}), psd_claim_test(claim, o.trials, c.sub(idx++), c.tol, c.harness));
  }
  return c.merge(Claim::PSD, parts);
}

PropertyReport suite_phiq(const SuiteOptions& o) {
  Context c(o, "phiq-decreasing", 1e-9, 2, 5);
  Parts parts;
  std::size_t idx = 0;
  for (const double q : q_grid(c)) {
    const QParam qp(q);
    FunctionalUnderTest fut;
    fut.name = c.name;
    fut.sampler = [&c](Rng& g) {
      const Eigen::Index n = c.draw_dim(g);
      Draw d;
      d.dim = static_cast<std::size_t>(n);
      d.first.push_back(random_pd(n, g, kCond).matrix());
      d.fixed.push_back(random_contraction(n, n, g));
      return d;
    };
    fut.evaluator = [qp](Args a, const Draw& d) { return phi_q(pd(a[0]), d.fixed[0], qp); };
    parts.emplace_back(label({{"q", q}}),
                       order_monotone_test(fut, Direction::Decreasing, o.trials, c.sub(idx++), c.tol, c.harness));
  }
  return c.merge(Claim::Monotone, parts);
}

PropertyReport suite_jensen_contraction(const SuiteOptions& o) {
  Context c(o, "jensen-contraction", 1e-10, 2, 5);
  std::vector<double> fallback;
  for (int i = 0; i <= 8; ++i) fallback.push_back(0.25 * i);
  Parts parts;
  std::size_t idx = 0;
  for (const double s : c.grid("s", fallback)) {
    auto trial = [&c, s](Rng& g, std::size_t) {
      const Eigen::Index n = c.draw_dim(g);
      const auto m = static_cast<Eigen::Index>(g.uniform_int(1, static_cast<std::uint64_t>(n)));
      const PositiveMatrix a = random_pd(n, g, kCond);
      const ComplexMatrix k = random_contraction(n, m, g);
      const PropertyReport one = jensen_contraction_check(a, k, s, c.tol);
      TrialOutcome out;
      out.dim = static_cast<std::size_t>(n);
      out.violation = one.max_violation;
      out.witness = one.witness;
      out.witness["a"] = matrix_to_json(a.matrix());
      out.witness["k"] = matrix_to_json(k);
      return out;
    };
    parts.emplace_back(label({{"s", s}}),
                       run_trials(c.name, Claim::PSD, o.trials, c.sub(idx++), c.tol, trial, o.threads));
  }
  return c.merge(Claim::PSD, parts);
}

}  // namespace

const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> registry = {
      {"theorem1", Claim::Convex, 1e-9, "convexity of -Tr K*AK log K*AK + Tr K*(A log A)K in A", suite_theorem1},
      {"residual-entropy", Claim::JointlyConvex, 1e-9, "joint convexity of sum S(A_i) - S(sum A_i)", suite_residual_entropy},
      {"entropy-gain", Claim::Convex, 1e-9, "convexity of S(Phi(A)) - S(A) for random channels", suite_entropy_gain},
      {"multi-channel-gain", Claim::JointlyConvex, 1e-9, "joint convexity of the multi-channel entropy gain", suite_multi_channel_gain},
      {"carlen-concave", Claim::JointlyConcave, 1e-9, "concavity of Tr(A^p + B^p)^(1/r), 0 < p <= r <= 1", suite_carlen_concave},
      {"carlen-convex", Claim::JointlyConvex, 1e-9, "convexity of Tr(A^p + B^p)^(1/p), 1 <= p <= 2", suite_carlen_convex},
      {"eq1-kform-concave", Claim::JointlyConcave, 1e-9, "concavity of Tr K*(L_A^p + R_B^p)^(1/r)(K)", suite_eq1_kform},
      {"variational", Claim::Inequality, 1e-9, "Tr(A^p + B^p)^(1/p) <= Tr X^((p-1)/p) A + (1-X)^((p-1)/p) B", suite_variational},
      {"op-monotone-proot", Claim::Monotone, 1e-9, "operator monotonicity of (t^p + 1)^(1/p) and (w t^p + 1 - w)^(1/p)", suite_op_monotone},
      {"op-convex-proot", Claim::Convex, 1e-9, "operator convexity of (t^p + 1)^(1/p) for 1 <= p <= 2", suite_op_convex},
      {"divided-diff-concave", Claim::JointlyConcave, 1e-9, "concavity of Tr of the p-power divided-difference superoperator at K = I", suite_divided_diff},
      {"thm41-concave", Claim::Concave, 1e-9, "concavity of x -> Tr h Df(x)^(-1) h for f = t^p", suite_thm41},
      {"thm42-joint-convex", Claim::JointlyConvex, 1e-9, "joint convexity of (x, h) -> Tr h Df(x) h for f = t^p", suite_thm42},
      {"power-mixture", Claim::JointlyConvex, 1e-9, "joint convexity for mixtures of powers in [0, 1]", suite_power_mixture},
      {"logmean-concave", Claim::Concave, 1e-9, "concavity of the logarithmic-mean quadratic form", suite_logmean},
      {"psi-psd", Claim::PSD, 1e-10, "q(A^(q-1) - K(K*AK)^(q-1)K*) is PSD for contractions K", suite_psi},
      {"phiq-decreasing", Claim::Monotone, 1e-9, "Tr(K*AK)^q - Tr A^q is decreasing in A", suite_phiq},
      {"jensen-contraction", Claim::PSD, 1e-10, "sign of (K*AK)^s - K*A^sK flips at s = 1", suite_jensen_contraction},
      {"eq2-reconstruction", Claim::Identity, 1e-5, "integral representation reproduces (t^p + 1)^(1/p)", suite_eq2},
      {"dd-integral-identity", Claim::Identity, 1e-9, "(t - s)/(t^p - s^p) equals its integral form", suite_dd_identity},
  };
  return registry;
}

const Suite* find_suite(std::string_view name) {
  for (const auto& s : suite_registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

PropertyReport run_suite(const Suite& suite, const SuiteOptions& options) {
  if (options.trials < 1) throw ArgumentError("trials must be >= 1");
  if (options.max_dim && (*options.max_dim < 1 || *options.max_dim > static_cast<std::size_t>(kMaxDim))) {
    throw ArgumentError("dim must lie in [1, 16]");
  }
  const auto start = std::chrono::steady_clock::now();
  PropertyReport rep = suite.run(options);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace tracelab
