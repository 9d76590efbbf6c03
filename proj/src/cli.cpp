#include "tracelab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "tracelab/carlen.hpp"
#include "tracelab/errors.hpp"
#include "tracelab/reprmeasure.hpp"
#include "tracelab/superop.hpp"
#include "tracelab/suites.hpp"

namespace tracelab {

namespace {

using json = nlohmann::json;

struct RunConfig {
  std::vector<std::string> suites;
  std::string target;
  std::size_t dim = 4;
  bool dim_given = false;
  std::size_t trials = 300;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::vector<std::string> params_text;
  ParamMap params;
  std::string format = "json";
  std::string out_path;
  unsigned parallel = 1;
  bool runtime = true;
};

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

std::string cell_text(const Table::Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

json cell_json(const Table::Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_real(*d);
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

void write_table(const Table& table, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    write_csv(table, out);
    return;
  }
  json arr = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << "\n";
}

std::vector<double> grid_or(const ParamMap& params, const std::string& key, std::vector<double> fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::vector<double> range(double start, double stop, double step) {
  std::vector<double> out;
  const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9));
  for (int i = 0; i <= count; ++i) out.push_back(start + i * step);
  return out;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<const Suite*> selected;
  for (const auto& name : cfg.suites) {
    if (name == "all") {
      for (const auto& s : suite_registry()) selected.push_back(&s);
      continue;
    }
    const Suite* s = find_suite(name);
    if (s == nullptr) {
      err << "error: unknown suite '" << name << "'\n";
      return kExitUsage;
    }
    selected.push_back(s);
  }
  std::vector<const Suite*> unique;
  for (const Suite* s : selected) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
  }

  SuiteOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.tol = cfg.tol;
  if (cfg.dim_given) opts.max_dim = cfg.dim;
  opts.params = cfg.params;
  opts.threads = cfg.parallel;

  std::vector<PropertyReport> reports(unique.size());
  try {
    if (cfg.parallel <= 1) {
      for (std::size_t i = 0; i < unique.size(); ++i) reports[i] = run_suite(*unique[i], opts);
    } else {
      std::size_t next = 0;
      while (next < unique.size()) {
        std::vector<std::future<PropertyReport>> batch;
        const std::size_t end = std::min(unique.size(), next + cfg.parallel);
        for (std::size_t i = next; i < end; ++i) {
          batch.push_back(std::async(std::launch::async, [&, i] { return run_suite(*unique[i], opts); }));
        }
        for (std::size_t i = next; i < end; ++i) reports[i] = batch[i - next].get();
        next = end;
      }
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.passed;

  if (cfg.format == "csv") {
    Table t;
    t.header = {"suite", "claim", "trials", "dim", "seed", "tol", "max_violation", "verdict", "errors", "witness"};
    if (cfg.runtime) t.header.push_back("runtime_ms");
    for (const auto& r : reports) {
      std::vector<Table::Cell> row = {r.suite,
                                      std::string(to_string(r.claim)),
                                      static_cast<long long>(r.trials),
                                      static_cast<long long>(r.dim),
                                      std::to_string(r.seed),
                                      r.tolerance,
                                      r.max_violation,
                                      std::string(r.passed ? "pass" : "fail"),
                                      static_cast<long long>(r.errors),
                                      r.passed ? std::string() : r.witness.dump()};
      if (cfg.runtime) row.emplace_back(r.runtime_ms);
      t.rows.push_back(std::move(row));
    }
    write_csv(t, out);
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, cfg.runtime));
    out << arr.dump(2) << "\n";
  }
  for (const auto& r : reports) {
    if (!r.passed) err << "FAIL " << r.suite << ": max_violation " << format_real(r.max_violation)
                       << " > tol " << format_real(r.tolerance) << "\n";
  }
  return all_pass ? kExitPass : kExitNumericalFail;
}

// ---- scan -----------------------------------------------------------------

Table scan_identity_gap(const RunConfig& cfg) {
  Table t;
  t.header = {"p", "r", "trial", "dim", "trace_pr", "kform_pr", "gap"};
  const auto ps = grid_or(cfg.params, "p", {0.5});
  const auto rs = grid_or(cfg.params, "r", {0.7});
  const Rng base(cfg.seed, 0x1d);
  std::size_t idx = 0;
  for (const double p : ps) {
    for (const double r : rs) {
      const PRParams params = p >= 1.0 && r == p ? PRParams::convex(p) : PRParams::concave(p, r);
      const Rng rng = base.split(idx++);
      const auto n = static_cast<Eigen::Index>(cfg.dim);
      for (std::size_t i = 0; i < cfg.trials; ++i) {
        Rng g = rng.split(i);
        const PositiveMatrix a = random_pd(n, g, 100.0);
        const PositiveMatrix b = random_pd(n, g, 100.0);
        const double direct = trace_pr(a, b, params);
        const double kform = kform_pr(a, b, ComplexMatrix::Identity(n, n), params);
        t.rows.push_back({p, r, static_cast<long long>(i), static_cast<long long>(n), direct, kform,
                          std::abs(direct - kform)});
      }
    }
  }
  return t;
}

Table scan_hp_sign(const RunConfig& cfg) {
  Table t;
  t.header = {"p", "lambda", "h_p"};
  const auto ps = grid_or(cfg.params, "p", range(0.25, 1.75, 0.25));
  const auto lams = grid_or(cfg.params, "lambda", {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0});
  for (const double p : ps) {
    for (const double lam : lams) t.rows.push_back({p, lam, weight_hp(lam, p)});
  }
  return t;
}

Table scan_eq2_error(const RunConfig& cfg) {
  Table t;
  t.header = {"p", "worst_t", "max_abs_error", "max_rel_error", "status"};
  const auto ps = grid_or(cfg.params, "p", range(0.25, 1.75, 0.25));
  const auto ts = grid_or(cfg.params, "t", {0.0, 0.1, 1.0, 10.0, 100.0});
  const double inf = std::numeric_limits<double>::infinity();
  for (const double p : ps) {
    double worst_t = ts.empty() ? 0.0 : ts.front();
    double max_abs = 0.0;
    double max_rel = 0.0;
    std::string status = "ok";
    for (const double x : ts) {
      const double exact = proot_closed_form(x, p);
      try {
        const double e = std::abs(eval_integral_rep(x, p) - exact);
        if (e / exact > max_rel) {
          max_rel = e / exact;
          worst_t = x;
        }
        max_abs = std::max(max_abs, e);
      } catch (const QuadratureError&) {
        status = "quadrature-diverged";
        max_abs = max_rel = inf;
        worst_t = x;
        break;
      }
    }
    t.rows.push_back({p, worst_t, max_abs, max_rel, status});
  }
  return t;
}

Table scan_variational_gap(const RunConfig& cfg) {
  Table t;
  t.header = {"p", "trial", "dim", "lhs", "rhs_random_x", "gap_random_x", "gap_commuting_witness"};
  const auto ps = grid_or(cfg.params, "p", {0.3, 0.5, 0.8});
  const Rng base(cfg.seed, 0x7a);
  const auto n = static_cast<Eigen::Index>(cfg.dim);
  std::size_t idx = 0;
  for (const double p : ps) {
    const Rng rng = base.split(idx++);
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      Rng g = rng.split(i);
      const PositiveMatrix a = random_pd(n, g, 100.0);
      const PositiveMatrix b = random_pd(n, g, 100.0);
      const HermitianMatrix x = random_unit_interval_matrix(n, g);
      const VariationalSides s = variational_bound(a, b, x, p);
      // Diagonal pair sharing a's spectrum, so the witness is exact.
      const RealVector da = a.eig().lambda;
      const RealVector db = b.eig().lambda;
      const PositiveMatrix ca(HermitianMatrix(da.cast<Complex>().asDiagonal().toDenseMatrix()));
      const PositiveMatrix cb(HermitianMatrix(db.cast<Complex>().asDiagonal().toDenseMatrix()));
      const VariationalSides w = variational_bound(ca, cb, variational_witness(ca, cb, p), p);
      t.rows.push_back({p, static_cast<long long>(i), static_cast<long long>(n), s.lhs, s.rhs, s.rhs - s.lhs,
                        w.rhs - w.lhs});
    }
  }
  return t;
}

// ---- tabulate -------------------------------------------------------------

Table tab_f_proot(const RunConfig& cfg) {
  Table t;
  t.header = {"p", "t", "f"};
  const auto ps = grid_or(cfg.params, "p", {0.5});
  const auto ts = grid_or(cfg.params, "t", range(0.0, 10.0, 0.5));
  for (const double p : ps) {
    for (const double x : ts) t.rows.push_back({p, x, proot_closed_form(x, p)});
  }
  return t;
}

Table tab_h_weight(const RunConfig& cfg) {
  Table t;
  t.header = {"p", "lambda", "h_p"};
  const auto ps = grid_or(cfg.params, "p", {0.5});
  const auto lams = grid_or(cfg.params, "lambda", range(0.25, 5.0, 0.25));
  for (const double p : ps) {
    for (const double lam : lams) t.rows.push_back({p, lam, weight_hp(lam, p)});
  }
  return t;
}

Table tab_logmean(const RunConfig& cfg) {
  Table t;
  t.header = {"t", "s", "logmean"};
  const auto ts = grid_or(cfg.params, "t", {0.25, 0.5, 1.0, 2.0, 4.0});
  const auto ss = grid_or(cfg.params, "s", ts);
  const BivariateFunction g = BivariateFunction::log_mean();
  for (const double x : ts) {
    for (const double y : ss) t.rows.push_back({x, y, g(x, y)});
  }
  return t;
}

int emit(const std::string& kind, const std::string& name,
         const std::vector<std::pair<std::string, Table (*)(const RunConfig&)>>& table,
         const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  for (const auto& [key, fn] : table) {
    if (key != name) continue;
    Table result;
    try {
      result = fn(cfg);
    } catch (const ArgumentError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    write_table(result, cfg.format, out);
    return kExitPass;
  }
  err << "error: unknown " << kind << " '" << name << "'\n";
  return kExitUsage;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--dim", cfg.dim, "Largest matrix dimension (1..16)")
      ->check(CLI::Range(1, 16))
      ->each([&cfg](const std::string&) { cfg.dim_given = true; });
  cmd->add_option("--trials", cfg.trials, "Trials per case")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "64-bit seed");
  cmd->add_option("--params", cfg.params_text, "Grids, e.g. p=0.25:1.75:0.25,r=0.7");
  cmd->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", cfg.out_path, "Output file (default stdout)");
  cmd->add_option("--parallel", cfg.parallel, "Worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << csv_escape(table.header[i]);
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
    out << "\r\n";
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sampled verification of matrix trace inequalities", "tracelab"};
  app.require_subcommand(1);
  RunConfig cfg;
  double tol = 0.0;

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("-s,--suite", cfg.suites, "Suite name, repeatable, or 'all'");
  verify->add_option("--tol", tol, "Tolerance override")->check(CLI::PositiveNumber);
  verify->add_flag("!--no-runtime", cfg.runtime, "Omit runtime_ms from the output");
  add_common(verify, cfg);

  auto* scan = app.add_subcommand("scan", "Parameter scans: identity-gap, hp-sign, eq2-error, variational-gap");
  scan->add_option("name", cfg.target, "Scan name")->required();
  add_common(scan, cfg);

  auto* tabulate = app.add_subcommand("tabulate", "Tabulations: f-proot, h-weight, logmean");
  tabulate->add_option("name", cfg.target, "Function name")->required();
  add_common(tabulate, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (verify->get_option("--tol")->count() > 0) cfg.tol = tol;
  try {
    for (const auto& text : cfg.params_text) merge_params(cfg.params, parse_params(text));
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.suites.empty()) cfg.suites = {"all"};
  if (cfg.dim > static_cast<std::size_t>(kMaxDim)) {
    err << "error: --dim must be <= 16\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << cfg.out_path << "' for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }

  if (*verify) return cmd_verify(cfg, *sink, err);
  if (*scan) {
    return emit("scan", cfg.target,
                {{"identity-gap", scan_identity_gap},
                 {"hp-sign", scan_hp_sign},
                 {"eq2-error", scan_eq2_error},
                 {"variational-gap", scan_variational_gap}},
                cfg, *sink, err);
  }
  return emit("tabulation", cfg.target,
              {{"f-proot", tab_f_proot}, {"h-weight", tab_h_weight}, {"logmean", tab_logmean}}, cfg, *sink,
              err);
}

}  // namespace tracelab
