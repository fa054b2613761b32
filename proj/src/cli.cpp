#include "qgr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgr/bruhat.hpp"
#include "qgr/errors.hpp"
#include "qgr/parallel.hpp"
#include "qgr/symfunc.hpp"

namespace qgr::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string complex_str(Complex z) {
  const double re = std::abs(z.real()) < 5e-15 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-15 ? 0.0 : z.imag();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12f%+.12fi", re, im);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

unsigned worker_count(const RunConfig& config) {
  if (config.parallelism > 0) return config.parallelism;
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

std::optional<GrassmannianParams> checked_params(int k, int n, std::ostream& err) {
  try {
    return GrassmannianParams(k, n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
}

bool valid_common(const RunConfig& config, std::ostream& err) {
  if (!(config.tol > 0)) {
    err << "error: --tol must be positive\n";
    return false;
  }
  if (!(config.grid_step > 0)) {
    err << "error: --grid-step must be positive\n";
    return false;
  }
  if (config.rank_cap < 2) {
    err << "error: --rank-cap must be at least 2\n";
    return false;
  }
  if (config.shift && !(*config.shift > 0)) {
    err << "error: --shift must be positive\n";
    return false;
  }
  return true;
}

SpectralOptions spectral_options(const RunConfig& config, bool residuals) {
  SpectralOptions options;
  options.tol = config.tol;
  options.shift = config.shift;
  options.max_iter = config.max_iter;
  options.rank_cap = config.rank_cap;
  options.compute_residuals = residuals;
  return options;
}

Json nullable(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json report_json(const GalkinReport& galkin, const std::optional<SpectralReport>& spectral) {
  const auto& p = galkin.params;
  Json doc;
  doc["k"] = p.k();
  doc["n"] = p.n();
  doc["dim"] = p.dimension();
  doc["rank"] = p.rank();
  Json delta0;
  delta0["matrix"] = spectral ? Json(spectral->delta0_matrix) : Json(nullptr);
  delta0["schur"] = spectral ? Json(spectral->delta0_schur) : Json(nullptr);
  delta0["sine"] = galkin.delta0;
  delta0["cosine"] = delta0_cosine_sum(p.k(), p.n());
  doc["delta0"] = std::move(delta0);
  doc["bound"] = galkin.bound;
  doc["margin"] = galkin.margin;
  doc["verdict"] = std::string(to_string(galkin.verdict));
  doc["is_projective_space"] = galkin.is_projective_space;
  if (spectral) {
    Json po;
    po["top_multiplicity"] = spectral->top_multiplicity;
    po["rotation_closed"] = spectral->rotation_closed;
    doc["property_o"] = std::move(po);
    doc["max_eigen_residual"] = nullable(spectral->max_eigen_residual);
  } else {
    doc["property_o"] = nullptr;
    doc["max_eigen_residual"] = nullptr;
  }
  return doc;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!valid_common(config, err)) return kExitUsage;
  const auto params = checked_params(config.k, config.n, err);
  if (!params) return kExitUsage;

  const GalkinReport galkin = verify_galkin(*params, kVerdictTolerance);
  std::optional<SpectralReport> spectral;
  bool checks_ok = true;
  std::string skipped;
  if (params->rank() <= config.rank_cap) {
    try {
      spectral = spectral_report(*params, spectral_options(config, true));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      checks_ok = false;
    }
  } else {
    skipped = "rank " + std::to_string(params->rank()) + " exceeds cap " + std::to_string(config.rank_cap);
  }
  if (spectral && !(spectral->max_eigen_residual.value_or(0.0) < config.tol)) {
    err << "error: eigenvector residual " << num(*spectral->max_eigen_residual) << " exceeds tolerance\n";
    checks_ok = false;
  }
  if (!galkin.consistent) {
    err << "error: equality verdict disagrees with the projective-space test\n";
    checks_ok = false;
  }

  if (config.format == Format::json) {
    out << report_json(galkin, spectral).dump() << "\n";
  } else {
    out << "Gr(" << params->k() << "," << params->n() << ")  dim " << params->dimension() << "  rank "
        << params->rank() << "\n";
    if (spectral) {
      out << "delta0 matrix     " << num(spectral->delta0_matrix) << "  (" << spectral->power_iterations
          << " power iterations)\n";
      out << "delta0 schur      " << num(spectral->delta0_schur) << "\n";
    } else if (!skipped.empty()) {
      out << "matrix and schur routes skipped: " << skipped << "\n";
    }
    out << "delta0 sine       " << num(galkin.delta0) << "\n";
    out << "delta0 cosine     " << num(delta0_cosine_sum(params->k(), params->n())) << "\n";
    out << "bound             " << num(galkin.bound) << "\n";
    out << "margin            " << num(galkin.margin) << "\n";
    out << "verdict           " << to_string(galkin.verdict) << (galkin.equality ? " (equality)" : "") << "\n";
    out << "projective space  " << yes_no(galkin.is_projective_space) << "\n";
    if (spectral) {
      out << "property O        top multiplicity " << spectral->top_multiplicity << ", rotation closed "
          << yes_no(spectral->rotation_closed) << ", top arguments are roots "
          << yes_no(spectral->top_arguments_are_roots) << "\n";
      out << "max residual      " << num(spectral->max_eigen_residual.value_or(0.0)) << "\n";
    }
  }
  if (galkin.verdict == Verdict::violation || !checks_ok) return kExitCheckFailed;
  return kExitOk;
}

namespace {

struct SweepRow {
  int k;
  int n;
  std::uint64_t rank;
  std::optional<double> matrix;
  std::optional<double> schur;
  double sine;
  double cosine;
  double bound;
  double margin;
  Verdict verdict;
  std::string failure;
};

}  // namespace

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!valid_common(config, err)) return kExitUsage;
  if (config.n_max < 2) {
    err << "error: --n-max must be at least 2\n";
    return kExitUsage;
  }
  if (config.format == Format::dot) {
    err << "error: sweep supports text, json and csv\n";
    return kExitUsage;
  }

  std::vector<SweepRow> rows;
  for (int n = 2; n <= config.n_max; ++n)
    for (int k = 1; k <= n - 1 && (config.k_max <= 0 || k <= config.k_max); ++k) {
      SweepRow row{};
      row.k = k;
      row.n = n;
      rows.push_back(row);
    }

  parallel_for(rows.size(), worker_count(config), [&](std::size_t i) {
    SweepRow& row = rows[i];
    const GrassmannianParams params(row.k, row.n);
    const auto galkin = verify_galkin(params, kVerdictTolerance);
    row.rank = params.rank();
    row.sine = galkin.delta0;
    row.cosine = delta0_cosine_sum(row.k, row.n);
    row.bound = galkin.bound;
    row.margin = galkin.margin;
    row.verdict = galkin.verdict;
    if (!galkin.consistent) row.failure = "equality verdict disagrees with projective-space test";
    const double t = config.tol * std::max(1.0, row.sine);
    if (std::abs(row.sine - row.cosine) > t) row.failure = "sine and cosine routes disagree";
    if (row.rank <= config.rank_cap) {
      try {
        const auto spectral = spectral_report(params, spectral_options(config, false));
        row.matrix = spectral.delta0_matrix;
        row.schur = spectral.delta0_schur;
      } catch (const std::exception& e) {
        row.failure = e.what();
      }
    }
  });

  bool ok = true;
  for (const auto& row : rows) {
    if (row.verdict == Verdict::violation || !row.failure.empty()) ok = false;
    if (!row.failure.empty()) err << "Gr(" << row.k << "," << row.n << "): " << row.failure << "\n";
  }

  const auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string("-"); };
  if (config.format == Format::json) {
    Json doc = Json::array();
    for (const auto& row : rows) {
      Json r;
      r["k"] = row.k;
      r["n"] = row.n;
      r["dim"] = row.k * (row.n - row.k);
      r["rank"] = row.rank;
      Json d;
      d["matrix"] = nullable(row.matrix);
      d["schur"] = nullable(row.schur);
      d["sine"] = row.sine;
      d["cosine"] = row.cosine;
      r["delta0"] = std::move(d);
      r["bound"] = row.bound;
      r["margin"] = row.margin;
      r["verdict"] = std::string(to_string(row.verdict));
      doc.push_back(std::move(r));
    }
    out << doc.dump() << "\n";
  } else if (config.format == Format::csv) {
    out << "k,n,rank,delta0_matrix,delta0_schur,delta0_sine,delta0_cosine,bound,margin,verdict\n";
    for (const auto& row : rows)
      out << row.k << "," << row.n << "," << row.rank << "," << (row.matrix ? num(*row.matrix) : "") << ","
          << (row.schur ? num(*row.schur) : "") << "," << num(row.sine) << "," << num(row.cosine) << ","
          << num(row.bound) << "," << num(row.margin) << "," << to_string(row.verdict) << "\n";
  } else {
    char line[256];
    std::snprintf(line, sizeof line, "%4s %4s %20s %20s %20s %8s %20s  %s\n", "k", "n", "delta0(matrix)",
                  "delta0(schur)", "delta0(sine)", "bound", "margin", "verdict");
    out << line;
    for (const auto& row : rows) {
      std::snprintf(line, sizeof line, "%4d %4d %20s %20s %20.12f %8.0f %20.12f  %s\n", row.k, row.n,
                    opt(row.matrix).c_str(), opt(row.schur).c_str(), row.sine, row.bound, row.margin,
                    std::string(to_string(row.verdict)).c_str());
      out << line;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!valid_common(config, err)) return kExitUsage;
  const auto params = checked_params(config.k, config.n, err);
  if (!params) return kExitUsage;
  GraphFormat format;
  switch (config.format) {
    case Format::json:
      format = GraphFormat::json;
      break;
    case Format::dot:
    case Format::text:
      format = GraphFormat::dot;
      break;
    default:
      err << "error: graph supports dot and json\n";
      return kExitUsage;
  }
  try {
    out << export_graph(build_graph(*params, config.rank_cap), format);
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!valid_common(config, err)) return kExitUsage;
  const auto params = checked_params(config.k, config.n, err);
  if (!params) return kExitUsage;

  std::vector<LabeledEigenvalue> labeled;
  std::vector<Partition> basis;
  SparseMatrix<double> op;
  try {
    labeled = labeled_spectrum(*params, config.rank_cap);
    basis = enumerate_partitions(*params, config.rank_cap);
    op = c1_operator(*params, config.rank_cap);
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<double> residuals;
  std::vector<Complex> values;
  for (const auto& e : labeled) {
    residuals.push_back(eigen_residual(e.index, *params, op, basis));
    values.push_back(e.value);
  }
  const PropertyO po = property_o_check(values, params->n(), config.tol);
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  const bool ok = worst < config.tol && po.top_multiplicity == 1;

  if (config.format == Format::json) {
    Json doc;
    doc["k"] = params->k();
    doc["n"] = params->n();
    Json list = Json::array();
    for (std::size_t i = 0; i < labeled.size(); ++i) {
      Json e;
      e["index"] = labeled[i].index.doubled;
      e["re"] = values[i].real();
      e["im"] = values[i].imag();
      e["modulus"] = std::abs(values[i]);
      e["residual"] = residuals[i];
      list.push_back(std::move(e));
    }
    doc["eigenvalues"] = std::move(list);
    Json p;
    p["top_multiplicity"] = po.top_multiplicity;
    p["rotation_closed"] = po.rotation_closed;
    p["top_arguments_are_roots"] = po.top_arguments_are_roots;
    doc["property_o"] = std::move(p);
    doc["max_eigen_residual"] = worst;
    out << doc.dump() << "\n";
  } else {
    out << "spectrum of c1 for Gr(" << params->k() << "," << params->n() << "), " << labeled.size()
        << " eigenvalues\n";
    for (std::size_t i = 0; i < labeled.size(); ++i) {
      char line[160];
      std::snprintf(line, sizeof line, "%-24s %36s  |.| %.12f  residual %.3e\n",
                    labeled[i].index.to_string().c_str(), complex_str(values[i]).c_str(), std::abs(values[i]),
                    residuals[i]);
      out << line;
    }
    out << "property O: top multiplicity " << po.top_multiplicity << ", rotation closed "
        << yes_no(po.rotation_closed) << ", top arguments are roots " << yes_no(po.top_arguments_are_roots)
        << "\n";
    out << "max residual " << num(worst) << "\n";
  }
  if (!ok) err << "error: residual or multiplicity check failed\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_fk(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto rows = fk_table(config.k, config.x_min, config.x_max, config.step);
    write_fk_csv(out, rows);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

namespace {

struct CheckOutcome {
  std::string name;
  bool passed;
};

}  // namespace

int cmd_inequalities(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!valid_common(config, err)) return kExitUsage;
  if (config.n_max < 6) {
    err << "error: --n-max must be at least 6\n";
    return kExitUsage;
  }
  const unsigned workers = worker_count(config);
  std::vector<CheckOutcome> outcomes;

  const auto run_range = [&](const std::string& label, int lo, int hi, auto&& check) {
    std::vector<char> passed(hi - lo + 1, 0);
    parallel_for(passed.size(), workers, [&](std::size_t i) { passed[i] = check(lo + static_cast<int>(i)); });
    for (std::size_t i = 0; i < passed.size(); ++i)
      outcomes.push_back({label + " at " + std::to_string(lo + static_cast<int>(i)), passed[i] != 0});
  };

  const double step = config.grid_step;
  run_range("second-proof lemma, n", 6, config.n_max, [step](int n) { return check_second_proof_lemma(n, step); });
  run_range("k=2 inequality, n", 4, config.n_max, [](int n) { return check_k2_inequality(n); });
  run_range("boundary equality, k", 3, 12, [](int k) { return check_boundary_equality(k) < kNumericSlack; });
  run_range("limit, k", 2, 12, [](int k) { return check_limit(k, 1e8, 1e-4); });
  run_range("concavity and monotonicity, k", 2, 12,
            [step](int k) { return check_concavity_monotonicity(k, 100.0, step); });

  const CheckOutcome* first_failure = nullptr;
  for (const auto& o : outcomes)
    if (!o.passed) {
      first_failure = &o;
      break;
    }

  if (config.format == Format::json) {
    Json doc;
    doc["checks"] = outcomes.size();
    doc["passed"] = first_failure == nullptr;
    doc["first_failure"] = first_failure ? Json(first_failure->name) : Json(nullptr);
    out << doc.dump() << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& o : outcomes) failed += o.passed ? 0 : 1;
    out << outcomes.size() << " checks, " << failed << " failed\n";
  }
  if (first_failure) {
    err << "FAILED: " << first_failure->name << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Chevalley operator of Gr(k,n) and Galkin's lower bound", "qgr"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format_name = "text";
  double shift = 0.0;

  auto add_tuning = [&](CLI::App* sub) {
    sub->add_option("--tol", config.tol, "Agreement tolerance")->capture_default_str();
    sub->add_option("--rank-cap", config.rank_cap, "Largest binomial(n,k) handled by matrix routes")
        ->capture_default_str();
    sub->add_option("--format", format_name, "text, json, csv or dot")->capture_default_str();
  };
  auto add_kn = [&](CLI::App* sub) {
    sub->add_option("--k", config.k, "Subspace dimension")->required();
    sub->add_option("--n", config.n, "Ambient dimension")->required();
  };
  auto add_power = [&](CLI::App* sub) {
    sub->add_option("--shift", shift, "Power-iteration shift (default n)");
    sub->add_option("--max-iter", config.max_iter, "Power-iteration budget")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Galkin bound and four-route delta0 cross-check for one Gr(k,n)");
  add_kn(verify);
  add_tuning(verify);
  add_power(verify);

  auto* sweep = app.add_subcommand("sweep", "Galkin bound for every Gr(k,n) with n <= n-max");
  sweep->add_option("--n-max", config.n_max, "Largest n")->required();
  sweep->add_option("--k-max", config.k_max, "Largest k (default n-1)");
  sweep->add_option("--workers", config.parallelism, "Worker threads (default $QGR_WORKERS or 1)");
  add_tuning(sweep);
  add_power(sweep);

  auto* graph = app.add_subcommand("graph", "Export the quantum Bruhat graph");
  add_kn(graph);
  add_tuning(graph);

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form spectrum with eigenvector residuals");
  add_kn(spectrum);
  add_tuning(spectrum);

  auto* fk_cmd = app.add_subcommand("fk", "Tabulate F^k(x) as CSV");
  fk_cmd->add_option("--k", config.k, "Index k of F^k")->required();
  fk_cmd->add_option("--x-min", config.x_min)->required();
  fk_cmd->add_option("--x-max", config.x_max)->required();
  fk_cmd->add_option("--step", config.step)->capture_default_str();

  auto* ineq = app.add_subcommand("inequalities", "Grid checks of the calculus and elementary inequalities");
  ineq->add_option("--n-max", config.n_max, "Largest n")->required();
  ineq->add_option("--grid-step", config.grid_step)->capture_default_str();
  ineq->add_option("--workers", config.parallelism, "Worker threads (default $QGR_WORKERS or 1)");
  add_tuning(ineq);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (format_name == "text")
    config.format = Format::text;
  else if (format_name == "json")
    config.format = Format::json;
  else if (format_name == "csv")
    config.format = Format::csv;
  else if (format_name == "dot")
    config.format = Format::dot;
  else {
    err << "error: unknown format '" << format_name << "'\n";
    return kExitUsage;
  }

  for (auto* sub : {verify, sweep}) {
    if (sub->parsed() && sub->count("--shift")) config.shift = shift;
  }

  try {
    if (verify->parsed()) return cmd_verify(config, out, err);
    if (sweep->parsed()) return cmd_sweep(config, out, err);
    if (graph->parsed()) return cmd_graph(config, out, err);
    if (spectrum->parsed()) return cmd_spectrum(config, out, err);
    if (fk_cmd->parsed()) return cmd_fk(config, out, err);
    if (ineq->parsed()) return cmd_inequalities(config, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace qgr::cli
