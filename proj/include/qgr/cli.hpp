#pragma once

// Command layer behind the `qgr` executable. Each command writes its report to
// `out`, diagnostics to `err`, and returns the process exit code:
// 0 = all checks pass, 1 = a mathematical check failed, 2 = usage error.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qgr/combinatorics.hpp"
#include "qgr/galkin.hpp"
#include "qgr/spectral.hpp"

namespace qgr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable read by `sweep` and `inequalities` for the worker count.
inline constexpr const char* kWorkersEnv = "QGR_WORKERS";

enum class Format { text, json, csv, dot };

struct RunConfig {
  std::string command;
  int k = 0;
  int n = 0;
  int k_max = 0;  // 0: no limit
  int n_max = 0;
  double tol = 1e-8;
  double grid_step = 0.01;
  std::optional<double> shift;  // defaults to n
  std::size_t max_iter = 1000000;
  Format format = Format::text;
  std::uint64_t rank_cap = kDefaultRankCap;
  unsigned parallelism = 0;  // 0: take kWorkersEnv, else 1
  double x_min = 0.0;
  double x_max = 0.0;
  double step = 1.0;
};

/// Tolerance for the Galkin equality verdict, relative to max(1, bound).
inline constexpr double kVerdictTolerance = 1e-9;

/// Report object for `verify --format json`. `spectral` is absent when the
/// instance exceeds the rank cap; the matrix-dependent fields are then null.
nlohmann::ordered_json report_json(const GalkinReport& galkin, const std::optional<SpectralReport>& spectral);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fk(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_inequalities(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches, and maps every failure onto the exit-code contract.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgr::cli
