#include "qgr/galkin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qgr {

namespace {

constexpr double kPi = std::numbers::pi;

void require_k(int k, int minimum) {
  if (k < minimum) throw std::invalid_argument("k must be at least " + std::to_string(minimum));
}

// Number of grid points start + i*step (i = 0, 1, ...) not exceeding stop.
long grid_count(double start, double stop, double step) {
  if (stop < start) return 0;
  return static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
}

}  // namespace

double delta0_sine(int k, double x) {
  require_k(k, 1);
  return x * std::sin(kPi * k / x) / std::sin(kPi / x);
}

double delta0_cosine_sum(int k, double x) {
  require_k(k, 1);
  double sum = 0.0;
  for (int j = 1; j <= k / 2; ++j) sum += std::cos((k - 2 * j + 1) * kPi / x);
  return (k % 2 ? x : 0.0) + 2.0 * x * sum;
}

double fk(int k, double x) {
  require_k(k, 1);
  double deficit = 0.0;
  for (int j = 1; j <= k / 2; ++j) {
    const double s = std::sin((k - 2 * j + 1) * kPi / (2.0 * x));
    deficit += 4.0 * x * s * s;
  }
  return static_cast<double>(k) * k - 1.0 - deficit;
}

double fk_second_derivative(int k, double x) {
  require_k(k, 1);
  double sum = 0.0;
  for (int j = 1; j <= k / 2; ++j) {
    const double a = (k - 2 * j + 1) * kPi;
    sum += 2.0 * a * a / (x * x * x) * std::cos(a / x);
  }
  return -sum;
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::holds_strict:
      return "holds_strict";
    case Verdict::holds_equality:
      return "holds_equality";
    case Verdict::violation:
      return "VIOLATION";
  }
  return "unknown";
}

GalkinReport verify_galkin(const GrassmannianParams& params, double tol) {
  const double delta0 = delta0_sine(params.k(), params.n());
  const double bound = params.dimension() + 1.0;
  const double margin = delta0 - bound;
  const double slack = tol * std::max(1.0, bound);
  const bool equality = std::abs(margin) <= slack;
  const bool projective = params.k() == 1 || params.k() == params.n() - 1;
  Verdict verdict = Verdict::holds_strict;
  if (equality)
    verdict = Verdict::holds_equality;
  else if (margin < -slack)
    verdict = Verdict::violation;
  return GalkinReport{params, delta0, bound, margin, equality, projective, verdict, equality == projective};
}

bool check_second_proof_lemma(int n, double grid_step) {
  if (n < 6) throw std::invalid_argument("second-proof lemma needs n >= 6");
  if (!(grid_step > 0)) throw std::invalid_argument("grid step must be positive");
  const long count = grid_count(3.0, n / 2.0, grid_step);
  const double denom = std::sin(kPi / n);
  for (long i = 0; i < count; ++i) {
    const double x = 3.0 + i * grid_step;
    const double lhs = n * std::sin(kPi * x / n) / denom;
    if (lhs < x * (n - x) + 1.0 - kNumericSlack) return false;
  }
  return true;
}

bool check_k2_inequality(int n) {
  if (n < 4) throw std::invalid_argument("k=2 inequality needs n >= 4");
  return 2.0 * n * std::cos(kPi / n) >= 2.0 * n - 3.0 - kNumericSlack;
}

double check_boundary_equality(int k) {
  require_k(k, 3);
  const double x = 2.0 * (k - 1);
  return std::abs(fk(k, x) - fk(k - 2, x));
}

bool check_limit(int k, double x_large, double tol) {
  return std::abs(fk(k, x_large) - (static_cast<double>(k) * k - 1.0)) < tol;
}

bool check_concavity_monotonicity(int k, double x_max, double grid_step) {
  require_k(k, 2);
  if (!(grid_step > 0)) throw std::invalid_argument("grid step must be positive");
  const double start = 2.0 * (k - 1);
  const long count = grid_count(start + grid_step, x_max, grid_step);
  for (long i = 1; i <= count; ++i) {
    const double x = start + i * grid_step;
    if (fk_second_derivative(k, x) >= kNumericSlack) return false;
    if (fk(k, x + grid_step) - fk(k, x) <= -kNumericSlack) return false;
  }
  return true;
}

GrassmannianParams reduction_domain(const GrassmannianParams& params) {
  return params.k() <= params.n() - params.k() ? params : params.dual();
}

std::vector<FkRow> fk_table(int k, double x_min, double x_max, double step) {
  require_k(k, 1);
  if (!(x_min > 0)) throw std::invalid_argument("x_min must be positive");
  if (!(step > 0)) throw std::invalid_argument("step must be positive");
  const long count = grid_count(x_min, x_max, step);
  if (count <= 0) throw std::invalid_argument("empty range: x_max < x_min");

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<FkRow> rows;
  rows.reserve(count);
  for (long i = 0; i < count; ++i) {
    const double x = x_min + i * step;
    double value = fk(k, x);
    // Below this the value is rounding noise of terms of size ~ k*x.
    if (std::abs(value) <= 8.0 * eps * (k * x + static_cast<double>(k) * k + 1.0)) value = 0.0;
    rows.push_back({x, value});
  }
  return rows;
}

void write_fk_csv(std::ostream& out, const std::vector<FkRow>& rows) {
  out << "x,F\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", row.x, row.value);
    out << buf;
  }
}

}  // namespace qgr
