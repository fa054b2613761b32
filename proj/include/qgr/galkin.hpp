#pragma once

// Closed forms for delta_0 of Gr(k,n), the gap family
// F^k(x) = delta_0^k(x) - k(x-k) - 1, and numeric checks of the inequalities
// behind Galkin's bound delta_0 >= dim Gr(k,n) + 1.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qgr/combinatorics.hpp"

namespace qgr {

/// Slack used by the grid-based inequality checks.
inline constexpr double kNumericSlack = 1e-9;

/// x sin(pi k / x) / sin(pi / x). Loses precision once x exceeds ~1e12.
double delta0_sine(int k, double x);

/// Even k: 2x sum_{j=1}^{k/2} cos((k-2j+1) pi / x).
/// Odd k:  x + 2x sum_{j=1}^{(k-1)/2} cos((k-2j+1) pi / x).
double delta0_cosine_sum(int k, double x);

/// F^k(x). Evaluated as k^2 - 1 - sum_j 4x sin^2((k-2j+1) pi / 2x), which is the
/// same function without the cancellation between kx and delta_0^k(x).
double fk(int k, double x);

/// d^2/dx^2 F^k(x) = -sum_j 2 a_j^2 / x^3 cos(a_j / x), a_j = (k-2j+1) pi.
double fk_second_derivative(int k, double x);

enum class Verdict { holds_strict, holds_equality, violation };

std::string_view to_string(Verdict verdict) noexcept;

struct GalkinReport {
  GrassmannianParams params;
  double delta0;
  double bound;
  double margin;
  bool equality;
  bool is_projective_space;
  Verdict verdict;
  /// equality coincides with is_projective_space
  bool consistent;
};

/// Equality is declared when |margin| <= tol * max(1, bound).
GalkinReport verify_galkin(const GrassmannianParams& params, double tol = 1e-9);

/// n sin(pi x/n)/sin(pi/n) >= x(n-x)+1 - slack on {3, 3+step, ...} within [3, n/2].
/// Requires n >= 6.
bool check_second_proof_lemma(int n, double grid_step);

/// 2n cos(pi/n) >= 2n - 3 - slack. Requires n >= 4.
bool check_k2_inequality(int n);

/// |F^k(2(k-1)) - F^{k-2}(2(k-1))|. Requires k >= 3.
double check_boundary_equality(int k);

/// |F^k(x_large) - (k^2 - 1)| < tol.
bool check_limit(int k, double x_large = 1e8, double tol = 1e-4);

/// F^k'' < slack and F^k(x+step) - F^k(x) > -slack at x = 2(k-1) + i*step,
/// i >= 1, x <= x_max. Requires k >= 2.
bool check_concavity_monotonicity(int k, double x_max, double grid_step);

/// Gr(k,n) if k <= n-k, else Gr(n-k,n).
GrassmannianParams reduction_domain(const GrassmannianParams& params);

struct FkRow {
  double x;
  double value;
};

/// Rows at x_min + i*step for every such point <= x_max. Values within rounding
/// noise of zero are emitted as exactly 0. Throws std::invalid_argument on an
/// empty range or non-positive x_min/step.
std::vector<FkRow> fk_table(int k, double x_min, double x_max, double step);

/// Header "x,F", then one row per point with 17 significant digits.
void write_fk_csv(std::ostream& out, const std::vector<FkRow>& rows);

}  // namespace qgr
