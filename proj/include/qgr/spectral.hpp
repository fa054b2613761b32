#pragma once

// The operator c1 = n [sigma_(1)] on QH*(Gr(k,n)) at q = 1, its Perron root,
// its closed-form spectrum and Property O.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qgr/combinatorics.hpp"
#include "qgr/sparse.hpp"
#include "qgr/symfunc.hpp"

namespace qgr {

/// n times the incidence matrix of the quantum Bruhat graph.
SparseMatrix<double> c1_operator(const GrassmannianParams& params,
                                 std::uint64_t rank_cap = kDefaultRankCap);

struct PowerIterationOptions {
  double shift = 1.0;
  /// Relative change of successive Rayleigh quotients. The unit iterate must
  /// also move by less than sqrt(tol) per step.
  double tol = 1e-12;
  std::size_t max_iter = 1000000;
  /// Consecutive iterations the change must stay below tol. The top circle of
  /// the spectrum makes the quotient oscillate; one small step is not enough.
  std::size_t settle = 8;
};

struct PowerIterationResult {
  double eigenvalue;
  std::size_t iterations;
  std::vector<double> vector;  // unit 2-norm, positive
};

/// Largest real eigenvalue of a nonnegative irreducible matrix by power
/// iteration on (matrix + shift I) from the all-ones vector.
/// Throws IterationFailure after max_iter steps.
PowerIterationResult principal_eigenpair(const SparseMatrix<double>& matrix,
                                         const PowerIterationOptions& options);

double principal_eigenvalue(const SparseMatrix<double>& matrix, double shift,
                            double tol = 1e-12, std::size_t max_iter = 1000000);

struct LabeledEigenvalue {
  SpectralIndex index;
  Complex value;  // n S_(1)(zeta^I)
};

/// n S_(1)(zeta^I) for every I, in index order.
std::vector<LabeledEigenvalue> labeled_spectrum(const GrassmannianParams& params,
                                                std::uint64_t rank_cap = kDefaultRankCap);

std::vector<Complex> spectrum_closed_form(const GrassmannianParams& params,
                                          std::uint64_t rank_cap = kDefaultRankCap);

/// ||M v - lambda v||_inf / ||v||_inf for the Rietsch vector v of I.
double eigen_residual(const SpectralIndex& index, const GrassmannianParams& params,
                      std::uint64_t rank_cap = kDefaultRankCap);

/// Same, with the operator and basis already built.
double eigen_residual(const SpectralIndex& index, const GrassmannianParams& params,
                      const SparseMatrix<double>& operator_matrix,
                      const std::vector<Partition>& basis);

struct PropertyO {
  int top_multiplicity;
  bool rotation_closed;
  bool top_arguments_are_roots;
};

/// Tolerances are tol * max(1, delta_0).
PropertyO property_o_check(const std::vector<Complex>& spectrum, int n, double tol);
PropertyO property_o_check(const GrassmannianParams& params, double tol,
                           std::uint64_t rank_cap = kDefaultRankCap);

/// True if `b` is a permutation of `a` up to tol per element.
bool multiset_match(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol);

struct SpectralReport {
  GrassmannianParams params;
  double delta0_matrix;
  double delta0_schur;
  double delta0_sine;
  double delta0_cosine;
  std::vector<Complex> spectrum;
  int top_multiplicity;
  bool rotation_closed;
  bool top_arguments_are_roots;
  /// Absent when the residual sweep was skipped.
  std::optional<double> max_eigen_residual;
  std::size_t power_iterations;
};

struct SpectralOptions {
  /// Agreement tolerance, scaled by max(1, delta_0).
  double tol = 1e-8;
  /// Defaults to n when absent.
  std::optional<double> shift;
  double power_tol = 1e-12;
  std::size_t max_iter = 1000000;
  std::uint64_t rank_cap = kDefaultRankCap;
  /// The residual sweep costs rank^2 Schur evaluations; sweeps turn it off.
  bool compute_residuals = true;
};

/// The four delta_0 routes, cross-checked pairwise. Throws CrossCheckFailure on
/// disagreement and std::runtime_error if the graph is not strongly connected.
SpectralReport spectral_report(const GrassmannianParams& params, const SpectralOptions& options = {});

}  // namespace qgr
