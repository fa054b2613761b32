#pragma once

// Symmetric-function evaluation at tuples of roots of (-1)^(k+1).

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qgr/combinatorics.hpp"

namespace qgr {

using Complex = std::complex<double>;

/// Absolute/relative tolerance for complex identities at desk scale.
inline constexpr double kAlgebraicTolerance = 1e-9;

/// An element I of the index set, stored doubled so half-integers stay exact:
/// doubled[j] = 2 * i_j. Strictly increasing, all entries of parity k+1,
/// within [-(k-1), 2n-(k+1)].
struct SpectralIndex {
  std::vector<int> doubled;

  std::size_t size() const noexcept { return doubled.size(); }
  double exponent(std::size_t j) const { return 0.5 * doubled[j]; }

  /// "(-1/2,1/2)" or "(-1,0,1)"
  std::string to_string() const;

  friend bool operator==(const SpectralIndex&, const SpectralIndex&) = default;
  friend auto operator<=>(const SpectralIndex&, const SpectralIndex&) = default;
};

bool is_valid_index(const SpectralIndex& index, const GrassmannianParams& params) noexcept;

/// All binomial(n,k) indices, lexicographic in the doubled representation.
std::vector<SpectralIndex> enumerate_indices(const GrassmannianParams& params);

/// I_0 = (-(k-1)/2, ..., (k-1)/2).
SpectralIndex ground_index(int k);

/// (zeta^{i_1}, ..., zeta^{i_k}) with zeta = exp(2 pi i / n).
std::vector<Complex> roots_tuple(const SpectralIndex& index, const GrassmannianParams& params);

/// h_m(x) by Newton's identity on power sums; 0 for m < 0, 1 for m = 0.
Complex complete_homogeneous(std::span<const Complex> x, int m);

/// h_0(x), ..., h_{max_degree}(x) in one pass.
std::vector<Complex> complete_homogeneous_table(std::span<const Complex> x, int max_degree);

/// Determinant by LU with partial pivoting. `matrix` is row-major, size x size,
/// and is overwritten.
Complex lu_determinant(std::span<Complex> matrix, std::size_t size);

/// Jacobi-Trudi determinant det(h_{lam_r - r + c}) evaluated at x.
Complex schur_eval(const Partition& lam, std::span<const Complex> x);

/// Same, with a precomputed table h_0..h_M (M >= lam_1 + k - 1).
Complex schur_eval(const Partition& lam, std::span<const Complex> h_table, std::size_t k);

/// S_nu(zeta^I) for every nu in `partitions`, sharing one h-table.
std::vector<Complex> schur_values(const std::vector<Partition>& partitions,
                                  std::span<const Complex> x);

/// Coordinates conj(S_nu(zeta^I)) in the canonical Schubert basis order.
std::vector<Complex> rietsch_eigenvector(const SpectralIndex& index,
                                         const GrassmannianParams& params,
                                         std::uint64_t rank_cap = kDefaultRankCap);

/// Overload reusing an already enumerated basis.
std::vector<Complex> rietsch_eigenvector(const SpectralIndex& index,
                                         const GrassmannianParams& params,
                                         const std::vector<Partition>& basis);

}  // namespace qgr
