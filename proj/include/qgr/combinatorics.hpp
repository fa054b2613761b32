#pragma once

// Partitions in the k x (n-k) box indexing the Schubert basis of Gr(k,n).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgr {

inline constexpr std::uint64_t kDefaultRankCap = 100000;

/// binomial(n,k), saturating at UINT64_MAX on overflow.
std::uint64_t binomial(int n, int k) noexcept;

/// The pair (k,n) with 1 <= k <= n-1.
class GrassmannianParams {
 public:
  /// Throws std::invalid_argument unless 1 <= k <= n-1.
  GrassmannianParams(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int width() const noexcept { return n_ - k_; }
  int dimension() const noexcept { return k_ * (n_ - k_); }
  int fano_index() const noexcept { return n_; }
  std::uint64_t rank() const noexcept { return binomial(n_, k_); }

  /// Gr(n-k, n).
  GrassmannianParams dual() const { return {n_ - k_, n_}; }

  friend bool operator==(const GrassmannianParams&, const GrassmannianParams&) = default;

 private:
  int k_;
  int n_;
};

/// Weakly decreasing tuple of row lengths; always carries exactly k parts.
struct Partition {
  std::vector<int> parts;

  int weight() const noexcept;
  std::size_t length() const noexcept { return parts.size(); }
  int operator[](std::size_t row) const { return parts[row]; }

  /// "(2,1,0)"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// True when lam has k weakly decreasing parts in [0, n-k].
bool fits_box(const Partition& lam, const GrassmannianParams& params) noexcept;

/// Componentwise containment of Young diagrams (equal lengths assumed).
bool contained_in(const Partition& lam, const Partition& mu) noexcept;

/// Every partition in the box, graded by weight and lexicographically
/// descending within a weight. Throws InstanceTooLarge if rank > rank_cap.
std::vector<Partition> enumerate_partitions(const GrassmannianParams& params,
                                            std::uint64_t rank_cap = kDefaultRankCap);

/// Partitions obtained by adding one box to a single row.
std::vector<Partition> covers(const Partition& lam, const GrassmannianParams& params);

/// lam* = (lam_2 - 1, ..., lam_k - 1, 0) when lam_1 = n-k and lam_k > 0.
std::optional<Partition> quantum_target(const Partition& lam,
                                        const GrassmannianParams& params);

/// Conjugate diagram, read in the (n-k) x k box of Gr(n-k,n).
Partition dual_partition(const Partition& lam, const GrassmannianParams& params);

}  // namespace qgr
