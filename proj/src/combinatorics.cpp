#include "qgr/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qgr/errors.hpp"

namespace qgr {

std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 0; i < k; ++i) {
    result = result * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

GrassmannianParams::GrassmannianParams(int k, int n) : k_(k), n_(n) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("Gr(k,n) requires 1 <= k <= n-1, got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
}

int Partition::weight() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

bool fits_box(const Partition& lam, const GrassmannianParams& params) noexcept {
  if (lam.length() != static_cast<std::size_t>(params.k())) return false;
  int prev = params.width();
  for (int p : lam.parts) {
    if (p < 0 || p > prev) return false;
    prev = p;
  }
  return true;
}

bool contained_in(const Partition& lam, const Partition& mu) noexcept {
  if (lam.length() != mu.length()) return false;
  for (std::size_t i = 0; i < lam.length(); ++i)
    if (lam[i] > mu[i]) return false;
  return true;
}

namespace {

void fill_rows(std::vector<int>& parts, std::size_t row, int bound, std::vector<Partition>& out) {
  if (row == parts.size()) {
    out.push_back(Partition{parts});
    return;
  }
  for (int p = 0; p <= bound; ++p) {
    parts[row] = p;
    fill_rows(parts, row + 1, p, out);
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(const GrassmannianParams& params, std::uint64_t rank_cap) {
  const std::uint64_t rank = params.rank();
  if (rank > rank_cap) throw InstanceTooLarge(rank, rank_cap);

  std::vector<Partition> out;
  out.reserve(rank);
  std::vector<int> parts(params.k(), 0);
  fill_rows(parts, 0, params.width(), out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    const int wa = a.weight();
    const int wb = b.weight();
    if (wa != wb) return wa < wb;
    return a > b;
  });
  return out;
}

std::vector<Partition> covers(const Partition& lam, const GrassmannianParams& params) {
  std::vector<Partition> out;
  for (std::size_t row = 0; row < lam.length(); ++row) {
    const int limit = row == 0 ? params.width() : lam[row - 1];
    if (lam[row] < limit) {
      Partition mu = lam;
      ++mu.parts[row];
      out.push_back(std::move(mu));
    }
  }
  return out;
}

std::optional<Partition> quantum_target(const Partition& lam, const GrassmannianParams& params) {
  if (lam.length() == 0 || lam.parts.front() != params.width() || lam.parts.back() <= 0) return std::nullopt;
  Partition star;
  star.parts.reserve(lam.length());
  for (std::size_t row = 1; row < lam.length(); ++row) star.parts.push_back(lam[row] - 1);
  star.parts.push_back(0);
  return star;
}

Partition dual_partition(const Partition& lam, const GrassmannianParams& params) {
  Partition conj;
  conj.parts.assign(params.width(), 0);
  for (int col = 0; col < params.width(); ++col) {
    int height = 0;
    for (int p : lam.parts)
      if (p > col) ++height;
    conj.parts[col] = height;
  }
  return conj;
}

}  // namespace qgr
