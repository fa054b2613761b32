#include "qgr/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qgr {

std::string SpectralIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < doubled.size(); ++j) {
    if (j) s += ',';
    if (doubled[j] % 2 == 0)
      s += std::to_string(doubled[j] / 2);
    else
      s += std::to_string(doubled[j]) + "/2";
  }
  return s + ")";
}

bool is_valid_index(const SpectralIndex& index, const GrassmannianParams& params) noexcept {
  const int k = params.k();
  if (index.size() != static_cast<std::size_t>(k)) return false;
  const int parity = (k + 1) % 2;
  for (std::size_t j = 0; j < index.size(); ++j) {
    const int d = index.doubled[j];
    if (((d % 2) + 2) % 2 != parity) return false;
    if (d < -(k - 1) || d > 2 * params.n() - (k + 1)) return false;
    if (j && d <= index.doubled[j - 1]) return false;
  }
  return true;
}

std::vector<SpectralIndex> enumerate_indices(const GrassmannianParams& params) {
  const int k = params.k();
  const int n = params.n();
  std::vector<SpectralIndex> out;
  out.reserve(params.rank());
  // Positions t_1 < ... < t_k in [0, n) map to doubled exponents 2t - (k-1).
  std::vector<int> pos(k);
  for (int j = 0; j < k; ++j) pos[j] = j;
  while (true) {
    SpectralIndex index;
    index.doubled.reserve(k);
    for (int t : pos) index.doubled.push_back(2 * t - (k - 1));
    out.push_back(std::move(index));

    int j = k - 1;
    while (j >= 0 && pos[j] == n - k + j) --j;
    if (j < 0) break;
    ++pos[j];
    for (int i = j + 1; i < k; ++i) pos[i] = pos[i - 1] + 1;
  }
  return out;
}

SpectralIndex ground_index(int k) {
  SpectralIndex index;
  for (int j = 0; j < k; ++j) index.doubled.push_back(2 * j - (k - 1));
  return index;
}

std::vector<Complex> roots_tuple(const SpectralIndex& index, const GrassmannianParams& params) {
  const int n = params.n();
  std::vector<Complex> out;
  out.reserve(index.size());
  for (int d : index.doubled) {
    // exp(i pi d / n); reduce d into (-n, n] first so the angle stays small.
    int r = d % (2 * n);
    if (r > n) r -= 2 * n;
    if (r <= -n) r += 2 * n;
    out.push_back(std::polar(1.0, std::numbers::pi * r / n));
  }
  return out;
}

std::vector<Complex> complete_homogeneous_table(std::span<const Complex> x, int max_degree) {
  if (max_degree < 0) return {};
  std::vector<Complex> power_sums(max_degree + 1, Complex{});
  std::vector<Complex> powers(x.begin(), x.end());
  for (int j = 1; j <= max_degree; ++j) {
    Complex s{};
    for (std::size_t i = 0; i < powers.size(); ++i) {
      s += powers[i];
      powers[i] *= x[i];
    }
    power_sums[j] = s;
  }
  std::vector<Complex> h(max_degree + 1, Complex{});
  h[0] = 1.0;
  for (int m = 1; m <= max_degree; ++m) {
    Complex acc{};
    for (int j = 1; j <= m; ++j) acc += power_sums[j] * h[m - j];
    h[m] = acc / static_cast<double>(m);
  }
  return h;
}

Complex complete_homogeneous(std::span<const Complex> x, int m) {
  if (m < 0) return 0.0;
  return complete_homogeneous_table(x, m)[m];
}

Complex lu_determinant(std::span<Complex> a, std::size_t size) {
  if (a.size() != size * size) throw std::invalid_argument("lu_determinant: size mismatch");
  Complex det = 1.0;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a[col * size + col]);
    for (std::size_t r = col + 1; r < size; ++r) {
      const double mag = std::abs(a[r * size + col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < size; ++c) std::swap(a[pivot * size + c], a[col * size + c]);
      det = -det;
    }
    const Complex diag = a[col * size + col];
    det *= diag;
    for (std::size_t r = col + 1; r < size; ++r) {
      const Complex factor = a[r * size + col] / diag;
      if (factor == Complex{}) continue;
      for (std::size_t c = col + 1; c < size; ++c) a[r * size + c] -= factor * a[col * size + c];
    }
  }
  return det;
}

Complex schur_eval(const Partition& lam, std::span<const Complex> h_table, std::size_t k) {
  if (lam.length() != k) throw std::invalid_argument("schur_eval: partition length differs from k");
  if (k == 0) return 1.0;
  std::vector<Complex> m(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      const long degree = static_cast<long>(lam[r]) - static_cast<long>(r) + static_cast<long>(c);
      if (degree < 0) {
        m[r * k + c] = 0.0;
      } else if (static_cast<std::size_t>(degree) < h_table.size()) {
        m[r * k + c] = h_table[degree];
      } else {
        throw std::out_of_range("schur_eval: h-table too short");
      }
    }
  }
  return lu_determinant(m, k);
}

Complex schur_eval(const Partition& lam, std::span<const Complex> x) {
  if (lam.length() != x.size()) throw std::invalid_argument("schur_eval: partition length differs from tuple size");
  if (x.empty()) return 1.0;
  const int max_degree = lam[0] + static_cast<int>(x.size()) - 1;
  const auto h = complete_homogeneous_table(x, max_degree);
  return schur_eval(lam, h, x.size());
}

std::vector<Complex> schur_values(const std::vector<Partition>& partitions, std::span<const Complex> x) {
  int max_degree = 0;
  for (const auto& p : partitions)
    if (p.length()) max_degree = std::max(max_degree, p[0] + static_cast<int>(x.size()) - 1);
  const auto h = complete_homogeneous_table(x, max_degree);
  std::vector<Complex> out;
  out.reserve(partitions.size());
  for (const auto& p : partitions) out.push_back(schur_eval(p, h, x.size()));
  return out;
}

std::vector<Complex> rietsch_eigenvector(const SpectralIndex& index, const GrassmannianParams& params,
                                         const std::vector<Partition>& basis) {
  const auto x = roots_tuple(index, params);
  auto v = schur_values(basis, x);
  for (auto& c : v) c = std::conj(c);
  return v;
}

std::vector<Complex> rietsch_eigenvector(const SpectralIndex& index, const GrassmannianParams& params,
                                         std::uint64_t rank_cap) {
  return rietsch_eigenvector(index, params, enumerate_partitions(params, rank_cap));
}

}  // namespace qgr
