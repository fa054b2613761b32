#include "qgr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "qgr/bruhat.hpp"
#include "qgr/errors.hpp"
#include "qgr/galkin.hpp"

namespace qgr {

namespace {

Partition single_box(int k) {
  Partition p;
  p.parts.assign(k, 0);
  p.parts[0] = 1;
  return p;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

double residual_of(const SparseMatrix<double>& op, const std::vector<Complex>& v, Complex eigenvalue) {
  const auto mv = op * v;
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(mv[i] - eigenvalue * v[i]));
  return worst / inf_norm(v);
}

void require_agreement(const char* a, double va, const char* b, double vb, double tol) {
  if (!(std::abs(va - vb) <= tol)) throw CrossCheckFailure(a, va, b, vb);
}

}  // namespace

SparseMatrix<double> c1_operator(const GrassmannianParams& params, std::uint64_t rank_cap) {
  return incidence_matrix(build_graph(params, rank_cap)).cast<double>(params.n());
}

PowerIterationResult principal_eigenpair(const SparseMatrix<double>& matrix, const PowerIterationOptions& options) {
  if (!(options.shift > 0)) throw std::invalid_argument("shift must be positive");
  const std::size_t size = matrix.size();
  if (size == 0) throw std::invalid_argument("empty matrix");

  std::vector<double> v(size, 1.0 / std::sqrt(static_cast<double>(size)));
  std::vector<double> w(size);
  double previous = 0.0;
  std::size_t settled = 0;
  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    matrix.multiply<double>(v, w);
    for (std::size_t i = 0; i < size; ++i) w[i] += options.shift * v[i];
    const double rho = dot(v, w);
    const double norm = std::sqrt(dot(w, w));
    if (norm == 0.0) throw IterationFailure(it, rho - options.shift, v);
    double moved = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      const double next = w[i] / norm;
      moved = std::max(moved, std::abs(next - v[i]));
      v[i] = next;
    }

    // An imprimitive iterate can cycle with a constant Rayleigh quotient, so
    // the vector itself must also have stopped moving.
    if (it > 1 && std::abs(rho - previous) < options.tol * std::abs(rho) && moved < std::sqrt(options.tol)) {
      if (++settled >= options.settle) return {rho - options.shift, it, v};
    } else {
      settled = 0;
    }
    previous = rho;
  }
  throw IterationFailure(options.max_iter, previous - options.shift, v);
}

double principal_eigenvalue(const SparseMatrix<double>& matrix, double shift, double tol, std::size_t max_iter) {
  PowerIterationOptions options;
  options.shift = shift;
  options.tol = tol;
  options.max_iter = max_iter;
  return principal_eigenpair(matrix, options).eigenvalue;
}

std::vector<LabeledEigenvalue> labeled_spectrum(const GrassmannianParams& params, std::uint64_t rank_cap) {
  if (params.rank() > rank_cap) throw InstanceTooLarge(params.rank(), rank_cap);
  const Partition box = single_box(params.k());
  std::vector<LabeledEigenvalue> out;
  for (auto& index : enumerate_indices(params)) {
    const auto x = roots_tuple(index, params);
    const Complex value = static_cast<double>(params.n()) * schur_eval(box, x);
    out.push_back({std::move(index), value});
  }
  return out;
}

std::vector<Complex> spectrum_closed_form(const GrassmannianParams& params, std::uint64_t rank_cap) {
  std::vector<Complex> out;
  for (const auto& e : labeled_spectrum(params, rank_cap)) out.push_back(e.value);
  return out;
}

double eigen_residual(const SpectralIndex& index, const GrassmannianParams& params,
                      const SparseMatrix<double>& operator_matrix, const std::vector<Partition>& basis) {
  const auto v = rietsch_eigenvector(index, params, basis);
  const auto x = roots_tuple(index, params);
  const Complex eigenvalue = static_cast<double>(params.n()) * schur_eval(single_box(params.k()), x);
  return residual_of(operator_matrix, v, eigenvalue);
}

double eigen_residual(const SpectralIndex& index, const GrassmannianParams& params, std::uint64_t rank_cap) {
  return eigen_residual(index, params, c1_operator(params, rank_cap), enumerate_partitions(params, rank_cap));
}

bool multiset_match(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  const double cell = tol > 0 ? tol : 1e-300;
  struct KeyHash {
    std::size_t operator()(const std::pair<long long, long long>& key) const noexcept {
      return std::hash<long long>{}(key.first) * 1000003u ^ std::hash<long long>{}(key.second);
    }
  };
  const auto key_of = [cell](Complex z) {
    return std::pair<long long, long long>{static_cast<long long>(std::floor(z.real() / cell)),
                                           static_cast<long long>(std::floor(z.imag() / cell))};
  };
  std::unordered_map<std::pair<long long, long long>, std::vector<std::size_t>, KeyHash> buckets;
  for (std::size_t i = 0; i < b.size(); ++i) buckets[key_of(b[i])].push_back(i);

  std::vector<bool> used(b.size(), false);
  for (const auto& z : a) {
    const auto [kr, ki] = key_of(z);
    std::size_t best = b.size();
    double best_dist = tol;
    for (long long dr = -1; dr <= 1; ++dr) {
      for (long long di = -1; di <= 1; ++di) {
        const auto it = buckets.find({kr + dr, ki + di});
        if (it == buckets.end()) continue;
        for (std::size_t j : it->second) {
          const double d = std::abs(z - b[j]);
          if (!used[j] && d <= best_dist) {
            best = j;
            best_dist = d;
          }
        }
      }
    }
    if (best == b.size()) return false;
    used[best] = true;
  }
  return true;
}

PropertyO property_o_check(const std::vector<Complex>& spectrum, int n, double tol) {
  double delta0 = 0.0;
  for (const auto& z : spectrum) delta0 = std::max(delta0, std::abs(z));
  const double t = tol * std::max(1.0, delta0);
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / n);

  PropertyO result{0, false, true};
  std::vector<Complex> rotated;
  rotated.reserve(spectrum.size());
  for (const auto& z : spectrum) {
    if (std::abs(z - delta0) <= t) ++result.top_multiplicity;
    rotated.push_back(z * zeta);
    if (std::abs(std::abs(z) - delta0) <= t) {
      const double turns = std::arg(z) * n / (2.0 * std::numbers::pi);
      const Complex nearest = delta0 * std::polar(1.0, 2.0 * std::numbers::pi * std::round(turns) / n);
      if (std::abs(z - nearest) > t) result.top_arguments_are_roots = false;
    }
  }
  result.rotation_closed = multiset_match(spectrum, rotated, t);
  return result;
}

PropertyO property_o_check(const GrassmannianParams& params, double tol, std::uint64_t rank_cap) {
  return property_o_check(spectrum_closed_form(params, rank_cap), params.n(), tol);
}

SpectralReport spectral_report(const GrassmannianParams& params, const SpectralOptions& options) {
  const auto graph = build_graph(params, options.rank_cap);
  if (!is_strongly_connected(graph))
    throw std::runtime_error("quantum Bruhat graph of Gr(" + std::to_string(params.k()) + "," +
                             std::to_string(params.n()) + ") is not strongly connected");
  const auto op = incidence_matrix(graph).cast<double>(params.n());

  PowerIterationOptions power;
  power.shift = options.shift.value_or(static_cast<double>(params.n()));
  power.tol = options.power_tol;
  power.max_iter = options.max_iter;
  const auto perron = principal_eigenpair(op, power);

  const auto labeled = labeled_spectrum(params, options.rank_cap);
  const SpectralIndex ground = ground_index(params.k());
  Complex ground_value{};
  std::vector<Complex> spectrum;
  spectrum.reserve(labeled.size());
  for (const auto& e : labeled) {
    spectrum.push_back(e.value);
    if (e.index == ground) ground_value = e.value;
  }

  SpectralReport report{params,
                        perron.eigenvalue,
                        ground_value.real(),
                        delta0_sine(params.k(), params.n()),
                        delta0_cosine_sum(params.k(), params.n()),
                        std::move(spectrum),
                        0,
                        false,
                        false,
                        std::nullopt,
                        perron.iterations};

  const double t = options.tol * std::max(1.0, report.delta0_sine);
  const std::pair<const char*, double> routes[] = {{"matrix", report.delta0_matrix},
                                                   {"schur", report.delta0_schur},
                                                   {"sine", report.delta0_sine},
                                                   {"cosine", report.delta0_cosine}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      require_agreement(routes[i].first, routes[i].second, routes[j].first, routes[j].second, t);
  if (std::abs(ground_value.imag()) > t) throw CrossCheckFailure("schur (real part)", ground_value.real(), "schur (imaginary part)", ground_value.imag());

  const auto po = property_o_check(report.spectrum, params.n(), options.tol);
  report.top_multiplicity = po.top_multiplicity;
  report.rotation_closed = po.rotation_closed;
  report.top_arguments_are_roots = po.top_arguments_are_roots;

  if (options.compute_residuals) {
    double worst = 0.0;
    for (const auto& e : labeled) {
      const auto x = roots_tuple(e.index, params);
      auto values = schur_values(graph.vertices(), x);
      for (auto& c : values) c = std::conj(c);
      worst = std::max(worst, residual_of(op, values, e.value));
    }
    report.max_eigen_residual = worst;
  }
  return report;
}

}  // namespace qgr
