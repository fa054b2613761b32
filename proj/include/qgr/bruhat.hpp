#pragma once

// Quantum Bruhat graph of Gr(k,n): an edge lam -> mu whenever sigma_mu occurs
// in the quantum Chevalley product sigma_(1) * sigma_lam.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qgr/combinatorics.hpp"
#include "qgr/sparse.hpp"

namespace qgr {

struct QuantumEdge {
  std::size_t source;  // canonical vertex index
  std::size_t target;
  int degree;  // power of q: 0 for a cover, 1 for lam -> lam*
};

class QuantumBruhatGraph {
 public:
  QuantumBruhatGraph(GrassmannianParams params, std::vector<Partition> vertices,
                     std::vector<QuantumEdge> edges);

  const GrassmannianParams& params() const noexcept { return params_; }
  const std::vector<Partition>& vertices() const noexcept { return vertices_; }
  const std::vector<QuantumEdge>& edges() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t quantum_edge_count() const noexcept;

  /// Canonical index of lam; throws std::out_of_range if lam is not a vertex.
  std::size_t index_of(const Partition& lam) const;

 private:
  GrassmannianParams params_;
  std::vector<Partition> vertices_;
  std::vector<QuantumEdge> edges_;
  std::map<Partition, std::size_t> index_;
};

QuantumBruhatGraph build_graph(const GrassmannianParams& params,
                               std::uint64_t rank_cap = kDefaultRankCap);

/// A[target][source] = 1 for every edge, canonical vertex order.
SparseMatrix<int> incidence_matrix(const QuantumBruhatGraph& graph);

bool is_strongly_connected(const QuantumBruhatGraph& graph);

enum class GraphFormat { dot, json };

/// Throws std::invalid_argument for anything other than "dot" or "json".
GraphFormat parse_graph_format(std::string_view name);

std::string export_graph(const QuantumBruhatGraph& graph, GraphFormat format);

}  // namespace qgr
