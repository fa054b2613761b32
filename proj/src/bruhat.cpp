#include "qgr/bruhat.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qgr {

QuantumBruhatGraph::QuantumBruhatGraph(GrassmannianParams params, std::vector<Partition> vertices,
                                       std::vector<QuantumEdge> edges)
    : params_(params), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
}

std::size_t QuantumBruhatGraph::quantum_edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const QuantumEdge& e) { return e.degree == 1; }));
}

std::size_t QuantumBruhatGraph::index_of(const Partition& lam) const {
  const auto it = index_.find(lam);
  if (it == index_.end()) throw std::out_of_range("partition " + lam.to_string() + " is not a vertex");
  return it->second;
}

QuantumBruhatGraph build_graph(const GrassmannianParams& params, std::uint64_t rank_cap) {
  auto vertices = enumerate_partitions(params, rank_cap);
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);

  std::vector<QuantumEdge> edges;
  std::vector<std::size_t> targets;
  for (std::size_t src = 0; src < vertices.size(); ++src) {
    targets.clear();
    for (const auto& mu : covers(vertices[src], params)) targets.push_back(index.at(mu));
    std::sort(targets.begin(), targets.end());
    for (std::size_t dst : targets) edges.push_back({src, dst, 0});
    if (auto star = quantum_target(vertices[src], params)) edges.push_back({src, index.at(*star), 1});
  }
  return QuantumBruhatGraph(params, std::move(vertices), std::move(edges));
}

SparseMatrix<int> incidence_matrix(const QuantumBruhatGraph& graph) {
  std::vector<SparseMatrix<int>::Entry> entries;
  entries.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) entries.push_back({e.target, e.source, 1});
  return SparseMatrix<int>(graph.vertex_count(), std::move(entries));
}

namespace {

std::vector<bool> reachable(std::size_t size, const std::vector<std::vector<std::size_t>>& adjacency) {
  std::vector<bool> seen(size, false);
  if (size == 0) return seen;
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        frontier.push(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const QuantumBruhatGraph& graph) {
  const std::size_t size = graph.vertex_count();
  std::vector<std::vector<std::size_t>> forward(size), backward(size);
  for (const auto& e : graph.edges()) {
    forward[e.source].push_back(e.target);
    backward[e.target].push_back(e.source);
  }
  const auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(reachable(size, forward)) && all(reachable(size, backward));
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw std::invalid_argument("unknown graph format: " + std::string(name));
}

std::string export_graph(const QuantumBruhatGraph& graph, GraphFormat format) {
  const auto& vertices = graph.vertices();
  if (format == GraphFormat::dot) {
    std::ostringstream os;
    os << "digraph g {\n";
    for (const auto& v : vertices) os << "  \"" << v.to_string() << "\";\n";
    for (const auto& e : graph.edges())
      os << "  \"" << vertices[e.source].to_string() << "\" -> \"" << vertices[e.target].to_string()
         << "\" [q=" << e.degree << "];\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::ordered_json doc;
  doc["k"] = graph.params().k();
  doc["n"] = graph.params().n();
  doc["vertex_count"] = graph.vertex_count();
  doc["edge_count"] = graph.edge_count();
  doc["quantum_edge_count"] = graph.quantum_edge_count();
  auto& vs = doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : vertices) vs.push_back(v.parts);
  auto& es = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges()) {
    nlohmann::ordered_json edge;
    edge["src"] = e.source;
    edge["dst"] = e.target;
    edge["q"] = e.degree;
    es.push_back(std::move(edge));
  }
  return doc.dump() + "\n";
}

}  // namespace qgr
