#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace h2core {

using NodeId = std::uint32_t;
using Count = std::uint32_t;

// Immutable undirected simple graph in compressed adjacency (CSR) form.
// Rows are strictly increasing; self-loops and duplicate edges are dropped
// at construction. Safe for unsynchronized shared reads.
class Graph {
 public:
  Graph() = default;

  // Builds the graph from an arbitrary edge list. Directed input is
  // symmetrized (every arc becomes an undirected edge). Loops and duplicates
  // are dropped and, when requested, counted.
  static Graph from_edges(NodeId node_count,
                          std::vector<std::pair<NodeId, NodeId>> edges,
                          std::vector<std::string> labels = {},
                          std::uint64_t* dropped_self_loops = nullptr,
                          std::uint64_t* dropped_duplicates = nullptr) {
    for (const auto& [u, v] : edges) {
      if (u >= node_count || v >= node_count)
        throw std::invalid_argument("from_edges: node id out of range");
    }
    if (!labels.empty() && labels.size() != node_count)
      throw std::invalid_argument("from_edges: label count != node count");

    std::uint64_t loops = 0;
    std::erase_if(edges, [&loops](const std::pair<NodeId, NodeId>& e) {
      if (e.first == e.second) {
        ++loops;
        return true;
      }
      return false;
    });
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    const auto dup_begin = std::unique(edges.begin(), edges.end());
    const auto dups =
        static_cast<std::uint64_t>(std::distance(dup_begin, edges.end()));
    edges.erase(dup_begin, edges.end());
    if (dropped_self_loops) *dropped_self_loops = loops;
    if (dropped_duplicates) *dropped_duplicates = dups;

    Graph g;
    g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (const auto& [u, v] : edges) {
      ++g.offsets_[static_cast<std::size_t>(u) + 1];
      ++g.offsets_[static_cast<std::size_t>(v) + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.neighbors_.resize(g.offsets_.back());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (min, max), so every row comes out ascending.
    for (const auto& [u, v] : edges) {
      g.neighbors_[cursor[u]++] = v;
      g.neighbors_[cursor[v]++] = u;
    }
    g.labels_ = std::move(labels);
    return g;
  }

  NodeId node_count() const noexcept {
    return static_cast<NodeId>(offsets_.size() - 1);
  }

  std::uint64_t edge_count() const noexcept { return neighbors_.size() / 2; }

  Count degree(NodeId u) const {
    check(u);
    return static_cast<Count>(offsets_[u + 1] - offsets_[u]);
  }

  std::span<const NodeId> neighbors(NodeId u) const {
    check(u);
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }

  bool adjacent(NodeId u, NodeId v) const {
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  bool has_labels() const noexcept { return !labels_.empty(); }

  // External label when present, otherwise the decimal internal id.
  std::string label(NodeId u) const {
    check(u);
    return has_labels() ? labels_[u] : std::to_string(u);
  }

 private:
  void check(NodeId u) const {
    if (u >= node_count()) throw std::out_of_range("unknown node id");
  }

  std::vector<std::uint64_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<std::string> labels_;
};

inline std::vector<Count> degrees(const Graph& g) {
  std::vector<Count> d(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) d[u] = g.degree(u);
  return d;
}

// Full scan of the symmetry and strict-ordering invariants; test support.
inline bool symmetry_ok(const Graph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto row = g.neighbors(u);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0 && row[i - 1] >= row[i]) return false;
      if (row[i] == u) return false;
      if (!g.adjacent(row[i], u)) return false;
    }
  }
  return true;
}

inline std::unordered_map<std::string, NodeId> label_index(const Graph& g) {
  std::unordered_map<std::string, NodeId> ix;
  ix.reserve(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) ix.emplace(g.label(u), u);
  return ix;
}

// Induced subgraph of the largest connected component with re-densified ids.
// Equal-size ties go to the component containing the smallest original id.
inline Graph largest_connected_component(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0)
    throw std::invalid_argument("largest_connected_component: empty graph");

  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> comp(n, kNone);
  std::vector<std::uint64_t> comp_size;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kNone) continue;
    const auto c = static_cast<std::uint32_t>(comp_size.size());
    comp_size.push_back(0);
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++comp_size[c];
      for (const NodeId w : g.neighbors(v)) {
        if (comp[w] == kNone) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  // Components are discovered in order of their minimum original id, so the
  // first maximal one wins ties.
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < comp_size.size(); ++c)
    if (comp_size[c] > comp_size[best]) best = c;

  std::vector<NodeId> remap(n, kNone);
  std::vector<std::string> labels;
  NodeId kept = 0;
  for (NodeId u = 0; u < n; ++u) {
    if (comp[u] == best) {
      remap[u] = kept++;
      if (g.has_labels()) labels.push_back(g.label(u));
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edge_count());
  for (NodeId u = 0; u < n; ++u) {
    if (comp[u] != best) continue;
    for (const NodeId v : g.neighbors(u))
      if (u < v) edges.emplace_back(remap[u], remap[v]);
  }
  return Graph::from_edges(kept, std::move(edges), std::move(labels));
}

}  // namespace h2core
