#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "h2core/graph.hpp"
#include "h2core/parallel.hpp"

namespace h2core {

// Per-node index values. For every node:
//   shell_index <= h2_index <= h_index <= degree.
struct NodeMetrics {
  std::vector<Count> degree;
  std::vector<Count> h_index;
  std::vector<Count> h2_index;
  std::vector<Count> shell_index;
};

namespace detail {

// Counting-sort h-index: values above the list length clamp to it, giving
// O(len) time regardless of magnitudes. freq is caller-owned scratch.
inline Count h_of_list_counted(std::span<const Count> values,
                               std::vector<Count>& freq) {
  const std::size_t m = values.size();
  if (m == 0) return 0;
  freq.assign(m + 1, 0);
  for (const Count v : values) ++freq[std::min<std::size_t>(v, m)];
  std::size_t at_least = 0;
  for (std::size_t h = m; h > 0; --h) {
    at_least += freq[h];
    if (at_least >= h) return static_cast<Count>(h);
  }
  return 0;
}

}  // namespace detail

// Largest h such that at least h entries are >= h; 0 for the empty list.
inline Count h_of_list(std::span<const Count> values) {
  std::vector<Count> freq;
  return detail::h_of_list_counted(values, freq);
}

// One synchronous update: out[u] = h_of_list(values over neighbors of u).
// All nodes read the previous vector; outputs are written fresh.
inline std::vector<Count> h_iteration(const Graph& g,
                                      std::span<const Count> values,
                                      unsigned threads = 1) {
  if (values.size() != g.node_count())
    throw std::invalid_argument("h_iteration: values size != node count");
  std::vector<Count> out(g.node_count());
  parallel_for(g.node_count(), threads, [&](std::uint64_t i) {
    const auto u = static_cast<NodeId>(i);
    thread_local std::vector<Count> vals;
    thread_local std::vector<Count> freq;
    vals.clear();
    for (const NodeId v : g.neighbors(u)) vals.push_back(values[v]);
    out[u] = detail::h_of_list_counted(vals, freq);
  });
  return out;
}

// Batagelj-Zaversnik bucket decomposition, O(m). shell_index(u) is the
// pruning level at which u is removed; isolated nodes get 0.
inline std::vector<Count> shell_decomposition(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<Count> deg(n);
  Count max_deg = 0;
  for (NodeId u = 0; u < n; ++u) {
    deg[u] = g.degree(u);
    max_deg = std::max(max_deg, deg[u]);
  }

  // Bin-sort nodes by degree.
  std::vector<std::uint64_t> bin(static_cast<std::size_t>(max_deg) + 2, 0);
  for (NodeId u = 0; u < n; ++u) ++bin[deg[u]];
  std::uint64_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    const auto cnt = bin[d];
    bin[d] = start;
    start += cnt;
  }
  std::vector<NodeId> vert(n);
  std::vector<std::uint64_t> pos(n);
  for (NodeId u = 0; u < n; ++u) {
    pos[u] = bin[deg[u]]++;
    vert[pos[u]] = u;
  }
  for (std::size_t d = max_deg + 1; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  // Peel in increasing current-degree order; deg[v] at processing time is
  // the shell index.
  std::vector<Count> core(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const NodeId v = vert[i];
    core[v] = deg[v];
    for (const NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const Count du = deg[u];
        const std::uint64_t pu = pos[u];
        const std::uint64_t pw = bin[du];
        const NodeId w = vert[pw];
        if (u != w) {
          vert[pu] = w;
          vert[pw] = u;
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return core;
}

// degree, h = one iteration from degree, h2 = one more, shell by bucket
// decomposition.
inline NodeMetrics compute_metrics(const Graph& g, unsigned threads = 1) {
  NodeMetrics m;
  m.degree = degrees(g);
  m.h_index = h_iteration(g, m.degree, threads);
  m.h2_index = h_iteration(g, m.h_index, threads);
  m.shell_index = shell_decomposition(g);
  return m;
}

struct FixedPointCheck {
  bool ok = true;
  std::vector<NodeId> violations;
};

// Diagnostic: the shell-index vector must be a fixed point of the
// neighbor-h operator on every graph. Any violation is an implementation
// bug.
inline FixedPointCheck verify_shell_fixed_point(const Graph& g,
                                                const NodeMetrics& m) {
  FixedPointCheck r;
  const auto image = h_iteration(g, m.shell_index);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (image[u] != m.shell_index[u]) {
      r.ok = false;
      r.violations.push_back(u);
    }
  }
  return r;
}

}  // namespace h2core
