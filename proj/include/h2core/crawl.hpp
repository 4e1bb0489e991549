#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "h2core/coreness.hpp"
#include "h2core/graph.hpp"
#include "h2core/parallel.hpp"
#include "h2core/rng.hpp"

namespace h2core {

// Hill-climbing crawls that locate the highest-h2-index nodes from local
// neighborhood queries. Two variants:
//   index_only        - climb by h2; on a non-top local maximum jump to a
//                       uniformly random unvisited neighbor.
//   index_and_degree  - among equal-h2 candidates prefer the highest degree;
//                       jumps go to the highest-degree unvisited neighbor
//                       (deterministic).
// Neighbor scans run in ascending node-id order and a later candidate wins
// ties, which pins the reported step counts.

enum class CrawlVariant { index_only, index_and_degree };

struct CrawlConfig {
  Count repeat_limit = 50;             // restart budget after local maxima
  std::optional<Count> max_index;      // nullopt: oracle-free stop rule
  CrawlVariant variant = CrawlVariant::index_only;
  std::uint64_t rng_seed = 0;
  bool lazy_pruning = false;  // skip h2 of neighbors whose degree rules them out
};

struct CrawlRecord {
  NodeId start_node = 0;
  Count steps = 0;          // moves, including restart jumps
  Count restarts_used = 0;
  bool succeeded = false;
  NodeId terminal_node = 0;
  Count visited_count = 0;
};

struct CrawlSummary {
  std::uint64_t runs = 0;
  double avg_steps = 0.0;
  double std_steps = 0.0;   // population standard deviation
  double avg_restarts = 0.0;
  double failed_pct = 0.0;
};

// Index provider backed by precomputed metrics.
class MetricsProvider {
 public:
  explicit MetricsProvider(const NodeMetrics& m) : m_(&m) {}
  Count h2(NodeId u) { return m_->h2_index[u]; }
  Count degree(NodeId u) const { return m_->degree[u]; }
  std::uint64_t h2_evaluations() const { return 0; }

 private:
  const NodeMetrics* m_;
};

// Computes h2 on demand from the two-hop neighborhood and memoizes it; the
// local-information mode of the crawler.
class LazyH2Provider {
 public:
  explicit LazyH2Provider(const Graph& g)
      : g_(&g), h_(g.node_count(), kUnset), h2_(g.node_count(), kUnset) {}

  Count degree(NodeId u) const { return g_->degree(u); }

  Count h2(NodeId u) {
    if (h2_[u] == kUnset) {
      vals_.clear();
      for (const NodeId v : g_->neighbors(u)) vals_.push_back(h_of(v));
      h2_[u] = detail::h_of_list_counted(vals_, freq_);
      ++evaluations_;
    }
    return h2_[u];
  }

  std::uint64_t h2_evaluations() const { return evaluations_; }

 private:
  Count h_of(NodeId v) {
    if (h_[v] == kUnset) {
      hvals_.clear();
      for (const NodeId w : g_->neighbors(v)) hvals_.push_back(g_->degree(w));
      h_[v] = detail::h_of_list_counted(hvals_, freq_);
    }
    return h_[v];
  }

  static constexpr Count kUnset = ~Count{0};
  const Graph* g_;
  std::vector<Count> h_;
  std::vector<Count> h2_;
  std::vector<Count> vals_, hvals_, freq_;
  std::uint64_t evaluations_ = 0;
};

// Unvisited neighbors of current that could still carry an h2 at least as
// large as current's: degree(v) >= current_h2. h2 only needs to be computed
// for these; the crawl trace is unchanged.
inline std::vector<NodeId> lazy_h2_frontier(const Graph& g,
                                            std::span<const Count> degree,
                                            Count current_h2, NodeId current,
                                            std::span<const std::uint8_t> visited) {
  std::vector<NodeId> out;
  for (const NodeId v : g.neighbors(current))
    if (!visited[v] && degree[v] >= current_h2) out.push_back(v);
  return out;
}

template <class Provider>
CrawlRecord crawl(const Graph& g, Provider& ix, NodeId start,
                  const CrawlConfig& cfg,
                  std::vector<NodeId>* trace = nullptr) {
  if (start >= g.node_count())
    throw std::out_of_range("crawl: unknown start node");

  const bool oracle_free = !cfg.max_index.has_value();
  Rng rng = substream(cfg.rng_seed, start);

  CrawlRecord rec;
  rec.start_node = start;
  rec.terminal_node = start;
  rec.visited_count = 1;
  if (trace) {
    trace->clear();
    trace->push_back(start);
  }

  Count cur_h2 = ix.h2(start);
  // Already at the top: report success without moving.
  if (!oracle_free && cur_h2 == *cfg.max_index) {
    rec.succeeded = true;
    return rec;
  }

  std::vector<std::uint8_t> visited(g.node_count(), 0);
  visited[start] = 1;
  NodeId current = start;
  NodeId best_node = start;
  Count best_h2 = cur_h2;

  for (;;) {
    // Climb: unvisited neighbor with maximal h2 (>= current), later id wins.
    NodeId next = current;
    Count next_h2 = cur_h2;
    for (const NodeId v : g.neighbors(current)) {
      if (visited[v]) continue;
      if (cfg.lazy_pruning && ix.degree(v) < cur_h2) continue;
      const Count h2v = ix.h2(v);
      if (h2v >= next_h2) {
        next = v;
        next_h2 = h2v;
      }
    }
    if (cfg.variant == CrawlVariant::index_and_degree && next != current) {
      // Among the h2-maximal candidates prefer the highest degree.
      Count next_deg = ix.degree(next);
      for (const NodeId v : g.neighbors(current)) {
        if (visited[v]) continue;
        if (cfg.lazy_pruning && ix.degree(v) < cur_h2) continue;
        if (ix.h2(v) == next_h2 && ix.degree(v) >= next_deg) {
          next = v;
          next_deg = ix.degree(v);
        }
      }
    }

    if (next == current) {
      // Local maximum with respect to the unvisited neighborhood.
      if (!oracle_free && cur_h2 == *cfg.max_index) {
        rec.succeeded = true;
        break;
      }
      if (rec.restarts_used >= cfg.repeat_limit) break;  // budget exhausted
      if (cfg.variant == CrawlVariant::index_only) {
        std::vector<NodeId> pool;
        for (const NodeId v : g.neighbors(current))
          if (!visited[v]) pool.push_back(v);
        if (pool.empty()) break;  // dead end
        next = pool[rng.next_below(pool.size())];
      } else {
        bool found = false;
        Count best_deg = 0;
        for (const NodeId v : g.neighbors(current)) {
          if (visited[v]) continue;
          if (!found || ix.degree(v) >= best_deg) {
            next = v;
            best_deg = ix.degree(v);
            found = true;
          }
        }
        if (!found) break;  // dead end
      }
      ++rec.restarts_used;
      cur_h2 = ix.h2(next);
    } else {
      cur_h2 = next_h2;
    }

    visited[next] = 1;
    ++rec.visited_count;
    ++rec.steps;
    current = next;
    if (trace) trace->push_back(next);
    if (cur_h2 > best_h2) {
      best_h2 = cur_h2;
      best_node = current;
    }
  }

  rec.terminal_node = oracle_free ? best_node : current;
  return rec;
}

template <class Provider>
CrawlRecord crawl_index(const Graph& g, Provider& ix, NodeId start,
                        const CrawlConfig& cfg,
                        std::vector<NodeId>* trace = nullptr) {
  CrawlConfig c = cfg;
  c.variant = CrawlVariant::index_only;
  return crawl(g, ix, start, c, trace);
}

template <class Provider>
CrawlRecord crawl_index_degree(const Graph& g, Provider& ix, NodeId start,
                               const CrawlConfig& cfg,
                               std::vector<NodeId>* trace = nullptr) {
  CrawlConfig c = cfg;
  c.variant = CrawlVariant::index_and_degree;
  return crawl(g, ix, start, c, trace);
}

inline Count max_h2_index(const NodeMetrics& m) {
  Count mx = 0;
  for (const Count v : m.h2_index) mx = std::max(mx, v);
  return mx;
}

// Runs the configured variant from every node below the top h2 value and
// aggregates steps/restarts/failures over all runs, failed ones included.
inline CrawlSummary crawl_all(const Graph& g, const NodeMetrics& m,
                              const CrawlConfig& cfg, unsigned threads = 1,
                              std::vector<CrawlRecord>* records = nullptr) {
  CrawlConfig c = cfg;
  if (!c.max_index) c.max_index = max_h2_index(m);

  std::vector<NodeId> starts;
  for (NodeId u = 0; u < g.node_count(); ++u)
    if (m.h2_index[u] < *c.max_index) starts.push_back(u);

  std::vector<CrawlRecord> recs(starts.size());
  parallel_for(starts.size(), threads, [&](std::uint64_t i) {
    MetricsProvider ix(m);
    recs[i] = crawl(g, ix, starts[i], c);
  });

  CrawlSummary s;
  s.runs = recs.size();
  if (!recs.empty()) {
    double sum_steps = 0.0, sum_restarts = 0.0;
    std::uint64_t failures = 0;
    for (const auto& r : recs) {
      sum_steps += r.steps;
      sum_restarts += r.restarts_used;
      if (!r.succeeded) ++failures;
    }
    s.avg_steps = sum_steps / static_cast<double>(recs.size());
    s.avg_restarts = sum_restarts / static_cast<double>(recs.size());
    double ss = 0.0;
    for (const auto& r : recs) {
      const double d = static_cast<double>(r.steps) - s.avg_steps;
      ss += d * d;
    }
    s.std_steps = std::sqrt(ss / static_cast<double>(recs.size()));
    s.failed_pct =
        100.0 * static_cast<double>(failures) / static_cast<double>(recs.size());
  }
  if (records) *records = std::move(recs);
  return s;
}

// True iff the subgraph induced by the nodes attaining the maximum h2 index
// is connected (a single top node counts as connected).
inline bool top_nodes_connected(const Graph& g, const NodeMetrics& m) {
  const NodeId n = g.node_count();
  if (n == 0) throw std::invalid_argument("top_nodes_connected: empty graph");
  const Count mx = max_h2_index(m);
  std::vector<std::uint8_t> top(n, 0);
  NodeId first = n;
  std::uint64_t top_count = 0;
  for (NodeId u = 0; u < n; ++u) {
    if (m.h2_index[u] == mx) {
      top[u] = 1;
      ++top_count;
      if (first == n) first = u;
    }
  }
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeId> stack{first};
  seen[first] = 1;
  std::uint64_t reached = 0;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    ++reached;
    for (const NodeId w : g.neighbors(v)) {
      if (top[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == top_count;
}

}  // namespace h2core
