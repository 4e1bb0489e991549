#pragma once

// Straight-line transcriptions of the two hill-climbing listings, kept
// deliberately naive (flag-driven loop, linear membership scans) as an
// independent oracle for the library's crawl engine. Shared choices that the
// numbers depend on: neighbor scans run in ascending id order with a later
// candidate winning ties; the degree-based restart moves to the
// highest-degree unvisited neighbor; a restart from a node with no unvisited
// neighbor is a failure. Entered only for starts below the top index, which
// is how the all-starts protocol invokes them.

#include <algorithm>
#include <span>
#include <vector>

#include "h2core/graph.hpp"
#include "h2core/rng.hpp"

namespace crawlref {

using h2core::Count;
using h2core::Graph;
using h2core::NodeId;
using h2core::Rng;

struct Result {
  std::vector<NodeId> trace;
  Count steps = 0;
  Count repeats = 0;
  bool failed = false;
  NodeId final_node = 0;
};

inline Result index_based_hill_climbing(const Graph& g,
                                        std::span<const Count> h2, NodeId u,
                                        Count k, Count maxindex, Rng rng) {
  std::vector<NodeId> visited_nodes;
  visited_nodes.push_back(u);
  const auto is_visited = [&](NodeId v) {
    return std::find(visited_nodes.begin(), visited_nodes.end(), v) !=
           visited_nodes.end();
  };
  Count num_of_steps = 0;
  Count repeat_count = 0;
  NodeId current_node = u;
  NodeId next_node = u;
  bool failed = false;
  bool flag = true;
  while (flag) {
    for (const NodeId v : g.neighbors(current_node)) {
      if (h2[v] >= h2[next_node] && !is_visited(v)) next_node = v;
    }
    if (next_node == current_node) {
      if (h2[next_node] == maxindex) {
        flag = false;
      } else if (repeat_count < k) {
        std::vector<NodeId> pool;
        for (const NodeId v : g.neighbors(current_node))
          if (!is_visited(v)) pool.push_back(v);
        if (pool.empty()) {
          failed = true;  // randomchoice has no element to return
          flag = false;
        } else {
          next_node = pool[rng.next_below(pool.size())];
          repeat_count = repeat_count + 1;
        }
      } else {
        failed = true;
        flag = false;
      }
    }
    if (flag) {
      visited_nodes.push_back(next_node);
      current_node = next_node;
      num_of_steps = num_of_steps + 1;
    }
  }
  return Result{visited_nodes, num_of_steps, repeat_count, failed,
                current_node};
}

inline Result index_and_degree_based_hill_climbing(const Graph& g,
                                                   std::span<const Count> h2,
                                                   NodeId u, Count k,
                                                   Count maxindex, Rng rng) {
  (void)rng;  // this variant never draws
  std::vector<NodeId> visited_nodes;
  visited_nodes.push_back(u);
  const auto is_visited = [&](NodeId v) {
    return std::find(visited_nodes.begin(), visited_nodes.end(), v) !=
           visited_nodes.end();
  };
  const auto deg = [&](NodeId v) { return g.degree(v); };
  Count num_of_steps = 0;
  Count repeat_count = 0;
  NodeId current_node = u;
  NodeId next_node = u;
  bool failed = false;
  bool flag = true;
  while (flag) {
    for (const NodeId v : g.neighbors(current_node)) {
      if (h2[v] >= h2[next_node] && !is_visited(v)) next_node = v;
    }
    for (const NodeId v : g.neighbors(current_node)) {
      if (h2[v] == h2[next_node] && deg(v) >= deg(next_node) && !is_visited(v))
        next_node = v;
    }
    if (next_node == current_node) {
      if (h2[next_node] == maxindex) {
        flag = false;
      } else if (repeat_count < k) {
        bool found = false;
        for (const NodeId v : g.neighbors(current_node)) {
          if (is_visited(v)) continue;
          if (!found || deg(v) >= deg(next_node)) {
            next_node = v;
            found = true;
          }
        }
        if (!found) {
          failed = true;
          flag = false;
        } else {
          repeat_count = repeat_count + 1;
        }
      } else {
        failed = true;
        flag = false;
      }
    }
    if (flag) {
      visited_nodes.push_back(next_node);
      current_node = next_node;
      num_of_steps = num_of_steps + 1;
    }
  }
  return Result{visited_nodes, num_of_steps, repeat_count, failed,
                current_node};
}

}  // namespace crawlref
