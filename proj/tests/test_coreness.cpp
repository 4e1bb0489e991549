#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "h2core/coreness.hpp"
#include "testutil.hpp"

using namespace h2core;

namespace {

std::vector<Count> list(std::initializer_list<Count> v) { return v; }

// Iterate the neighbor-h operator from the degree vector to its fixed point,
// checking node-wise monotonicity along the way.
std::vector<Count> iterate_to_fixpoint(const Graph& g, bool* monotone) {
  std::vector<Count> cur = degrees(g);
  *monotone = true;
  for (;;) {
    std::vector<Count> next = h_iteration(g, cur);
    for (NodeId u = 0; u < g.node_count(); ++u)
      if (next[u] > cur[u]) *monotone = false;
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace

TEST_CASE("h_of_list worked examples") {
  CHECK(h_of_list(list({1, 2, 3, 3, 4, 6, 8, 10})) == 4);
  CHECK(h_of_list(list({1, 2, 2, 3, 3, 3, 5})) == 3);
  CHECK(h_of_list(list({10, 11, 11, 13, 15, 25})) == 6);
  CHECK(h_of_list({}) == 0);
}

TEST_CASE("h_of_list of a uniform list is min(k, m)") {
  for (Count k = 0; k <= 12; ++k) {
    for (Count m = 0; m <= 12; ++m) {
      std::vector<Count> v(m, k);
      CHECK(h_of_list(v) == std::min(k, m));
    }
  }
}

TEST_CASE("shell decomposition on closed-form graphs") {
  const auto k5 = testutil::clique(5);
  for (const Count s : shell_decomposition(k5)) CHECK(s == 4);

  const auto p4 = testutil::path(4);
  for (const Count s : shell_decomposition(p4)) CHECK(s == 1);

  const auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(shell_decomposition(g)[3] == 0);  // isolated node
}

TEST_CASE("shell decomposition equals the recursive-pruning oracle") {
  for (const auto seed : {7u, 8u, 9u, 10u}) {
    const auto g = testutil::gnp(50, 0.1, seed);
    CHECK(shell_decomposition(g) == testutil::shell_oracle(g));
  }
  for (const auto seed : {21u, 22u}) {
    const auto g = testutil::barabasi_albert(120, 3, seed);
    CHECK(shell_decomposition(g) == testutil::shell_oracle(g));
  }
  // larger instances, still oracle-checkable
  for (const auto seed : {31u, 32u}) {
    const auto g = testutil::gnp(200, 0.04, seed);
    CHECK(shell_decomposition(g) == testutil::shell_oracle(g));
  }
}

TEST_CASE("h_iteration applies one synchronous neighbor-h step") {
  const auto st = testutil::star(5);
  const auto deg = degrees(st);
  const auto h = h_iteration(st, deg);
  CHECK(h[0] == 1);  // five degree-1 neighbors
  CHECK(h[1] == 1);  // one degree-5 neighbor

  const auto g = testutil::gnp(80, 0.07, 5);
  const auto shell = shell_decomposition(g);
  CHECK(h_iteration(g, shell) == shell);  // fixed point
}

TEST_CASE("single- and multi-thread iterations agree") {
  const auto g = testutil::gnp(150, 0.05, 77);
  const auto deg = degrees(g);
  CHECK(h_iteration(g, deg, 1) == h_iteration(g, deg, 4));
}

TEST_CASE("compute_metrics on closed-form graphs") {
  const auto m5 = compute_metrics(testutil::clique(5));
  for (NodeId u = 0; u < 5; ++u) {
    CHECK(m5.degree[u] == 4);
    CHECK(m5.h_index[u] == 4);
    CHECK(m5.h2_index[u] == 4);
    CHECK(m5.shell_index[u] == 4);
  }

  const auto ms = compute_metrics(testutil::star(5));
  CHECK(ms.degree[0] == 5);
  CHECK(ms.h_index[0] == 1);
  CHECK(ms.h2_index[0] == 1);
  CHECK(ms.shell_index[0] == 1);
  CHECK(ms.degree[1] == 1);
  CHECK(ms.h_index[1] == 1);
  CHECK(ms.h2_index[1] == 1);
  CHECK(ms.shell_index[1] == 1);
}

TEST_CASE("node-wise sandwich shell <= h2 <= h <= degree") {
  for (const auto seed : {41u, 42u, 43u}) {
    const auto g = testutil::gnp(120, 0.06, seed);
    const auto m = compute_metrics(g);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      CHECK(m.shell_index[u] <= m.h2_index[u]);
      CHECK(m.h2_index[u] <= m.h_index[u]);
      CHECK(m.h_index[u] <= m.degree[u]);
    }
  }
}

TEST_CASE("iterating from degree converges monotonically to the shell index") {
  for (const auto seed : {51u, 52u}) {
    for (const NodeId n : {50u, 200u, 500u}) {
      const auto g = testutil::gnp(n, 6.0 / n, seed);
      bool monotone = false;
      const auto limit = iterate_to_fixpoint(g, &monotone);
      CHECK(monotone);
      CHECK(limit == shell_decomposition(g));
    }
  }
}

TEST_CASE("shell fixed-point identity holds on every graph") {
  const auto k5 = testutil::clique(5);
  CHECK(verify_shell_fixed_point(k5, compute_metrics(k5)).ok);

  const auto g = testutil::gnp(100, 0.05, 13);
  const auto chk = verify_shell_fixed_point(g, compute_metrics(g));
  CHECK(chk.ok);
  CHECK(chk.violations.empty());
}

TEST_CASE("neighborhood with shell indices {1,2,3,3,4,6,8,10} pins u at 4") {
  // Cliques K_{k+1} realize shell index k; u attaches to one member of each.
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<NodeId> reps;
  NodeId next = 1;  // node 0 is u
  const auto add_clique = [&](NodeId size) {
    const NodeId base = next;
    for (NodeId i = 0; i < size; ++i)
      for (NodeId j = i + 1; j < size; ++j)
        edges.emplace_back(base + i, base + j);
    next += size;
    reps.push_back(base);
  };
  for (const NodeId k : {1u, 2u, 3u, 3u, 4u, 6u, 8u, 10u}) add_clique(k + 1);
  for (const NodeId r : reps) edges.emplace_back(0, r);
  const auto g = Graph::from_edges(next, std::move(edges));

  const auto m = compute_metrics(g);
  std::vector<Count> neighbor_shells;
  for (const NodeId v : g.neighbors(0))
    neighbor_shells.push_back(m.shell_index[v]);
  std::sort(neighbor_shells.begin(), neighbor_shells.end());
  CHECK(neighbor_shells == std::vector<Count>{1, 2, 3, 3, 4, 6, 8, 10});
  CHECK(m.shell_index[0] == 4);
  CHECK(verify_shell_fixed_point(g, m).ok);
}

TEST_CASE("an isolated node has all-zero metrics and disturbs nothing") {
  const auto g = testutil::gnp(40, 0.15, 99);
  const auto base = shell_decomposition(g);

  // same graph plus one isolated node
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (const NodeId v : g.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  const auto g2 = Graph::from_edges(g.node_count() + 1, std::move(edges));
  const auto m2 = compute_metrics(g2);
  const NodeId iso = g.node_count();
  CHECK(m2.degree[iso] == 0);
  CHECK(m2.h_index[iso] == 0);
  CHECK(m2.h2_index[iso] == 0);
  CHECK(m2.shell_index[iso] == 0);
  for (NodeId u = 0; u < g.node_count(); ++u)
    CHECK(m2.shell_index[u] == base[u]);
}
