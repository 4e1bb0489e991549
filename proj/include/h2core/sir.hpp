#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "h2core/graph.hpp"
#include "h2core/parallel.hpp"
#include "h2core/rng.hpp"

namespace h2core {

// Discrete-time SIR Monte Carlo. Each step, every infected node attempts to
// infect each neighbor that was susceptible at the start of the step,
// independently with probability lambda; the attackers then recover
// (mu = 1). A node infected in step t starts infecting in step t + 1.

struct SirConfig {
  double infection_probability = 0.1;  // lambda
  double recovery_probability = 1.0;   // mu
  Count runs_per_seed = 100;
  std::uint64_t rng_seed = 0;
};

struct SpreadingOutcome {
  std::vector<double> spreading_power;  // mean recovered count per seed node
  std::vector<double> std_dev;          // sample standard deviation per seed
};

// Mean-field epidemic threshold <d> / (<d^2> - <d>).
inline double epidemic_threshold(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw std::domain_error("epidemic_threshold: empty graph");
  double sum_d = 0.0, sum_d2 = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const double d = g.degree(u);
    sum_d += d;
    sum_d2 += d * d;
  }
  const double mean_d = sum_d / n;
  const double mean_d2 = sum_d2 / n;
  if (!(mean_d2 > mean_d))
    throw std::domain_error(
        "epidemic_threshold: degenerate degree distribution");
  return mean_d / (mean_d2 - mean_d);
}

// One outbreak from seed; returns the final recovered count (the seed always
// ends recovered). on_step(susceptible, infected, recovered) is invoked after
// every step.
template <class StepFn>
Count sir_single_run_observed(const Graph& g, NodeId seed, double lambda,
                              Rng& rng, double mu, StepFn&& on_step) {
  if (seed >= g.node_count())
    throw std::out_of_range("sir_single_run: unknown seed node");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("sir_single_run: lambda outside [0, 1]");

  enum : std::uint8_t { kS = 0, kI = 1, kNew = 2, kR = 3 };
  const NodeId n = g.node_count();
  std::vector<std::uint8_t> state(n, kS);
  std::vector<NodeId> infected{seed};
  std::vector<NodeId> newly;
  std::vector<NodeId> survivors;
  state[seed] = kI;
  Count n_recovered = 0;
  Count n_infected = 1;

  while (!infected.empty()) {
    newly.clear();
    for (const NodeId u : infected) {
      for (const NodeId v : g.neighbors(u)) {
        const auto sv = state[v];
        if (sv == kS || sv == kNew) {
          // draw consumed for every attempt on a step-start susceptible
          if (rng.next_unit() < lambda && sv == kS) {
            state[v] = kNew;
            newly.push_back(v);
          }
        }
      }
    }
    if (mu >= 1.0) {
      for (const NodeId u : infected) state[u] = kR;
      n_recovered += static_cast<Count>(infected.size());
      infected.swap(newly);
    } else {
      survivors.clear();
      for (const NodeId u : infected) {
        if (rng.next_unit() < mu) {
          state[u] = kR;
          ++n_recovered;
        } else {
          survivors.push_back(u);
        }
      }
      infected = survivors;
      infected.insert(infected.end(), newly.begin(), newly.end());
    }
    for (const NodeId v : newly) state[v] = kI;
    n_infected = static_cast<Count>(infected.size());
    on_step(n - n_infected - n_recovered, n_infected, n_recovered);
  }
  return n_recovered;
}

inline Count sir_single_run(const Graph& g, NodeId seed, double lambda,
                            Rng& rng, double mu = 1.0) {
  return sir_single_run_observed(g, seed, lambda, rng, mu,
                                 [](Count, Count, Count) {});
}

// Mean and sample standard deviation over runs_per_seed independent runs per
// seed node. Bit-identical for a fixed config: run (u, r) uses
// substream(rng_seed, u, r) regardless of the thread partition.
inline SpreadingOutcome spreading_power_all(const Graph& g,
                                            const SirConfig& cfg,
                                            unsigned threads = 1) {
  if (cfg.runs_per_seed < 1)
    throw std::invalid_argument("spreading_power_all: runs_per_seed < 1");
  if (!(cfg.infection_probability >= 0.0 && cfg.infection_probability <= 1.0))
    throw std::invalid_argument("spreading_power_all: lambda outside [0, 1]");
  const NodeId n = g.node_count();
  SpreadingOutcome out;
  out.spreading_power.assign(n, 0.0);
  out.std_dev.assign(n, 0.0);
  parallel_for(n, threads, [&](std::uint64_t i) {
    const auto u = static_cast<NodeId>(i);
    thread_local std::vector<double> sizes;
    sizes.clear();
    for (Count r = 0; r < cfg.runs_per_seed; ++r) {
      Rng rng = substream(cfg.rng_seed, u, r);
      sizes.push_back(static_cast<double>(sir_single_run(
          g, u, cfg.infection_probability, rng, cfg.recovery_probability)));
    }
    double mean = 0.0;
    for (const double s : sizes) mean += s;
    mean /= static_cast<double>(sizes.size());
    double ss = 0.0;
    for (const double s : sizes) ss += (s - mean) * (s - mean);
    out.spreading_power[u] = mean;
    out.std_dev[u] = sizes.size() > 1
                         ? std::sqrt(ss / (static_cast<double>(sizes.size()) - 1.0))
                         : 0.0;
  });
  return out;
}

}  // namespace h2core
