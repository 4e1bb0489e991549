#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "h2core/coreness.hpp"
#include "h2core/ranking.hpp"

namespace h2core {

// Percentile-rank model: rank(u) = a2 + (a1 - a2) / (1 + (h2(u)/x0)^p).
// a1 is the low-rank asymptote, a2 the high-rank asymptote, x0 the midpoint
// and p the hill slope.

struct LogisticParams {
  double a1 = 1.0;
  double a2 = 100.0;
  double x0 = 1.0;
  double p = 1.44;
};

// One point per distinct h2 value; percentiles strictly increase with the
// value and the top value sits at 100. Nodes with h2 = 0 are left out of the
// curve (the power term pins the model to a1 there regardless of x0).
struct RankCurve {
  std::vector<double> h2_values;
  std::vector<double> percentiles;
  bool excluded_zero = false;
  std::size_t size() const noexcept { return h2_values.size(); }
};

// (n - R(u) + 1) / n * 100 with R the competition rank by descending h2;
// ties share the best rank, so every top-h2 node gets exactly 100.
inline double percentile_rank(const NodeMetrics& m, NodeId u) {
  const std::size_t n = m.h2_index.size();
  if (u >= n) throw std::out_of_range("percentile_rank: unknown node id");
  std::uint64_t greater = 0;
  for (const Count v : m.h2_index)
    if (v > m.h2_index[u]) ++greater;
  const double rank = static_cast<double>(greater) + 1.0;
  return (static_cast<double>(n) - rank + 1.0) / static_cast<double>(n) * 100.0;
}

inline RankCurve rank_curve(const NodeMetrics& m) {
  const std::size_t n = m.h2_index.size();
  RankCurve curve;
  if (n == 0) return curve;
  std::vector<Count> sorted(m.h2_index);
  std::sort(sorted.begin(), sorted.end());
  // walk distinct values ascending; nodes with larger values = n - upper(v)
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
    const Count value = sorted[i];
    const auto greater = static_cast<double>(n - (j + 1));
    if (value == 0) {
      curve.excluded_zero = true;
    } else {
      curve.h2_values.push_back(static_cast<double>(value));
      curve.percentiles.push_back((static_cast<double>(n) - greater) /
                                  static_cast<double>(n) * 100.0);
    }
    i = j + 1;
  }
  return curve;
}

inline double logistic_eval(const LogisticParams& q, double h2) {
  if (!(q.x0 > 0.0))
    throw std::invalid_argument("logistic_eval: x0 must be positive");
  if (h2 < 0.0) throw std::invalid_argument("logistic_eval: h2 must be >= 0");
  if (h2 == 0.0) {
    if (q.p > 0.0) return q.a1;
    if (q.p == 0.0) return q.a2 + (q.a1 - q.a2) / 2.0;
    return q.a2;
  }
  const double t = std::exp(q.p * std::log(h2 / q.x0));
  return q.a2 + (q.a1 - q.a2) / (1.0 + t);
}

struct FitOptions {
  bool fix_a1 = false;
  bool fix_a2 = false;
  bool fix_p = false;           // x0 is always free
  unsigned max_iterations = 1000;
  double tolerance = 1e-4;      // relative reduction of the squared residual
};

struct FitResult {
  LogisticParams params;
  bool converged = false;
  unsigned iterations = 0;
  double sse = 0.0;
  double initial_sse = 0.0;
};

namespace detail {

// In-place Gauss elimination with partial pivoting; k <= 4 here.
inline bool solve_dense(std::array<double, 16>& a, std::array<double, 4>& b,
                        std::size_t k) {
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(a[r * k + col]) > std::abs(a[piv * k + col])) piv = r;
    if (std::abs(a[piv * k + col]) < 1e-300) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(a[piv * k + c], a[col * k + c]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < k; ++r) {
      const double f = a[r * k + col] / a[col * k + col];
      for (std::size_t c = col; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = k; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < k; ++c) s -= a[r * k + c] * b[c];
    b[r] = s / a[r * k + r];
  }
  return true;
}

// Model value and partials wrt (a1, a2, x0, p) at one curve point.
inline void logistic_point(const std::array<double, 4>& th, double x,
                           double& f, std::array<double, 4>& d) {
  const double lr = std::log(x / th[2]);
  const double t = std::exp(th[3] * lr);
  if (!(t < 1e300)) {  // saturated high side
    f = th[1];
    d = {0.0, 1.0, 0.0, 0.0};
    return;
  }
  const double dd = 1.0 + t;
  f = th[1] + (th[0] - th[1]) / dd;
  d[0] = 1.0 / dd;
  d[1] = 1.0 - 1.0 / dd;
  d[2] = (th[0] - th[1]) * th[3] * t / (th[2] * dd * dd);
  d[3] = -(th[0] - th[1]) * t * lr / (dd * dd);
}

}  // namespace detail

// Least-squares fit of the logistic model to the curve points, one equally
// weighted residual per distinct h2 value. Levenberg-Marquardt with
// diagonal (Marquardt) scaling; convergence when an accepted step reduces
// the squared residual by less than `tolerance` relatively. Hitting the
// iteration cap returns the best parameters found, flagged non-converged.
inline FitResult fit_logistic(const RankCurve& curve,
                              const LogisticParams& init,
                              const FitOptions& opt = {}) {
  const std::size_t m = curve.size();
  const std::array<bool, 4> free_p{!opt.fix_a1, !opt.fix_a2, true, !opt.fix_p};
  std::size_t k = 0;
  std::array<std::size_t, 4> map{};
  for (std::size_t j = 0; j < 4; ++j)
    if (free_p[j]) map[k++] = j;
  if (m < k)
    throw std::invalid_argument(
        "fit_logistic: fewer curve points than free parameters");
  if (!(init.x0 > 0.0))
    throw std::invalid_argument("fit_logistic: initial x0 must be positive");

  std::array<double, 4> th{init.a1, init.a2, init.x0, init.p};
  const auto sse_of = [&](const std::array<double, 4>& t) {
    const LogisticParams q{t[0], t[1], t[2], t[3]};
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = logistic_eval(q, curve.h2_values[i]) - curve.percentiles[i];
      s += r * r;
    }
    return s;
  };

  FitResult res;
  double sse = sse_of(th);
  res.initial_sse = sse;
  double lm = 1e-3;
  bool converged = sse == 0.0;
  unsigned iter = 0;

  while (!converged && iter < opt.max_iterations) {
    ++iter;
    // normal equations on the free parameters
    std::array<double, 16> jtj{};
    std::array<double, 4> jtr{};
    for (std::size_t i = 0; i < m; ++i) {
      double f;
      std::array<double, 4> d;
      detail::logistic_point(th, curve.h2_values[i], f, d);
      const double r = f - curve.percentiles[i];
      for (std::size_t a = 0; a < k; ++a) {
        jtr[a] += d[map[a]] * r;
        for (std::size_t b = 0; b < k; ++b)
          jtj[a * k + b] += d[map[a]] * d[map[b]];
      }
    }

    bool accepted = false;
    while (!accepted) {
      std::array<double, 16> a = jtj;
      std::array<double, 4> rhs{};
      for (std::size_t j = 0; j < k; ++j) {
        a[j * k + j] += lm * std::max(jtj[j * k + j], 1e-12);
        rhs[j] = -jtr[j];
      }
      std::array<double, 4> trial = th;
      bool usable = detail::solve_dense(a, rhs, k);
      if (usable) {
        for (std::size_t j = 0; j < k; ++j) trial[map[j]] += rhs[j];
        usable = trial[2] > 0.0;
        for (const double v : trial) usable = usable && std::isfinite(v);
      }
      const double trial_sse = usable ? sse_of(trial)
                                      : std::numeric_limits<double>::infinity();
      if (trial_sse < sse) {
        accepted = true;
        const double relred = (sse - trial_sse) / sse;
        th = trial;
        sse = trial_sse;
        lm = std::max(lm / 10.0, 1e-12);
        if (relred < opt.tolerance || sse == 0.0) converged = true;
      } else {
        lm *= 10.0;
        if (lm > 1e15) {  // stationary: no step of any damping improves
          converged = true;
          break;
        }
      }
    }
  }

  res.params = LogisticParams{th[0], th[1], th[2], th[3]};
  res.converged = converged;
  res.iterations = iter;
  res.sse = sse;
  return res;
}

// Reasonable starting point for the free four-parameter fit.
inline LogisticParams best_fit_init(const RankCurve& curve) {
  if (curve.size() == 0)
    throw std::invalid_argument("best_fit_init: empty curve");
  LogisticParams q;
  q.a1 = curve.percentiles.front();
  q.a2 = curve.percentiles.back();
  const double mid = (q.a1 + q.a2) / 2.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double dist = std::abs(curve.percentiles[i] - mid);
    if (dist < best) {
      best = dist;
      q.x0 = curve.h2_values[i];
    }
  }
  if (!(q.x0 > 0.0)) q.x0 = 1.0;
  q.p = 2.0;
  return q;
}

// Heuristic parameters: a1 = 1, a2 = 100, p = 1.44 held fixed; only the
// midpoint x0 is fitted.
inline FitResult heuristic_params(const RankCurve& curve) {
  if (curve.size() == 0)
    throw std::invalid_argument("heuristic_params: empty curve");
  LogisticParams init{1.0, 100.0, 1.0, 1.44};
  const double mid = 50.5;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double dist = std::abs(curve.percentiles[i] - mid);
    if (dist < best) {
      best = dist;
      init.x0 = curve.h2_values[i];
    }
  }
  FitOptions opt;
  opt.fix_a1 = opt.fix_a2 = opt.fix_p = true;
  return fit_logistic(curve, init, opt);
}

// Absolute error statistics and rank correlations between the actual and the
// model percentiles, one term per distinct h2 value.
struct FitEvaluation {
  double avg_abs_error = 0.0;
  double std_dev = 0.0;  // population standard deviation of the errors
  double kendall_tau = 0.0;
  double pearson_r = 0.0;
  double spearman_rho = 0.0;
};

inline FitEvaluation evaluate_fit(const RankCurve& curve,
                                  const LogisticParams& q) {
  const std::size_t m = curve.size();
  if (m == 0) throw std::invalid_argument("evaluate_fit: empty curve");
  std::vector<double> model(m), err(m);
  for (std::size_t i = 0; i < m; ++i) {
    model[i] = logistic_eval(q, curve.h2_values[i]);
    err[i] = std::abs(curve.percentiles[i] - model[i]);
  }
  FitEvaluation ev;
  ev.avg_abs_error = pairwise_sum(err) / static_cast<double>(m);
  double ss = 0.0;
  for (const double e : err) ss += (e - ev.avg_abs_error) * (e - ev.avg_abs_error);
  ev.std_dev = std::sqrt(ss / static_cast<double>(m));
  ev.kendall_tau = kendall_tau(curve.percentiles, model);
  ev.pearson_r = pearson_r(curve.percentiles, model);
  ev.spearman_rho = spearman_rho(curve.percentiles, model);
  return ev;
}

}  // namespace h2core
