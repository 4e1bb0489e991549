#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "h2core/graph.hpp"

namespace h2core {

class ZeroVarianceError : public std::domain_error {
 public:
  ZeroVarianceError()
      : std::domain_error("undefined correlation: zero variance") {}
};

// Stable summation for long vectors.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 32) {
    double s = 0.0;
    for (const double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

// M(R) = (1 - sum_r n_r (n_r - 1) / (n (n - 1)))^2 where n_r is the
// multiplicity of each distinct value. 0 when all values coincide, 1 when
// all are unique. Defined as 1 for n < 2.
template <class T>
double monotonicity(std::span<const T> values) {
  const std::size_t n = values.size();
  if (n < 2) return 1.0;
  std::vector<T> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double tied = 0.0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && sorted[i] == sorted[i - 1]) {
      ++run;
    } else {
      tied += static_cast<double>(run) * (static_cast<double>(run) - 1.0);
      run = 1;
    }
  }
  const double m = 1.0 - tied / (static_cast<double>(n) *
                                 (static_cast<double>(n) - 1.0));
  return m * m;
}

inline double monotonicity(std::span<const Count> values) {
  return monotonicity<Count>(values);
}

namespace detail {

inline void check_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("correlation: length mismatch");
  if (x.size() < 2)
    throw std::invalid_argument("correlation: need at least two points");
}

// Merge sort counting strict inversions (a[i] > a[j] with i < j).
inline std::uint64_t count_inversions(std::vector<double>& a,
                                      std::vector<double>& tmp,
                                      std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = count_inversions(a, tmp, lo, mid) +
                      count_inversions(a, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      tmp[k++] = a[i++];
    } else {
      inv += mid - i;
      tmp[k++] = a[j++];
    }
  }
  while (i < mid) tmp[k++] = a[i++];
  while (j < hi) tmp[k++] = a[j++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
            tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace detail

// Product-moment correlation. Throws ZeroVarianceError when either vector is
// constant.
inline double pearson_r(std::span<const double> x, std::span<const double> y) {
  detail::check_pair(x, y);
  const std::size_t n = x.size();
  const double mx = pairwise_sum(x) / static_cast<double>(n);
  const double my = pairwise_sum(y) / static_cast<double>(n);
  std::vector<double> xy(n), xx(n), yy(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    xy[i] = dx * dy;
    xx[i] = dx * dx;
    yy[i] = dy * dy;
  }
  const double sxx = pairwise_sum(xx);
  const double syy = pairwise_sum(yy);
  if (sxx == 0.0 || syy == 0.0) throw ZeroVarianceError();
  const double r = pairwise_sum(xy) / (std::sqrt(sxx) * std::sqrt(syy));
  return std::clamp(r, -1.0, 1.0);
}

// 1-based ranks with ties sharing the average (mid) rank.
inline std::vector<double> midrank(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = r;
    i = j + 1;
  }
  return rank;
}

// Spearman's rho = Pearson on mid-ranks. Identical (or exactly mirrored)
// rank vectors are +1/-1 by definition; short-circuiting keeps them exact
// instead of within an ulp.
inline double spearman_rho(std::span<const double> x,
                           std::span<const double> y) {
  detail::check_pair(x, y);
  const auto rx = midrank(x);
  const auto ry = midrank(y);
  if (rx == ry) {
    bool constant = true;
    for (const double r : rx) constant = constant && r == rx.front();
    if (constant) throw ZeroVarianceError();  // every value tied in both
    return 1.0;
  }
  bool mirrored = true;
  const double n1 = static_cast<double>(rx.size()) + 1.0;
  for (std::size_t i = 0; i < rx.size(); ++i)
    mirrored = mirrored && ry[i] == n1 - rx[i];
  if (mirrored) return -1.0;
  return pearson_r(rx, ry);
}

// Kendall's tau-b (tie adjusted), O(n log n) via inversion counting.
inline double kendall_tau(std::span<const double> x,
                          std::span<const double> y) {
  detail::check_pair(x, y);
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return y[a] < y[b];
  });

  const auto tie_pairs = [](double t) { return t * (t - 1.0) / 2.0; };
  double xtie = 0.0, ntie = 0.0;
  {
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
      xtie += tie_pairs(static_cast<double>(j - i + 1));
      // joint ties within the x-run
      std::size_t a = i;
      while (a <= j) {
        std::size_t b = a;
        while (b + 1 <= j && y[order[b + 1]] == y[order[a]]) ++b;
        ntie += tie_pairs(static_cast<double>(b - a + 1));
        a = b + 1;
      }
      i = j + 1;
    }
  }
  double ytie = 0.0;
  {
    std::vector<double> ys(y.begin(), y.end());
    std::sort(ys.begin(), ys.end());
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && ys[j + 1] == ys[i]) ++j;
      ytie += tie_pairs(static_cast<double>(j - i + 1));
      i = j + 1;
    }
  }

  std::vector<double> yseq(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i) yseq[i] = y[order[i]];
  const std::uint64_t dis = detail::count_inversions(yseq, tmp, 0, n);

  const double tot = tie_pairs(static_cast<double>(n));
  const double denom_x = tot - xtie;
  const double denom_y = tot - ytie;
  if (denom_x <= 0.0 || denom_y <= 0.0) throw ZeroVarianceError();
  const double con_minus_dis =
      tot - xtie - ytie + ntie - 2.0 * static_cast<double>(dis);
  return std::clamp(con_minus_dis / (std::sqrt(denom_x) * std::sqrt(denom_y)),
                    -1.0, 1.0);
}

// One ranking scored against ground-truth spreading power.
struct RankingEvaluation {
  double monotonicity = 0.0;
  double kendall_tau = 0.0;
  double pearson_r = 0.0;
  double spearman_rho = 0.0;
};

inline RankingEvaluation evaluate_ranking(std::span<const Count> index_values,
                                          std::span<const double> power) {
  if (index_values.size() != power.size())
    throw std::invalid_argument("evaluate_ranking: length mismatch");
  std::vector<double> xs(index_values.begin(), index_values.end());
  RankingEvaluation ev;
  ev.monotonicity = monotonicity(index_values);
  ev.kendall_tau = kendall_tau(xs, power);
  ev.pearson_r = pearson_r(xs, power);
  ev.spearman_rho = spearman_rho(xs, power);
  return ev;
}

}  // namespace h2core
