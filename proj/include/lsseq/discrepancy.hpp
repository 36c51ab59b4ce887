#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lsseq {

namespace detail {

inline std::vector<double> sorted_unit_points(std::span<const double> points) {
  if (points.empty()) throw std::invalid_argument("discrepancy of an empty point set");
  std::vector<double> x(points.begin(), points.end());
  for (double v : x)
    if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("point outside [0, 1)");
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace detail

/// Extreme discrepancy sup_{0<=a<b<=1} |#{x in [a,b)}/N - (b-a)|.
///
/// Uses D = 1/N + max_i(i/N - x_(i)) - min_i(i/N - x_(i)) over the sorted
/// points (1-based i), which holds with repeated points too.
inline double extreme_discrepancy(std::span<const double> points) {
  const std::vector<double> x = detail::sorted_unit_points(points);
  const double n = static_cast<double>(x.size());
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = static_cast<double>(i + 1) / n - x[i];
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  return 1.0 / n + hi - lo;
}

/// O(N^2) candidate-pair evaluation of the same supremum; the normative
/// definition the fast pass is checked against.
///
/// Overfill: [x_i, x_j + eps) holds every point in [x_i, x_j]. Underfill:
/// (u, v) between consecutive-or-farther candidates u < v taken from
/// {0} u points u {1} holds only the points strictly inside.
inline double extreme_discrepancy_reference(std::span<const double> points) {
  const std::vector<double> x = detail::sorted_unit_points(points);
  const double n = static_cast<double>(x.size());

  std::vector<double> value;        // distinct point values
  std::vector<std::size_t> upto;    // #points <= value[k]
  std::vector<std::size_t> before;  // #points <  value[k]
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (value.empty() || x[i] != value.back()) {
      value.push_back(x[i]);
      before.push_back(i);
      upto.push_back(i + 1);
    } else {
      upto.back() = i + 1;
    }
  }

  double best = 0.0;
  for (std::size_t i = 0; i < value.size(); ++i)
    for (std::size_t j = i; j < value.size(); ++j)
      best = std::max(best, static_cast<double>(upto[j] - before[i]) / n - (value[j] - value[i]));

  // Candidates for the underfill ends, with (#points <= c, #points < c).
  struct Cut {
    double at;
    std::size_t upto;
    std::size_t before;
  };
  std::vector<Cut> cuts;
  if (value.front() > 0.0) cuts.push_back({0.0, 0, 0});
  for (std::size_t k = 0; k < value.size(); ++k) cuts.push_back({value[k], upto[k], before[k]});
  cuts.push_back({1.0, x.size(), x.size()});
  for (std::size_t a = 0; a < cuts.size(); ++a)
    for (std::size_t b = a + 1; b < cuts.size(); ++b) {
      const double inside = static_cast<double>(cuts[b].before - cuts[a].upto);
      best = std::max(best, (cuts[b].at - cuts[a].at) - inside / n);
    }
  return best;
}

/// Star discrepancy sup_{0<a<=1} |#{x in [0,a)}/N - a|.
inline double star_discrepancy(std::span<const double> points) {
  const std::vector<double> x = detail::sorted_unit_points(points);
  const double n = static_cast<double>(x.size());
  double best = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    best = std::max({best, x[i] - (k - 1.0) / n, k / n - x[i]});
  }
  return best;
}

/// Grid oracle: max |count/N - (b-a)| over a <= b drawn from the points, 0, 1
/// and {k/G}, counting with all four open/closed endpoint conventions. Every
/// value is a limit of half-open intervals, so this never exceeds the
/// extreme discrepancy, and it is within 2/G of it.
///
/// The maximum over b > a is taken with suffix extrema of count(b)/N - b,
/// which visits the same pairs as a double loop in O(G + N) time.
inline double brute_force_discrepancy(std::span<const double> points, std::size_t grid) {
  if (grid < 1000) throw std::invalid_argument("brute_force_discrepancy: grid must be at least 1000");
  const std::vector<double> x = detail::sorted_unit_points(points);
  const double n = static_cast<double>(x.size());

  std::vector<double> cand(x);
  cand.reserve(x.size() + grid + 2);
  for (std::size_t k = 0; k <= grid; ++k) cand.push_back(static_cast<double>(k) / static_cast<double>(grid));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  const std::size_t m = cand.size();
  std::vector<double> open_at(m), closed_at(m);  // #points < c, #points <= c, divided by N
  for (std::size_t k = 0; k < m; ++k) {
    open_at[k] = static_cast<double>(std::lower_bound(x.begin(), x.end(), cand[k]) - x.begin()) / n;
    closed_at[k] = static_cast<double>(std::upper_bound(x.begin(), x.end(), cand[k]) - x.begin()) / n;
  }

  double best = 0.0;
  for (std::size_t k = 0; k < m; ++k) best = std::max(best, closed_at[k] - open_at[k]);  // [c, c]

  // Suffix extrema over b of count(b)/N - b for both conventions at b.
  constexpr double inf = std::numeric_limits<double>::infinity();
  double max_open = -inf, min_open = inf, max_closed = -inf, min_closed = inf;
  for (std::size_t a = m; a-- > 0;) {
    if (a + 1 < m) {
      const double ga_open = open_at[a] - cand[a];
      const double ga_closed = closed_at[a] - cand[a];
      for (double ga : {ga_open, ga_closed}) {
        best = std::max({best, max_open - ga, ga - min_open, max_closed - ga, ga - min_closed});
      }
    }
    max_open = std::max(max_open, open_at[a] - cand[a]);
    min_open = std::min(min_open, open_at[a] - cand[a]);
    max_closed = std::max(max_closed, closed_at[a] - cand[a]);
    min_closed = std::min(min_closed, closed_at[a] - cand[a]);
  }
  return best;
}

struct DiscrepancyReport {
  std::size_t n = 0;
  double extreme = 0.0;
  double star = 0.0;
  double scaled = 0.0;                  // N D
  std::optional<double> scaled_log;     // N D / log N, N >= 2
  std::optional<double> scaled_power;   // N D / N^(1-tau), when an exponent is given
};

inline DiscrepancyReport discrepancy_report(std::span<const double> points,
                                            std::optional<double> power_exponent = std::nullopt) {
  DiscrepancyReport r;
  r.n = points.size();
  r.extreme = extreme_discrepancy(points);
  r.star = star_discrepancy(points);
  const double n = static_cast<double>(r.n);
  r.scaled = n * r.extreme;
  if (r.n >= 2) r.scaled_log = r.scaled / std::log(n);
  if (power_exponent) r.scaled_power = r.scaled / std::pow(n, *power_exponent);
  return r;
}

}  // namespace lsseq
