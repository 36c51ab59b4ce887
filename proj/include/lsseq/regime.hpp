#pragma once

#include "lsseq/counting.hpp"
#include "lsseq/discrepancy.hpp"
#include "lsseq/partition.hpp"

#include <json.hpp>

#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

namespace lsseq {

enum class Regime { Bounded, Logarithmic, Power };

constexpr std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Bounded: return "bounded";
    case Regime::Logarithmic: return "logarithmic";
    case Regime::Power: return "power";
  }
  return "?";
}

/// Growth of t_n D(rho^n) known for (L, S): bounded for S <= L, log t_n for
/// S = L + 1, t_n^(1 - tau) beyond.
constexpr Regime expected_regime(const LSParams& p) {
  if (p.S <= p.L) return Regime::Bounded;
  if (p.S == p.L + 1) return Regime::Logarithmic;
  return Regime::Power;
}

/// 1 - tau = -log(S gamma) / log(gamma), defined for S >= L + 2.
inline std::optional<double> power_exponent(const LSParams& p) {
  if (p.S < p.L + 2) return std::nullopt;
  return -std::log(p.S * p.gamma_float) / std::log(p.gamma_float);
}

struct RegimeRow {
  int n = 0;
  std::size_t t = 0;
  double discrepancy = 0.0;
  double scaled() const { return static_cast<double>(t) * discrepancy; }
};

struct RegimeReport {
  int L = 0;
  int S = 0;
  double gamma = 0.0;
  std::vector<RegimeRow> rows;
  // Least-squares slope of log(t_n D_n) against log t_n over n >= kFitFrom.
  double slope = 0.0;
  // The same fit over the deeper half of the levels only; a diagnostic for
  // how the local slope drifts with depth.
  double tail_slope = 0.0;
  std::optional<double> predicted_exponent;
  double max_scaled = 0.0;       // sup_n t_n D_n
  double log_ratio_min = 0.0;    // range of t_n D_n / log t_n over n >= kFitFrom
  double log_ratio_max = 0.0;
  // Per-level factor by which the increments of t_n D_n grow (fitted
  // geometrically). Below 1 the series converges, at 1 it grows linearly in
  // n ~ log t_n, above 1 it grows like a power of t_n.
  double growth_ratio = 0.0;
  Regime classification = Regime::Bounded;
  Regime expected = Regime::Bounded;

  static constexpr int kFitFrom = 3;
  static constexpr double kRatioBand = 0.03;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["L"] = L;
    j["S"] = S;
    j["gamma"] = gamma;
    auto rows_json = nlohmann::ordered_json::array();
    for (const auto& r : rows) rows_json.push_back({{"n", r.n}, {"t_n", r.t}, {"D", r.discrepancy}});
    j["rows"] = std::move(rows_json);
    j["slope"] = slope;
    j["predicted_exponent"] = predicted_exponent ? nlohmann::ordered_json(*predicted_exponent) : nullptr;
    j["classification"] = regime_name(classification);
    j["expected"] = regime_name(expected);
    j["max_scaled"] = max_scaled;
    j["log_ratio_range"] = {log_ratio_min, log_ratio_max};
    j["growth_ratio"] = growth_ratio;
    j["tail_slope"] = tail_slope;
    return j;
  }
};

namespace detail {

/// Ordinary least-squares slope of y on x.
inline double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

}  // namespace detail

/// Largest depth with t_n <= limit.
inline int max_depth_within(const LSParams& params, std::size_t limit) {
  int n = 0;
  while (counts(n + 1, params).t <= BigInt(limit)) ++n;
  return n;
}

/// D(rho^n) on the left endpoints of the depth-n partitions, n = 1..max_depth,
/// and an empirical reading of how t_n D_n grows.
inline RegimeReport regime_analysis(const ParamsRef& params, int max_depth) {
  const LSParams& prm = *params;
  if (max_depth < 5) throw parameter_error("regime_analysis: max depth must be at least 5");
  if (counts(max_depth, prm).t > BigInt(1'000'000))
    throw parameter_error("regime_analysis: t_n exceeds 10^6 at the requested depth");

  RegimeReport rep;
  rep.L = prm.L;
  rep.S = prm.S;
  rep.gamma = prm.gamma_float;
  rep.predicted_exponent = power_exponent(prm);
  rep.expected = expected_regime(prm);

  GammaPowers<double> powers(params);
  Partition<double> p = trivial_partition<double>(params);
  for (int n = 1; n <= max_depth; ++n) {
    p = ls_refine_step(p, powers);
    const std::vector<double> lefts = p.left_endpoints();
    rep.rows.push_back({n, lefts.size(), extreme_discrepancy(lefts)});
  }

  std::vector<double> log_t, log_scaled, level, log_increment;
  rep.log_ratio_min = std::numeric_limits<double>::infinity();
  rep.log_ratio_max = 0.0;
  double max_increment = 0.0;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const RegimeRow& r = rep.rows[i];
    rep.max_scaled = std::max(rep.max_scaled, r.scaled());
    if (r.n < RegimeReport::kFitFrom) continue;
    const double lt = std::log(static_cast<double>(r.t));
    log_t.push_back(lt);
    log_scaled.push_back(std::log(r.scaled()));
    rep.log_ratio_min = std::min(rep.log_ratio_min, r.scaled() / lt);
    rep.log_ratio_max = std::max(rep.log_ratio_max, r.scaled() / lt);
    const double inc = r.scaled() - rep.rows[i - 1].scaled();
    max_increment = std::max(max_increment, std::abs(inc));
    if (inc > 0) {
      level.push_back(r.n);
      log_increment.push_back(std::log(inc));
    }
  }
  rep.slope = detail::ols_slope(log_t, log_scaled);
  const std::size_t half = log_t.size() - (static_cast<std::size_t>(max_depth) + 1) / 2;
  rep.tail_slope = detail::ols_slope(std::vector<double>(log_t.begin() + static_cast<std::ptrdiff_t>(half), log_t.end()),
                                     std::vector<double>(log_scaled.begin() + static_cast<std::ptrdiff_t>(half), log_scaled.end()));

  // Increments lost in rounding noise, or too few to fit: the series has settled.
  if (max_increment <= 1e-9 * rep.max_scaled || level.size() < 2) {
    rep.growth_ratio = 0.0;
  } else {
    rep.growth_ratio = std::exp(detail::ols_slope(level, log_increment));
  }
  if (rep.growth_ratio < 1.0 - RegimeReport::kRatioBand) {
    rep.classification = Regime::Bounded;
  } else if (rep.growth_ratio > 1.0 + RegimeReport::kRatioBand) {
    rep.classification = Regime::Power;
  } else {
    rep.classification = Regime::Logarithmic;
  }
  return rep;
}

}  // namespace lsseq
