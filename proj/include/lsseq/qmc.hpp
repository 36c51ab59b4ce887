#pragma once

#include "lsseq/counting.hpp"
#include "lsseq/discrepancy.hpp"
#include "lsseq/partition.hpp"
#include "lsseq/radical_inverse.hpp"
#include "lsseq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lsseq {

struct Integrand {
  std::string name;
  std::function<double(double)> f;
  double integral = 0.0;
  std::optional<double> variation;  // total variation on [0, 1), when known
};

inline Integrand indicator(std::string name, double a, double b) {
  const double variation = (a > 0.0 ? 1.0 : 0.0) + (b < 1.0 ? 1.0 : 0.0);
  return {std::move(name), [a, b](double x) { return (x >= a && x < b) ? 1.0 : 0.0; }, b - a, variation};
}

/// Constants, x, x^2, sin(2 pi x), and indicators of [1/3, 1/2), [0, gamma)
/// and [gamma^2, gamma). The last two line up with the LS-partition structure.
inline std::vector<Integrand> standard_integrands(const LSParams& params) {
  const double g = params.gamma_float;
  const double g2 = params.S == 0 ? g * g : (1.0 - params.L * g) / params.S;
  std::vector<Integrand> out;
  out.push_back({"one", [](double) { return 1.0; }, 1.0, 0.0});
  out.push_back({"x", [](double x) { return x; }, 0.5, 1.0});
  out.push_back({"x2", [](double x) { return x * x; }, 1.0 / 3.0, 1.0});
  out.push_back({"sin2pi", [](double x) { return std::sin(2.0 * std::numbers::pi * x); }, 0.0, 4.0});
  out.push_back(indicator("ind_third_half", 1.0 / 3.0, 0.5));
  out.push_back(indicator("ind_0_gamma", 0.0, g));
  out.push_back(indicator("ind_gamma2_gamma", g2, g));
  return out;
}

inline Integrand find_integrand(const std::vector<Integrand>& suite, std::string_view name) {
  for (const auto& f : suite)
    if (f.name == name) return f;
  throw std::invalid_argument("unknown integrand: " + std::string(name));
}

/// Seedable source: std::mt19937_64 with explicitly defined conversions, so
/// streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do v = engine_(); while (v >= limit);
    return v % bound;
  }

  template <class It>
  void shuffle(It first, It last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) std::iter_swap(first + (i - 1), first + below(i));
  }

 private:
  std::mt19937_64 engine_;
};

/// Concatenation of the blocks {1/a_m, ..., (a_m - 1)/a_m}, truncated to count
/// points. The default block sizes are a_m = m + 1.
inline std::vector<double> knapowski_points(
    std::size_t count, const std::function<std::uint64_t(std::uint64_t)>& block = [](std::uint64_t m) {
      return m + 1;
    }) {
  std::vector<double> out;
  out.reserve(count);
  for (std::uint64_t m = 1; out.size() < count; ++m) {
    const std::uint64_t a = block(m);
    if (a < 2) throw std::invalid_argument("knapowski_points: block size below 2");
    for (std::uint64_t i = 1; i < a && out.size() < count; ++i)
      out.push_back(static_cast<double>(i) / static_cast<double>(a));
  }
  return out;
}

/// Base-b van der Corput points phi_b(0), phi_b(1), ... by plain digit reversal.
inline std::vector<double> van_der_corput_points(std::size_t count, int base) {
  if (base < 2) throw parameter_error("van der Corput base must be at least 2");
  std::vector<double> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    double x = 0.0, scale = 1.0 / base;
    for (std::uint64_t m = n; m != 0; m /= static_cast<std::uint64_t>(base)) {
      x += static_cast<double>(m % static_cast<std::uint64_t>(base)) * scale;
      scale /= base;
    }
    out.push_back(x);
  }
  return out;
}

/// Sequential ordering of the LS-partition points where each depth's new
/// points come in a uniformly random order: first a permutation of the t_1
/// points of rho^1, then of the points added by rho^2, and so on up to rho^n.
inline std::vector<double> random_sequential_reordering(int depth, const ParamsRef& params,
                                                        std::uint64_t seed) {
  if (depth < 1) throw parameter_error("random_sequential_reordering: depth must be at least 1");
  Rng rng(seed);
  GammaPowers<double> powers(params);
  Partition<double> p = trivial_partition<double>(params);
  std::vector<double> out{0.0};
  for (int k = 1; k <= depth; ++k) {
    std::vector<double> fresh;
    p = ls_refine_step(p, powers, &fresh);
    const auto block_start = static_cast<std::ptrdiff_t>(out.size()) - (k == 1 ? 1 : 0);
    out.insert(out.end(), fresh.begin(), fresh.end());
    rng.shuffle(out.begin() + block_start, out.end());
  }
  return out;
}

enum class GeneratorKind { LS, VanDerCorput, Knapowski, RandomReordering, UniformRandom };

/// Which point source to integrate with; the id strings are "ls", "vdc",
/// "knapowski", "rsr" (random sequential reordering) and "random".
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::LS;
  ParamsRef params = make_params(1, 1);
  int base = 2;
  std::uint64_t seed = 0;

  std::string id() const {
    switch (kind) {
      case GeneratorKind::LS: return "ls";
      case GeneratorKind::VanDerCorput: return "vdc";
      case GeneratorKind::Knapowski: return "knapowski";
      case GeneratorKind::RandomReordering: return "rsr";
      case GeneratorKind::UniformRandom: return "random";
    }
    return "?";
  }
  bool seeded() const {
    return kind == GeneratorKind::RandomReordering || kind == GeneratorKind::UniformRandom;
  }
};

class unknown_generator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline GeneratorSpec make_generator(std::string_view id, ParamsRef params, int base = 2,
                                    std::uint64_t seed = 0) {
  GeneratorSpec g;
  if (id == "ls") g.kind = GeneratorKind::LS;
  else if (id == "vdc") g.kind = GeneratorKind::VanDerCorput;
  else if (id == "knapowski") g.kind = GeneratorKind::Knapowski;
  else if (id == "rsr") g.kind = GeneratorKind::RandomReordering;
  else if (id == "random") g.kind = GeneratorKind::UniformRandom;
  else throw unknown_generator("unknown generator id: " + std::string(id));
  g.params = std::move(params);
  g.base = base;
  g.seed = seed;
  return g;
}

inline std::vector<double> generate(const GeneratorSpec& g, std::size_t count) {
  switch (g.kind) {
    case GeneratorKind::LS: return generate_points<double>(count, g.params);
    case GeneratorKind::VanDerCorput: return van_der_corput_points(count, g.base);
    case GeneratorKind::Knapowski: return knapowski_points(count);
    case GeneratorKind::RandomReordering: {
      int depth = 1;
      while (counts(depth, *g.params).t < BigInt(count)) ++depth;
      std::vector<double> pts = random_sequential_reordering(depth, g.params, g.seed);
      pts.resize(count);
      return pts;
    }
    case GeneratorKind::UniformRandom: {
      Rng rng(g.seed);
      std::vector<double> pts(count);
      for (double& x : pts) x = rng.uniform();
      return pts;
    }
  }
  throw unknown_generator("unhandled generator kind");
}

struct IntegrationRow {
  std::size_t n = 0;
  double mean = 0.0;
  double error = 0.0;
  double discrepancy = 0.0;           // extreme discrepancy of the first n points
  std::optional<double> koksma_ratio;  // error / (V D_n), when V is known
};

struct IntegrationReport {
  GeneratorSpec generator;
  std::string integrand;
  std::vector<IntegrationRow> rows;
};

/// Quasi-Monte Carlo means (1/N) sum f(x_i) of the generator's prefixes at
/// each requested N, with the error against the exact integral.
inline IntegrationReport integrate(const GeneratorSpec& g, const Integrand& f, std::span<const std::size_t> ns) {
  if (ns.empty()) throw std::invalid_argument("integrate: no sample sizes");
  const std::size_t max_n = *std::max_element(ns.begin(), ns.end());
  if (max_n == 0) throw std::invalid_argument("integrate: sample size must be positive");
  const std::vector<double> pts = generate(g, max_n);

  std::vector<double> prefix(pts.size() + 1, 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i) prefix[i + 1] = prefix[i] + f.f(pts[i]);

  IntegrationReport rep{g, f.name, {}};
  for (std::size_t n : ns) {
    if (n == 0) throw std::invalid_argument("integrate: sample size must be positive");
    IntegrationRow row;
    row.n = n;
    row.mean = prefix[n] / static_cast<double>(n);
    row.error = std::abs(row.mean - f.integral);
    row.discrepancy = extreme_discrepancy(std::span<const double>(pts.data(), n));
    if (f.variation) {
      const double bound = *f.variation * row.discrepancy;
      row.koksma_ratio = bound > 0 ? row.error / bound : (row.error == 0 ? 0.0 : INFINITY);
    }
    rep.rows.push_back(row);
  }
  return rep;
}

inline const std::vector<std::string>& integration_csv_header() {
  static const std::vector<std::string> h{"generator", "L", "S", "integrand", "N", "mean",
                                          "error", "D_N", "koksma_ratio", "seed"};
  return h;
}

/// One CSV row per (report, N). L and S are blank for generators that do not
/// use them; van der Corput writes its base as L with S = 0. The seed is blank
/// for deterministic generators.
inline void write_integration_rows(CsvWriter& csv, const IntegrationReport& rep) {
  const GeneratorSpec& g = rep.generator;
  std::string L, S;
  if (g.kind == GeneratorKind::LS || g.kind == GeneratorKind::RandomReordering) {
    L = std::to_string(g.params->L);
    S = std::to_string(g.params->S);
  } else if (g.kind == GeneratorKind::VanDerCorput) {
    L = std::to_string(g.base);
    S = "0";
  }
  const std::string seed = g.seeded() ? std::to_string(g.seed) : std::string();
  for (const auto& r : rep.rows)
    csv.row({g.id(), L, S, rep.integrand, std::to_string(r.n), format_double(r.mean), format_double(r.error),
             format_double(r.discrepancy), format_optional(r.koksma_ratio), seed});
}

}  // namespace lsseq
