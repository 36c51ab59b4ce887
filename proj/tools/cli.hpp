#pragma once

// Command-line front end. run_cli() is the whole program; main() only binds
// it to the process streams, which lets tests drive it in-process.

#include "lsseq/lsseq.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lsseq::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kBadParams = 2, kMismatch = 3 };

struct RunConfig {
  std::string command;
  int L = 1;
  int S = 1;
  std::size_t count = 12;
  int depth = 4;
  int max_depth = 0;  // 0: largest depth with t_n <= 10^5
  std::string mode = "exact";
  std::string format;  // per-command default when empty
  std::string out_path;
  std::uint64_t seed = 1;
  int base = 2;
};

namespace detail {

using json = nlohmann::ordered_json;

inline std::string format_or(const RunConfig& c, const char* fallback) {
  return c.format.empty() ? fallback : c.format;
}

inline int cmd_gen(const RunConfig& c, std::ostream& out) {
  const ParamsRef params = make_params(c.L, c.S);
  const bool exact = c.mode == "exact";
  const bool as_json = format_or(c, "csv") == "json";
  CsvWriter csv(out);
  json rows = json::array();
  if (!as_json) csv.row({"k", "n", "digits", "exact", "float"});

  auto emit = [&](std::size_t k, std::uint64_t n, const DigitString& d, const std::optional<QGammaElement>& x,
                  double v) {
    if (as_json) {
      rows.push_back({{"k", k}, {"n", n}, {"digits", d.to_string()},
                      {"exact", x ? json(x->to_string()) : json(nullptr)}, {"float", v}});
    } else {
      csv.row({std::to_string(k), std::to_string(n), d.to_string(), x ? x->to_compact_string() : "",
               format_double(v)});
    }
  };

  if (exact) {
    PointGenerator<QGammaElement> gen(params);
    for (std::size_t k = 1; k <= c.count; ++k) {
      if (k > 1) gen.advance();
      emit(k, gen.integer(), gen.digit_string(), gen.value(), gen.value().to_double());
    }
  } else {
    PointGenerator<double> gen(params);
    for (std::size_t k = 1; k <= c.count; ++k) {
      if (k > 1) gen.advance();
      emit(k, gen.integer(), gen.digit_string(), std::nullopt, gen.value());
    }
  }
  if (as_json) out << rows.dump(2) << '\n';
  return kOk;
}

inline int cmd_partition(const RunConfig& c, std::ostream& out) {
  const ParamsRef params = make_params(c.L, c.S);
  if (c.depth < 0) throw parameter_error("depth must be non-negative");
  const bool as_json = format_or(c, "csv") == "json";
  CsvWriter csv(out);
  json rows = json::array();
  if (!as_json) csv.row({"index", "left_exact", "left_float", "label", "depth"});

  auto emit = [&](std::size_t i, const std::optional<QGammaElement>& x, double v, IntervalLabel label, int depth) {
    if (as_json) {
      rows.push_back({{"index", i}, {"left_exact", x ? json(x->to_string()) : json(nullptr)},
                      {"left_float", v}, {"label", label_name(label)}, {"depth", depth}});
    } else {
      csv.row({std::to_string(i), x ? x->to_compact_string() : "", format_double(v),
               std::string(label_name(label)), std::to_string(depth)});
    }
  };

  if (c.mode == "exact") {
    const auto p = ls_partition<QGammaElement>(c.depth, params);
    for (std::size_t i = 0; i < p.size(); ++i)
      emit(i + 1, p.intervals[i].left, p.intervals[i].left.to_double(), p.intervals[i].label, p.depth);
  } else {
    const auto p = ls_partition<double>(c.depth, params);
    for (std::size_t i = 0; i < p.size(); ++i)
      emit(i + 1, std::nullopt, p.intervals[i].left, p.intervals[i].label, p.depth);
  }
  if (as_json) out << rows.dump(2) << '\n';
  return kOk;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  const ParamsRef params = make_params(c.L, c.S);
  if (c.depth < 1) throw parameter_error("depth must be at least 1");
  const EquivalenceReport rep = verify_equivalence(c.depth, params);
  if (format_or(c, "csv") == "json") {
    json j{{"L", c.L}, {"S", c.S}, {"depth", rep.depth}, {"t_n", rep.points}, {"equal", rep.equal()},
           {"first_mismatch", rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr)}};
    out << j.dump(2) << '\n';
  } else {
    out << "L=" << c.L << " S=" << c.S << " depth=" << rep.depth << ": t_" << rep.depth << "=" << rep.points;
    if (rep.equal()) out << " points equal\n";
    else out << " points, first mismatch at index " << *rep.first_mismatch << '\n';
  }
  return rep.equal() ? kOk : kMismatch;
}

/// Prefix sizes reported by `disc`: every N up to 1000, then roughly 10 per
/// decade, always ending at count.
inline std::vector<std::size_t> disc_sizes(std::size_t count) {
  std::vector<std::size_t> ns;
  for (std::size_t n = 1; n <= std::min<std::size_t>(count, 1000); ++n) ns.push_back(n);
  for (double x = 1000.0 * 1.25; static_cast<std::size_t>(x) < count; x *= 1.25)
    ns.push_back(static_cast<std::size_t>(x));
  if (ns.back() != count) ns.push_back(count);
  return ns;
}

inline int cmd_disc(const RunConfig& c, std::ostream& out) {
  const ParamsRef params = make_params(c.L, c.S);
  std::vector<double> pts;
  if (c.mode == "exact") {
    for (const auto& x : generate_points<QGammaElement>(c.count, params)) pts.push_back(x.to_double());
  } else {
    pts = generate_points<double>(c.count, params);
  }
  const std::optional<double> exponent = power_exponent(*params);
  const bool as_json = format_or(c, "csv") == "json";
  CsvWriter csv(out);
  json rows = json::array();
  if (!as_json) csv.row({"N", "D", "D_star", "N_D", "N_D_over_logN", "N_D_over_N_pow"});
  for (std::size_t n : disc_sizes(c.count)) {
    const auto r = discrepancy_report(std::span<const double>(pts.data(), n), exponent);
    if (as_json) {
      rows.push_back({{"N", n}, {"D", r.extreme}, {"D_star", r.star}, {"N_D", r.scaled},
                      {"N_D_over_logN", r.scaled_log ? json(*r.scaled_log) : json(nullptr)},
                      {"N_D_over_N_pow", r.scaled_power ? json(*r.scaled_power) : json(nullptr)}});
    } else {
      csv.row({std::to_string(n), format_double(r.extreme), format_double(r.star), format_double(r.scaled),
               format_optional(r.scaled_log), format_optional(r.scaled_power)});
    }
  }
  if (as_json) out << rows.dump(2) << '\n';
  return kOk;
}

inline int cmd_regime(const RunConfig& c, std::ostream& out) {
  const ParamsRef params = make_params(c.L, c.S);
  const int depth = c.max_depth > 0 ? c.max_depth : max_depth_within(*params, 100'000);
  const RegimeReport rep = regime_analysis(params, depth);
  if (format_or(c, "json") == "json") {
    out << rep.to_json().dump(2) << '\n';
  } else {
    CsvWriter csv(out);
    csv.row({"n", "t_n", "D", "t_n_D"});
    for (const auto& r : rep.rows)
      csv.row({std::to_string(r.n), std::to_string(r.t), format_double(r.discrepancy), format_double(r.scaled())});
  }
  return kOk;
}

/// Sample sizes for `qmc`: powers of ten below count, then count.
inline std::vector<std::size_t> qmc_sizes(std::size_t count) {
  std::vector<std::size_t> ns;
  for (std::size_t n = 10; n < count; n *= 10) ns.push_back(n);
  ns.push_back(count);
  return ns;
}

inline int cmd_qmc(const RunConfig& c, std::ostream& out) {
  const ParamsRef params = make_params(c.L, c.S);
  const std::vector<std::size_t> ns = qmc_sizes(c.count);
  std::vector<IntegrationReport> reports;
  for (const char* id : {"ls", "vdc", "knapowski", "rsr", "random"}) {
    const GeneratorSpec g = make_generator(id, params, c.base, c.seed);
    for (const auto& f : standard_integrands(*params)) reports.push_back(integrate(g, f, ns));
  }
  if (format_or(c, "csv") == "json") {
    json rows = json::array();
    for (const auto& rep : reports)
      for (const auto& r : rep.rows)
        rows.push_back({{"generator", rep.generator.id()}, {"L", c.L}, {"S", c.S}, {"integrand", rep.integrand},
                        {"N", r.n}, {"mean", r.mean}, {"error", r.error}, {"D_N", r.discrepancy},
                        {"koksma_ratio", r.koksma_ratio ? json(*r.koksma_ratio) : json(nullptr)},
                        {"seed", rep.generator.seeded() ? json(rep.generator.seed) : json(nullptr)}});
    out << rows.dump(2) << '\n';
  } else {
    CsvWriter csv(out);
    csv.row(integration_csv_header());
    for (const auto& rep : reports) write_integration_rows(csv, rep);
  }
  return kOk;
}

}  // namespace detail

inline int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.command == "gen") return detail::cmd_gen(c, out);
  if (c.command == "partition") return detail::cmd_partition(c, out);
  if (c.command == "verify") return detail::cmd_verify(c, out);
  if (c.command == "disc") return detail::cmd_disc(c, out);
  if (c.command == "regime") return detail::cmd_regime(c, out);
  if (c.command == "qmc") return detail::cmd_qmc(c, out);
  throw parameter_error("unknown command: " + c.command);
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"LS-sequences: generation, partitions, equivalence checks, discrepancy and QMC runs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--L", cfg.L, "number of long intervals (L >= 1)");
    sub->add_option("--S", cfg.S, "number of short intervals (S >= 0, L + S >= 2)");
    sub->add_option("--mode", cfg.mode, "exact or float arithmetic")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "write to this file instead of stdout");
  };

  CLI::App* gen = app.add_subcommand("gen", "first --count points of the LS-sequence");
  add_common(gen);
  gen->add_option("--count", cfg.count, "number of points")->check(CLI::PositiveNumber);

  CLI::App* part = app.add_subcommand("partition", "left endpoints of the depth-n LS-partition");
  add_common(part);
  part->add_option("--depth", cfg.depth, "refinement depth")->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand("verify", "compare partition reordering with the radical inverse");
  add_common(verify);
  verify->add_option("--depth", cfg.depth, "depth n; t_n points are compared")->check(CLI::PositiveNumber);

  CLI::App* disc = app.add_subcommand("disc", "discrepancy of LS-sequence prefixes");
  add_common(disc);
  disc->add_option("--count", cfg.count, "number of points")->check(CLI::PositiveNumber);

  CLI::App* regime = app.add_subcommand("regime", "growth of t_n D(rho^n) with depth");
  add_common(regime);
  regime->add_option("--max-depth", cfg.max_depth, "deepest partition (default: t_n <= 10^5)")
      ->check(CLI::PositiveNumber);

  CLI::App* qmc = app.add_subcommand("qmc", "QMC integration against baseline generators");
  add_common(qmc);
  qmc->add_option("--count", cfg.count, "largest sample size")->check(CLI::PositiveNumber);
  qmc->add_option("--seed", cfg.seed, "seed for the randomized generators");
  qmc->add_option("--base", cfg.base, "van der Corput base")->check(CLI::Range(2, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadParams;
  }
  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();

  std::ostringstream buffer;
  int code = kOk;
  try {
    code = dispatch(cfg, buffer);
  } catch (const parameter_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadParams;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadParams;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadParams;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
    out.flush();
    if (!out) return kIoError;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << '\n';
      return kIoError;
    }
    file << buffer.str();
    file.close();
    if (!file) {
      err << "error: failed writing " << cfg.out_path << '\n';
      return kIoError;
    }
  }
  return code;
}

}  // namespace lsseq::cli
