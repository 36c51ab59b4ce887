#pragma once

#include "lsseq/counting.hpp"
#include "lsseq/partition.hpp"
#include "lsseq/radical_inverse.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace lsseq {

/// Lambda^n: the t_n left endpoints of rho^n in LS-sequence order, built by
/// reordering partitions (no digits involved).
///
/// Lambda^1 is the left endpoints of rho^1 sorted by magnitude. Lambda^(m+1)
/// is Lambda^m followed by one block per non-zero digit d, each block being a
/// translate of the first l_m entries of Lambda^m:
///   d = 1..L       x + d gamma^(m+1)
///   d = L+j        x + L gamma^(m+1) + j gamma^(m+2),   j = 1..S-1
/// For S = 0 the digit d = L does not exist and only d = 1..L-1 are used.
template <PointScalar T>
std::vector<T> lambda_tuple(int n, const ParamsRef& params) {
  if (n < 1) throw parameter_error("lambda_tuple: depth must be at least 1");
  using Ops = ScalarOps<T>;
  const LSParams& prm = *params;
  GammaPowers<T> powers(params);

  std::vector<T> points = ls_partition<T>(1, params).left_endpoints();
  std::sort(points.begin(), points.end(), [](const T& a, const T& b) { return Ops::less(a, b); });
  points.reserve(interval_count(n, prm));

  const int long_blocks = prm.S == 0 ? prm.L - 1 : prm.L;
  for (int m = 1; m < n; ++m) {
    const auto head = static_cast<std::size_t>(counts(m, prm).l);
    const auto level = static_cast<std::size_t>(m);
    std::vector<T> shifts;
    for (int i = 1; i <= long_blocks; ++i) shifts.push_back(Ops::scale(powers[level + 1], i));
    for (int j = 1; j <= prm.S - 1; ++j)
      shifts.push_back(Ops::scale(powers[level + 1], prm.L) + Ops::scale(powers[level + 2], j));
    for (const T& shift : shifts)
      for (std::size_t k = 0; k < head; ++k) points.push_back(points[k] + shift);
  }
  return points;
}

struct EquivalenceReport {
  int depth = 0;
  std::size_t points = 0;                    // t_depth
  std::optional<std::size_t> first_mismatch;  // 1-based sequence index
  bool equal() const { return !first_mismatch.has_value(); }
};

/// Compares Lambda^n with the first t_n radical-inverse points, exactly and in order.
inline EquivalenceReport verify_equivalence(int n, const ParamsRef& params) {
  const std::vector<QGammaElement> reordered = lambda_tuple<QGammaElement>(n, params);
  EquivalenceReport report;
  report.depth = n;
  report.points = reordered.size();
  PointGenerator<QGammaElement> gen(params);
  for (std::size_t k = 0; k < reordered.size(); ++k) {
    if (k > 0) gen.advance();
    if (!(gen.value() == reordered[k])) {
      report.first_mismatch = k + 1;
      break;
    }
  }
  return report;
}

}  // namespace lsseq
