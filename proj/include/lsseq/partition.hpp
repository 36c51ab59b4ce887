#pragma once

#include "lsseq/counting.hpp"
#include "lsseq/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace lsseq {

enum class IntervalLabel : std::uint8_t { Long, Short, Plain };

constexpr std::string_view label_name(IntervalLabel label) {
  switch (label) {
    case IntervalLabel::Long: return "L";
    case IntervalLabel::Short: return "S";
    case IntervalLabel::Plain: return "-";
  }
  return "?";
}

template <PointScalar T>
struct Interval {
  T left;
  T length;
  IntervalLabel label = IntervalLabel::Plain;
};

/// Ordered, gap-free decomposition of [0, 1) into half-open intervals.
template <PointScalar T>
struct Partition {
  std::vector<Interval<T>> intervals;
  int depth = 0;

  std::size_t size() const { return intervals.size(); }

  std::vector<T> left_endpoints() const {
    std::vector<T> out;
    out.reserve(intervals.size());
    for (const auto& iv : intervals) out.push_back(iv.left);
    return out;
  }

  std::size_t count(IntervalLabel label) const {
    return static_cast<std::size_t>(std::count_if(intervals.begin(), intervals.end(),
                                                  [&](const auto& iv) { return iv.label == label; }));
  }
};

/// omega = {[0, 1)}.
template <PointScalar T>
Partition<T> trivial_partition(const ParamsRef& params) {
  return {{{ScalarOps<T>::integer(0, params), ScalarOps<T>::integer(1, params), IntervalLabel::Long}}, 0};
}

/// Builds a partition of [0, 1) from consecutive lengths.
template <PointScalar T>
Partition<T> partition_from_lengths(const std::vector<T>& lengths, const ParamsRef& params,
                                    const std::vector<IntervalLabel>& labels = {}) {
  Partition<T> p;
  T left = ScalarOps<T>::integer(0, params);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    p.intervals.push_back({left, lengths[i], i < labels.size() ? labels[i] : IntervalLabel::Plain});
    left = left + lengths[i];
  }
  return p;
}

/// rho_{L,S}: L long intervals of length gamma, then S short ones of length gamma^2.
template <PointScalar T>
Partition<T> rho_template(GammaPowers<T>& powers) {
  const LSParams& prm = *powers.params();
  std::vector<T> lengths;
  std::vector<IntervalLabel> labels;
  for (int i = 0; i < prm.L; ++i) {
    lengths.push_back(powers[1]);
    labels.push_back(IntervalLabel::Long);
  }
  for (int j = 0; j < prm.S; ++j) {
    lengths.push_back(powers[2]);
    labels.push_back(IntervalLabel::Short);
  }
  return partition_from_lengths(lengths, powers.params(), labels);
}

/// Structural checks: starts at 0, contiguous, strictly increasing, total length 1.
template <PointScalar T>
bool is_partition_of_unit_interval(const Partition<T>& p, const ParamsRef& params) {
  using Ops = ScalarOps<T>;
  if (p.intervals.empty()) return false;
  T expected = Ops::integer(0, params);
  for (const auto& iv : p.intervals) {
    if (!Ops::same_length(iv.left, expected) && !(iv.left == expected)) return false;
    if (!Ops::less(Ops::integer(0, params), iv.length)) return false;
    expected = iv.left + iv.length;
  }
  const T one = Ops::integer(1, params);
  return expected == one || Ops::same_length(expected, one);
}

/// rho-refinement: every interval of maximal length in pi is replaced by a
/// homothetic copy of rho (keeping rho's labels); other intervals are kept.
///
/// Maximal lengths are found with ScalarOps<T>::same_length, which is exact for
/// Q(gamma) and a relative 1e-12 tolerance for doubles. Kakutani's
/// alpha-refinement is rho = {[0, alpha), [alpha, 1)}.
template <PointScalar T>
Partition<T> rho_refine(const Partition<T>& pi, const Partition<T>& rho) {
  using Ops = ScalarOps<T>;
  if (rho.intervals.size() < 2) throw std::invalid_argument("rho_refine: rho must have at least two intervals");
  if (pi.intervals.empty()) throw std::invalid_argument("rho_refine: empty partition");

  const T* longest = &pi.intervals.front().length;
  for (const auto& iv : pi.intervals)
    if (Ops::less(*longest, iv.length) && !Ops::same_length(*longest, iv.length)) longest = &iv.length;

  Partition<T> out;
  out.depth = pi.depth + 1;
  out.intervals.reserve(pi.intervals.size() + rho.intervals.size());
  for (const auto& iv : pi.intervals) {
    if (!Ops::same_length(iv.length, *longest)) {
      out.intervals.push_back(iv);
      continue;
    }
    for (const auto& r : rho.intervals)
      out.intervals.push_back({iv.left + iv.length * r.left, iv.length * r.length, r.label});
  }
  return out;
}

/// One structural LS step from depth n to n+1: each long interval (length
/// gamma^n) spawns L longs and then S shorts; each short (gamma^(n+1)) becomes
/// a long of the next level unchanged. Only labels are inspected, never
/// lengths. Left endpoints created by the step are appended to new_points.
template <PointScalar T>
Partition<T> ls_refine_step(const Partition<T>& p, GammaPowers<T>& powers,
                            std::vector<T>* new_points = nullptr) {
  const LSParams& prm = *powers.params();
  const auto next = static_cast<std::size_t>(p.depth) + 1;
  const T long_len = powers[next];
  const T short_len = powers[next + 1];

  std::vector<T> offsets;  // offsets of the children inside a splitting long interval
  offsets.reserve(static_cast<std::size_t>(prm.base()));
  for (int i = 0; i < prm.L; ++i) offsets.push_back(ScalarOps<T>::scale(long_len, i));
  for (int j = 0; j < prm.S; ++j)
    offsets.push_back(ScalarOps<T>::scale(long_len, prm.L) + ScalarOps<T>::scale(short_len, j));

  Partition<T> out;
  out.depth = p.depth + 1;
  std::size_t longs = 0;
  for (const auto& iv : p.intervals) longs += iv.label == IntervalLabel::Long ? 1 : 0;
  out.intervals.reserve(longs * static_cast<std::size_t>(prm.base()) + (p.intervals.size() - longs));

  for (const auto& iv : p.intervals) {
    if (iv.label == IntervalLabel::Short) {
      out.intervals.push_back({iv.left, iv.length, IntervalLabel::Long});
      continue;
    }
    for (std::size_t c = 0; c < offsets.size(); ++c) {
      const bool is_long = c < static_cast<std::size_t>(prm.L);
      T left = c == 0 ? iv.left : iv.left + offsets[c];
      if (c > 0 && new_points != nullptr) new_points->push_back(left);
      out.intervals.push_back({std::move(left), is_long ? long_len : short_len,
                               is_long ? IntervalLabel::Long : IntervalLabel::Short});
    }
  }
  return out;
}

/// rho_{L,S}^n omega, built structurally.
template <PointScalar T>
Partition<T> ls_partition(int n, const ParamsRef& params) {
  if (n < 0) throw parameter_error("ls_partition: negative depth");
  GammaPowers<T> powers(params);
  Partition<T> p = trivial_partition<T>(params);
  for (int k = 0; k < n; ++k) p = ls_refine_step(p, powers);
  return p;
}

/// Long/short labels of rho_{L,S}^n without endpoints, one byte per interval.
inline std::vector<IntervalLabel> ls_labels(int n, const LSParams& params) {
  if (n < 0) throw parameter_error("ls_labels: negative depth");
  std::vector<IntervalLabel> labels{IntervalLabel::Long};
  for (int k = 0; k < n; ++k) {
    std::vector<IntervalLabel> next;
    next.reserve(labels.size() * static_cast<std::size_t>(params.base()));
    for (IntervalLabel label : labels) {
      if (label == IntervalLabel::Short) {
        next.push_back(IntervalLabel::Long);
        continue;
      }
      next.insert(next.end(), static_cast<std::size_t>(params.L), IntervalLabel::Long);
      next.insert(next.end(), static_cast<std::size_t>(params.S), IntervalLabel::Short);
    }
    labels = std::move(next);
  }
  return labels;
}

}  // namespace lsseq
