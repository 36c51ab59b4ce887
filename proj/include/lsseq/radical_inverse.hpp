#pragma once

#include "lsseq/digits.hpp"
#include "lsseq/psi.hpp"
#include "lsseq/scalar.hpp"

#include <cstdint>
#include <vector>

namespace lsseq {

/// phi_{L,S}(n) = sum_k a~_k gamma^(k+1), where a~_k = a_k for long digits and
/// L + gamma (a_k - L) for short ones. Terms are summed from the most
/// significant digit down.
template <PointScalar T>
T radical_inverse(const DigitString& digits, GammaPowers<T>& powers) {
  const LSParams& prm = *powers.params();
  if (digits.base() != prm.base()) throw parameter_error("radical_inverse: digit base is not L+S");
  if (!is_admissible(digits, prm))
    throw forbidden_composition("radical_inverse: " + digits.to_string() + " is not admissible");
  T x = ScalarOps<T>::integer(0, powers.params());
  for (std::size_t k = digits.size(); k-- > 0;) x = x + powers.digit_term(digits[k], k);
  return x;
}

inline QGammaElement radical_inverse(std::uint64_t n, const ParamsRef& params) {
  GammaPowers<QGammaElement> powers(params);
  return radical_inverse(to_digits(n, params->base()), powers);
}

/// Streams xi^1, xi^2, ... of the LS-sequence: phi_{L,S} over the admissible
/// integers in increasing order.
///
/// Keeps suffix sums partial_[k] = sum_{j >= k} term_j of the current digit
/// string, so a step only recomputes the positions the counter touched.
template <PointScalar T>
class PointGenerator {
 public:
  explicit PointGenerator(ParamsRef params)
      : powers_(params), counter_(*params) {
    const T zero = ScalarOps<T>::integer(0, params);
    partial_.assign(2, zero);
  }

  /// 1-based position of the current point in the sequence.
  std::size_t index() const { return index_; }
  std::uint64_t integer() const { return counter_.value(); }
  const std::vector<int>& digits() const { return counter_.digits(); }
  DigitString digit_string() const { return counter_.current(); }
  const T& value() const { return partial_[0]; }

  void advance() {
    const std::size_t k = counter_.advance();
    const auto& d = counter_.digits();
    if (partial_.size() < d.size() + 1) {
      const T zero = partial_.back();
      partial_.resize(d.size() + 1, zero);
    }
    partial_[k] = partial_[k + 1] + powers_.digit_term(d[k], k);
    for (std::size_t j = 0; j < k; ++j) partial_[j] = partial_[k];
    ++index_;
  }

 private:
  GammaPowers<T> powers_;
  AdmissibleCounter counter_;
  std::vector<T> partial_;  // partial_[digits.size()] is zero
  std::size_t index_ = 1;
};

/// The first count points of the LS-sequence.
template <PointScalar T>
std::vector<T> generate_points(std::size_t count, const ParamsRef& params) {
  std::vector<T> out;
  out.reserve(count);
  PointGenerator<T> gen(params);
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) gen.advance();
    out.push_back(gen.value());
  }
  return out;
}

}  // namespace lsseq
