#pragma once

#include "lsseq/qgamma.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <vector>

namespace lsseq {

/// Value types a point or an interval endpoint can live in: the exact field
/// Q(gamma), or its double mirror.
template <class T>
concept PointScalar = std::same_as<T, QGammaElement> || std::same_as<T, double>;

template <PointScalar T>
struct ScalarOps;

template <>
struct ScalarOps<QGammaElement> {
  static QGammaElement integer(std::int64_t v, const ParamsRef& params) {
    return QGammaElement::integer(v, params);
  }
  static QGammaElement from_exact(const QGammaElement& x) { return x; }
  static QGammaElement scale(const QGammaElement& x, std::int64_t k) { return x * Rational(k); }
  static double to_double(const QGammaElement& x) { return x.to_double(); }
  static bool same_length(const QGammaElement& a, const QGammaElement& b) { return a == b; }
  static bool less(const QGammaElement& a, const QGammaElement& b) { return a < b; }
};

template <>
struct ScalarOps<double> {
  // Relative tolerance for "equal length" in Kakutani-style refinement when
  // only floats are available. Ties closer than this are merged.
  static constexpr double kLengthTolerance = 1e-12;

  static double integer(std::int64_t v, const ParamsRef&) { return static_cast<double>(v); }
  static double from_exact(const QGammaElement& x) { return x.to_double(); }
  static double scale(double x, std::int64_t k) { return x * static_cast<double>(k); }
  static double to_double(double x) { return x; }
  static bool same_length(double a, double b) {
    return std::abs(a - b) <= kLengthTolerance * std::max(std::abs(a), std::abs(b));
  }
  static bool less(double a, double b) { return a < b; }
};

/// Lazily extended table of gamma^k in the scalar type T.
///
/// Double entries are rounded from the exact powers, not accumulated, so
/// gamma^k carries a single rounding error for every k.
template <PointScalar T>
class GammaPowers {
 public:
  explicit GammaPowers(ParamsRef params) : params_(std::move(params)) {
    exact_.push_back(QGammaElement::one(params_));
    values_.push_back(ScalarOps<T>::from_exact(exact_.back()));
  }

  // Returned by value: extending the table may reallocate it.
  T operator[](std::size_t k) {
    while (values_.size() <= k) {
      exact_.push_back(exact_.back().times_gamma());
      values_.push_back(ScalarOps<T>::from_exact(exact_.back()));
    }
    return values_[k];
  }

  /// Contribution of digit a in position k of an LS-radical inverse:
  /// a*gamma^(k+1) for a long digit (a < L), L*gamma^(k+1) + (a-L)*gamma^(k+2)
  /// for a short one.
  T digit_term(int a, std::size_t k) {
    const int L = params_->L;
    if (a < L) return ScalarOps<T>::scale((*this)[k + 1], a);
    T term = ScalarOps<T>::scale((*this)[k + 1], L);
    if (a > L) term = term + ScalarOps<T>::scale((*this)[k + 2], a - L);
    return term;
  }

  const ParamsRef& params() const { return params_; }

 private:
  ParamsRef params_;
  std::vector<QGammaElement> exact_;
  std::vector<T> values_;
};

}  // namespace lsseq
