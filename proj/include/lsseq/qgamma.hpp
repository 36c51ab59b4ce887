#pragma once

#include "lsseq/rational.hpp"

#include <cmath>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lsseq {

/// Raised when (L, S) does not describe an LS-sequence, or when a derived
/// argument (depth, count) is outside the supported range.
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The pair (L, S) together with gamma, the positive root of L*x + S*x^2 = 1.
///
/// gamma is irrational unless L^2 + 4S is a perfect square (S = 0 being the
/// trivial case gamma = 1/L). Every S = L + 1 pair is of the rational kind,
/// with gamma = 1/(L + 1).
struct LSParams {
  int L = 2;
  int S = 0;
  double gamma_float = 0.5;
  HighFloat gamma_high = HighFloat(1) / 2;
  std::optional<Rational> gamma_rational = Rational(BigInt(1), BigInt(2));

  LSParams() = default;

  LSParams(int long_count, int short_count) : L(long_count), S(short_count) {
    if (L < 1) throw parameter_error("L must be at least 1");
    if (S < 0) throw parameter_error("S must be non-negative");
    if (L + S < 2) throw parameter_error("L + S must be at least 2");
    if (L > 1'000'000 || S > 1'000'000) throw parameter_error("L and S must not exceed 10^6");

    gamma_rational.reset();
    if (S == 0) {
      gamma_rational = Rational(BigInt(1), BigInt(L));
      gamma_high = HighFloat(1) / L;
    } else {
      const std::int64_t disc = std::int64_t{L} * L + 4 * std::int64_t{S};
      auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(disc)));
      while (root * root > disc) --root;
      while ((root + 1) * (root + 1) <= disc) ++root;
      if (root * root == disc) gamma_rational = Rational(BigInt(root - L), BigInt(2 * std::int64_t{S}));
      // 2 / (L + sqrt(L^2 + 4S)) avoids the cancellation in (-L + sqrt(...)) / 2S.
      gamma_high = HighFloat(2) / (HighFloat(L) + boost::multiprecision::sqrt(HighFloat(disc)));
    }
    gamma_float = static_cast<double>(gamma_high);
  }

  int base() const { return L + S; }
  bool gamma_is_rational() const { return gamma_rational.has_value(); }

  friend bool operator==(const LSParams& a, const LSParams& b) { return a.L == b.L && a.S == b.S; }
};

using ParamsRef = std::shared_ptr<const LSParams>;

inline ParamsRef make_params(int L, int S) { return std::make_shared<const LSParams>(L, S); }

/// Exact element p + q*gamma of Q(gamma).
///
/// Canonical: when gamma is rational, q is folded into p and kept at zero, so
/// two elements over the same parameters are equal iff (p, q) are equal.
class QGammaElement {
 public:
  QGammaElement() = default;

  QGammaElement(Rational p, Rational q, ParamsRef params)
      : p_(std::move(p)), q_(std::move(q)), params_(std::move(params)) {
    if (!params_) throw std::invalid_argument("QGammaElement: null parameters");
    normalize();
  }

  static QGammaElement zero(const ParamsRef& params) { return {Rational(0), Rational(0), params}; }
  static QGammaElement one(const ParamsRef& params) { return {Rational(1), Rational(0), params}; }
  static QGammaElement integer(std::int64_t value, const ParamsRef& params) {
    return {Rational(value), Rational(0), params};
  }
  static QGammaElement gamma(const ParamsRef& params) { return {Rational(0), Rational(1), params}; }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const LSParams& params() const { return *params_; }
  const ParamsRef& params_ref() const { return params_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  QGammaElement& operator+=(const QGammaElement& o) {
    check_same(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  QGammaElement& operator-=(const QGammaElement& o) {
    check_same(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  QGammaElement& operator*=(const Rational& k) {
    p_ *= k;
    q_ *= k;
    return *this;
  }

  friend QGammaElement operator+(QGammaElement a, const QGammaElement& b) { return a += b; }
  friend QGammaElement operator-(QGammaElement a, const QGammaElement& b) { return a -= b; }
  friend QGammaElement operator*(QGammaElement a, const Rational& k) { return a *= k; }
  friend QGammaElement operator*(const Rational& k, QGammaElement a) { return a *= k; }

  /// Product in Q(gamma), reduced with gamma^2 = (1 - L*gamma) / S.
  friend QGammaElement operator*(const QGammaElement& a, const QGammaElement& b) {
    a.check_same(b);
    const LSParams& prm = *a.params_;
    if (a.q_.is_zero() && b.q_.is_zero()) return {a.p_ * b.p_, Rational(0), a.params_};
    const Rational qq = a.q_ * b.q_;
    const Rational s(prm.S);
    return {a.p_ * b.p_ + qq / s, a.p_ * b.q_ + a.q_ * b.p_ - qq * Rational(prm.L) / s, a.params_};
  }

  /// this * gamma.
  QGammaElement times_gamma() const {
    const LSParams& prm = *params_;
    if (prm.gamma_is_rational()) return {p_ * *prm.gamma_rational, Rational(0), params_};
    const Rational s(prm.S);
    return {q_ / s, p_ - q_ * Rational(prm.L) / s, params_};
  }

  HighFloat to_high() const { return p_.to_high() + q_.to_high() * params_->gamma_high; }

  /// Rounds the exact value to double through a ~330-bit intermediate, so the
  /// cancellation in p + q*gamma does not leak into the result.
  double to_double() const { return static_cast<double>(to_high()); }

  /// Sign of the real number p + q*gamma, decided exactly.
  int sign() const {
    if (q_.is_zero()) return p_.sign();
    if (p_.is_zero() || p_.sign() == q_.sign()) return q_.sign();
    // Opposite signs: compare gamma against the root r = -p/q > 0 of the
    // linear form. gamma is the unique positive root of f(x) = S x^2 + L x - 1
    // and f increases on x > 0, so gamma > r iff f(r) < 0. f(r) != 0 because
    // gamma is irrational whenever q is non-zero.
    const LSParams& prm = *params_;
    const Rational r = -p_ / q_;
    const Rational f = Rational(prm.S) * r * r + Rational(prm.L) * r - Rational(1);
    const int gamma_minus_r = f.sign() < 0 ? 1 : -1;
    return q_.sign() * gamma_minus_r;
  }

  friend bool operator==(const QGammaElement& a, const QGammaElement& b) {
    a.check_same(b);
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

  friend std::strong_ordering operator<=>(const QGammaElement& a, const QGammaElement& b) {
    a.check_same(b);
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q + r/s*g", e.g. "-3/1 + 5/1*g". A negative gamma coefficient keeps its
  /// sign on the numerator ("1/1 + -1/1*g").
  std::string to_string() const { return p_.to_string() + " + " + q_.to_string() + "*g"; }

  /// Same as to_string() without blanks ("0/1+0/1*g"), for CSV cells.
  std::string to_compact_string() const { return p_.to_string() + "+" + q_.to_string() + "*g"; }

  /// Inverse of to_string() and to_compact_string(). Also accepts "p/q - r/s*g"
  /// and a bare rational "p/q".
  static QGammaElement parse(std::string_view text, const ParamsRef& params) {
    static const std::regex pattern(
        R"(^\s*([+-]?\d+(?:/\d+)?)\s*(?:([+-])\s*([+-]?\d+(?:/\d+)?)\s*\*\s*g)?\s*$)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, pattern))
      throw std::invalid_argument("malformed Q(gamma) element: " + std::string(text));
    Rational p = Rational::parse(std::string_view(&*m[1].first, static_cast<std::size_t>(m[1].length())));
    Rational q(0);
    if (m[3].matched) {
      q = Rational::parse(std::string_view(&*m[3].first, static_cast<std::size_t>(m[3].length())));
      if (*m[2].first == '-') q = -q;
    }
    return {std::move(p), std::move(q), params};
  }

 private:
  void normalize() {
    if (params_->gamma_is_rational() && !q_.is_zero()) {
      p_ += q_ * *params_->gamma_rational;
      q_ = Rational(0);
    }
  }

  void check_same(const QGammaElement& o) const {
    if (params_ != o.params_ && !(params_ && o.params_ && *params_ == *o.params_))
      throw std::invalid_argument("Q(gamma) elements over different (L, S)");
  }

  Rational p_;
  Rational q_;
  ParamsRef params_;
};

struct GammaRoot {
  QGammaElement exact;
  double value = 0.0;
};

/// gamma as an exact element (the generator 0 + 1*g, or a folded rational)
/// together with its double value.
inline GammaRoot solve_gamma(const ParamsRef& params) {
  return {QGammaElement::gamma(params), params->gamma_float};
}

/// gamma^k by repeated reduction; gamma^0 = 1.
inline QGammaElement gamma_power(const ParamsRef& params, int k) {
  if (k < 0) throw parameter_error("gamma_power: negative exponent");
  QGammaElement x = QGammaElement::one(params);
  for (int i = 0; i < k; ++i) x = x.times_gamma();
  return x;
}

}  // namespace lsseq
