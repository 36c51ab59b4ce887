#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lsseq {

using BigInt = boost::multiprecision::cpp_int;

// ~330 bits. Used to round exact values to double and to decide most
// comparisons without touching the minimal polynomial.
using HighFloat = boost::multiprecision::cpp_bin_float_100;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always normalized: denominator > 0 and gcd(|num|, den) == 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = den < 0 ? Impl(-num, -den) : Impl(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) { a.value_ = -a.value_; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  HighFloat to_high() const {
    return HighFloat(numerator()) / HighFloat(denominator());
  }
  double to_double() const { return static_cast<double>(to_high()); }

  /// "p/q", denominator always written (e.g. "3/1").
  std::string to_string() const {
    return numerator().str() + "/" + denominator().str();
  }

  /// Accepts "p/q" or a bare integer "p"; surrounding blanks are ignored.
  static Rational parse(std::string_view text);

 private:
  using Impl = boost::multiprecision::cpp_rational;
  Impl value_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline BigInt parse_integer(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("expected an integer");
  BigInt value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  text = detail::trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
  const BigInt den = detail::parse_integer(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  return Rational(detail::parse_integer(text.substr(0, slash)), den);
}

}  // namespace lsseq
