#pragma once

#include "lsseq/qgamma.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsseq {

/// Little-endian base-b digits of a non-negative integer: digits()[k] is the
/// coefficient of b^k. Canonical form has no leading (high) zeros, except that
/// zero itself is the single digit 0.
class DigitString {
 public:
  DigitString() = default;

  DigitString(std::vector<int> digits, int base) : digits_(std::move(digits)), base_(base) {
    if (base_ < 2) throw parameter_error("digit base must be at least 2");
    for (int d : digits_)
      if (d < 0 || d >= base_) throw std::out_of_range("digit outside [0, base)");
    while (digits_.size() > 1 && digits_.back() == 0) digits_.pop_back();
    if (digits_.empty()) digits_.push_back(0);
  }

  const std::vector<int>& digits() const { return digits_; }
  int base() const { return base_; }
  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t k) const { return digits_[k]; }

  std::uint64_t value() const {
    std::uint64_t v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
      if (__builtin_mul_overflow(v, static_cast<std::uint64_t>(base_), &v) ||
          __builtin_add_overflow(v, static_cast<std::uint64_t>(*it), &v))
        throw std::overflow_error("digit string exceeds 64-bit range");
    }
    return v;
  }

  /// Most significant digit first, as numbers are usually written ("101").
  /// Bases above 36 separate digits with '.'.
  std::string to_string() const {
    std::string out;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
      if (base_ <= 36) {
        out.push_back(static_cast<char>(*it < 10 ? '0' + *it : 'a' + (*it - 10)));
      } else {
        if (!out.empty()) out.push_back('.');
        out += std::to_string(*it);
      }
    }
    return out;
  }

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::vector<int> digits_{0};
  int base_ = 2;
};

inline DigitString to_digits(std::uint64_t n, int base) {
  if (base < 2) throw parameter_error("digit base must be at least 2");
  std::vector<int> d;
  do {
    d.push_back(static_cast<int>(n % static_cast<std::uint64_t>(base)));
    n /= static_cast<std::uint64_t>(base);
  } while (n != 0);
  return {std::move(d), base};
}

/// E_{L,S} = {L..L+S-1} x {1..L+S-1}: a digit pair (a_k, a_{k+1}) with a short
/// digit a_k followed by a non-zero digit one position higher.
struct ForbiddenSet {
  int L = 2;
  int S = 0;

  ForbiddenSet() = default;
  explicit ForbiddenSet(const LSParams& params) : L(params.L), S(params.S) {}

  bool contains(int lower, int higher) const {
    return lower >= L && lower <= L + S - 1 && higher >= 1 && higher <= L + S - 1;
  }
  bool empty() const { return S == 0; }
};

inline bool is_admissible(const DigitString& d, const LSParams& params) {
  const ForbiddenSet forbidden(params);
  if (forbidden.empty()) return true;
  for (std::size_t k = 0; k + 1 < d.size(); ++k)
    if (forbidden.contains(d[k], d[k + 1])) return false;
  return true;
}

/// Walks {0} u N_{L,S} in increasing order by direct digit succession.
///
/// Successor rule: find the lowest position k whose digit can be raised by one
/// without creating a forbidden pair with the digit above it, raise it, and
/// zero everything below. Raising a_k to a short value is only allowed when
/// a_{k+1} == 0; zeros below never form a forbidden pair. Each step touches
/// O(1) digits amortized.
class AdmissibleCounter {
 public:
  explicit AdmissibleCounter(const LSParams& params)
      : L_(params.L), base_(params.base()), digits_{0}, place_{1} {}

  const std::vector<int>& digits() const { return digits_; }
  DigitString current() const { return {digits_, base_}; }
  std::uint64_t value() const { return value_; }

  /// Returns the current admissible integer and moves to the next one.
  std::uint64_t next() {
    const std::uint64_t v = value_;
    advance();
    return v;
  }

  /// Moves to the successor. Returns the position that was raised; every
  /// position below it is now zero.
  std::size_t advance() {
    std::size_t k = 0;
    for (;; ++k) {
      if (k == digits_.size()) {
        digits_.push_back(0);
        push_place();
      }
      const int raised = digits_[k] + 1;
      const int above = k + 1 < digits_.size() ? digits_[k + 1] : 0;
      if (raised < base_ && (raised < L_ || above == 0)) {
        std::uint64_t removed = 0;
        for (std::size_t j = 0; j < k; ++j) {
          removed += static_cast<std::uint64_t>(digits_[j]) * place_[j];
          digits_[j] = 0;
        }
        value_ -= removed;
        if (__builtin_add_overflow(value_, place_[k], &value_))
          throw std::overflow_error("admissible integer exceeds 64-bit range");
        digits_[k] = raised;
        return k;
      }
    }
  }

 private:
  void push_place() {
    std::uint64_t next_place = 0;
    if (__builtin_mul_overflow(place_.back(), static_cast<std::uint64_t>(base_), &next_place))
      throw std::overflow_error("admissible integer exceeds 64-bit range");
    place_.push_back(next_place);
  }

  int L_;
  int base_;
  std::vector<int> digits_;
  std::vector<std::uint64_t> place_;
  std::uint64_t value_ = 0;
};

}  // namespace lsseq
