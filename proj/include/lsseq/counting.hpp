#pragma once

#include "lsseq/qgamma.hpp"

#include <cmath>
#include <limits>

namespace lsseq {

/// Interval counts of the depth-n LS-partition.
struct CountVector {
  int n = 0;
  BigInt t = 1;  // all intervals
  BigInt l = 1;  // long intervals
  BigInt s = 0;  // short intervals
  BigInt d = 0;  // length-n digit tuples containing a forbidden pair: (L+S)^n - t
};

/// t_n, l_n, s_n by l_n = L l_{n-1} + s_{n-1}, s_n = S l_{n-1}; d_n = (L+S)^n - t_n.
inline CountVector counts(int n, const LSParams& params) {
  if (n < 0) throw parameter_error("counts: negative depth");
  CountVector c;
  BigInt power = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt l = params.L * c.l + c.s;
    BigInt s = params.S * c.l;
    c.l = std::move(l);
    c.s = std::move(s);
    power *= params.base();
  }
  c.n = n;
  c.t = c.l + c.s;
  c.d = power - c.t;
  return c;
}

/// Binet-type closed form of t_n, in double. Cross-check only.
inline double counts_closed_form(int n, const LSParams& params) {
  if (n < 0) throw parameter_error("counts_closed_form: negative depth");
  const double g = params.gamma_float;
  const double S = params.S;
  const double denom = 1.0 + S * g * g;
  return (1.0 + S * g) / denom * std::pow(1.0 / g, n) -
         (S * g - S * g * g) / denom * std::pow(-S * g, n);
}

/// t_n as a machine size, for sizing containers.
inline std::size_t interval_count(int n, const LSParams& params) {
  const BigInt t = counts(n, params).t;
  if (t > BigInt(std::numeric_limits<std::size_t>::max() / 4))
    throw parameter_error("t_n too large for this machine");
  return static_cast<std::size_t>(t);
}

}  // namespace lsseq
