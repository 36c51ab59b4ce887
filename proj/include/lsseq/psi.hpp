#pragma once

#include "lsseq/digits.hpp"
#include "lsseq/scalar.hpp"

#include <span>
#include <stdexcept>
#include <string>

namespace lsseq {

/// A psi map was applied outside its domain, i.e. the composition uses a
/// forbidden digit pair.
class forbidden_composition : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The contraction psi_i: long branch (i < L) gamma*x + i*gamma on [0, 1),
/// short branch gamma*x + L*gamma + (i-L)*gamma^2 on [0, gamma).
template <PointScalar T>
T psi(int i, const T& x, GammaPowers<T>& powers) {
  using Ops = ScalarOps<T>;
  const LSParams& prm = *powers.params();
  if (i < 0 || i >= prm.base()) throw std::out_of_range("psi: index outside [0, L+S)");
  const T zero = Ops::integer(0, powers.params());
  const T limit = i < prm.L ? Ops::integer(1, powers.params()) : powers[1];
  if (Ops::less(x, zero) || !Ops::less(x, limit))
    throw forbidden_composition("psi_" + std::to_string(i) + ": argument outside its domain");
  T image = x * powers[1];
  if (i < prm.L) return image + Ops::scale(powers[1], i);
  image = image + Ops::scale(powers[1], prm.L);
  return image + Ops::scale(powers[2], i - prm.L);
}

inline QGammaElement psi(int i, const QGammaElement& x) {
  GammaPowers<QGammaElement> powers(x.params_ref());
  return psi(i, x, powers);
}

/// True when no consecutive pair (i_h, i_{h+1}) of the tuple lies in E_{L,S}.
inline bool is_allowed_tuple(std::span<const int> indices, const LSParams& params) {
  const ForbiddenSet forbidden(params);
  for (std::size_t h = 0; h + 1 < indices.size(); ++h)
    if (forbidden.contains(indices[h], indices[h + 1])) return false;
  return true;
}

namespace detail {

inline void require_allowed(std::span<const int> indices, const LSParams& params) {
  for (int i : indices)
    if (i < 0 || i >= params.base()) throw std::out_of_range("psi index outside [0, L+S)");
  if (!is_allowed_tuple(indices, params))
    throw forbidden_composition("tuple contains a forbidden (short, non-zero) pair");
}

}  // namespace detail

/// psi_{i_1} o psi_{i_2} o ... o psi_{i_n} (0), applying the maps one by one
/// from the innermost i_n outwards.
template <PointScalar T>
T compose_psi_iterated(std::span<const int> indices, GammaPowers<T>& powers) {
  detail::require_allowed(indices, *powers.params());
  T x = ScalarOps<T>::integer(0, powers.params());
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) x = psi(*it, x, powers);
  return x;
}

/// The same composition from the closed form sum_k b_k gamma^k with b_k = i_k
/// for long indices and L + (i_k - L) gamma for short ones.
template <PointScalar T>
T compose_psi_closed_form(std::span<const int> indices, GammaPowers<T>& powers) {
  detail::require_allowed(indices, *powers.params());
  T x = ScalarOps<T>::integer(0, powers.params());
  for (std::size_t k = indices.size(); k-- > 0;) x = x + powers.digit_term(indices[k], k);
  return x;
}

/// Exact composition, evaluated both ways; disagreement is a logic error.
inline QGammaElement compose_psi(std::span<const int> indices, const ParamsRef& params) {
  GammaPowers<QGammaElement> powers(params);
  QGammaElement iterated = compose_psi_iterated(indices, powers);
  if (iterated != compose_psi_closed_form(indices, powers))
    throw std::logic_error("psi composition: iterated and closed form disagree");
  return iterated;
}

}  // namespace lsseq
