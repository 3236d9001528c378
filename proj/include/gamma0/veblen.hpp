#pragma once

#include <utility>

#include "gamma0/ordinal.hpp"

namespace gamma0 {

/// phi_a(b), the binary Veblen function over the base phi_0 = omega-power.
/// Canonicalization: when b is itself a single summand of level above a it is
/// a fixpoint of phi_a and is returned unchanged; phi_0(0) collapses to 1.
inline Ordinal veblen(const Ordinal& a, const Ordinal& b) {
  if (b.is_principal_term() &&
      compare(b.terms().front().level, a) == std::strong_ordering::greater)
    return b;
  if (a.is_zero() && b.is_zero()) return Ordinal::nat(1);
  return Ordinal::from_normal_form({VebTerm{a, b}}, 0);
}

/// e_a(b), the Veblen progression of the modified exponential e.
/// Relates to phi by: e_a(0) = 0, e_0(b) = phi_0(b) for b >= 1, and
/// e_a(b) = phi_a(-1 + b) for a, b >= 1.
inline Ordinal e_level(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal();
  if (a.is_zero()) return omega_pow(b);
  return veblen(a, left_subtract(Ordinal::nat(1), b));
}

/// Selects a normal function from the two progressions this library exposes:
/// levels of the omega-power map phi and levels of the modified exponential e.
/// phi_level(0) is phi itself, e_level_base(0) is e itself.
class NormalFnId {
 public:
  static NormalFnId phi() { return NormalFnId(false, Ordinal()); }
  static NormalFnId e() { return NormalFnId(true, Ordinal()); }
  static NormalFnId phi_level(Ordinal a) { return NormalFnId(false, std::move(a)); }
  static NormalFnId e_level_base(Ordinal a) { return NormalFnId(true, std::move(a)); }

  bool e_based() const { return e_based_; }
  const Ordinal& level() const { return level_; }

  friend bool operator==(const NormalFnId& f, const NormalFnId& g) {
    return f.e_based_ == g.e_based_ && f.level_ == g.level_;
  }

 private:
  NormalFnId(bool e_based, Ordinal level) : e_based_(e_based), level_(std::move(level)) {}

  bool e_based_;
  Ordinal level_;
};

/// Applies the selected function once.
inline Ordinal apply_normal_fn(const NormalFnId& f, const Ordinal& x) {
  return f.e_based() ? e_level(f.level(), x) : veblen(f.level(), x);
}

inline bool is_fixpoint(const NormalFnId& f, const Ordinal& a) {
  return apply_normal_fn(f, a) == a;
}

namespace detail {

/// Least fixpoint of phi_a that is >= xi. The fixpoints of phi_a are exactly
/// the single-summand values of level above a, enumerated by phi_{a+1}; the
/// recursion peels xi down to the argument that pins the next one.
inline Ordinal least_phi_fixpoint_geq(const Ordinal& a, const Ordinal& xi) {
  const Ordinal one = Ordinal::nat(1);
  Ordinal bound = xi;
  for (;;) {
    if (bound.terms().empty()) return veblen(add(a, one), Ordinal());
    const VebTerm& lead = bound.terms().front();
    if (compare(lead.level, a) == std::strong_ordering::greater) {
      if (bound.is_principal_term()) return bound;
      // The leading summand is itself a fixpoint; the rest of the sum pushes
      // us to the next one, i.e. past lead in the phi_{a+1} enumeration.
      const Ordinal succ_level = add(a, one);
      if (compare(lead.level, succ_level) == std::strong_ordering::equal)
        return veblen(succ_level, add(lead.arg, one));
      return veblen(succ_level, add(lead.value(), one));
    }
    // Any fixpoint >= bound must exceed lead.arg; recurse on that threshold.
    bound = add(lead.arg, one);
  }
}

}  // namespace detail

/// The least zeta with xi <= zeta = f(zeta), located structurally (normal
/// forms encode the omega-limits, so no iteration takes place).
inline Ordinal least_fixpoint_geq(const NormalFnId& f, const Ordinal& xi) {
  // e-progressions fix 0 in addition to the fixpoints of the phi-progression
  // at the same level; above 0 the two classes coincide.
  if (f.e_based() && xi.is_zero()) return Ordinal();
  return detail::least_phi_fixpoint_geq(f.level(), xi);
}

/// f_a(b) computed through the progression recursion: f_{a'+1}(0) is the least
/// fixpoint of f_{a'}, and f_{a'+1}(b+1) the least fixpoint of f_{a'} above
/// f_{a'+1}(b). Only successor levels and finite arguments are finitely
/// computable this way; everything else is rejected. Deliberately a second
/// code path, used as the internal oracle for veblen()/e_level().
inline Ordinal veblen_progression_step(const NormalFnId& f, const Ordinal& a,
                                       const Ordinal& b) {
  if (a.trailing_nat() == 0)
    throw unsupported_error(
        "veblen_progression_step: level must be a successor ordinal");
  if (!b.is_nat())
    throw unsupported_error(
        "veblen_progression_step: argument must be finite for the recursion");
  const Ordinal prev_level =
      add(f.level(), Ordinal::from_normal_form(a.terms(), a.trailing_nat() - 1));
  const NormalFnId base =
      f.e_based() ? NormalFnId::e_level_base(prev_level) : NormalFnId::phi_level(prev_level);
  Ordinal value = least_fixpoint_geq(base, Ordinal());
  for (std::uint64_t i = 0; i < b.trailing_nat(); ++i)
    value = least_fixpoint_geq(base, add(value, Ordinal::nat(1)));
  return value;
}

}  // namespace gamma0
