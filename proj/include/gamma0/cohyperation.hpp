#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gamma0/ordinal.hpp"
#include "gamma0/veblen.hpp"

namespace gamma0 {

/// The two initial functions this library cohyperates. Both are left
/// adjoints of the modified exponential e.
enum class InitialFnId {
  EndLog,   // last CNF exponent
  LeftLog,  // first CNF exponent
};

inline Ordinal base_apply(InitialFnId g, const Ordinal& a) {
  return g == InitialFnId::EndLog ? end_log(a) : left_log(a);
}

/// One reduction step: the stage g^{omega^level} was applied.
struct ReduceStep {
  Ordinal level;
  Ordinal value_after;
};

/// Result of minimizing g^eta(alpha) over eta below omega^rho.
struct ReduceTrace {
  Ordinal eta_witness;  // achieves the minimum; witness only for rho > 1
  Ordinal value;        // min over eta < omega^rho of g^eta(alpha)
  std::vector<ReduceStep> steps;
};

inline constexpr std::uint64_t default_step_budget = 1'000'000;

/// The preimage step of the cohyperation recursion. For alpha = 0 or a common
/// fixpoint of every g^eta with eta < omega^rho (syntactically: a single
/// summand of level >= rho) the value of g^{omega^rho}(alpha) is pinned by
/// adjointness to e^{omega^rho} = e_rho and does not depend on g:
/// phi_rho(b) = e_rho(1 + b) inverts to 1 + b, and higher-level summands are
/// fixpoints of e_rho, hence their own preimage.
inline Ordinal fixpoint_invert(InitialFnId /*g*/, const Ordinal& rho,
                               const Ordinal& alpha) {
  if (rho.is_zero()) throw domain_error("fixpoint_invert: level must be positive");
  if (alpha.is_zero()) return alpha;
  if (!alpha.is_principal_term())
    throw domain_error("fixpoint_invert: value is not a common fixpoint at this level");
  const VebTerm& lead = alpha.terms().front();
  const auto c = compare(lead.level, rho);
  if (c == std::strong_ordering::less)
    throw domain_error("fixpoint_invert: value is not a common fixpoint at this level");
  if (c == std::strong_ordering::equal) return add(Ordinal::nat(1), lead.arg);
  return alpha;
}

namespace detail {

inline void spend_step(std::uint64_t& budget) {
  if (budget == 0)
    throw internal_error("cohyperation: step budget exhausted (likely a bug)");
  --budget;
}

inline ReduceTrace reduce_impl(InitialFnId g, const Ordinal& rho,
                               const Ordinal& alpha, std::uint64_t& budget) {
  if (rho.is_zero()) throw domain_error("reduce: level must be positive");
  ReduceTrace t;
  t.value = alpha;
  for (;;) {
    spend_step(budget);
    if (t.value.is_zero()) break;
    Ordinal jump;  // the stage applied is g^{omega^jump}
    Ordinal next;
    if (t.value.is_principal_term()) {
      const VebTerm& lead = t.value.terms().front();
      if (compare(lead.level, rho) != std::strong_ordering::less)
        break;  // common fixpoint of every stage below omega^rho
      jump = lead.level;
      // g^{omega^jump} acting on phi_jump(b): the base map sends omega^b to b,
      // higher stages invert e_jump, both yielding the argument side.
      next = lead.level.is_zero() ? base_apply(g, t.value)
                                  : add(Ordinal::nat(1), lead.arg);
    } else {
      // Composite values (several summands or a finite tail) always descend
      // strictly under a single application of the base map.
      next = base_apply(g, t.value);
    }
    t.value = std::move(next);
    t.eta_witness = add(t.eta_witness, omega_pow(jump));
    t.steps.push_back(ReduceStep{std::move(jump), t.value});
  }
  return t;
}

/// g^{omega^rho_exp}, one Cantor-normal-form stage of the cohyperation.
inline Ordinal apply_stage(InitialFnId g, const Ordinal& rho_exp,
                           const Ordinal& alpha, std::uint64_t& budget) {
  if (rho_exp.is_zero()) return base_apply(g, alpha);
  const ReduceTrace t = reduce_impl(g, rho_exp, alpha, budget);
  if (t.value.is_zero()) return Ordinal();
  return fixpoint_invert(g, rho_exp, t.value);
}

}  // namespace detail

/// Minimizes g^eta(alpha) over eta < omega^rho by repeatedly applying the
/// stage matching the value's own structure (the base map on composites, the
/// level-a stage on a single summand phi_a(b)), each step strictly
/// decreasing. Requires rho > 0. For rho = 1 the witness is the least eta
/// attaining the minimum; for larger rho it is one witness among possibly
/// several.
inline ReduceTrace reduce(InitialFnId g, const Ordinal& rho, const Ordinal& alpha,
                          std::uint64_t budget = default_step_budget) {
  return detail::reduce_impl(g, rho, alpha, budget);
}

/// g^xi(alpha) for g one of the two hyperlogarithm bases. The exponent is
/// split into its Cantor normal form and the stages are applied largest
/// first: g^{omega^{x_1} + rest} = g^{rest} o g^{omega^{x_1}}.
inline Ordinal hyper_log(InitialFnId g, const Ordinal& xi, const Ordinal& alpha,
                         std::uint64_t budget = default_step_budget) {
  Ordinal v = alpha;
  for (const Ordinal& e : cnf_exponents(xi)) {
    if (v.is_zero()) break;  // every stage fixes 0
    v = detail::apply_stage(g, e, v, budget);
  }
  return v;
}

}  // namespace gamma0
