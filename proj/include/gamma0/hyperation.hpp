#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gamma0/ordinal.hpp"
#include "gamma0/veblen.hpp"

namespace gamma0 {

/// e^xi(alpha): the xi-th hyperexponential. With xi = omega^{x_1}+...+omega^{x_n}
/// in Cantor normal form, e^xi = e_{x_1} o ... o e_{x_n}; in particular
/// e^0 = id and e^{omega^a} = e_a.
inline Ordinal hyper_e(const Ordinal& xi, const Ordinal& alpha) {
  const auto exps = cnf_exponents(xi);
  Ordinal v = alpha;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) v = e_level(*it, v);
  return v;
}

/// phi^xi(alpha): the same composition over the Veblen progression of the
/// plain omega-power.
inline Ordinal hyper_phi(const Ordinal& xi, const Ordinal& alpha) {
  const auto exps = cnf_exponents(xi);
  Ordinal v = alpha;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) v = veblen(*it, v);
  return v;
}

/// A weak hyperexponential normal form:
///
///   sum_i e^{x_i}(b_i) + n
///
/// with non-increasing summand values and b_i < e^{x_i}(b_i) for each i.
/// In unique mode every exponent x_i is of the form omega^d, which makes the
/// form unique; merged mode may fuse nested exponents (e^1(e^1(1)) = e^2(1))
/// for display.
struct WhnfExpr {
  struct Summand;

  std::vector<Summand> summands;
  std::uint64_t tail_nat = 0;
};

struct WhnfExpr::Summand {
  Ordinal exponent;
  WhnfExpr argument;
};

inline bool operator==(const WhnfExpr& x, const WhnfExpr& y);

inline bool operator==(const WhnfExpr::Summand& s, const WhnfExpr::Summand& t) {
  return s.exponent == t.exponent && s.argument == t.argument;
}

inline bool operator==(const WhnfExpr& x, const WhnfExpr& y) {
  return x.tail_nat == y.tail_nat && x.summands == y.summands;
}

/// Rewrites the Veblen normal form into hyperexponential terms:
/// phi_a(b) becomes e^{omega^a}(1 + b) for a > 0, phi_0(b) becomes e^1(b)
/// for b > 0, and the finite part is kept as the tail.
inline WhnfExpr whnf(const Ordinal& a, bool unique_exponents = true) {
  WhnfExpr out;
  out.tail_nat = a.trailing_nat();
  out.summands.reserve(a.terms().size());
  for (const VebTerm& t : a.terms()) {
    WhnfExpr::Summand s;
    if (t.level.is_zero()) {
      s.exponent = Ordinal::nat(1);
      s.argument = whnf(t.arg, unique_exponents);
    } else {
      s.exponent = omega_pow(t.level);
      s.argument = whnf(add(Ordinal::nat(1), t.arg), unique_exponents);
    }
    if (!unique_exponents) {
      // e^x(e^y(b)) = e^{x+y}(b) by right additivity.
      while (s.argument.summands.size() == 1 && s.argument.tail_nat == 0) {
        WhnfExpr::Summand inner = std::move(s.argument.summands.front());
        s.exponent = add(s.exponent, inner.exponent);
        s.argument = std::move(inner.argument);
      }
    }
    out.summands.push_back(std::move(s));
  }
  return out;
}

/// The ordinal denoted by a weak hyperexponential normal form. Rejects trees
/// that violate the form's invariants (increasing summands, or an argument
/// that the hyperexponential fixes, which would make the summand redundant).
inline Ordinal eval_whnf(const WhnfExpr& x) {
  Ordinal acc;
  Ordinal prev_value;
  bool have_prev = false;
  for (const WhnfExpr::Summand& s : x.summands) {
    const Ordinal arg = eval_whnf(s.argument);
    const Ordinal value = hyper_e(s.exponent, arg);
    if (!s.exponent.is_zero() && value == arg)
      throw domain_error("eval_whnf: argument is a fixpoint of its own summand");
    if (s.exponent.is_zero())
      throw domain_error("eval_whnf: summand exponent must be positive");
    if (have_prev && compare(prev_value, value) == std::strong_ordering::less)
      throw domain_error("eval_whnf: summand values must be non-increasing");
    acc = add(acc, value);
    prev_value = value;
    have_prev = true;
  }
  return add(acc, Ordinal::nat(x.tail_nat));
}

}  // namespace gamma0
