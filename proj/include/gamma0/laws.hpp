#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamma0/cohyperation.hpp"
#include "gamma0/exact_seq.hpp"
#include "gamma0/hyperation.hpp"
#include "gamma0/notation.hpp"
#include "gamma0/ordinal.hpp"
#include "gamma0/sampling.hpp"
#include "gamma0/veblen.hpp"

namespace gamma0 {

struct LawSuiteConfig {
  std::uint64_t samples = 1000;
  int max_depth = 4;                // at most 5
  std::uint64_t seed = 1;
  std::vector<std::string> suites;  // empty selects every suite
};

struct LawResult {
  std::string suite;
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;  // empty when all samples passed
  std::uint64_t info_count = 0;      // informational tallies (never failures)
  std::string info;
};

struct LawReport {
  std::vector<LawResult> laws;

  bool all_pass() const {
    for (const LawResult& r : laws)
      if (r.failures > 0) return false;
    return true;
  }

  std::uint64_t total_failures() const {
    std::uint64_t n = 0;
    for (const LawResult& r : laws) n += r.failures;
    return n;
  }
};

inline const std::vector<std::string>& law_suite_names() {
  static const std::vector<std::string> names = {
      "order",       "additivity",           "adjointness",
      "veblen-correspondence", "cohyperation-clauses", "logarithm-laws"};
  return names;
}

namespace lawdetail {

// Sampling outcome of one law at one sample: pass, or a counterexample, or an
// informational note (for record-only checks such as the l/L differential).
struct Outcome {
  std::optional<std::string> failure;
  std::optional<std::string> note;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string s) { return {std::move(s), std::nullopt}; }
  static Outcome record(std::string s) { return {std::nullopt, std::move(s)}; }
};

using LawFn = std::function<Outcome(SampleRng&, int)>;

struct LawDef {
  const char* suite;
  const char* name;
  LawFn fn;
};

inline std::string show(const Ordinal& a) { return print_sugar(a); }

inline bool lt(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == std::strong_ordering::less;
}
inline bool le(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != std::strong_ordering::greater;
}

inline Outcome expect_eq(const Ordinal& got, const Ordinal& want, std::string context) {
  if (got == want) return Outcome::pass();
  return Outcome::fail(std::move(context) + "; got=" + show(got) + "; want=" + show(want));
}

inline Ordinal nonzero(SampleRng& rng, int depth) {
  const Ordinal a = random_ordinal(rng, depth);
  return a.is_zero() ? Ordinal::nat(1 + rng.next(5)) : a;
}

/// A zeta with xi + zeta = zeta: its leading exponent strictly dominates xi.
inline Ordinal absorbing_partner(SampleRng& rng, int depth, const Ordinal& xi) {
  const Ordinal lead = omega_pow(add(left_log(xi), Ordinal::nat(1)));
  return add(lead, random_ordinal(rng, depth > 1 ? depth - 1 : 1));
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline const char* fn_name(InitialFnId g) {
  return g == InitialFnId::EndLog ? "l" : "L";
}

inline std::vector<LawDef> build_registry() {
  std::vector<LawDef> laws;
  const auto def = [&laws](const char* suite, const char* name, LawFn fn) {
    laws.push_back(LawDef{suite, name, std::move(fn)});
  };
  constexpr InitialFnId both_logs[2] = {InitialFnId::EndLog, InitialFnId::LeftLog};

  // ---- order ---------------------------------------------------------------

  def("order", "compare-antisymmetric-trichotomy", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = random_ordinal(rng, depth);
    const auto ab = compare(a, b);
    const auto ba = compare(b, a);
    const bool flipped = (ab == std::strong_ordering::less && ba == std::strong_ordering::greater) ||
                         (ab == std::strong_ordering::greater && ba == std::strong_ordering::less) ||
                         (ab == std::strong_ordering::equal && ba == std::strong_ordering::equal);
    if (!flipped) return Outcome::fail("compare not antisymmetric: a=" + show(a) + "; b=" + show(b));
    if ((ab == std::strong_ordering::equal) != (a == b))
      return Outcome::fail("equal ordinals must be structurally identical: a=" + show(a) +
                           "; b=" + show(b));
    return Outcome::pass();
  });

  def("order", "compare-transitive", [](SampleRng& rng, int depth) {
    const Ordinal v[3] = {random_ordinal(rng, depth), random_ordinal(rng, depth),
                          random_ordinal(rng, depth)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (le(v[i], v[j]) && le(v[j], v[k]) && !le(v[i], v[k]))
            return Outcome::fail("transitivity broken on " + show(v[i]) + ", " + show(v[j]) +
                                 ", " + show(v[k]));
    return Outcome::pass();
  });

  def("order", "add-monotone", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = random_ordinal(rng, depth);
    const Ordinal c = random_ordinal(rng, depth);
    if (!(add(a, Ordinal()) == a))
      return Outcome::fail("a + 0 != a for a=" + show(a));
    if (!le(b, add(a, b)))
      return Outcome::fail("a + b < b: a=" + show(a) + "; b=" + show(b));
    const Ordinal bigger = add(b, add(c, Ordinal::nat(1)));
    if (!lt(add(a, b), add(a, bigger)))
      return Outcome::fail("right addition not strictly monotone: a=" + show(a) +
                           "; b=" + show(b) + "; b'=" + show(bigger));
    if (le(a, c) && !le(add(a, b), add(c, b)))
      return Outcome::fail("left addition not weakly monotone: a=" + show(a) +
                           "; c=" + show(c) + "; b=" + show(b));
    return Outcome::pass();
  });

  def("order", "add-associative", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = random_ordinal(rng, depth);
    const Ordinal c = random_ordinal(rng, depth);
    return expect_eq(add(add(a, b), c), add(a, add(b, c)),
                     "(a+b)+c vs a+(b+c): a=" + show(a) + "; b=" + show(b) + "; c=" + show(c));
  });

  def("order", "left-subtract-witness", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = random_ordinal(rng, depth);
    const Ordinal& lo = le(a, b) ? a : b;
    const Ordinal& hi = le(a, b) ? b : a;
    const Ordinal diff = left_subtract(lo, hi);
    if (!(add(lo, diff) == hi))
      return Outcome::fail("lo + (-lo + hi) != hi: lo=" + show(lo) + "; hi=" + show(hi) +
                           "; diff=" + show(diff));
    if (!left_subtract(lo, lo).is_zero())
      return Outcome::fail("-lo + lo != 0 for lo=" + show(lo));
    try {
      const Ordinal bad = left_subtract(add(hi, Ordinal::nat(1)), hi);
      return Outcome::fail("subtracting hi+1 from hi produced " + show(bad));
    } catch (const domain_error&) {
      return Outcome::pass();
    }
  });

  def("order", "mul-identities", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    if (!(mul(a, Ordinal::nat(1)) == a)) return Outcome::fail("a*1 != a: a=" + show(a));
    if (!(mul(Ordinal::nat(1), a) == a)) return Outcome::fail("1*a != a: a=" + show(a));
    if (!mul(a, Ordinal()).is_zero()) return Outcome::fail("a*0 != 0: a=" + show(a));
    if (!mul(Ordinal(), a).is_zero()) return Outcome::fail("0*a != 0: a=" + show(a));
    return Outcome::pass();
  });

  def("order", "mul-left-distributive", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = random_ordinal(rng, depth);
    const Ordinal c = random_ordinal(rng, depth);
    return expect_eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)),
                     "a*(b+c) vs a*b + a*c: a=" + show(a) + "; b=" + show(b) + "; c=" + show(c));
  });

  def("order", "mul-associative", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = random_ordinal(rng, depth);
    const Ordinal c = random_ordinal(rng, depth);
    return expect_eq(mul(mul(a, b), c), mul(a, mul(b, c)),
                     "(a*b)*c vs a*(b*c): a=" + show(a) + "; b=" + show(b) + "; c=" + show(c));
  });

  def("order", "omega-pow-monotone-inflationary", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = add(a, nonzero(rng, depth));
    if (!lt(omega_pow(a), omega_pow(b)))
      return Outcome::fail("w^a >= w^b for a<b: a=" + show(a) + "; b=" + show(b));
    if (!le(a, omega_pow(a)))
      return Outcome::fail("w^a < a for a=" + show(a));
    return Outcome::pass();
  });

  def("order", "classify-kinds", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    if (classify(Ordinal()) != OrdKind::Zero) return Outcome::fail("classify(0) != Zero");
    if (classify(add(a, Ordinal::nat(1))) != OrdKind::Successor)
      return Outcome::fail("a+1 not a successor: a=" + show(a));
    if (classify(add(a, Ordinal::omega())) != OrdKind::Limit)
      return Outcome::fail("a+w not a limit: a=" + show(a));
    return Outcome::pass();
  });

  def("order", "constructors-canonical", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    if (!is_canonical(a)) return Outcome::fail("non-canonical value built: " + show(a));
    return Outcome::pass();
  });

  // ---- logarithm-laws --------------------------------------------------------

  def("logarithm-laws", "end-log-of-sum", [](SampleRng& rng, int depth) {
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal zeta = nonzero(rng, depth);
    return expect_eq(end_log(add(xi, zeta)), end_log(zeta),
                     "l(xi+zeta) vs l(zeta): xi=" + show(xi) + "; zeta=" + show(zeta));
  });

  def("logarithm-laws", "left-log-of-sum", [](SampleRng& rng, int depth) {
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal zeta = random_ordinal(rng, depth);
    const Ordinal l = left_log(xi);
    const Ordinal r = left_log(zeta);
    return expect_eq(left_log(add(xi, zeta)), le(l, r) ? r : l,
                     "L(xi+zeta) vs max(L xi, L zeta): xi=" + show(xi) + "; zeta=" + show(zeta));
  });

  def("logarithm-laws", "left-log-of-product", [](SampleRng& rng, int depth) {
    const Ordinal xi = nonzero(rng, depth);
    const Ordinal zeta = nonzero(rng, depth);
    return expect_eq(left_log(mul(xi, zeta)), add(left_log(xi), left_log(zeta)),
                     "L(xi*zeta) vs L(xi)+L(zeta): xi=" + show(xi) + "; zeta=" + show(zeta));
  });

  def("logarithm-laws", "end-log-of-product", [](SampleRng& rng, int depth) {
    const Ordinal xi = nonzero(rng, depth);
    const Ordinal zeta = nonzero(rng, depth);
    // l(xi*zeta) = L(xi) + l(zeta) for limit zeta; a successor zeta appends a
    // whole copy of xi, so the last exponent is l(xi) instead.
    const Ordinal want = classify(zeta) == OrdKind::Limit
                             ? add(left_log(xi), end_log(zeta))
                             : end_log(xi);
    return expect_eq(end_log(mul(xi, zeta)), want,
                     "l(xi*zeta): xi=" + show(xi) + "; zeta=" + show(zeta));
  });

  def("logarithm-laws", "left-log-reconstruction", [](SampleRng& rng, int depth) {
    const Ordinal a = nonzero(rng, depth);
    const Ordinal head = omega_pow(left_log(a));
    const Ordinal rest = left_subtract(head, a);
    if (!(add(head, rest) == a))
      return Outcome::fail("w^L(a) + rest != a: a=" + show(a));
    if (!lt(rest, a))
      return Outcome::fail("left-log remainder not below a: a=" + show(a) +
                           "; rest=" + show(rest));
    return Outcome::pass();
  });

  def("logarithm-laws", "end-log-reconstruction", [](SampleRng& rng, int depth) {
    const Ordinal a = nonzero(rng, depth);
    const auto exps = cnf_exponents(a);
    Ordinal head;
    for (std::size_t i = 0; i + 1 < exps.size(); ++i) head = add(head, omega_pow(exps[i]));
    if (!(exps.back() == end_log(a)))
      return Outcome::fail("last CNF exponent disagrees with l: a=" + show(a));
    return expect_eq(add(head, omega_pow(end_log(a))), a,
                     "head + w^l(a) vs a: a=" + show(a));
  });

  def("logarithm-laws", "cnf-reconstruction", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const auto exps = cnf_exponents(a);
    Ordinal rebuilt;
    for (const Ordinal& e : exps) rebuilt = add(rebuilt, omega_pow(e));
    for (std::size_t i = 0; i + 1 < exps.size(); ++i)
      if (lt(exps[i], exps[i + 1]))
        return Outcome::fail("CNF exponents increase: a=" + show(a));
    return expect_eq(rebuilt, a, "sum of w^exponents vs a: a=" + show(a));
  });

  def("logarithm-laws", "e-base-contract", [](SampleRng& rng, int depth) {
    const Ordinal a = nonzero(rng, depth);
    if (!e_base(Ordinal()).is_zero()) return Outcome::fail("e(0) != 0");
    return expect_eq(e_base(a), omega_pow(a), "e(a) vs w^a for a>0: a=" + show(a));
  });

  // ---- additivity ------------------------------------------------------------

  def("additivity", "hyper-e-right-additive", [](SampleRng& rng, int depth) {
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal zeta = random_ordinal(rng, depth);
    const Ordinal a = random_ordinal(rng, depth);
    return expect_eq(hyper_e(add(xi, zeta), a), hyper_e(xi, hyper_e(zeta, a)),
                     "e^(xi+zeta) vs e^xi e^zeta: xi=" + show(xi) + "; zeta=" + show(zeta) +
                         "; a=" + show(a));
  });

  def("additivity", "hyper-phi-right-additive", [](SampleRng& rng, int depth) {
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal zeta = random_ordinal(rng, depth);
    const Ordinal a = random_ordinal(rng, depth);
    return expect_eq(hyper_phi(add(xi, zeta), a), hyper_phi(xi, hyper_phi(zeta, a)),
                     "phi^(xi+zeta) vs phi^xi phi^zeta: xi=" + show(xi) +
                         "; zeta=" + show(zeta) + "; a=" + show(a));
  });

  for (const InitialFnId g : both_logs)
    def("additivity", g == InitialFnId::EndLog ? "hyper-log-left-additive-l"
                                               : "hyper-log-left-additive-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal zeta = random_ordinal(rng, depth);
          const Ordinal a = random_ordinal(rng, depth);
          return expect_eq(
              hyper_log(g, add(xi, zeta), a), hyper_log(g, zeta, hyper_log(g, xi, a)),
              std::string(fn_name(g)) + "^(xi+zeta) vs " + fn_name(g) + "^zeta " + fn_name(g) +
                  "^xi: xi=" + show(xi) + "; zeta=" + show(zeta) + "; a=" + show(a));
        });

  def("additivity", "hyper-e-strictly-monotone", [](SampleRng& rng, int depth) {
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = add(a, nonzero(rng, depth));
    if (!lt(hyper_e(xi, a), hyper_e(xi, b)))
      return Outcome::fail("e^xi not strictly monotone: xi=" + show(xi) + "; a=" + show(a) +
                           "; b=" + show(b));
    return Outcome::pass();
  });

  def("additivity", "hyper-e-monotone-in-exponent", [](SampleRng& rng, int depth) {
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal zeta = add(xi, nonzero(rng, depth));
    const Ordinal a = random_ordinal(rng, depth);
    if (!le(hyper_e(xi, a), hyper_e(zeta, a)))
      return Outcome::fail("e^xi a > e^zeta a for xi<zeta: xi=" + show(xi) +
                           "; zeta=" + show(zeta) + "; a=" + show(a));
    return Outcome::pass();
  });

  def("additivity", "hyper-e-absorption", [](SampleRng& rng, int depth) {
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal zeta = absorbing_partner(rng, depth, xi);
    if (!(add(xi, zeta) == zeta))
      return Outcome::fail("constructed pair does not absorb: xi=" + show(xi) +
                           "; zeta=" + show(zeta));
    const Ordinal a = random_ordinal(rng, depth);
    return expect_eq(hyper_e(xi, hyper_e(zeta, a)), hyper_e(zeta, a),
                     "e^xi e^zeta vs e^zeta when xi+zeta=zeta: xi=" + show(xi) +
                         "; zeta=" + show(zeta) + "; a=" + show(a));
  });

  for (const InitialFnId g : both_logs)
    def("additivity", g == InitialFnId::EndLog ? "hyper-log-antitone-l" : "hyper-log-antitone-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal zeta = add(xi, nonzero(rng, depth));
          const Ordinal a = random_ordinal(rng, depth);
          if (!le(hyper_log(g, zeta, a), hyper_log(g, xi, a)))
            return Outcome::fail(std::string(fn_name(g)) + "^zeta a > " + fn_name(g) +
                                 "^xi a for xi<zeta: xi=" + show(xi) + "; zeta=" + show(zeta) +
                                 "; a=" + show(a));
          return Outcome::pass();
        });

  for (const InitialFnId g : both_logs)
    def("additivity",
        g == InitialFnId::EndLog ? "hyper-log-absorption-l" : "hyper-log-absorption-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal zeta = absorbing_partner(rng, depth, xi);
          const Ordinal a = random_ordinal(rng, depth);
          return expect_eq(hyper_log(g, zeta, hyper_log(g, xi, a)), hyper_log(g, zeta, a),
                           std::string(fn_name(g)) + "^zeta " + fn_name(g) + "^xi vs " +
                               fn_name(g) + "^zeta when xi+zeta=zeta: xi=" + show(xi) +
                               "; zeta=" + show(zeta) + "; a=" + show(a));
        });

  def("additivity", "iterated-hyperation", [](SampleRng& rng, int depth) {
    const Ordinal xi = random_ordinal(rng, depth);
    const std::uint64_t k = rng.next(3);
    const std::uint64_t n = rng.next(4);
    const Ordinal zeta = add(mul(Ordinal::omega(), Ordinal::nat(k)), Ordinal::nat(n));
    const Ordinal a = random_ordinal(rng, depth > 1 ? depth - 1 : 1);
    // (e^xi)^zeta = e^(xi*zeta); the finite slices are iterated literally.
    Ordinal v = a;
    for (std::uint64_t i = 0; i < n; ++i) v = hyper_e(xi, v);
    const Ordinal xi_omega = mul(xi, Ordinal::omega());
    for (std::uint64_t i = 0; i < k; ++i) v = hyper_e(xi_omega, v);
    return expect_eq(hyper_e(mul(xi, zeta), a), v,
                     "e^(xi*zeta) vs staged iteration: xi=" + show(xi) +
                         "; zeta=" + show(zeta) + "; a=" + show(a));
  });

  for (const InitialFnId g : both_logs)
    def("additivity",
        g == InitialFnId::EndLog ? "iterated-cohyperation-l" : "iterated-cohyperation-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const std::uint64_t k = rng.next(3);
          const std::uint64_t n = rng.next(4);
          const Ordinal zeta = add(mul(Ordinal::omega(), Ordinal::nat(k)), Ordinal::nat(n));
          const Ordinal a = random_ordinal(rng, depth > 1 ? depth - 1 : 1);
          // Left additivity puts the omega block first, the finite tail last.
          Ordinal v = a;
          const Ordinal xi_omega = mul(xi, Ordinal::omega());
          for (std::uint64_t i = 0; i < k; ++i) v = hyper_log(g, xi_omega, v);
          for (std::uint64_t i = 0; i < n; ++i) v = hyper_log(g, xi, v);
          return expect_eq(hyper_log(g, mul(xi, zeta), a), v,
                           std::string(fn_name(g)) + "^(xi*zeta) vs staged iteration: xi=" +
                               show(xi) + "; zeta=" + show(zeta) + "; a=" + show(a));
        });

  // ---- adjointness -----------------------------------------------------------

  for (const InitialFnId g : both_logs)
    def("adjointness",
        g == InitialFnId::EndLog ? "hyper-log-inverts-hyper-e-l" : "hyper-log-inverts-hyper-e-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal a = random_ordinal(rng, depth);
          return expect_eq(hyper_log(g, xi, hyper_e(xi, a)), a,
                           std::string(fn_name(g)) + "^xi e^xi vs id: xi=" + show(xi) +
                               "; a=" + show(a));
        });

  for (const InitialFnId g : both_logs)
    def("adjointness",
        g == InitialFnId::EndLog ? "adjoint-upper-shift-l" : "adjoint-upper-shift-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal zeta = add(xi, random_ordinal(rng, depth));
          const Ordinal a = random_ordinal(rng, depth);
          return expect_eq(hyper_log(g, xi, hyper_e(zeta, a)),
                           hyper_e(left_subtract(xi, zeta), a),
                           std::string(fn_name(g)) + "^xi e^zeta vs e^(-xi+zeta): xi=" +
                               show(xi) + "; zeta=" + show(zeta) + "; a=" + show(a));
        });

  for (const InitialFnId g : both_logs)
    def("adjointness",
        g == InitialFnId::EndLog ? "adjoint-lower-shift-l" : "adjoint-lower-shift-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal zeta = add(xi, random_ordinal(rng, depth));
          const Ordinal a = random_ordinal(rng, depth);
          return expect_eq(hyper_log(g, zeta, hyper_e(xi, a)),
                           hyper_log(g, left_subtract(xi, zeta), a),
                           std::string(fn_name(g)) + "^zeta e^xi vs " + fn_name(g) +
                               "^(-xi+zeta): xi=" + show(xi) + "; zeta=" + show(zeta) +
                               "; a=" + show(a));
        });

  for (const InitialFnId g : both_logs)
    def("adjointness", g == InitialFnId::EndLog ? "base-adjoint-l" : "base-adjoint-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal beta = random_ordinal(rng, depth);
          const Ordinal image = e_base(beta);
          if (!(base_apply(g, image) == beta))
            return Outcome::fail(std::string(fn_name(g)) + "(e(beta)) != beta: beta=" +
                                 show(beta));
          const Ordinal alpha = random_ordinal(rng, depth);
          const Ordinal above = add(left_log(alpha), Ordinal::nat(1));
          // e(above) = w^(L(alpha)+1) > alpha, so the strict clause applies.
          if (!lt(alpha, e_base(above)))
            return Outcome::fail("constructed strict pair wrong: alpha=" + show(alpha));
          if (!lt(base_apply(g, alpha), above))
            return Outcome::fail(std::string(fn_name(g)) +
                                 " not a strict left adjoint: alpha=" + show(alpha) +
                                 "; beta=" + show(above));
          return Outcome::pass();
        });

  // ---- veblen-correspondence --------------------------------------------------

  def("veblen-correspondence", "hyper-e-at-omega-powers", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth > 1 ? depth - 1 : 1);
    const Ordinal b = random_ordinal(rng, depth);
    return expect_eq(hyper_e(omega_pow(a), b), e_level(a, b),
                     "e^(w^a) b vs e_a(b): a=" + show(a) + "; b=" + show(b));
  });

  def("veblen-correspondence", "hyper-phi-at-omega-powers", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth > 1 ? depth - 1 : 1);
    const Ordinal b = random_ordinal(rng, depth);
    return expect_eq(hyper_phi(omega_pow(a), b), veblen(a, b),
                     "phi^(w^a) b vs phi_a(b): a=" + show(a) + "; b=" + show(b));
  });

  def("veblen-correspondence", "veblen-strictly-monotone", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth > 1 ? depth - 1 : 1);
    const Ordinal b = random_ordinal(rng, depth);
    const Ordinal c = add(b, nonzero(rng, depth));
    if (!lt(veblen(a, b), veblen(a, c)))
      return Outcome::fail("phi_a not strictly monotone: a=" + show(a) + "; b=" + show(b) +
                           "; c=" + show(c));
    return Outcome::pass();
  });

  def("veblen-correspondence", "veblen-continuous-at-omega-limits", [](SampleRng& rng, int depth) {
    // phi_a(gamma + w) is the least upper bound of the chain phi_a(gamma + n):
    // the chain ascends strictly below it, and anything sampled below the
    // limit value is already dominated by a finite stage. Generated values
    // keep finite offsets small, so a fixed stage horizon is exhaustive.
    const Ordinal a = random_ordinal(rng, depth > 2 ? depth - 2 : 1);
    const Ordinal gamma = random_ordinal(rng, depth > 1 ? depth - 1 : 1);
    const Ordinal at_limit = veblen(a, add(gamma, Ordinal::omega()));
    Ordinal prev = veblen(a, gamma);
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const Ordinal stage = veblen(a, add(gamma, Ordinal::nat(n)));
      if (!lt(prev, stage) || !lt(stage, at_limit))
        return Outcome::fail("chain not ascending below the limit value: a=" + show(a) +
                             "; gamma=" + show(gamma));
      prev = stage;
    }
    const Ordinal x = random_ordinal(rng, depth);
    if (lt(x, at_limit)) {
      for (std::uint64_t n = 0; n <= 64; ++n)
        if (le(x, veblen(a, add(gamma, Ordinal::nat(n))))) return Outcome::pass();
      return Outcome::fail("no finite stage dominates a value below the limit: a=" +
                           show(a) + "; gamma=" + show(gamma) + "; x=" + show(x));
    }
    return Outcome::pass();
  });

  def("veblen-correspondence", "veblen-fixpoint-absorption", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth > 1 ? depth - 1 : 1);
    const Ordinal c = add(a, Ordinal::nat(1 + rng.next(2)));
    const Ordinal b = random_ordinal(rng, depth > 1 ? depth - 1 : 1);
    const Ordinal higher = veblen(c, b);
    return expect_eq(veblen(a, higher), higher,
                     "phi_a(phi_c(b)) vs phi_c(b) for a<c: a=" + show(a) + "; c=" + show(c) +
                         "; b=" + show(b));
  });

  def("veblen-correspondence", "progression-recursion-oracle", [](SampleRng& rng, int depth) {
    // The limit constructions are realized by least fixpoints; this replays
    // the successor clauses and must agree with the direct computation.
    const Ordinal level0 = random_ordinal(rng, depth > 2 ? depth - 2 : 1);
    const Ordinal level = add(level0, Ordinal::nat(1));
    const Ordinal b = Ordinal::nat(rng.next(4));
    const Ordinal via_phi = veblen_progression_step(NormalFnId::phi(), level, b);
    if (!(via_phi == veblen(level, b)))
      return Outcome::fail("phi progression clause mismatch: level=" + show(level) +
                           "; b=" + show(b) + "; got=" + show(via_phi));
    const Ordinal via_e = veblen_progression_step(NormalFnId::e(), level, b);
    if (!(via_e == e_level(level, b)))
      return Outcome::fail("e progression clause mismatch: level=" + show(level) +
                           "; b=" + show(b) + "; got=" + show(via_e));
    return Outcome::pass();
  });

  def("veblen-correspondence", "least-fixpoint-contract", [](SampleRng& rng, int depth) {
    const Ordinal lvl = random_ordinal(rng, depth > 2 ? depth - 2 : 1);
    const bool e_based = rng.chance(50);
    const NormalFnId f =
        e_based ? NormalFnId::e_level_base(lvl) : NormalFnId::phi_level(lvl);
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal v = least_fixpoint_geq(f, xi);
    if (!is_fixpoint(f, v))
      return Outcome::fail("result is not a fixpoint: level=" + show(lvl) + "; xi=" + show(xi) +
                           "; v=" + show(v));
    if (!le(xi, v))
      return Outcome::fail("result below the threshold: xi=" + show(xi) + "; v=" + show(v));
    // Minimality against independently constructed fixpoints.
    const Ordinal w = veblen(add(lvl, Ordinal::nat(1 + rng.next(2))),
                             random_ordinal(rng, depth > 1 ? depth - 1 : 1));
    if (le(xi, w) && lt(w, v))
      return Outcome::fail("a smaller fixpoint exists: xi=" + show(xi) + "; v=" + show(v) +
                           "; w=" + show(w));
    if (e_based && xi.is_zero() && !v.is_zero())
      return Outcome::fail("e-progressions fix 0, so lfp(0) must be 0; got " + show(v));
    return Outcome::pass();
  });

  def("veblen-correspondence", "whnf-round-trip", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal uniq = eval_whnf(whnf(a, true));
    if (!(uniq == a)) return Outcome::fail("unique-mode round trip broken: a=" + show(a));
    const Ordinal merged = eval_whnf(whnf(a, false));
    if (!(merged == a)) return Outcome::fail("merged-mode round trip broken: a=" + show(a));
    return Outcome::pass();
  });

  def("veblen-correspondence", "whnf-unique-exponents", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const std::function<bool(const WhnfExpr&)> all_principal = [&](const WhnfExpr& x) {
      for (const WhnfExpr::Summand& s : x.summands) {
        const bool principal = s.exponent == Ordinal::nat(1) || s.exponent.is_principal_term();
        if (!principal || !all_principal(s.argument)) return false;
      }
      return true;
    };
    if (!all_principal(whnf(a, true)))
      return Outcome::fail("unique mode produced a non-omega-power exponent: a=" + show(a));
    return Outcome::pass();
  });

  def("veblen-correspondence", "whnf-injective", [](SampleRng& rng, int depth) {
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal b = random_ordinal(rng, depth);
    if (!(a == b) && whnf(a, true) == whnf(b, true))
      return Outcome::fail("distinct ordinals share a unique-mode form: a=" + show(a) +
                           "; b=" + show(b));
    return Outcome::pass();
  });

  // ---- cohyperation-clauses ----------------------------------------------------

  for (const InitialFnId g : both_logs)
    def("cohyperation-clauses",
        g == InitialFnId::EndLog ? "fixes-zero-and-base-l" : "fixes-zero-and-base-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal a = random_ordinal(rng, depth);
          if (!hyper_log(g, xi, Ordinal()).is_zero())
            return Outcome::fail(std::string(fn_name(g)) + "^xi 0 != 0: xi=" + show(xi));
          if (!(hyper_log(g, Ordinal(), a) == a))
            return Outcome::fail(std::string(fn_name(g)) + "^0 not the identity: a=" + show(a));
          if (!(hyper_log(g, Ordinal::nat(1), a) == base_apply(g, a)))
            return Outcome::fail(std::string(fn_name(g)) + "^1 differs from the base map: a=" +
                                 show(a));
          return Outcome::pass();
        });

  for (const InitialFnId g : both_logs)
    def("cohyperation-clauses",
        g == InitialFnId::EndLog ? "hyper-log-below-identity-l" : "hyper-log-below-identity-L",
        [g](SampleRng& rng, int depth) {
          // Initial functions sit at or below the identity. They need not be
          // monotone: l(w) = 1 yet l(w+1) = 0. The initial-segment shape of
          // the image is checked by the image law below.
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal a = random_ordinal(rng, depth);
          if (!le(hyper_log(g, xi, a), a))
            return Outcome::fail(std::string(fn_name(g)) +
                                 "^xi exceeds the identity: xi=" + show(xi) + "; a=" + show(a));
          return Outcome::pass();
        });

  for (const InitialFnId g : both_logs)
    def("cohyperation-clauses",
        g == InitialFnId::EndLog ? "reduce-exhaustive-at-omega-l" : "reduce-exhaustive-at-omega-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal a = random_ordinal(rng, depth);
          // Exhaustive search over eta < omega, truncated at the first fixpoint.
          Ordinal v = a;
          std::uint64_t least = 0;
          for (std::uint64_t i = 0; i < 100000; ++i) {
            const Ordinal next = base_apply(g, v);
            if (next == v) break;
            if (!lt(next, v))
              return Outcome::fail("base map failed to descend: v=" + show(v));
            v = next;
            least = i + 1;
          }
          const ReduceTrace t = reduce(g, Ordinal::nat(1), a);
          if (!(t.value == v))
            return Outcome::fail("reduce value differs from exhaustive minimum: a=" + show(a) +
                                 "; got=" + show(t.value) + "; want=" + show(v));
          if (!(t.eta_witness == Ordinal::nat(least)))
            return Outcome::fail("witness is not the least minimizing index: a=" + show(a) +
                                 "; got=" + show(t.eta_witness) +
                                 "; want=" + std::to_string(least));
          return Outcome::pass();
        });

  for (const InitialFnId g : both_logs)
    def("cohyperation-clauses",
        g == InitialFnId::EndLog ? "reduce-replay-l" : "reduce-replay-L",
        [g](SampleRng& rng, int depth) {
          const std::uint64_t pick = rng.next(3);
          const Ordinal rho = pick == 2 ? add(Ordinal::omega(), Ordinal::nat(1))
                                        : Ordinal::nat(pick + 1);
          const Ordinal a = random_ordinal(rng, depth);
          const ReduceTrace t = reduce(g, rho, a);
          Ordinal v = a;
          Ordinal witness;
          for (const ReduceStep& s : t.steps) {
            v = hyper_log(g, omega_pow(s.level), v);
            if (!(v == s.value_after))
              return Outcome::fail("step replay diverged: a=" + show(a) + "; rho=" + show(rho));
            witness = add(witness, omega_pow(s.level));
          }
          if (!(v == t.value) || !(witness == t.eta_witness))
            return Outcome::fail("trace totals inconsistent: a=" + show(a) + "; rho=" + show(rho));
          if (!lt(t.eta_witness, omega_pow(rho)))
            return Outcome::fail("witness not below w^rho: a=" + show(a) + "; rho=" + show(rho));
          if (!(hyper_log(g, t.eta_witness, a) == t.value))
            return Outcome::fail("witness does not reproduce the value: a=" + show(a) +
                                 "; rho=" + show(rho));
          const bool fix = t.value.is_zero() ||
                           (t.value.is_principal_term() &&
                            le(rho, t.value.terms().front().level));
          if (!fix)
            return Outcome::fail("reduced value is not a stage fixpoint: a=" + show(a) +
                                 "; rho=" + show(rho) + "; value=" + show(t.value));
          return Outcome::pass();
        });

  for (const InitialFnId g : both_logs)
    def("cohyperation-clauses",
        g == InitialFnId::EndLog ? "strict-descent-below-minimum-l"
                                 : "strict-descent-below-minimum-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal a = random_ordinal(rng, depth);
          const ReduceTrace t = reduce(g, Ordinal::nat(1), a);
          const Ordinal b = random_ordinal(rng, depth);
          if (!lt(b, t.value)) return Outcome::pass();  // vacuous draw
          if (!lt(hyper_log(g, Ordinal::omega(), b), hyper_log(g, Ordinal::omega(), a)))
            return Outcome::fail("descent ordering violated: a=" + show(a) + "; b=" + show(b));
          return Outcome::pass();
        });

  for (const InitialFnId g : both_logs)
    def("cohyperation-clauses",
        g == InitialFnId::EndLog ? "fixpoint-characterization-l" : "fixpoint-characterization-L",
        [g](SampleRng& rng, int depth) {
          const std::uint64_t rho_n = 1 + rng.next(2);  // 1 or 2
          const Ordinal rho = Ordinal::nat(rho_n);
          // Syntactic fixpoints stay put under every sampled stage below w^rho.
          const Ordinal fix = veblen(add(rho, Ordinal::nat(rng.next(2))),
                                     random_ordinal(rng, depth > 1 ? depth - 1 : 1));
          const Ordinal eta = rho_n == 1
                                  ? Ordinal::nat(1 + rng.next(4))
                                  : add(mul(Ordinal::omega(), Ordinal::nat(rng.next(3))),
                                        Ordinal::nat(1 + rng.next(3)));
          if (!(hyper_log(g, eta, fix) == fix))
            return Outcome::fail("syntactic fixpoint moved: fix=" + show(fix) +
                                 "; eta=" + show(eta));
          // Non-fixpoints must descend strictly under the structural stage.
          const Ordinal w = nonzero(rng, depth);
          const bool syntactic_fix =
              w.is_principal_term() && le(rho, w.terms().front().level);
          if (syntactic_fix) return Outcome::pass();
          const Ordinal jump =
              w.is_principal_term() ? w.terms().front().level : Ordinal();
          if (!lt(hyper_log(g, omega_pow(jump), w), w))
            return Outcome::fail("non-fixpoint failed to descend: w=" + show(w) +
                                 "; stage=w^" + show(jump));
          return Outcome::pass();
        });

  for (const InitialFnId g : both_logs)
    def("cohyperation-clauses",
        g == InitialFnId::EndLog ? "initial-segment-image-l" : "initial-segment-image-L",
        [g](SampleRng& rng, int depth) {
          const std::uint64_t top = 1 + rng.next(24);
          const Ordinal xi = random_ordinal(rng, depth);
          std::uint64_t max_seen = 0;
          std::vector<bool> seen(top + 1, false);
          std::uint64_t prev = 0;
          for (std::uint64_t k = 0; k <= top; ++k) {
            const Ordinal img = hyper_log(g, xi, Ordinal::nat(k));
            if (!img.is_nat())
              return Outcome::fail("image of a natural is infinite: xi=" + show(xi));
            const std::uint64_t v = img.trailing_nat();
            if (k > 0 && v < prev)
              return Outcome::fail("image not weakly monotone: xi=" + show(xi));
            if (v > k)
              return Outcome::fail("image above the identity: xi=" + show(xi));
            prev = v;
            if (v <= top) seen[v] = true;
            if (v > max_seen) max_seen = v;
          }
          for (std::uint64_t v = 0; v <= max_seen; ++v)
            if (!seen[v])
              return Outcome::fail("image of an initial segment has a gap at " +
                                   std::to_string(v) + ": xi=" + show(xi));
          return Outcome::pass();
        });

  for (const InitialFnId g : both_logs)
    def("cohyperation-clauses",
        g == InitialFnId::EndLog ? "exactness-transport-l" : "exactness-transport-L",
        [g](SampleRng& rng, int depth) {
          const Ordinal xi = random_ordinal(rng, depth);
          const Ordinal zeta = random_ordinal(rng, depth);
          const Ordinal v0 = random_ordinal(rng, depth);
          const ExactSeqSpec s{g, v0, add(add(xi, zeta), Ordinal::nat(1))};
          return expect_eq(exact_value(s, add(xi, zeta)),
                           hyper_log(g, zeta, exact_value(s, xi)),
                           "f(xi+zeta) vs g^zeta f(xi): xi=" + show(xi) + "; zeta=" + show(zeta) +
                               "; f(0)=" + show(v0));
        });

  def("cohyperation-clauses", "generated-sequence-is-exact", [](SampleRng& rng, int) {
    // The epsilon-started end-log sequence: constant below omega, the
    // inverted value at omega, zero beyond.
    const std::uint64_t gamma = rng.next(3);
    const Ordinal v0 = veblen(Ordinal::nat(1), Ordinal::nat(gamma));
    PiecewiseSeq seq;
    seq.pieces.push_back({Ordinal::omega(), v0});
    seq.pieces.push_back({add(Ordinal::omega(), Ordinal::nat(1)), Ordinal::nat(1 + gamma)});
    seq.final_value = Ordinal();
    const Ordinal points[] = {Ordinal::nat(1), Ordinal::nat(5), Ordinal::omega(),
                              add(Ordinal::omega(), Ordinal::nat(1)),
                              mul(Ordinal::omega(), Ordinal::nat(2)),
                              omega_pow(Ordinal::nat(2))};
    const ExactCheckReport r = check_exact(InitialFnId::EndLog, seq, points);
    if (!r.all_pass)
      return Outcome::fail("generated end-log sequence rejected: v0=" + show(v0));
    return Outcome::pass();
  });

  def("cohyperation-clauses", "end-vs-left-log-differential", [](SampleRng& rng, int depth) {
    // Record-only: the two hyperlogarithms may disagree; divergences are
    // tallied, never judged.
    const Ordinal xi = random_ordinal(rng, depth);
    const Ordinal a = random_ordinal(rng, depth);
    const Ordinal l = hyper_log(InitialFnId::EndLog, xi, a);
    const Ordinal cap = hyper_log(InitialFnId::LeftLog, xi, a);
    if (l == cap) return Outcome::pass();
    return Outcome::record("l^xi a=" + show(l) + " vs L^xi a=" + show(cap) +
                           " at xi=" + show(xi) + "; a=" + show(a));
  });

  return laws;
}

inline const std::vector<LawDef>& registry() {
  static const std::vector<LawDef> laws = build_registry();
  return laws;
}

}  // namespace lawdetail

/// Runs the selected law suites. Deterministic: each law draws from its own
/// stream seeded by (config seed, law name), so results do not depend on
/// which other suites were selected.
inline LawReport run_laws(const LawSuiteConfig& cfg) {
  if (cfg.samples < 1) throw domain_error("laws: sample count must be at least 1");
  if (cfg.max_depth < 0 || cfg.max_depth > 5)
    throw domain_error("laws: max depth must be between 0 and 5");
  const auto& known = law_suite_names();
  for (const std::string& s : cfg.suites)
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw domain_error("laws: unknown suite '" + s + "'");

  const auto selected = [&](const char* suite) {
    if (cfg.suites.empty()) return true;
    return std::find(cfg.suites.begin(), cfg.suites.end(), suite) != cfg.suites.end();
  };

  LawReport report;
  for (const lawdetail::LawDef& law : lawdetail::registry()) {
    if (!selected(law.suite)) continue;
    LawResult r;
    r.suite = law.suite;
    r.name = law.name;
    SampleRng rng(cfg.seed ^ lawdetail::fnv1a(std::string(law.suite) + "/" + law.name));
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
      ++r.samples;
      const lawdetail::Outcome out = law.fn(rng, cfg.max_depth);
      if (out.failure) {
        ++r.failures;
        if (r.first_counterexample.empty()) r.first_counterexample = *out.failure;
      }
      if (out.note) {
        ++r.info_count;
        if (r.info.empty()) r.info = *out.note;
      }
    }
    report.laws.push_back(std::move(r));
  }
  return report;
}

}  // namespace gamma0
