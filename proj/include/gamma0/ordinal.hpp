#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gamma0 {

struct VebTerm;
class Ordinal;

/// Base class of everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition was violated (e.g. subtracting a larger ordinal from a
/// smaller one). Inputs are never clamped; the offending call is rejected.
struct domain_error : error {
  using error::error;
};

/// The input is outside the finitely computable fragment of an operation.
struct unsupported_error : error {
  using error::error;
};

/// An internal safety guard tripped. Indicates a bug, never a wrong answer.
struct internal_error : error {
  using error::error;
};

enum class OrdKind { Zero, Successor, Limit };

/// An ordinal below Gamma_0 in Veblen normal form:
///
///   phi_{a_1}(b_1) + ... + phi_{a_k}(b_k) + n
///
/// where the summands are non-increasing as ordinals, every summand
/// satisfies the normal-form condition b_i < phi_{a_i}(b_i), and the finite
/// part is kept as a plain count (phi_0(0) = 1 is never stored as a term).
/// Values are immutable and canonical: two ordinals are equal as ordinals
/// exactly when they are structurally identical.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();

  /// Assembles an ordinal from parts that are already in normal form.
  /// Intended for the arithmetic in this header and for deserializers that
  /// have validated their input; use veblen()/add() to build values safely.
  static Ordinal from_normal_form(std::vector<VebTerm> terms, std::uint64_t nat);

  const std::vector<VebTerm>& terms() const { return terms_; }
  std::uint64_t trailing_nat() const { return nat_; }

  bool is_zero() const;
  bool is_nat() const { return terms_.empty(); }
  /// Additively principal and infinite: a single summand with no finite tail.
  bool is_principal_term() const { return terms_.size() == 1 && nat_ == 0; }

 private:
  std::vector<VebTerm> terms_;
  std::uint64_t nat_ = 0;
};

/// One Veblen normal form summand phi_level(arg).
struct VebTerm {
  Ordinal level;
  Ordinal arg;

  /// The term as a standalone ordinal.
  Ordinal value() const;
};

inline bool Ordinal::is_zero() const { return terms_.empty() && nat_ == 0; }

inline Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal o;
  o.nat_ = n;
  return o;
}

inline Ordinal Ordinal::from_normal_form(std::vector<VebTerm> terms, std::uint64_t nat) {
  Ordinal o;
  o.terms_ = std::move(terms);
  o.nat_ = nat;
  return o;
}

inline Ordinal VebTerm::value() const { return Ordinal::from_normal_form({*this}, 0); }

inline Ordinal Ordinal::omega() {
  return from_normal_form({VebTerm{Ordinal(), Ordinal::nat(1)}}, 0);
}

// --- structural equality -------------------------------------------------

inline bool operator==(const Ordinal& x, const Ordinal& y);

inline bool operator==(const VebTerm& s, const VebTerm& t) {
  return s.level == t.level && s.arg == t.arg;
}

inline bool operator==(const Ordinal& x, const Ordinal& y) {
  return x.trailing_nat() == y.trailing_nat() && x.terms() == y.terms();
}

// --- comparison -----------------------------------------------------------

std::strong_ordering compare(const Ordinal& x, const Ordinal& y);
std::strong_ordering compare_to_term(const Ordinal& x, const VebTerm& t);

/// Compares two normal-form summands as ordinals. The rule for distinct
/// levels uses fixpoint absorption: when a < c, phi_a(b) <> phi_c(d) is
/// decided by b <> phi_c(d), because phi_c(d) is a fixpoint of phi_a.
inline std::strong_ordering compare_terms(const VebTerm& s, const VebTerm& t) {
  const auto by_level = compare(s.level, t.level);
  if (by_level == std::strong_ordering::equal) return compare(s.arg, t.arg);
  if (by_level == std::strong_ordering::less) {
    const auto c = compare_to_term(s.arg, t);
    // s.arg == value(t) would force phi_{s.level}(s.arg) = value(t); it
    // cannot occur for normal-form operands but maps to "equal" anyway.
    return c == std::strong_ordering::greater ? std::strong_ordering::greater
                                              : c;
  }
  const auto c = compare_to_term(t.arg, s);
  if (c == std::strong_ordering::less) return std::strong_ordering::greater;
  if (c == std::strong_ordering::greater) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

/// x versus the value of a single summand, without materializing the latter.
inline std::strong_ordering compare_to_term(const Ordinal& x, const VebTerm& t) {
  if (x.terms().empty()) return std::strong_ordering::less;
  const auto c = compare_terms(x.terms().front(), t);
  if (c != std::strong_ordering::equal) return c;
  return (x.terms().size() > 1 || x.trailing_nat() > 0)
             ? std::strong_ordering::greater
             : std::strong_ordering::equal;
}

inline std::strong_ordering compare(const Ordinal& x, const Ordinal& y) {
  // Sums in normal form compare lexicographically: summands are infinite and
  // non-increasing, so the first differing position decides, a longer term
  // list beats a finite tail, and equal term lists fall through to the nats.
  const auto& xs = x.terms();
  const auto& ys = y.terms();
  const std::size_t common = xs.size() < ys.size() ? xs.size() : ys.size();
  for (std::size_t i = 0; i < common; ++i) {
    if (xs[i] == ys[i]) continue;
    return compare_terms(xs[i], ys[i]);
  }
  if (xs.size() != ys.size()) return xs.size() <=> ys.size();
  return x.trailing_nat() <=> y.trailing_nat();
}

inline std::strong_ordering operator<=>(const Ordinal& x, const Ordinal& y) {
  return compare(x, y);
}

// --- classification -------------------------------------------------------

inline OrdKind classify(const Ordinal& a) {
  if (a.trailing_nat() > 0) return OrdKind::Successor;
  return a.terms().empty() ? OrdKind::Zero : OrdKind::Limit;
}

// --- addition and left subtraction ----------------------------------------

/// Upper bound on materializing finite parts as explicit summand lists
/// (products by a natural, exponent lists, unit-level printing). Values are
/// exact up to here; beyond it the request is rejected rather than letting an
/// in-memory unit list grow without bound.
inline constexpr std::uint64_t max_unit_expansion = 1'000'000;

namespace detail {

inline void check_unit_expansion(std::uint64_t units) {
  if (units > max_unit_expansion)
    throw domain_error("finite part too large to expand into summand units");
}

inline std::uint64_t checked_nat_add(std::uint64_t a, std::uint64_t b) {
  if (b > UINT64_MAX - a) throw domain_error("natural part overflow in addition");
  return a + b;
}

inline std::uint64_t checked_nat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw domain_error("natural part overflow in multiplication");
  return a * b;
}

}  // namespace detail

/// Ordinal sum. Summands of x strictly below the leading summand of y are
/// absorbed, e.g. add(1, w) = w while add(w, 1) = w + 1.
inline Ordinal add(const Ordinal& x, const Ordinal& y) {
  if (y.terms().empty()) {
    return Ordinal::from_normal_form(
        x.terms(), detail::checked_nat_add(x.trailing_nat(), y.trailing_nat()));
  }
  const VebTerm& lead = y.terms().front();
  std::vector<VebTerm> terms;
  terms.reserve(x.terms().size() + y.terms().size());
  for (const VebTerm& t : x.terms()) {
    if (compare_terms(t, lead) == std::strong_ordering::less) break;
    terms.push_back(t);
  }
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return Ordinal::from_normal_form(std::move(terms), y.trailing_nat());
}

inline Ordinal operator+(const Ordinal& x, const Ordinal& y) { return add(x, y); }

/// The unique eta with zeta + eta = xi, written -zeta + xi.
/// Requires zeta <= xi.
inline Ordinal left_subtract(const Ordinal& zeta, const Ordinal& xi) {
  const auto fail = [] {
    return domain_error("left_subtract: minuend is smaller than subtrahend");
  };
  const auto& zs = zeta.terms();
  const auto& xs = xi.terms();
  std::size_t i = 0;
  while (i < zs.size() && i < xs.size() && zs[i] == xs[i]) ++i;
  if (i < zs.size()) {
    // zeta still owns an infinite summand; xi must dominate it strictly.
    if (i == xs.size() || compare_terms(zs[i], xs[i]) != std::strong_ordering::less)
      throw fail();
    return Ordinal::from_normal_form(
        std::vector<VebTerm>(xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end()),
        xi.trailing_nat());
  }
  if (i < xs.size()) {
    // All of zeta (including its nat) is absorbed by xi's next summand.
    return Ordinal::from_normal_form(
        std::vector<VebTerm>(xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end()),
        xi.trailing_nat());
  }
  if (zeta.trailing_nat() > xi.trailing_nat()) throw fail();
  return Ordinal::nat(xi.trailing_nat() - zeta.trailing_nat());
}

// --- omega powers and logarithms -------------------------------------------

/// omega^x in canonical form. Single summands of positive level are epsilon
/// numbers or beyond, hence fixpoints: omega_pow(eps_0) = eps_0.
inline Ordinal omega_pow(const Ordinal& x) {
  if (x.is_zero()) return Ordinal::nat(1);
  if (x.is_principal_term() && !x.terms().front().level.is_zero()) return x;
  return Ordinal::from_normal_form({VebTerm{Ordinal(), x}}, 0);
}

namespace detail {

/// Cantor normal form exponent of one summand: phi_0(b) contributes b,
/// a summand of positive level is its own exponent.
inline Ordinal cnf_exponent(const VebTerm& t) {
  return t.level.is_zero() ? t.arg : t.value();
}

}  // namespace detail

/// Last exponent: the unique b with a = head + omega^b, and 0 for a = 0.
inline Ordinal end_log(const Ordinal& a) {
  if (a.trailing_nat() > 0 || a.terms().empty()) return Ordinal();
  return detail::cnf_exponent(a.terms().back());
}

/// First exponent: the unique b with a = omega^b + rest, rest < a,
/// and 0 for a = 0.
inline Ordinal left_log(const Ordinal& a) {
  if (a.terms().empty()) return Ordinal();
  return detail::cnf_exponent(a.terms().front());
}

/// The non-increasing exponent list of the Cantor normal form; each unit of
/// the finite part contributes a trailing 0.
inline std::vector<Ordinal> cnf_exponents(const Ordinal& a) {
  detail::check_unit_expansion(a.trailing_nat());
  std::vector<Ordinal> exps;
  exps.reserve(a.terms().size() + a.trailing_nat());
  for (const VebTerm& t : a.terms()) exps.push_back(detail::cnf_exponent(t));
  for (std::uint64_t i = 0; i < a.trailing_nat(); ++i) exps.push_back(Ordinal());
  return exps;
}

/// The modified exponential e(x) = -1 + omega^x, so e(0) = 0 and
/// e(x) = omega^x otherwise. Unlike omega_pow it fixes 0 and therefore
/// admits left adjoints.
inline Ordinal e_base(const Ordinal& x) {
  if (x.is_zero()) return Ordinal();
  return omega_pow(x);
}

// --- multiplication ---------------------------------------------------------

namespace detail {

inline Ordinal mul_by_nat(const Ordinal& x, std::uint64_t n) {
  if (n == 0) return Ordinal();
  if (x.terms().empty()) return Ordinal::nat(checked_nat_mul(x.trailing_nat(), n));
  // x * n = (leading run) * (n-1) ++ x: only summands equal to the head
  // survive the interior absorptions.
  const VebTerm& head = x.terms().front();
  std::size_t run = 1;
  while (run < x.terms().size() && x.terms()[run] == head) ++run;
  check_unit_expansion(checked_nat_mul(run, n));
  std::vector<VebTerm> terms;
  terms.reserve(run * (n - 1) + x.terms().size());
  for (std::uint64_t rep = 1; rep < n; ++rep)
    terms.insert(terms.end(), x.terms().begin(),
                 x.terms().begin() + static_cast<std::ptrdiff_t>(run));
  terms.insert(terms.end(), x.terms().begin(), x.terms().end());
  return Ordinal::from_normal_form(std::move(terms), x.trailing_nat());
}

}  // namespace detail

/// Ordinal product, distributing over the Cantor normal form of y:
/// x * (omega^c + rest) = omega^{left_log(x) + c} + x * rest.
inline Ordinal mul(const Ordinal& x, const Ordinal& y) {
  if (x.is_zero() || y.is_zero()) return Ordinal();
  Ordinal acc;
  if (!y.terms().empty()) {
    const Ordinal lam = left_log(x);
    for (const VebTerm& t : y.terms())
      acc = add(acc, omega_pow(add(lam, detail::cnf_exponent(t))));
  }
  if (y.trailing_nat() > 0) acc = add(acc, detail::mul_by_nat(x, y.trailing_nat()));
  return acc;
}

inline Ordinal operator*(const Ordinal& x, const Ordinal& y) { return mul(x, y); }

// --- invariant checking -----------------------------------------------------

/// True when the representation satisfies every normal-form invariant.
/// All values produced by this library are canonical; the checker exists for
/// tests and for validating externally assembled parts.
inline bool is_canonical(const Ordinal& a) {
  const auto& ts = a.terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].level.is_zero() && ts[i].arg.is_zero()) return false;  // finite term
    if (!is_canonical(ts[i].level) || !is_canonical(ts[i].arg)) return false;
    if (compare_to_term(ts[i].arg, ts[i]) != std::strong_ordering::less)
      return false;  // b < phi_a(b)
    if (i + 1 < ts.size() &&
        compare_terms(ts[i], ts[i + 1]) == std::strong_ordering::less)
      return false;  // non-increasing summands
  }
  return true;
}

}  // namespace gamma0
