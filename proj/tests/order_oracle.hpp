#pragma once

// Test-only oracle: enumerates a finite, component-closed universe of
// canonical ordinals and derives its order relation by saturating the
// defining clauses of the normal-form order over all pairs, instead of
// recursive descent. The derivation starts from base facts (naturals order
// by value; finite values sit below every infinite summand), then closes
// under two rules until nothing changes:
//
//   term rule:  phi_a(b) vs phi_c(d) is decided by the level relation
//               and, across levels, by comparing the lower argument with
//               the higher term's value (fixpoint absorption);
//   lex rule:   sums compare by leading summand, then by their tails.
//
// Saturation makes totality, antisymmetry and transitivity checkable
// facts of the finite relation rather than consequences of the
// implementation's recursion, so it cross-examines the library's
// comparison path instead of replaying it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gamma0/gamma0.hpp"

namespace order_oracle {

using gamma0::Ordinal;
using gamma0::VebTerm;

enum Rel : unsigned char { UNK = 0, LT = 1, EQ = 2, GT = 3 };

inline Rel flip(Rel r) { return r == LT ? GT : r == GT ? LT : r; }

struct Oracle {
  std::vector<Ordinal> universe;
  std::string failure;  // empty on success

  // Decomposition tables, indices into `universe`.
  struct TermInfo {
    int level = -1;
    int arg = -1;
    int value = -1;  // the summand as a standalone element
  };
  std::vector<TermInfo> terms;
  std::vector<int> head_term;      // per element: index into terms, or -1
  std::vector<int> tail;           // per element: element minus leading summand
  std::vector<std::uint64_t> nat;  // per element: trailing finite part

  std::vector<unsigned char> rel;  // n*n derived relation
  bool contradiction = false;

  std::size_t size() const { return universe.size(); }

  Rel at(std::size_t i, std::size_t j) const {
    return static_cast<Rel>(rel[i * size() + j]);
  }

  bool set(std::size_t i, std::size_t j, Rel r, bool* changed) {
    unsigned char& slot = rel[i * size() + j];
    if (slot == UNK) {
      slot = r;
      *changed = true;
      return true;
    }
    if (slot != r) contradiction = true;
    return false;
  }
};

namespace detail {

inline std::string key(const Ordinal& a) { return gamma0::print_nf(a, gamma0::NfStyle::Vnf); }

struct Builder {
  std::vector<Ordinal> elems;
  std::map<std::string, int> index;

  int intern(const Ordinal& a) {
    const auto [it, inserted] = index.try_emplace(key(a), static_cast<int>(elems.size()));
    if (inserted) elems.push_back(a);
    return it->second;
  }

  bool lookup(const Ordinal& a, int* out) const {
    const auto it = index.find(key(a));
    if (it == index.end()) return false;
    *out = it->second;
    return true;
  }
};

}  // namespace detail

/// All canonical ordinals with at most two summands and finite parts at most
/// 2, where summands are Veblen terms of nesting depth at most 2 over the
/// closed component pool {0, 1, 2, w, w+1, eps0, eps0+1}.
inline std::vector<Ordinal> build_universe() {
  using namespace gamma0;
  const Ordinal nats[3] = {Ordinal(), Ordinal::nat(1), Ordinal::nat(2)};

  // Depth-1 summands over natural components.
  std::vector<Ordinal> shallow;
  for (const Ordinal& a : nats)
    for (const Ordinal& b : nats) {
      const Ordinal v = veblen(a, b);
      if (v.is_principal_term()) shallow.push_back(v);
    }

  // The component pool: closed, and itself part of the universe.
  std::vector<Ordinal> pool = {nats[0], nats[1], nats[2]};
  pool.push_back(Ordinal::omega());
  pool.push_back(add(Ordinal::omega(), Ordinal::nat(1)));
  const Ordinal eps0 = veblen(Ordinal::nat(1), Ordinal());
  pool.push_back(eps0);
  pool.push_back(add(eps0, Ordinal::nat(1)));

  detail::Builder term_set;
  for (const Ordinal& t : shallow) term_set.intern(t);
  for (const Ordinal& a : pool)
    for (const Ordinal& b : pool) {
      const Ordinal v = veblen(a, b);
      if (v.is_principal_term()) term_set.intern(v);
    }
  const std::vector<Ordinal>& term_values = term_set.elems;

  detail::Builder out;
  for (const Ordinal& n : nats) out.intern(n);
  for (std::size_t i = 0; i < term_values.size(); ++i) {
    for (const Ordinal& n : nats) out.intern(add(term_values[i], n));
    for (std::size_t j = 0; j < term_values.size(); ++j) {
      if (compare(term_values[i], term_values[j]) == std::strong_ordering::less)
        continue;  // keep summands non-increasing
      const Ordinal two = add(term_values[i], term_values[j]);
      for (const Ordinal& n : nats) out.intern(add(two, n));
    }
  }
  return out.elems;
}

/// Derives the order over the universe and reports any defect in
/// Oracle::failure. On success the relation is total, antisymmetric,
/// transitive and equality holds only on the diagonal.
inline Oracle derive(std::vector<Ordinal> universe) {
  Oracle o;
  o.universe = std::move(universe);
  const std::size_t n = o.size();

  detail::Builder lookup;
  for (const Ordinal& a : o.universe) lookup.intern(a);

  // Decompose every element; closure guarantees all parts are present.
  detail::Builder term_table;
  std::vector<Oracle::TermInfo> term_infos;
  o.head_term.assign(n, -1);
  o.tail.assign(n, -1);
  o.nat.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Ordinal& a = o.universe[i];
    o.nat[i] = a.trailing_nat();
    if (a.terms().empty()) continue;
    const VebTerm& head = a.terms().front();
    const Ordinal head_value = head.value();
    const int term_idx = term_table.intern(head_value);
    if (term_idx == static_cast<int>(term_infos.size())) {
      Oracle::TermInfo info;
      if (!lookup.lookup(head.level, &info.level) || !lookup.lookup(head.arg, &info.arg) ||
          !lookup.lookup(head_value, &info.value)) {
        o.failure = "universe is not closed under term components";
        return o;
      }
      term_infos.push_back(info);
    }
    o.head_term[i] = term_idx;
    const Ordinal rest = Ordinal::from_normal_form(
        std::vector<VebTerm>(a.terms().begin() + 1, a.terms().end()), a.trailing_nat());
    if (!lookup.lookup(rest, &o.tail[i])) {
      o.failure = "universe is not closed under tail removal";
      return o;
    }
  }
  o.terms = term_infos;

  // Base facts.
  o.rel.assign(n * n, UNK);
  bool changed = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool i_fin = o.universe[i].terms().empty();
      const bool j_fin = o.universe[j].terms().empty();
      if (i == j) o.set(i, j, EQ, &changed);
      else if (i_fin && j_fin)
        o.set(i, j, o.nat[i] < o.nat[j] ? LT : o.nat[i] > o.nat[j] ? GT : EQ, &changed);
      else if (i_fin)
        o.set(i, j, LT, &changed);  // finite below any infinite summand
      else if (j_fin)
        o.set(i, j, GT, &changed);
    }

  // Saturate the term and lex rules.
  for (int pass = 0; pass < 64; ++pass) {
    changed = false;
    for (std::size_t s = 0; s < o.terms.size(); ++s) {
      for (std::size_t t = 0; t < o.terms.size(); ++t) {
        const auto& ts = o.terms[s];
        const auto& tt = o.terms[t];
        if (o.at(ts.value, tt.value) != UNK) continue;
        const Rel by_level = o.at(ts.level, tt.level);
        if (by_level == UNK) continue;
        if (by_level == EQ) {
          const Rel by_arg = o.at(ts.arg, tt.arg);
          if (by_arg != UNK) o.set(ts.value, tt.value, by_arg, &changed);
        } else if (by_level == LT) {
          // phi_a(b) vs phi_c(d), a < c: decided by b vs phi_c(d).
          const Rel c = o.at(ts.arg, tt.value);
          if (c != UNK) o.set(ts.value, tt.value, c == GT ? GT : c, &changed);
        } else {
          const Rel c = o.at(tt.arg, ts.value);
          if (c != UNK) o.set(ts.value, tt.value, flip(c), &changed);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (o.head_term[i] < 0) continue;
      const int hv_i = o.terms[static_cast<std::size_t>(o.head_term[i])].value;
      for (std::size_t j = 0; j < n; ++j) {
        if (o.head_term[j] < 0 || o.at(i, j) != UNK) continue;
        const int hv_j = o.terms[static_cast<std::size_t>(o.head_term[j])].value;
        const Rel heads = o.at(static_cast<std::size_t>(hv_i), static_cast<std::size_t>(hv_j));
        if (heads == LT || heads == GT) {
          o.set(i, j, heads, &changed);
        } else if (heads == EQ) {
          const Rel tails = o.at(static_cast<std::size_t>(o.tail[i]),
                                 static_cast<std::size_t>(o.tail[j]));
          if (tails != UNK) o.set(i, j, tails, &changed);
        }
      }
    }
    if (!changed) break;
  }

  if (o.contradiction) {
    o.failure = "derivation produced contradictory facts";
    return o;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rel r = o.at(i, j);
      if (r == UNK) {
        o.failure = "derived relation is not total: " + gamma0::print_sugar(o.universe[i]) +
                    " vs " + gamma0::print_sugar(o.universe[j]);
        return o;
      }
      if (r == EQ && i != j) {
        o.failure = "distinct canonical forms derived equal: " +
                    gamma0::print_sugar(o.universe[i]) + " vs " +
                    gamma0::print_sugar(o.universe[j]);
        return o;
      }
      if (o.at(j, i) != flip(r)) {
        o.failure = "derived relation is not antisymmetric";
        return o;
      }
    }

  // Transitivity: a strict total order must be consistent with some rank.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&o](std::size_t a, std::size_t b) { return o.at(a, b) == LT; });
  std::vector<std::size_t> rank(n);
  for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rel want = rank[i] < rank[j] ? LT : rank[i] > rank[j] ? GT : EQ;
      if (o.at(i, j) != want) {
        o.failure = "derived relation is not transitive";
        return o;
      }
    }
  return o;
}

}  // namespace order_oracle
