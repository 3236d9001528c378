#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamma0/cohyperation.hpp"
#include "gamma0/ordinal.hpp"

namespace gamma0 {

/// A g-exact sequence f is determined by f(0): f(xi) = g^xi f(0). This spec
/// names the generating data plus the index range the caller intends to use.
struct ExactSeqSpec {
  InitialFnId g;
  Ordinal v0;            // f(0)
  Ordinal domain_bound;  // exclusive upper bound on evaluable indices
};

inline Ordinal exact_value(const ExactSeqSpec& s, const Ordinal& xi) {
  if (compare(xi, s.domain_bound) != std::strong_ordering::less)
    throw domain_error("exact_value: index outside the declared domain");
  return hyper_log(s.g, xi, s.v0);
}

/// An ordinal-indexed sequence with finitely many distinct pieces, each piece
/// valid up to an exclusive bound, and a final value beyond the last bound.
struct PiecewiseSeq {
  struct Piece {
    Ordinal upper_bound;  // exclusive
    Ordinal value;
  };

  std::vector<Piece> pieces;  // bounds strictly increasing
  Ordinal final_value;

  const Ordinal& at(const Ordinal& xi) const {
    for (const Piece& p : pieces)
      if (compare(xi, p.upper_bound) == std::strong_ordering::less) return p.value;
    return final_value;
  }
};

struct ExactCheckResult {
  Ordinal point;
  bool pass = false;
  std::optional<Ordinal> witness;  // the xi < point that certified the point
  std::string note;                // failure detail, empty on pass
};

struct ExactCheckReport {
  std::vector<ExactCheckResult> results;
  bool all_pass = true;
};

namespace detail {

inline void validate_piecewise(const PiecewiseSeq& seq) {
  for (std::size_t i = 0; i + 1 < seq.pieces.size(); ++i)
    if (compare(seq.pieces[i].upper_bound, seq.pieces[i + 1].upper_bound) !=
        std::strong_ordering::less)
      throw domain_error("piecewise sequence bounds must be strictly increasing");
}

}  // namespace detail

/// Sampled exactness check: seq is g-exact iff for every zeta > 0 some
/// xi < zeta has seq(zeta) = g^{-xi+zeta} seq(xi). Candidates tried are
/// xi = 0 and every piece boundary below zeta. Besides the caller's sample
/// points, the piece boundaries, their small offsets and a few omega
/// multiples are checked as well; failures are reported, never thrown.
inline ExactCheckReport check_exact(InitialFnId g, const PiecewiseSeq& seq,
                                    std::span<const Ordinal> sample_points) {
  detail::validate_piecewise(seq);

  std::vector<Ordinal> points(sample_points.begin(), sample_points.end());
  for (const PiecewiseSeq::Piece& p : seq.pieces) {
    points.push_back(p.upper_bound);
    points.push_back(add(p.upper_bound, Ordinal::nat(1)));
    points.push_back(add(p.upper_bound, Ordinal::nat(2)));
  }
  for (std::uint64_t k = 1; k <= 3; ++k)
    points.push_back(mul(Ordinal::omega(), Ordinal::nat(k)));
  const auto dup_from = points.begin() + static_cast<std::ptrdiff_t>(sample_points.size());
  std::sort(dup_from, points.end(),
            [](const Ordinal& a, const Ordinal& b) {
              return compare(a, b) == std::strong_ordering::less;
            });
  points.erase(std::unique(dup_from, points.end()), points.end());

  ExactCheckReport report;
  for (const Ordinal& zeta : points) {
    ExactCheckResult r;
    r.point = zeta;
    if (zeta.is_zero()) {
      r.pass = true;
      r.note = "index 0 is trivially consistent";
      report.results.push_back(std::move(r));
      continue;
    }
    std::vector<Ordinal> candidates;
    candidates.emplace_back();  // xi = 0
    for (const PiecewiseSeq::Piece& p : seq.pieces)
      if (compare(p.upper_bound, zeta) == std::strong_ordering::less)
        candidates.push_back(p.upper_bound);
    const Ordinal& want = seq.at(zeta);
    for (const Ordinal& xi : candidates) {
      const Ordinal got = hyper_log(g, left_subtract(xi, zeta), seq.at(xi));
      if (got == want) {
        r.pass = true;
        r.witness = xi;
        break;
      }
      if (r.note.empty()) r.note = "no candidate reproduces the stored value";
    }
    if (!r.pass) report.all_pass = false;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace gamma0
