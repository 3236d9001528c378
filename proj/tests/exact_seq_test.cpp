#include <catch2/catch_amalgamated.hpp>

#include "gamma0/gamma0.hpp"

using namespace gamma0;

namespace {

Ordinal ord(std::string_view s) { return eval(s); }

PiecewiseSeq epsilon_one_sequence() {
  // Constant eps(1) below omega, 2 at omega, 0 afterwards.
  PiecewiseSeq seq;
  seq.pieces.push_back({Ordinal::omega(), ord("eps(1)")});
  seq.pieces.push_back({ord("w+1"), Ordinal::nat(2)});
  seq.final_value = Ordinal();
  return seq;
}

}  // namespace

TEST_CASE("values of a generated exact sequence") {
  const ExactSeqSpec s{InitialFnId::EndLog, ord("eps(1)"), ord("w^2")};
  CHECK(exact_value(s, Ordinal::nat(3)) == ord("eps(1)"));
  CHECK(exact_value(s, Ordinal::omega()) == Ordinal::nat(2));
  CHECK(exact_value(s, ord("w+1")).is_zero());
  CHECK(exact_value(s, Ordinal()) == ord("eps(1)"));

  SECTION("indices outside the declared domain are rejected") {
    CHECK_THROWS_AS(exact_value(s, ord("w^2")), domain_error);
    CHECK_THROWS_AS(exact_value(s, ord("w^2+1")), domain_error);
  }
}

TEST_CASE("piecewise lookup") {
  const PiecewiseSeq seq = epsilon_one_sequence();
  CHECK(seq.at(Ordinal()) == ord("eps(1)"));
  CHECK(seq.at(Ordinal::nat(5)) == ord("eps(1)"));
  CHECK(seq.at(Ordinal::omega()) == Ordinal::nat(2));
  CHECK(seq.at(ord("w+1")).is_zero());
  CHECK(seq.at(ord("w^w")).is_zero());
}

TEST_CASE("exactness checking") {
  const Ordinal points[] = {Ordinal::nat(1), Ordinal::nat(5), Ordinal::omega(),
                            ord("w+1"), ord("w*2")};

  SECTION("the epsilon-one sequence is end-log exact") {
    const ExactCheckReport r = check_exact(InitialFnId::EndLog, epsilon_one_sequence(), points);
    CHECK(r.all_pass);
    for (const ExactCheckResult& row : r.results) {
      CAPTURE(row.point);
      CHECK(row.pass);
    }
  }

  SECTION("the constant zero sequence is exact") {
    PiecewiseSeq zero;
    zero.final_value = Ordinal();
    const ExactCheckReport r = check_exact(InitialFnId::EndLog, zero, points);
    CHECK(r.all_pass);
  }

  SECTION("altering the omega entry breaks exactness exactly there") {
    PiecewiseSeq altered = epsilon_one_sequence();
    altered.pieces[1].value = Ordinal::nat(3);
    const ExactCheckReport r = check_exact(InitialFnId::EndLog, altered, points);
    CHECK(!r.all_pass);
    bool failed_at_omega = false;
    for (const ExactCheckResult& row : r.results) {
      if (row.point == Ordinal::omega()) {
        failed_at_omega = !row.pass;
      } else if (compare(row.point, Ordinal::omega()) == std::strong_ordering::less) {
        CHECK(row.pass);  // the finite prefix is still consistent
      }
    }
    CHECK(failed_at_omega);
  }

  SECTION("witnesses are below their points") {
    const ExactCheckReport r = check_exact(InitialFnId::EndLog, epsilon_one_sequence(), points);
    for (const ExactCheckResult& row : r.results) {
      if (row.witness)
        CHECK(compare(*row.witness, row.point) == std::strong_ordering::less);
    }
  }

  SECTION("misordered piece bounds are rejected") {
    PiecewiseSeq bad;
    bad.pieces.push_back({ord("w+1"), Ordinal::nat(2)});
    bad.pieces.push_back({Ordinal::omega(), ord("eps(1)")});
    bad.final_value = Ordinal();
    CHECK_THROWS_AS(check_exact(InitialFnId::EndLog, bad, points), domain_error);
  }
}

TEST_CASE("transport along the index sum") {
  SampleRng rng(71);
  for (int i = 0; i < 150; ++i) {
    const InitialFnId g = rng.chance(50) ? InitialFnId::EndLog : InitialFnId::LeftLog;
    const Ordinal xi = random_ordinal(rng, 3);
    const Ordinal zeta = random_ordinal(rng, 3);
    const Ordinal v0 = random_ordinal(rng, 4);
    const ExactSeqSpec s{g, v0, add(add(xi, zeta), Ordinal::nat(1))};
    CAPTURE(xi, zeta, v0);
    CHECK(exact_value(s, add(xi, zeta)) == hyper_log(g, zeta, exact_value(s, xi)));
  }
}
