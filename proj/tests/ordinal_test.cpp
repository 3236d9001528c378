#include <catch2/catch_amalgamated.hpp>

#include "gamma0/gamma0.hpp"

using namespace gamma0;

namespace {

Ordinal ord(std::string_view s) { return eval(s); }

}  // namespace

TEST_CASE("comparison orders canonical forms") {
  const Ordinal w = Ordinal::omega();

  CHECK(compare(w, ord("w+1")) == std::strong_ordering::less);
  CHECK(compare(ord("1+w"), w) == std::strong_ordering::equal);
  CHECK(compare(ord("phi(1,0)"), ord("w^w")) == std::strong_ordering::greater);

  CHECK(compare(Ordinal(), Ordinal::nat(1)) == std::strong_ordering::less);
  CHECK(compare(ord("w^2"), ord("w*5+3")) == std::strong_ordering::greater);
  CHECK(compare(ord("w^(w+1)"), ord("w^w*5")) == std::strong_ordering::greater);
  CHECK(compare(ord("eps(0)"), ord("w^(eps(0)+1)")) == std::strong_ordering::less);
  CHECK(compare(ord("phi(2,0)"), ord("eps(eps(0))")) == std::strong_ordering::greater);
}

TEST_CASE("addition absorbs strictly smaller summands") {
  CHECK(add(Ordinal::nat(1), Ordinal::omega()) == Ordinal::omega());
  CHECK(!(add(Ordinal::omega(), Ordinal::nat(1)) == Ordinal::omega()));

  const Ordinal a = ord("w^w + eps(0)");  // absorbed: eps(0) dominates w^w
  CHECK(a == ord("eps(0)"));

  CHECK(add(ord("w^3+2"), ord("w^3")) == ord("w^3*2"));
  CHECK(add(ord("eps(1)+w"), ord("eps(0)")) == ord("eps(1)+eps(0)"));

  SECTION("right identity") {
    const Ordinal x = ord("phi(2,1) + w^w*2 + 4");
    CHECK(add(x, Ordinal()) == x);
  }
}

TEST_CASE("left subtraction is the unique additive witness") {
  CHECK(left_subtract(ord("w"), ord("w")).is_zero());
  CHECK(left_subtract(Ordinal::nat(1), Ordinal::omega()) == Ordinal::omega());
  CHECK(left_subtract(ord("w"), ord("w*2+3")) == ord("w+3"));
  CHECK(add(ord("w"), left_subtract(ord("w"), ord("w*2+3"))) == ord("w*2+3"));
  CHECK(left_subtract(ord("3"), ord("7")) == Ordinal::nat(4));
  CHECK(left_subtract(ord("eps(0)"), ord("eps(0)+w^2")) == ord("w^2"));

  SECTION("rejects a subtrahend above the minuend") {
    CHECK_THROWS_AS(left_subtract(ord("w+1"), ord("w")), domain_error);
    CHECK_THROWS_AS(left_subtract(ord("5"), ord("4")), domain_error);
    CHECK_THROWS_AS(left_subtract(ord("eps(1)"), ord("eps(0)*2")), domain_error);
  }
}

TEST_CASE("multiplication distributes over the right factor's normal form") {
  const Ordinal w = Ordinal::omega();
  CHECK(mul(ord("phi(1,2)+w"), Ordinal::nat(1)) == ord("phi(1,2)+w"));
  CHECK(mul(Ordinal::nat(2), w) == w);
  CHECK(mul(w, Ordinal::nat(2)) == ord("w+w"));
  CHECK(mul(w, w) == ord("w^2"));
  CHECK(mul(ord("w+1"), Ordinal::nat(2)) == ord("w*2+1"));
  CHECK(mul(ord("w+1"), w) == ord("w^2"));
  CHECK(mul(ord("w+1"), ord("w+2")) == ord("w^2 + w*2 + 1"));
  CHECK(mul(ord("eps(0)"), ord("eps(0)")) == ord("w^(eps(0)*2)"));
  CHECK(mul(Ordinal::nat(3), Ordinal::nat(4)) == Ordinal::nat(12));

  SECTION("finite multiples as iterated sums") {
    // The closed form must agree with literal repeated addition.
    SampleRng rng(11);
    for (int i = 0; i < 200; ++i) {
      const Ordinal x = random_ordinal(rng, 3);
      const std::uint64_t n = rng.next(5);
      Ordinal acc;
      for (std::uint64_t k = 0; k < n; ++k) acc = add(acc, x);
      CHECK(mul(x, Ordinal::nat(n)) == acc);
    }
  }
}

TEST_CASE("omega powers absorb their fixpoints") {
  CHECK(omega_pow(Ordinal()) == Ordinal::nat(1));
  CHECK(omega_pow(ord("eps(0)")) == ord("eps(0)"));
  CHECK(omega_pow(ord("phi(2,1)")) == ord("phi(2,1)"));
  CHECK(omega_pow(ord("w+1")) == ord("w^(w+1)"));
  CHECK(omega_pow(ord("eps(0)+1")) == ord("w^(eps(0)+1)"));
  CHECK(compare(ord("w+1"), omega_pow(ord("w+1"))) == std::strong_ordering::less);
}

TEST_CASE("end and left logarithms read the Cantor normal form") {
  CHECK(end_log(Ordinal()).is_zero());
  CHECK(end_log(ord("w^w + w^3")) == Ordinal::nat(3));
  CHECK(end_log(ord("eps(0)")) == ord("eps(0)"));
  CHECK(end_log(ord("w^5 + 2")).is_zero());

  CHECK(left_log(Ordinal()).is_zero());
  CHECK(left_log(ord("w^w + w^3")) == Ordinal::omega());
  CHECK(left_log(ord("eps(0)+1")) == ord("eps(0)"));
  CHECK(left_log(Ordinal::nat(7)).is_zero());

  SECTION("reconstruction witnesses") {
    const Ordinal a = ord("w^w + w^3");
    CHECK(add(omega_pow(left_log(a)), ord("w^3")) == a);
    CHECK(add(ord("w^w"), omega_pow(end_log(a))) == a);
  }
}

TEST_CASE("the modified exponential fixes zero") {
  CHECK(e_base(Ordinal()).is_zero());
  CHECK(e_base(Ordinal::nat(1)) == Ordinal::omega());
  CHECK(e_base(ord("eps(0)")) == ord("eps(0)"));
}

TEST_CASE("classification by finite tail") {
  CHECK(classify(Ordinal()) == OrdKind::Zero);
  CHECK(classify(ord("w+3")) == OrdKind::Successor);
  CHECK(classify(ord("w^w")) == OrdKind::Limit);
  CHECK(classify(Ordinal::nat(2)) == OrdKind::Successor);
}

TEST_CASE("cnf exponent lists") {
  CHECK(cnf_exponents(Ordinal()).empty());

  const auto exps = cnf_exponents(ord("w^w + w^3 + 2"));
  REQUIRE(exps.size() == 4);
  CHECK(exps[0] == Ordinal::omega());
  CHECK(exps[1] == Ordinal::nat(3));
  CHECK(exps[2].is_zero());
  CHECK(exps[3].is_zero());

  const auto eps_exps = cnf_exponents(ord("eps(0)"));
  REQUIRE(eps_exps.size() == 1);
  CHECK(eps_exps[0] == ord("eps(0)"));

  SECTION("rebuilding from exponents is the identity") {
    SampleRng rng(5);
    for (int i = 0; i < 300; ++i) {
      const Ordinal a = random_ordinal(rng, 4);
      Ordinal rebuilt;
      for (const Ordinal& e : cnf_exponents(a)) rebuilt = add(rebuilt, omega_pow(e));
      CHECK(rebuilt == a);
    }
  }
}

TEST_CASE("generated values satisfy every representation invariant") {
  SampleRng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Ordinal a = random_ordinal(rng, 5);
    CAPTURE(a);
    REQUIRE(is_canonical(a));
  }
}

TEST_CASE("natural overflow is rejected, not wrapped") {
  const Ordinal big = Ordinal::nat(UINT64_MAX);
  CHECK_THROWS_AS(add(big, Ordinal::nat(1)), domain_error);
  CHECK_THROWS_AS(mul(big, Ordinal::nat(2)), domain_error);
}

TEST_CASE("unit-list expansions are bounded by a typed error") {
  const Ordinal huge = Ordinal::nat(max_unit_expansion + 1);
  CHECK_THROWS_AS(mul(Ordinal::omega(), huge), domain_error);
  CHECK_THROWS_AS(cnf_exponents(huge), domain_error);
  CHECK_THROWS_AS(print_nf(huge, NfStyle::Vnf), domain_error);
  // Values themselves are exact; only the unit expansion is refused.
  CHECK(add(huge, huge).trailing_nat() == 2 * (max_unit_expansion + 1));
  CHECK(print_sugar(huge) == std::to_string(max_unit_expansion + 1));
}
