#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "gamma0/gamma0.hpp"

using namespace gamma0;

namespace {

Ordinal ord(std::string_view s) { return eval(s); }

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (const char c : s)
    if (c != ' ') out += c;
  return out;
}

}  // namespace

TEST_CASE("parsing the grammar") {
  CHECK(ord("w^w + w^3 + 2") == add(add(ord("w^w"), ord("w^3")), Ordinal::nat(2)));
  CHECK(ord("e[w](2)") == hyper_e(Ordinal::omega(), Ordinal::nat(2)));
  CHECK(ord("eps(1)") == veblen(Ordinal::nat(1), Ordinal::nat(1)));
  CHECK(ord("phi(1,0)") == ord("eps(0)"));
  CHECK(ord(" w ^ w ") == ord("w^w"));
  CHECK(ord("w^w^2") == omega_pow(ord("w^2")));
  CHECK(ord("(w+1)*w") == mul(ord("w+1"), Ordinal::omega()));
  CHECK(ord("l[w](eps(1))") == Ordinal::nat(2));
  CHECK(ord("L[1](w^w+w^3)") == Ordinal::omega());
  CHECK(ord("lfp(phi, w^w)") == ord("eps(0)"));
  CHECK(ord("lfp(phi[1], eps(1))") == ord("phi(2,0)"));
  CHECK(ord("lfp(e, 0)").is_zero());
  CHECK(ord("0").is_zero());
}

TEST_CASE("positioned syntax errors") {
  const auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse(text);
    } catch (const parse_error& e) {
      CHECK(!e.expected.empty());
      return e.offset;
    }
    FAIL("expected a parse error for: " << std::string(text));
    return SIZE_MAX;
  };

  CHECK(offset_of("phi(0,)") == 6);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("w^") == 2);
  CHECK(offset_of("e[w](") == 5);
  CHECK(offset_of("1+") == 2);
  CHECK(offset_of("phi(1 2)") == 6);
  CHECK(offset_of("((w)") == 4);
  CHECK(offset_of("w**2") == 2);
  CHECK(offset_of("foo") == 0);
  CHECK(offset_of("l[w]") == 4);
  CHECK(offset_of("2 3") == 2);
  CHECK(offset_of("e(2)") == 1);
  CHECK(offset_of("lfp(w,1)") == 4);
  CHECK(offset_of("99999999999999999999999") == 0);

  SECTION("deep nesting is rejected, not crashed on") {
    std::string deep;
    for (int i = 0; i < 100000; ++i) deep += "(";
    CHECK_THROWS_AS(parse(deep), parse_error);
    std::string pow = "w";
    for (int i = 0; i < 100000; ++i) pow += "^w";
    CHECK_THROWS_AS(parse(pow), parse_error);
  }
}

TEST_CASE("parser totality on arbitrary bytes") {
  SampleRng rng(81);
  const char alphabet[] = "wphielLps0123456789+*^()[], \t\xF0\x9F\x98\x80";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    const std::uint64_t len = rng.next(24);
    for (std::uint64_t k = 0; k < len; ++k)
      s += alphabet[rng.next(sizeof(alphabet) - 1)];
    try {
      const Ordinal a = eval(s);
      CHECK(is_canonical(a));  // whatever parses must evaluate canonically
    } catch (const parse_error& e) {
      CHECK(e.offset <= s.size());
    } catch (const domain_error&) {
      // evaluation-level rejection (e.g. lfp preconditions) is fine
    }
  }
}

TEST_CASE("printing normal forms") {
  SECTION("the displayed Veblen normal form of w^(eps0+1) + eps0") {
    const Ordinal a = ord("w^(eps(0)+1) + eps(0)");
    CHECK(strip_spaces(print_nf(a, NfStyle::Vnf)) ==
          "phi(0,phi(phi(0,0),0)+phi(0,0))+phi(phi(0,0),0)");
  }

  SECTION("zero prints as zero in every style") {
    CHECK(print_nf(Ordinal(), NfStyle::Vnf) == "0");
    CHECK(print_nf(Ordinal(), NfStyle::Cnf) == "0");
    CHECK(print_nf(Ordinal(), NfStyle::Whnf) == "0");
    CHECK(print_sugar(Ordinal()) == "0");
    CHECK(print_pretty(Ordinal()) == "0");
  }

  CHECK(print_nf(ord("eps(1)"), NfStyle::Whnf) == "e[w](2)");
  CHECK(print_nf(ord("w^w+w^3+2"), NfStyle::Cnf) == "w^w + w^3 + 2");
  CHECK(print_nf(ord("eps(0)"), NfStyle::Cnf) == "phi(1,0)");
  CHECK(print_nf(Ordinal::nat(3), NfStyle::Vnf) == "phi(0,0) + phi(0,0) + phi(0,0)");
  CHECK(print_sugar(ord("e[w](2)")) == "eps(1)");
  CHECK(print_sugar(ord("1+w")) == "w");
  CHECK(print_sugar(ord("w+w+3")) == "w*2 + 3");
  CHECK(print_sugar(ord("phi(2,0)")) == "phi(2,0)");
  CHECK(print_pretty(ord("w^w + w^3 + 2")) == "ω^ω + ω^3 + 2");
  CHECK(print_pretty(ord("eps(0)")) == "ε₀");

  SECTION("round trips through every parseable style") {
    SampleRng rng(82);
    for (int i = 0; i < 400; ++i) {
      const Ordinal a = random_ordinal(rng, 4);
      CAPTURE(a);
      CHECK(eval(print_nf(a, NfStyle::Vnf)) == a);
      CHECK(eval(print_nf(a, NfStyle::Cnf)) == a);
      CHECK(eval(print_nf(a, NfStyle::Whnf)) == a);
      CHECK(eval(print_sugar(a)) == a);
    }
  }

  SECTION("printing is deterministic and stable under reprinting") {
    SampleRng rng(83);
    for (int i = 0; i < 200; ++i) {
      const Ordinal a = random_ordinal(rng, 4);
      const std::string once = print_nf(a, NfStyle::Cnf);
      CHECK(print_nf(eval(once), NfStyle::Cnf) == once);
    }
  }
}
