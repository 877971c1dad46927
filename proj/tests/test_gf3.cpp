#include <doctest.h>

#include <random>
#include <stdexcept>
#include <set>

#include "ree/gf3.hpp"

using namespace ree;

namespace {

// test-side oracle: evaluate a polynomial (low-first coeffs) at x over F_3
int eval_mod3(const std::vector<uint8_t>& poly, int x) {
  int r = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = (r * x + *it) % 3;
  return r;
}

FieldElement random_element(const FieldSpec& s, std::mt19937& rng) {
  return s.decode(std::uniform_int_distribution<uint64_t>(0, s.q - 1)(rng));
}

}  // namespace

TEST_CASE("field_build rejects k < 1") {
  CHECK_THROWS_AS(field_build(0), std::invalid_argument);
  CHECK_THROWS_AS(field_build(-3), std::invalid_argument);
}

TEST_CASE("k=1 modulus is the lexicographically smallest irreducible cubic") {
  const FieldSpec s = field_build(1);
  CHECK(s.q == 27);
  CHECK(s.n == 3);
  // x^3 + 2x + 1, coefficients low-first
  CHECK(s.modulus == std::vector<uint8_t>{1, 2, 0, 1});

  // oracle: scan all 27 monic cubics in base-3 digit order; a cubic over F_3
  // is irreducible iff it has no roots
  uint64_t first = 27;
  for (uint64_t code = 0; code < 27; ++code) {
    std::vector<uint8_t> mod = {static_cast<uint8_t>(code % 3),
                                static_cast<uint8_t>(code / 3 % 3),
                                static_cast<uint8_t>(code / 9 % 3), 1};
    bool has_root = false;
    for (int x = 0; x < 3; ++x)
      if (eval_mod3(mod, x) == 0) has_root = true;
    if (!has_root) {
      first = code;
      break;
    }
  }
  CHECK(first == 1 + 3 * 2);  // c0=1, c1=2, c2=0
}

TEST_CASE("field sizes") {
  CHECK(field_build(1).q == 27);
  CHECK(field_build(2).q == 243);
}

TEST_CASE("k=1 spot product: x * x^2 = x + 2") {
  const FieldSpec s = field_build(1);
  const FieldElement x = s.monomial(1);
  const FieldElement x2 = s.monomial(2);
  FieldElement want = s.zero();
  want.c = {2, 1, 0};
  CHECK(field_mul(s, x, x2) == want);
}

TEST_CASE("field axioms on random triples, k = 1 and 2") {
  std::mt19937 rng(7);
  for (int k : {1, 2}) {
    const FieldSpec s = field_build(k);
    for (int i = 0; i < 1000; ++i) {
      const FieldElement a = random_element(s, rng);
      const FieldElement b = random_element(s, rng);
      const FieldElement c = random_element(s, rng);
      CHECK(field_mul(s, a, field_mul(s, b, c)) == field_mul(s, field_mul(s, a, b), c));
      CHECK(field_add(s, a, field_add(s, b, c)) == field_add(s, field_add(s, a, b), c));
      CHECK(field_mul(s, a, field_add(s, b, c)) ==
            field_add(s, field_mul(s, a, b), field_mul(s, a, c)));
      CHECK(field_mul(s, s.one(), a) == a);
      if (!(a == s.zero())) CHECK(field_mul(s, a, field_inv(s, a)) == s.one());
    }
  }
}

TEST_CASE("a^q = a: exhaustive at k=1, sampled at k=2") {
  const FieldSpec s1 = field_build(1);
  for (uint64_t code = 0; code < 27; ++code) {
    const FieldElement a = s1.decode(code);
    CHECK(field_pow(s1, a, s1.q) == a);
  }
  const FieldSpec s2 = field_build(2);
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const FieldElement a = random_element(s2, rng);
    CHECK(field_pow(s2, a, s2.q) == a);
  }
}

TEST_CASE("theta is a field automorphism with (theta(theta(a)))^3 = a") {
  const FieldSpec s = field_build(1);
  CHECK(theta(s, s.zero()) == s.zero());
  CHECK(theta(s, s.one()) == s.one());
  // k=1: theta is the cube map on every element
  for (uint64_t a = 0; a < 27; ++a)
    CHECK(theta(s, s.decode(a)) == field_pow(s, s.decode(a), 3));
  FieldElement want = s.zero();
  want.c = {2, 1, 0};
  CHECK(theta(s, s.monomial(1)) == want);
  for (uint64_t a = 0; a < 27; ++a) {
    const FieldElement ea = s.decode(a);
    CHECK(field_pow(s, theta(s, theta(s, ea)), 3) == ea);
    for (uint64_t b = 0; b < 27; ++b) {
      const FieldElement eb = s.decode(b);
      CHECK(theta(s, field_mul(s, ea, eb)) == field_mul(s, theta(s, ea), theta(s, eb)));
      CHECK(theta(s, field_add(s, ea, eb)) == field_add(s, theta(s, ea), theta(s, eb)));
    }
  }
}

TEST_CASE("field_inv(0) is a division-by-zero error") {
  const FieldSpec s = field_build(1);
  CHECK_THROWS_AS(field_inv(s, s.zero()), std::domain_error);
}

TEST_CASE("primitive root and the certified unit solution sets") {
  for (int k : {1, 2}) {
    const FieldSpec s = field_build(k);
    const PrimitiveRootData pr = primitive_root(s);
    CHECK(element_order(s, pr.g) == s.q - 1);
    // no smaller element generates
    for (uint64_t code = 1; code < s.encode(pr.g); ++code)
      CHECK(element_order(s, s.decode(code)) < s.q - 1);
    // w^{3theta-1} = 1 exactly on {1,-1}; w^{2-3theta} = 1 exactly on {1}
    REQUIRE(pr.solutions_pow_3theta_minus_1.size() == 2);
    CHECK(pr.solutions_pow_3theta_minus_1[0] == s.one());
    CHECK(pr.solutions_pow_3theta_minus_1[1] == field_neg(s, s.one()));
    REQUIRE(pr.solutions_pow_2_minus_3theta.size() == 1);
    CHECK(pr.solutions_pow_2_minus_3theta[0] == s.one());
  }
  // k=1: the generator is x itself
  const FieldSpec s1 = field_build(1);
  CHECK(primitive_root(s1).g == s1.monomial(1));
}

TEST_CASE("encode/decode round-trip") {
  const FieldSpec s = field_build(2);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const uint64_t code = std::uniform_int_distribution<uint64_t>(0, s.q - 1)(rng);
    CHECK(s.encode(s.decode(code)) == code);
  }
}
