#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qmds/field.hpp"

using namespace qmds;

namespace {

FieldElement random_element(const FieldCtxPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx->size() - 1);
  return ctx->from_index(dist(rng));
}

// Distributivity, associativity, commutativity, inverses, Frobenius.
void algebra_suite(const FieldCtxPtr& ctx, int cases) {
  std::mt19937_64 rng(0x5eed0000 + ctx->size());
  for (int i = 0; i < cases; ++i) {
    const FieldElement a = random_element(ctx, rng);
    const FieldElement b = random_element(ctx, rng);
    const FieldElement c = random_element(ctx, rng);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE((a + (-a)).is_zero());
    if (!a.is_zero()) {
      REQUIRE(a * a.inverse() == ctx->one());
      REQUIRE(a.pow(ctx->size() - 1) == ctx->one());  // Lagrange
    }
    const auto p = ctx->p();
    REQUIRE((a + b).pow(p) == a.pow(p) + b.pow(p));  // Frobenius
  }
}

}  // namespace

TEST_CASE("prime power validation") {
  CHECK_THROWS_AS(PrimePower::make(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower::make(1), std::invalid_argument);
  const PrimePower p31 = PrimePower::make(31);
  CHECK(p31.q == 31);
  const PrimePower p81 = PrimePower::from_q(81);
  CHECK(p81.p == 3);
  CHECK(p81.l == 4);
}

TEST_CASE("GF(9) construction picks x^2+1 and generator order 8") {
  const auto ctx = FieldCtx::make(PrimePower::make(3), 2);
  CHECK(ctx->size() == 9);
  // -1 is a non-residue mod 3, so x^2 + 1 is the first irreducible candidate.
  CHECK(ctx->modulus() == Coeffs{1, 0, 1});
  CHECK(ctx->element_order_is(ctx->generator().coeffs(), 8));
}

TEST_CASE("GF(961) context") {
  const auto ctx = FieldCtx::make(PrimePower::make(31), 2);
  CHECK(ctx->size() == 961);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const FieldElement a = random_element(ctx, rng);
    if (!a.is_zero()) CHECK(a.pow(960) == ctx->one());
  }
}

TEST_CASE("extension degree must fit the tower") {
  CHECK_THROWS_AS(FieldCtx::make(PrimePower::make(3), 3), std::invalid_argument);
}

TEST_CASE("conj is the q-Frobenius") {
  const auto ctx = FieldCtx::make(PrimePower::make(3), 2);  // GF(9), q = 3
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const FieldElement a = random_element(ctx, rng);
    CHECK(a.conj() == a.pow(3));
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("algebra laws on the five reference fields") {
  const PrimePower p3 = PrimePower::make(3);
  const PrimePower p31 = PrimePower::make(31);
  algebra_suite(FieldCtx::make(p3, 1), 1000);                       // GF(3)
  algebra_suite(FieldCtx::make(p3, 2), 1000);                       // GF(9)
  algebra_suite(FieldCtx::make(p3, 4), 1000);                       // GF(81)
  algebra_suite(FieldCtx::make(p31, 2), 1000);                      // GF(961)
  algebra_suite(FieldCtx::make(p31, 4), 1000);                      // GF(31^4)
}

TEST_CASE("quadratic extension tower and packed order") {
  const FieldTower tower = build_tower(PrimePower::make(3));
  CHECK(tower.gf_q2->size() == 9);
  CHECK(tower.gf_q4->size() == 81);
  CHECK(tower.gf_q4->subfield() == tower.gf_q2);
  // index() is the little-endian base-p digit value of the coefficients.
  const FieldElement g = tower.gf_q4->generator();
  CHECK(tower.gf_q4->from_index(g.index()) == g);
}

TEST_CASE("embed and project round-trip; projection rejects exactly non-subfield elements") {
  const FieldTower tower = build_tower(PrimePower::make(3));
  for (std::uint64_t i = 0; i < tower.gf_q2->size(); ++i) {
    const FieldElement b = tower.gf_q2->from_index(i);
    CHECK(project_to_subfield(embed_in_ext(b, tower.gf_q4)) == b);
  }
  // Exhaustive over GF(81): membership in GF(9) is exactly a^(q^2) == a.
  std::size_t in_subfield = 0;
  for (std::uint64_t i = 0; i < tower.gf_q4->size(); ++i) {
    const FieldElement a = tower.gf_q4->from_index(i);
    const bool fixed = a.pow(9) == a;
    bool projected = true;
    try {
      project_to_subfield(a);
    } catch (const std::domain_error&) {
      projected = false;
    }
    CHECK(fixed == projected);
    in_subfield += projected;
  }
  CHECK(in_subfield == 9);
}

TEST_CASE("roots of unity have exact orders") {
  const FieldTower t3 = build_tower(PrimePower::make(3));
  const FieldElement w20 = primitive_root_of_unity(t3.gf_q4, 20);
  CHECK(t3.gf_q4->element_order_is(w20.coeffs(), 20));
  CHECK(w20.pow(20) == t3.gf_q4->one());
  CHECK(w20.pow(4) != t3.gf_q4->one());
  CHECK(w20.pow(10) != t3.gf_q4->one());

  CHECK_THROWS_AS(primitive_root_of_unity(t3.gf_q2, 7), std::domain_error);  // 7 does not divide 8

  const FieldTower t31 = build_tower(PrimePower::make(31));
  // 2368 = 32 * 74 divides 31^4 - 1 = 923520 but not 31^2 - 1, so omega
  // lives only at the top level.
  CHECK((t31.gf_q2->size() - 1) % 2368 != 0);
  const FieldElement w = primitive_root_of_unity(t31.gf_q4, 2368);
  CHECK(t31.gf_q4->element_order_is(w.coeffs(), 2368));
  CHECK_THROWS_AS(project_to_subfield(w), std::domain_error);
  CHECK(w.pow(961) != w);  // omega^(q^2) != omega confirms it is outside GF(q^2)
}

TEST_CASE("division by zero and context mismatch") {
  const auto gf9a = FieldCtx::make(PrimePower::make(3), 2);
  const auto gf9b = FieldCtx::make(PrimePower::make(3), 2);
  CHECK_THROWS_AS(gf9a->one() / gf9a->zero(), std::domain_error);
  CHECK_THROWS_AS(gf9a->one() + gf9b->one(), std::invalid_argument);  // distinct contexts
}

TEST_CASE("packed-index operations agree with coefficient arithmetic") {
  for (unsigned k : {2u, 4u}) {
    const auto ctx = FieldCtx::make(PrimePower::make(31), k);
    std::mt19937_64 rng(500 + k);
    std::uniform_int_distribution<std::uint64_t> dist(0, ctx->size() - 1);
    for (int i = 0; i < 300; ++i) {
      const std::uint64_t x = dist(rng), y = dist(rng);
      const FieldElement a = ctx->from_index(x), b = ctx->from_index(y);
      CHECK(ctx->idx_add(x, y) == (a + b).index());
      CHECK(ctx->idx_mul(x, y) == (a * b).index());
      CHECK(ctx->idx_sub(x, y) == (a - b).index());
      CHECK(ctx->idx_conj(x) == a.conj().index());
      if (x != 0) CHECK(ctx->idx_inv(x) == a.inverse().index());
    }
  }
}

TEST_CASE("characteristic 2 base fields build through the generic search") {
  const auto gf4 = FieldCtx::make(PrimePower::make(2), 2);
  CHECK(gf4->size() == 4);
  CHECK(gf4->modulus() == Coeffs{1, 1, 1});  // x^2 + x + 1
  algebra_suite(gf4, 200);
}
