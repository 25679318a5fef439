#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmds/poly.hpp"

using namespace qmds;

namespace {

Poly random_poly(const FieldCtxPtr& ctx, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg_dist(-1, max_deg);
  const int deg = deg_dist(rng);
  std::vector<Coeffs> c;
  std::uniform_int_distribution<std::uint64_t> el(0, ctx->size() - 1);
  for (int i = 0; i <= deg; ++i) c.push_back(ctx->from_index(el(rng)).coeffs());
  return Poly(ctx, std::move(c));
}

}  // namespace

TEST_CASE("divmod round-trips against multiplication") {
  const auto ctx = FieldCtx::make(PrimePower::make(31), 2);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(ctx, 12, rng);
    Poly b = random_poly(ctx, 6, rng);
    if (b.is_zero()) b = Poly::one(ctx);
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("eval by Horner matches explicit powers") {
  const auto ctx = FieldCtx::make(PrimePower::make(3), 2);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const Poly f = random_poly(ctx, 8, rng);
    const FieldElement x = ctx->from_index(rng() % ctx->size());
    FieldElement direct = ctx->zero();
    for (std::size_t j = 0; j < f.coeff_count(); ++j) direct = direct + f.coeff(j) * x.pow(j);
    CHECK(f.eval(x) == direct);
  }
}

TEST_CASE("x_to_n_minus_c splits into linear factors at roots of unity") {
  // x^5 - eta over GF(81) with eta = w^5 for a primitive 20th root w.
  const FieldTower t = build_tower(PrimePower::make(3));
  const FieldElement w = primitive_root_of_unity(t.gf_q4, 20);
  const FieldElement eta4 = w.pow(5);
  const Poly f = Poly::x_to_n_minus_c(t.gf_q4, 5, eta4);
  for (std::uint64_t i = 0; i < 5; ++i) {
    CHECK(f.eval(w.pow(1 + 4 * i)).is_zero());  // the roots are w^(1+4i)
  }
  CHECK_FALSE(f.eval(w.pow(2)).is_zero());
}

TEST_CASE("gcd of coprime factors") {
  const auto ctx = FieldCtx::make(PrimePower::make(5), 2);
  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(ctx, 5, rng);
    Poly b = random_poly(ctx, 5, rng);
    if (a.is_zero() || b.is_zero()) continue;
    const Poly g = Poly::gcd(a, b);
    CHECK(a.divmod(g).rem.is_zero());
    CHECK(b.divmod(g).rem.is_zero());
  }
}

TEST_CASE("irreducibility agrees with root counting for quadratics") {
  const auto gf9 = FieldCtx::make(PrimePower::make(3), 2);
  int irreducible_count = 0;
  for (std::uint64_t c0 = 0; c0 < 9; ++c0) {
    for (std::uint64_t c1 = 0; c1 < 9; ++c1) {
      const Poly f(gf9, {gf9->from_index(c0).coeffs(), gf9->from_index(c1).coeffs(), gf9->one().coeffs()});
      bool has_root = false;
      for (std::uint64_t x = 0; x < 9 && !has_root; ++x) has_root = f.eval(gf9->from_index(x)).is_zero();
      CHECK(is_irreducible(f) == !has_root);
      irreducible_count += is_irreducible(f);
    }
  }
  CHECK(irreducible_count == (81 - 9) / 2);  // (q^2 - q)/2 monic irreducible quadratics
}

TEST_CASE("pow_mod") {
  const auto ctx = FieldCtx::make(PrimePower::make(3), 1);
  // x^9 == x (mod x^2 + 1) over GF(3): Frobenius fixes the roots' field.
  const Poly mod(ctx, {ctx->one().coeffs(), ctx->zero().coeffs(), ctx->one().coeffs()});
  const Poly x = Poly::monomial(ctx->one(), 1);
  CHECK(Poly::pow_mod(x, 9, mod) == x);
  CHECK(Poly::pow_mod(x, 3, mod) != x);
}
