#pragma once

#include <cstdint>
#include <vector>

#include "qmds/field.hpp"

namespace qmds {

struct PolyDivMod;

// Dense univariate polynomial over a fixed field context. Coefficients are
// little-endian with no trailing zeros, so degree() == coefficient count - 1
// and the zero polynomial has degree -1.
class Poly {
 public:
  explicit Poly(FieldCtxPtr ctx);
  Poly(FieldCtxPtr ctx, std::vector<Coeffs> coeffs);  // normalizes

  static Poly zero(FieldCtxPtr ctx);
  static Poly one(FieldCtxPtr ctx);
  static Poly constant(const FieldElement& c);
  static Poly monomial(const FieldElement& c, std::size_t deg);  // c * x^deg
  static Poly x_to_n_minus_c(const FieldCtxPtr& ctx, std::uint64_t n, const FieldElement& c);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  std::size_t coeff_count() const { return c_.size(); }
  FieldElement coeff(std::size_t i) const;  // zero beyond the degree
  const std::vector<Coeffs>& raw_coeffs() const { return c_; }

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  // Exact division with remainder; the divisor must be nonzero.
  PolyDivMod divmod(const Poly& den) const;

  FieldElement eval(const FieldElement& x) const;
  Poly monic() const;  // throws on zero

  static Poly gcd(Poly a, Poly b);  // monic gcd, gcd(0,0) = 0
  static Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod);

 private:
  void normalize();

  FieldCtxPtr ctx_;
  std::vector<Coeffs> c_;
};

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

// Rabin irreducibility test for a monic polynomial of degree >= 1 over its
// coefficient field F: f is irreducible iff x^(|F|^k) == x (mod f) and, for
// every prime divisor pi of k, gcd(x^(|F|^(k/pi)) - x mod f, f) = 1.
bool is_irreducible(const Poly& f);

}  // namespace qmds
