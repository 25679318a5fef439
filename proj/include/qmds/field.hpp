#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qmds/numeric.hpp"

namespace qmds {

using Residue = std::uint32_t;
using Coeffs = std::vector<Residue>;  // little-endian coefficients over GF(p)

// q = p^l with p prime.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned l = 1;
  std::uint64_t q = 0;

  static PrimePower make(std::uint64_t p, unsigned l = 1);  // throws if p not prime
  static PrimePower from_q(std::uint64_t q);                // factors q
};

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldCtxPtr ctx, Coeffs coeffs);

  const FieldCtxPtr& ctx() const { return ctx_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;  // throws on zero divisor
  FieldElement operator-() const;
  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  FieldElement pow(std::uint64_t e) const;
  FieldElement inverse() const;
  FieldElement conj() const;  // Frobenius a -> a^q with q from the underlying prime power

  // Position of the element in the canonical enumeration order: the value of
  // its coefficient vector read as little-endian base-p digits.
  std::uint64_t index() const;

 private:
  FieldCtxPtr ctx_;
  Coeffs coeffs_;
};

// One level of the tower GF(p) <= GF(q^2) <= GF(q^4).
//
// Levels up to GF(q^2) are represented as GF(p)[x]/(f) with f monic
// irreducible, found by deterministic search: candidate non-leading
// coefficient vectors are enumerated in increasing packed order, where
// pack(c_0..c_{k-1}) = sum c_i p^i. GF(q^4) is a quadratic extension
// GF(q^2)[y]/(y^2 + mu1 y + mu0) over that, with (mu0, mu1) searched in the
// same packed order, so that subfield projection is coefficient extraction.
//
// The multiplicative generator is canonical as well: the first element in
// packed order whose order is size()-1. Everything is computed at
// construction; a context is immutable afterwards and safe to share across
// threads. Fields with at most 2^20 elements also carry log/exp tables used
// by the packed-index operations.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // Builds GF(p^k). k is the extension degree over GF(p); k = 4l produces the
  // two-step tower with an internally constructed GF(q^2) subfield.
  static FieldCtxPtr make(const PrimePower& pp, unsigned k);
  // Quadratic extension over an existing context (used to share the subfield
  // handle between tower levels).
  static FieldCtxPtr make_quadratic_ext(FieldCtxPtr sub);

  const PrimePower& prime_power() const { return pp_; }
  std::uint64_t p() const { return pp_.p; }
  unsigned degree() const { return degree_; }   // over GF(p)
  std::uint64_t size() const { return size_; }  // p^degree
  const std::vector<std::uint64_t>& unit_group_primes() const { return unit_primes_; }

  bool is_quadratic_ext() const { return sub_ != nullptr; }
  const FieldCtxPtr& subfield() const { return sub_; }
  const Coeffs& modulus() const { return modulus_; }  // base levels only
  const Coeffs& quad_mu0() const { return quad_mu0_; }
  const Coeffs& quad_mu1() const { return quad_mu1_; }
  bool has_tables() const { return !exp_.empty(); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_residues(Coeffs c) const;        // validates range/length
  FieldElement from_index(std::uint64_t idx) const;  // inverse of FieldElement::index()
  FieldElement generator() const;

  // Residue-span kernels. Spans have length degree(); outputs may alias
  // inputs. All arithmetic is exact.
  void op_add(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const;
  void op_sub(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const;
  void op_neg(std::span<const Residue> a, std::span<Residue> out) const;
  void op_mul(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const;
  void op_inv(std::span<const Residue> a, std::span<Residue> out) const;  // throws on zero
  void op_pow(std::span<const Residue> a, std::uint64_t e, std::span<Residue> out) const;
  void op_conj(std::span<const Residue> a, std::span<Residue> out) const;
  bool op_is_zero(std::span<const Residue> a) const;

  std::uint64_t pack(std::span<const Residue> a) const;
  void unpack(std::uint64_t idx, std::span<Residue> out) const;

  // Packed-index operations; table-backed when has_tables().
  std::uint64_t idx_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t idx_sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t idx_neg(std::uint64_t a) const;
  std::uint64_t idx_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t idx_inv(std::uint64_t a) const;
  std::uint64_t idx_conj(std::uint64_t a) const;

  // True iff the element has multiplicative order exactly n (n | size()-1).
  bool element_order_is(std::span<const Residue> a, std::uint64_t n) const;

 private:
  FieldCtx() = default;

  void build_generator_and_tables();

  PrimePower pp_;
  unsigned degree_ = 1;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> unit_primes_;  // distinct primes of size()-1
  Coeffs modulus_;                          // base: monic, length degree_+1
  FieldCtxPtr sub_;                         // quadratic ext: GF(q^2)
  Coeffs quad_mu0_, quad_mu1_;              // quadratic ext: y^2 + mu1 y + mu0
  Coeffs generator_;
  std::vector<std::uint32_t> exp_, log_;    // present iff size_ <= kTableLimit
};

// GF(p) <= GF(q^2) <= GF(q^4) with a shared GF(q^2) handle.
struct FieldTower {
  PrimePower pp;
  FieldCtxPtr gf_p;
  FieldCtxPtr gf_q2;
  FieldCtxPtr gf_q4;
};

FieldTower build_tower(const PrimePower& pp);

// Embeds an element of ext->subfield() into ext (zero-extension).
FieldElement embed_in_ext(const FieldElement& a, const FieldCtxPtr& ext);
// Inverse of embed_in_ext; throws std::domain_error if a is not in the
// subfield (equivalently, if a^(|sub|) != a).
FieldElement project_to_subfield(const FieldElement& a);

// The canonical root of unity of exact order `order`: generator^((size-1)/order).
// Throws std::domain_error unless order divides size()-1.
FieldElement primitive_root_of_unity(const FieldCtxPtr& ctx, std::uint64_t order);

}  // namespace qmds
