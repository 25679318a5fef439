#include "qmds/poly.hpp"

#include <stdexcept>

namespace qmds {

namespace {

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp) {
  unsigned __int128 v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    v *= base;
    if (v > ~static_cast<std::uint64_t>(0)) {
      throw std::invalid_argument("field order power exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Poly::Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("Poly: null context");
}

Poly::Poly(FieldCtxPtr ctx, std::vector<Coeffs> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (!ctx_) throw std::invalid_argument("Poly: null context");
  for (const Coeffs& co : c_) {
    if (co.size() != ctx_->degree()) throw std::invalid_argument("Poly: coefficient size mismatch");
  }
  normalize();
}

Poly Poly::zero(FieldCtxPtr ctx) { return Poly(std::move(ctx)); }

Poly Poly::one(FieldCtxPtr ctx) {
  Poly p(ctx);
  p.c_.push_back(ctx->one().coeffs());
  return p;
}

Poly Poly::constant(const FieldElement& c) {
  Poly p(c.ctx());
  p.c_.push_back(c.coeffs());
  p.normalize();
  return p;
}

Poly Poly::monomial(const FieldElement& c, std::size_t deg) {
  Poly p(c.ctx());
  if (!c.is_zero()) {
    p.c_.assign(deg + 1, c.ctx()->zero().coeffs());
    p.c_[deg] = c.coeffs();
  }
  return p;
}

Poly Poly::x_to_n_minus_c(const FieldCtxPtr& ctx, std::uint64_t n, const FieldElement& c) {
  if (c.ctx() != ctx) throw std::invalid_argument("Poly: field context mismatch");
  Poly p(ctx);
  p.c_.assign(n + 1, ctx->zero().coeffs());
  Coeffs neg(ctx->degree());
  ctx->op_neg(c.coeffs(), neg);
  p.c_[0] = std::move(neg);
  p.c_[n] = ctx->one().coeffs();
  p.normalize();
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && ctx_->op_is_zero(c_.back())) c_.pop_back();
}

bool Poly::is_monic() const {
  if (c_.empty()) return false;
  const Coeffs& lead = c_.back();
  if (lead[0] != 1) return false;
  for (std::size_t i = 1; i < lead.size(); ++i) {
    if (lead[i] != 0) return false;
  }
  return true;
}

FieldElement Poly::coeff(std::size_t i) const {
  if (i < c_.size()) return FieldElement(ctx_, c_[i]);
  return ctx_->zero();
}

Poly Poly::operator+(const Poly& rhs) const {
  if (ctx_ != rhs.ctx_) throw std::invalid_argument("Poly: field context mismatch");
  Poly out(ctx_);
  out.c_.resize(std::max(c_.size(), rhs.c_.size()), ctx_->zero().coeffs());
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    if (i < c_.size() && i < rhs.c_.size()) {
      ctx_->op_add(c_[i], rhs.c_[i], out.c_[i]);
    } else if (i < c_.size()) {
      out.c_[i] = c_[i];
    } else {
      out.c_[i] = rhs.c_[i];
    }
  }
  out.normalize();
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  if (ctx_ != rhs.ctx_) throw std::invalid_argument("Poly: field context mismatch");
  Poly out(ctx_);
  out.c_.resize(std::max(c_.size(), rhs.c_.size()), ctx_->zero().coeffs());
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    if (i < c_.size() && i < rhs.c_.size()) {
      ctx_->op_sub(c_[i], rhs.c_[i], out.c_[i]);
    } else if (i < c_.size()) {
      out.c_[i] = c_[i];
    } else {
      ctx_->op_neg(rhs.c_[i], out.c_[i]);
    }
  }
  out.normalize();
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (ctx_ != rhs.ctx_) throw std::invalid_argument("Poly: field context mismatch");
  if (is_zero() || rhs.is_zero()) return Poly(ctx_);
  Poly out(ctx_);
  out.c_.assign(c_.size() + rhs.c_.size() - 1, ctx_->zero().coeffs());
  Coeffs tmp(ctx_->degree());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (ctx_->op_is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      ctx_->op_mul(c_[i], rhs.c_[j], tmp);
      ctx_->op_add(out.c_[i + j], tmp, out.c_[i + j]);
    }
  }
  out.normalize();
  return out;
}

bool Poly::operator==(const Poly& rhs) const { return ctx_ == rhs.ctx_ && c_ == rhs.c_; }

PolyDivMod Poly::divmod(const Poly& den) const {
  if (ctx_ != den.ctx_) throw std::invalid_argument("Poly: field context mismatch");
  if (den.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  Poly quot(ctx_), rem = *this;
  if (degree() < den.degree()) return {std::move(quot), std::move(rem)};

  quot.c_.assign(c_.size() - den.c_.size() + 1, ctx_->zero().coeffs());
  Coeffs lead_inv(ctx_->degree());
  ctx_->op_inv(den.c_.back(), lead_inv);
  Coeffs factor(ctx_->degree()), tmp(ctx_->degree());
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const std::size_t shift = rem.c_.size() - den.c_.size();
    ctx_->op_mul(rem.c_.back(), lead_inv, factor);
    quot.c_[shift] = factor;
    for (std::size_t j = 0; j < den.c_.size(); ++j) {
      ctx_->op_mul(factor, den.c_[j], tmp);
      ctx_->op_sub(rem.c_[shift + j], tmp, rem.c_[shift + j]);
    }
    rem.normalize();
  }
  quot.normalize();
  return {std::move(quot), std::move(rem)};
}

FieldElement Poly::eval(const FieldElement& x) const {
  if (x.ctx() != ctx_) throw std::invalid_argument("Poly: field context mismatch");
  Coeffs acc = ctx_->zero().coeffs();
  Coeffs tmp(ctx_->degree());
  for (std::size_t i = c_.size(); i-- > 0;) {
    ctx_->op_mul(acc, x.coeffs(), tmp);
    ctx_->op_add(tmp, c_[i], acc);
  }
  return FieldElement(ctx_, std::move(acc));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("Poly: cannot normalize the zero polynomial");
  Coeffs lead_inv(ctx_->degree());
  ctx_->op_inv(c_.back(), lead_inv);
  Poly out(ctx_);
  out.c_.resize(c_.size(), ctx_->zero().coeffs());
  for (std::size_t i = 0; i < c_.size(); ++i) ctx_->op_mul(c_[i], lead_inv, out.c_[i]);
  return out;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly Poly::pow_mod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly acc = Poly::one(base.ctx());
  Poly b = base.divmod(mod).rem;
  while (e != 0) {
    if (e & 1) acc = (acc * b).divmod(mod).rem;
    e >>= 1;
    if (e != 0) b = (b * b).divmod(mod).rem;
  }
  return acc;
}

bool is_irreducible(const Poly& f) {
  const int k = f.degree();
  if (k < 1) return false;
  if (!f.is_monic()) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  const FieldCtxPtr& ctx = f.ctx();
  const Poly x = Poly::monomial(ctx->one(), 1);
  const Poly x_red = x.divmod(f).rem;

  const std::uint64_t top = checked_pow_u64(ctx->size(), static_cast<unsigned>(k));
  if (Poly::pow_mod(x, top, f) != x_red) return false;
  for (std::uint64_t pi : prime_factors(static_cast<std::uint64_t>(k))) {
    const std::uint64_t e = checked_pow_u64(ctx->size(), static_cast<unsigned>(k / pi));
    const Poly t = Poly::pow_mod(x, e, f) - x_red;
    if (Poly::gcd(t, f).degree() != 0) return false;
  }
  return true;
}

}  // namespace qmds
