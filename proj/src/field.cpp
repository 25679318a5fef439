#include "qmds/field.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <stdexcept>
#include <string>

#include "qmds/poly.hpp"

namespace qmds {

namespace {

constexpr unsigned kMaxDegree = 16;             // residues per element
constexpr std::uint64_t kTableLimit = 1u << 20;  // log/exp table cutoff

using Buf = std::array<Residue, kMaxDegree>;
using WideBuf = std::array<std::uint64_t, 2 * kMaxDegree>;

// --- raw polynomial helpers over GF(p), used by the extended Euclid inverse ---

int raw_degree(const std::vector<std::uint64_t>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);  // p prime, a != 0
}

// rem <- rem - quotient * den in place; returns the quotient coefficients.
std::vector<std::uint64_t> raw_divmod(std::vector<std::uint64_t>& rem,
                                      const std::vector<std::uint64_t>& den,
                                      std::uint64_t p) {
  const int dd = raw_degree(den);
  std::vector<std::uint64_t> quot(rem.size(), 0);
  const std::uint64_t lead_inv = inv_mod_p(den[dd], p);
  for (int i = raw_degree(rem); i >= dd; i = raw_degree(rem)) {
    const std::uint64_t c = mul_mod(rem[i], lead_inv, p);
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      const std::uint64_t sub = mul_mod(c, den[j], p);
      rem[i - dd + j] = (rem[i - dd + j] + p - sub) % p;
    }
  }
  return quot;
}

}  // namespace

// --- PrimePower ---

PrimePower PrimePower::make(std::uint64_t p, unsigned l) {
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimePower: p = " + std::to_string(p) + " is not prime");
  }
  if (l < 1) throw std::invalid_argument("PrimePower: exponent must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < l; ++i) {
    if (q > 65535 / p + 1) throw std::invalid_argument("PrimePower: q exceeds supported range");
    q *= p;
  }
  if (q > 65535) throw std::invalid_argument("PrimePower: q exceeds supported range");
  return PrimePower{p, l, q};
}

PrimePower PrimePower::from_q(std::uint64_t q) {
  PrimePowerParts parts;
  if (!try_prime_power(q, parts)) {
    throw std::invalid_argument("PrimePower: " + std::to_string(q) + " is not a prime power");
  }
  return make(parts.p, parts.l);
}

// --- FieldElement ---

FieldElement::FieldElement(FieldCtxPtr ctx, Coeffs coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw std::invalid_argument("FieldElement: null context");
  if (coeffs_.size() != ctx_->degree()) throw std::invalid_argument("FieldElement: wrong coefficient count");
}

bool FieldElement::is_zero() const { return ctx_->op_is_zero(coeffs_); }

namespace {
void require_same_ctx(const FieldElement& a, const FieldElement& b) {
  if (a.ctx() != b.ctx()) throw std::invalid_argument("field context mismatch");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_ctx(*this, rhs);
  Coeffs out(coeffs_.size());
  ctx_->op_add(coeffs_, rhs.coeffs_, out);
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_ctx(*this, rhs);
  Coeffs out(coeffs_.size());
  ctx_->op_sub(coeffs_, rhs.coeffs_, out);
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_ctx(*this, rhs);
  Coeffs out(coeffs_.size());
  ctx_->op_mul(coeffs_, rhs.coeffs_, out);
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_ctx(*this, rhs);
  return *this * rhs.inverse();
}

FieldElement FieldElement::operator-() const {
  Coeffs out(coeffs_.size());
  ctx_->op_neg(coeffs_, out);
  return FieldElement(ctx_, std::move(out));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return ctx_ == rhs.ctx_ && coeffs_ == rhs.coeffs_;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  Coeffs out(coeffs_.size());
  ctx_->op_pow(coeffs_, e, out);
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  Coeffs out(coeffs_.size());
  ctx_->op_inv(coeffs_, out);
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::conj() const {
  Coeffs out(coeffs_.size());
  ctx_->op_conj(coeffs_, out);
  return FieldElement(ctx_, std::move(out));
}

std::uint64_t FieldElement::index() const { return ctx_->pack(coeffs_); }

// --- FieldCtx construction ---

FieldCtxPtr FieldCtx::make(const PrimePower& pp, unsigned k) {
  const unsigned allowed[] = {1, 2 * pp.l, 4 * pp.l};
  if (std::find(std::begin(allowed), std::end(allowed), k) == std::end(allowed)) {
    throw std::invalid_argument("FieldCtx: extension degree must be 1, 2l or 4l");
  }
  if (k == 4 * pp.l) {
    return make_quadratic_ext(make(pp, 2 * pp.l));
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->pp_ = pp;
  ctx->degree_ = k;
  if (k > kMaxDegree) throw std::invalid_argument("FieldCtx: extension degree too large");
  ctx->size_ = 1;
  for (unsigned i = 0; i < k; ++i) ctx->size_ *= pp.p;

  if (k == 1) {
    ctx->modulus_ = Coeffs{0, 1};  // GF(p) as GF(p)[x]/(x)
  } else {
    // Deterministic search: non-leading coefficients enumerated in increasing
    // packed order.
    const FieldCtxPtr gfp = make(pp, 1);
    bool found = false;
    for (std::uint64_t idx = 0; idx < ctx->size_ && !found; ++idx) {
      Coeffs cand(k + 1, 0);
      std::uint64_t v = idx;
      for (unsigned i = 0; i < k; ++i) {
        cand[i] = static_cast<Residue>(v % pp.p);
        v /= pp.p;
      }
      cand[k] = 1;
      std::vector<Coeffs> as_poly;
      as_poly.reserve(k + 1);
      for (Residue c : cand) as_poly.push_back(Coeffs{c});
      if (is_irreducible(Poly(gfp, std::move(as_poly)))) {
        ctx->modulus_ = std::move(cand);
        found = true;
      }
    }
    if (!found) throw std::runtime_error("FieldCtx: no irreducible modulus found (bug)");
  }

  ctx->unit_primes_ = prime_factors(ctx->size_ - 1);
  ctx->build_generator_and_tables();
  return ctx;
}

FieldCtxPtr FieldCtx::make_quadratic_ext(FieldCtxPtr sub) {
  if (!sub) throw std::invalid_argument("FieldCtx: null subfield");
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->pp_ = sub->prime_power();
  ctx->degree_ = 2 * sub->degree();
  if (ctx->degree_ > kMaxDegree) throw std::invalid_argument("FieldCtx: extension degree too large");
  ctx->size_ = sub->size() * sub->size();
  ctx->sub_ = sub;

  // Deterministic search over (mu0, mu1) in increasing packed pair order.
  const std::uint64_t sub_size = sub->size();
  bool found = false;
  for (std::uint64_t idx = 0; idx < sub_size * sub_size && !found; ++idx) {
    FieldElement mu0 = sub->from_index(idx % sub_size);
    FieldElement mu1 = sub->from_index(idx / sub_size);
    std::vector<Coeffs> cand{mu0.coeffs(), mu1.coeffs(), sub->one().coeffs()};
    if (is_irreducible(Poly(sub, std::move(cand)))) {
      ctx->quad_mu0_ = mu0.coeffs();
      ctx->quad_mu1_ = mu1.coeffs();
      found = true;
    }
  }
  if (!found) throw std::runtime_error("FieldCtx: no irreducible quadratic found (bug)");

  ctx->unit_primes_ = prime_factors(ctx->size_ - 1);
  ctx->build_generator_and_tables();
  return ctx;
}

void FieldCtx::build_generator_and_tables() {
  Buf cand{}, acc{};
  bool found = false;
  for (std::uint64_t idx = 1; idx < size_ && !found; ++idx) {
    unpack(idx, std::span<Residue>(cand.data(), degree_));
    bool ok = true;
    for (std::uint64_t pi : unit_primes_) {
      op_pow(std::span<const Residue>(cand.data(), degree_), (size_ - 1) / pi,
             std::span<Residue>(acc.data(), degree_));
      // acc == 1 ?
      bool is_one = acc[0] == 1;
      for (unsigned i = 1; i < degree_ && is_one; ++i) is_one = acc[i] == 0;
      if (is_one) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_.assign(cand.begin(), cand.begin() + degree_);
      found = true;
    }
  }
  if (!found) throw std::runtime_error("FieldCtx: no multiplicative generator found (bug)");

  if (size_ <= kTableLimit) {
    exp_.assign(size_ - 1, 0);
    log_.assign(size_, 0xFFFFFFFFu);
    Buf cur{};
    cur[0] = 1;
    for (std::uint64_t i = 0; i + 1 < size_; ++i) {
      const std::uint64_t packed = pack(std::span<const Residue>(cur.data(), degree_));
      exp_[i] = static_cast<std::uint32_t>(packed);
      log_[packed] = static_cast<std::uint32_t>(i);
      op_mul(std::span<const Residue>(cur.data(), degree_), generator_,
             std::span<Residue>(acc.data(), degree_));
      std::copy(acc.begin(), acc.begin() + degree_, cur.begin());
    }
  }
}

// --- element factories ---

FieldElement FieldCtx::zero() const { return FieldElement(shared_from_this(), Coeffs(degree_, 0)); }

FieldElement FieldCtx::one() const {
  Coeffs c(degree_, 0);
  c[0] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_residues(Coeffs c) const {
  if (c.size() != degree_) throw std::invalid_argument("FieldCtx: wrong coefficient count");
  for (Residue r : c) {
    if (r >= pp_.p) throw std::invalid_argument("FieldCtx: residue out of range");
  }
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_index(std::uint64_t idx) const {
  if (idx >= size_) throw std::invalid_argument("FieldCtx: element index out of range");
  Coeffs c(degree_);
  unpack(idx, c);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::generator() const { return FieldElement(shared_from_this(), generator_); }

// --- span kernels ---

void FieldCtx::op_add(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const {
  const std::uint64_t p = pp_.p;
  for (unsigned i = 0; i < degree_; ++i) {
    const std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
    out[i] = static_cast<Residue>(s >= p ? s - p : s);
  }
}

void FieldCtx::op_sub(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const {
  const std::uint64_t p = pp_.p;
  for (unsigned i = 0; i < degree_; ++i) {
    const std::uint64_t s = static_cast<std::uint64_t>(a[i]) + p - b[i];
    out[i] = static_cast<Residue>(s >= p ? s - p : s);
  }
}

void FieldCtx::op_neg(std::span<const Residue> a, std::span<Residue> out) const {
  const std::uint64_t p = pp_.p;
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = static_cast<Residue>(a[i] == 0 ? 0 : p - a[i]);
  }
}

bool FieldCtx::op_is_zero(std::span<const Residue> a) const {
  for (unsigned i = 0; i < degree_; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

void FieldCtx::op_mul(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const {
  const std::uint64_t p = pp_.p;
  if (!sub_) {
    // Schoolbook product reduced by the monic modulus.
    const unsigned k = degree_;
    WideBuf buf{};
    for (unsigned i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < k; ++j) {
        buf[i + j] = (buf[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
      }
    }
    for (unsigned i = 2 * k - 2; i >= k && i < 2 * k; --i) {
      const std::uint64_t c = buf[i];
      if (c == 0) continue;
      buf[i] = 0;
      for (unsigned j = 0; j < k; ++j) {
        if (modulus_[j] == 0) continue;
        buf[i - k + j] = (buf[i - k + j] + (p - modulus_[j]) * c) % p;
      }
    }
    for (unsigned i = 0; i < k; ++i) out[i] = static_cast<Residue>(buf[i]);
    return;
  }

  // Quadratic level: (a0 + a1 y)(b0 + b1 y) with y^2 = -mu1 y - mu0.
  const unsigned d = sub_->degree();
  const auto lo = [d](std::span<const Residue> v) { return v.first(d); };
  const auto hi = [d](std::span<const Residue> v) { return v.subspan(d, d); };
  Buf t0{}, t1{}, t2{}, tmp{};
  std::span<Residue> s0(t0.data(), d), s1(t1.data(), d), s2(t2.data(), d), st(tmp.data(), d);
  sub_->op_mul(lo(a), lo(b), s0);   // a0 b0
  sub_->op_mul(hi(a), hi(b), s2);   // a1 b1
  sub_->op_mul(lo(a), hi(b), s1);   // a0 b1
  sub_->op_mul(hi(a), lo(b), st);   // a1 b0
  sub_->op_add(s1, st, s1);         // a0 b1 + a1 b0
  sub_->op_mul(s2, quad_mu0_, st);
  sub_->op_sub(s0, st, out.first(d));  // a0 b0 - a1 b1 mu0
  sub_->op_mul(s2, quad_mu1_, st);
  sub_->op_sub(s1, st, out.subspan(d, d));  // a0 b1 + a1 b0 - a1 b1 mu1
}

void FieldCtx::op_inv(std::span<const Residue> a, std::span<Residue> out) const {
  if (op_is_zero(a)) throw std::domain_error("division by zero field element");
  const std::uint64_t p = pp_.p;
  if (!sub_) {
    // Extended Euclid in GF(p)[x] against the modulus.
    const unsigned k = degree_;
    std::vector<std::uint64_t> r0(modulus_.begin(), modulus_.end());
    std::vector<std::uint64_t> r1(a.begin(), a.end());
    r1.resize(k + 1, 0);
    std::vector<std::uint64_t> t0(k + 1, 0), t1(k + 1, 0);
    t1[0] = 1;
    while (raw_degree(r1) >= 0) {
      std::vector<std::uint64_t> rem = r0;
      std::vector<std::uint64_t> quot = raw_divmod(rem, r1, p);
      r0 = std::move(r1);
      r1 = std::move(rem);
      // (t0, t1) <- (t1, t0 - quot * t1)
      std::vector<std::uint64_t> nt(k + 1, 0);
      for (unsigned i = 0; i <= k; ++i) {
        if (quot[i] == 0) continue;
        for (unsigned j = 0; i + j <= k; ++j) {
          if (t1[j] == 0) continue;
          nt[i + j] = (nt[i + j] + mul_mod(quot[i], t1[j], p)) % p;
        }
      }
      for (unsigned i = 0; i <= k; ++i) nt[i] = (t0[i] + p - nt[i]) % p;
      t0 = std::move(t1);
      t1 = std::move(nt);
    }
    // r0 is a nonzero constant gcd; normalize t0 by it.
    const std::uint64_t scale = inv_mod_p(r0[0], p);
    for (unsigned i = 0; i < k; ++i) out[i] = static_cast<Residue>(mul_mod(t0[i], scale, p));
    return;
  }

  // Quadratic level via the norm: (a0 + a1 y)^-1 = (a0 - a1 mu1 - a1 y) / N,
  // N = a0^2 - a0 a1 mu1 + a1^2 mu0.
  const unsigned d = sub_->degree();
  std::span<const Residue> a0 = a.first(d), a1 = a.subspan(d, d);
  Buf n{}, t{}, u{};
  std::span<Residue> sn(n.data(), d), st(t.data(), d), su(u.data(), d);
  sub_->op_mul(a0, a0, sn);              // a0^2
  sub_->op_mul(a0, a1, st);
  sub_->op_mul(st, quad_mu1_, su);
  sub_->op_sub(sn, su, sn);              // - a0 a1 mu1
  sub_->op_mul(a1, a1, st);
  sub_->op_mul(st, quad_mu0_, su);
  sub_->op_add(sn, su, sn);              // + a1^2 mu0
  sub_->op_inv(sn, sn);                  // 1/N
  sub_->op_mul(a1, quad_mu1_, st);
  Buf c0{};
  std::span<Residue> sc0(c0.data(), d);
  sub_->op_sub(a0, st, sc0);             // a0 - a1 mu1
  sub_->op_mul(sc0, sn, out.first(d));
  sub_->op_neg(a1, st);
  sub_->op_mul(st, sn, out.subspan(d, d));
}

void FieldCtx::op_pow(std::span<const Residue> a, std::uint64_t e, std::span<Residue> out) const {
  Buf base{}, acc{};
  std::copy(a.begin(), a.end(), base.begin());
  acc[0] = 1;
  std::span<Residue> sb(base.data(), degree_), sa(acc.data(), degree_);
  while (e != 0) {
    if (e & 1) op_mul(sa, sb, sa);
    e >>= 1;
    if (e != 0) op_mul(sb, sb, sb);
  }
  std::copy(acc.begin(), acc.begin() + degree_, out.begin());
}

void FieldCtx::op_conj(std::span<const Residue> a, std::span<Residue> out) const { op_pow(a, pp_.q, out); }

// --- packing and index operations ---

std::uint64_t FieldCtx::pack(std::span<const Residue> a) const {
  std::uint64_t v = 0;
  for (unsigned i = degree_; i-- > 0;) v = v * pp_.p + a[i];
  return v;
}

void FieldCtx::unpack(std::uint64_t idx, std::span<Residue> out) const {
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = static_cast<Residue>(idx % pp_.p);
    idx /= pp_.p;
  }
}

std::uint64_t FieldCtx::idx_add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = pp_.p;
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

std::uint64_t FieldCtx::idx_sub(std::uint64_t a, std::uint64_t b) const { return idx_add(a, idx_neg(b)); }

std::uint64_t FieldCtx::idx_neg(std::uint64_t a) const {
  const std::uint64_t p = pp_.p;
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    const std::uint64_t d = a % p;
    out += (d == 0 ? 0 : p - d) * place;
    a /= p;
    place *= p;
  }
  return out;
}

std::uint64_t FieldCtx::idx_mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (has_tables()) {
    const std::uint64_t e = log_[a] + static_cast<std::uint64_t>(log_[b]);
    return exp_[e >= size_ - 1 ? e - (size_ - 1) : e];
  }
  Buf ba{}, bb{}, bo{};
  unpack(a, std::span<Residue>(ba.data(), degree_));
  unpack(b, std::span<Residue>(bb.data(), degree_));
  op_mul(std::span<const Residue>(ba.data(), degree_), std::span<const Residue>(bb.data(), degree_),
         std::span<Residue>(bo.data(), degree_));
  return pack(std::span<const Residue>(bo.data(), degree_));
}

std::uint64_t FieldCtx::idx_inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("division by zero field element");
  if (has_tables()) {
    const std::uint64_t lg = log_[a];
    return exp_[lg == 0 ? 0 : size_ - 1 - lg];
  }
  Buf ba{}, bo{};
  unpack(a, std::span<Residue>(ba.data(), degree_));
  op_inv(std::span<const Residue>(ba.data(), degree_), std::span<Residue>(bo.data(), degree_));
  return pack(std::span<const Residue>(bo.data(), degree_));
}

std::uint64_t FieldCtx::idx_conj(std::uint64_t a) const {
  if (a == 0) return 0;
  if (has_tables()) {
    return exp_[mul_mod(log_[a], pp_.q, size_ - 1)];
  }
  Buf ba{}, bo{};
  unpack(a, std::span<Residue>(ba.data(), degree_));
  op_conj(std::span<const Residue>(ba.data(), degree_), std::span<Residue>(bo.data(), degree_));
  return pack(std::span<const Residue>(bo.data(), degree_));
}

bool FieldCtx::element_order_is(std::span<const Residue> a, std::uint64_t n) const {
  if (op_is_zero(a) || n == 0 || (size_ - 1) % n != 0) return false;
  Buf acc{};
  std::span<Residue> sa(acc.data(), degree_);
  op_pow(a, n, sa);
  bool is_one = acc[0] == 1;
  for (unsigned i = 1; i < degree_ && is_one; ++i) is_one = acc[i] == 0;
  if (!is_one) return false;
  for (std::uint64_t pi : prime_factors(n)) {
    op_pow(a, n / pi, sa);
    bool one = acc[0] == 1;
    for (unsigned i = 1; i < degree_ && one; ++i) one = acc[i] == 0;
    if (one) return false;
  }
  return true;
}

// --- tower helpers ---

FieldTower build_tower(const PrimePower& pp) {
  FieldTower t;
  t.pp = pp;
  t.gf_p = FieldCtx::make(pp, 1);
  t.gf_q2 = FieldCtx::make(pp, 2 * pp.l);
  t.gf_q4 = FieldCtx::make_quadratic_ext(t.gf_q2);
  return t;
}

FieldElement embed_in_ext(const FieldElement& a, const FieldCtxPtr& ext) {
  if (!ext || !ext->is_quadratic_ext()) throw std::invalid_argument("embed_in_ext: not a quadratic extension");
  if (a.ctx() != ext->subfield()) throw std::invalid_argument("embed_in_ext: element not from the subfield");
  Coeffs c(ext->degree(), 0);
  std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin());
  return FieldElement(ext, std::move(c));
}

FieldElement project_to_subfield(const FieldElement& a) {
  const FieldCtxPtr& ctx = a.ctx();
  if (!ctx || !ctx->is_quadratic_ext()) throw std::invalid_argument("project_to_subfield: not a quadratic extension");
  const unsigned d = ctx->subfield()->degree();
  for (unsigned i = d; i < ctx->degree(); ++i) {
    if (a.coeffs()[i] != 0) throw std::domain_error("project_to_subfield: element not in the subfield");
  }
  Coeffs c(a.coeffs().begin(), a.coeffs().begin() + d);
  return FieldElement(ctx->subfield(), std::move(c));
}

FieldElement primitive_root_of_unity(const FieldCtxPtr& ctx, std::uint64_t order) {
  if (order == 0 || (ctx->size() - 1) % order != 0) {
    throw std::domain_error("primitive_root_of_unity: order does not divide the unit group size");
  }
  FieldElement w = ctx->generator().pow((ctx->size() - 1) / order);
  if (!ctx->element_order_is(w.coeffs(), order)) {
    throw std::runtime_error("primitive_root_of_unity: order check failed (bug)");
  }
  return w;
}

}  // namespace qmds
