#include "qmds/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qmds {

EtaOmega choose_eta_omega(const CosetSpec& spec, const FieldTower& tower) {
  if (tower.pp.q != spec.q) throw std::invalid_argument("choose_eta_omega: tower does not match spec");
  const std::uint64_t q4_units = tower.gf_q4->size() - 1;
  if (q4_units % spec.rn != 0) {
    throw std::domain_error("choose_eta_omega: rn does not divide q^4 - 1");
  }
  FieldElement omega = primitive_root_of_unity(tower.gf_q4, spec.rn);
  FieldElement eta = project_to_subfield(omega.pow(spec.n));
  if (!tower.gf_q2->element_order_is(eta.coeffs(), spec.r)) {
    throw std::runtime_error("choose_eta_omega: eta does not have order r (bug)");
  }
  return EtaOmega{std::move(eta), std::move(omega)};
}

DefiningSet centered_defining_set(const CosetSpec& spec, std::uint64_t delta) {
  if (!spec.s.has_value()) throw std::invalid_argument("centered_defining_set: spec has no center s");
  if (spec.n / 2 == 0 || delta > spec.n / 2 - 1) {
    throw std::invalid_argument("centered_defining_set: delta out of range");
  }
  std::vector<std::uint64_t> reps;
  reps.reserve(delta + 1);
  for (std::uint64_t i = 0; i <= delta; ++i) reps.push_back((*spec.s + spec.r * i) % spec.rn);
  DefiningSet T = DefiningSet::from_reps(spec, std::move(reps));

  // The build must yield exactly the residues s + (q+1)t, |t| <= delta.
  if (T.size() != 2 * delta + 1) {
    throw std::runtime_error("centered_defining_set: unexpected set size " + std::to_string(T.size()));
  }
  for (std::uint64_t t = 0; t <= delta; ++t) {
    const std::uint64_t up = (*spec.s + spec.r * t) % spec.rn;
    const std::uint64_t down = (*spec.s + spec.rn - spec.r * t % spec.rn) % spec.rn;
    if (!T.contains(up) || !T.contains(down)) {
      throw std::runtime_error("centered_defining_set: set is not centered on s");
    }
  }
  return T;
}

Poly generator_polynomial(const FieldTower& tower, const FieldElement& omega, const DefiningSet& T) {
  const FieldCtxPtr& big = tower.gf_q4;
  if (omega.ctx() != big) throw std::invalid_argument("generator_polynomial: omega must live in GF(q^4)");
  Poly g = Poly::one(big);
  for (std::uint64_t j : T.elements) {
    g = g * Poly::x_to_n_minus_c(big, 1, omega.pow(j));
  }
  // Coefficients of a coset-closed product are fixed by the q^2 Frobenius,
  // so each projects into GF(q^2).
  std::vector<Coeffs> down;
  down.reserve(g.coeff_count());
  for (std::size_t i = 0; i < g.coeff_count(); ++i) {
    down.push_back(project_to_subfield(g.coeff(i)).coeffs());
  }
  return Poly(tower.gf_q2, std::move(down));
}

std::uint64_t bch_bound(const CosetSpec& spec, const DefiningSet& T) {
  if (T.elements.empty()) return 1;
  std::vector<char> hit(spec.n, 0);
  for (std::uint64_t j : T.elements) hit[((j + spec.rn - 1) % spec.rn) / spec.r] = 1;
  std::uint64_t best = 0, run = 0;
  for (std::uint64_t i = 0; i < 2 * spec.n; ++i) {
    if (hit[i % spec.n]) {
      ++run;
      best = std::max(best, std::min(run, spec.n));
    } else {
      run = 0;
    }
  }
  return best + 1;
}

ConstacyclicCode build_code_from_set(const CosetSpec& spec, const FieldTower& tower, DefiningSet T) {
  EtaOmega eo = choose_eta_omega(spec, tower);
  Poly g = generator_polynomial(tower, eo.omega, T);
  if (static_cast<std::uint64_t>(g.degree()) != T.size() || (!T.elements.empty() && !g.is_monic())) {
    throw std::runtime_error("build_code: generator degree mismatch (bug)");
  }

  // g must divide x^n - eta exactly.
  const Poly xn_minus_eta = Poly::x_to_n_minus_c(tower.gf_q2, spec.n, eo.eta);
  if (!xn_minus_eta.divmod(g).rem.is_zero()) {
    throw std::runtime_error("build_code: generator does not divide x^n - eta");
  }

  // Root/non-root dichotomy over the whole exponent set.
  Poly g_up = Poly::one(tower.gf_q4);
  {
    std::vector<Coeffs> lifted;
    lifted.reserve(g.coeff_count());
    for (std::size_t i = 0; i < g.coeff_count(); ++i) {
      lifted.push_back(embed_in_ext(g.coeff(i), tower.gf_q4).coeffs());
    }
    g_up = Poly(tower.gf_q4, std::move(lifted));
  }
  for (std::uint64_t i = 0; i < spec.n; ++i) {
    const std::uint64_t j = (1 + i * spec.r) % spec.rn;
    const bool is_root = g_up.eval(eo.omega.pow(j)).is_zero();
    if (is_root != T.contains(j)) {
      throw std::runtime_error("build_code: root dichotomy violated at exponent " + std::to_string(j));
    }
  }

  ConstacyclicCode code{spec,        tower, std::move(eo.eta), std::move(eo.omega), std::move(T),
                        std::move(g), 0,     0};
  code.k = spec.n - code.T.size();
  code.d_bch = bch_bound(spec, code.T);
  return code;
}

ConstacyclicCode build_code(const CosetSpec& spec, const FieldTower& tower, std::uint64_t delta) {
  return build_code_from_set(spec, tower, centered_defining_set(spec, delta));
}

}  // namespace qmds
