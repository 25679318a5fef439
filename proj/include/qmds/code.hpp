#pragma once

#include <cstdint>

#include "qmds/coset.hpp"
#include "qmds/field.hpp"
#include "qmds/poly.hpp"

namespace qmds {

// An eta-constacyclic code over GF(q^2) of length n, cut out by a defining
// set T: the generator polynomial is g(x) = prod_{j in T} (x - omega^j),
// computed over GF(q^4) and projected back to GF(q^2).
struct ConstacyclicCode {
  CosetSpec spec;
  FieldTower tower;
  FieldElement eta;    // GF(q^2), multiplicative order r
  FieldElement omega;  // GF(q^4), order rn, with omega^n = eta after embedding
  DefiningSet T;
  Poly gen;            // monic over GF(q^2), degree |T|
  std::uint64_t k = 0;      // n - |T|
  std::uint64_t d_bch = 0;  // run-length distance bound
};

struct EtaOmega {
  FieldElement eta;
  FieldElement omega;
};

// The canonical primitive rn-th root of unity omega in GF(q^4) and
// eta = omega^n projected into GF(q^2); eta has exact order r.
EtaOmega choose_eta_omega(const CosetSpec& spec, const FieldTower& tower);

// T = union of the cosets of s + (q+1)i for 0 <= i <= delta: the 2*delta+1
// residues s + (q+1)t mod rn with |t| <= delta. Requires r = q+1 and
// 0 <= delta <= n/2 - 1.
DefiningSet centered_defining_set(const CosetSpec& spec, std::uint64_t delta);

// prod_{j in T} (x - omega^j) with every coefficient projected to GF(q^2).
// Projection failure signals a T that is not closed under the cosets.
Poly generator_polynomial(const FieldTower& tower, const FieldElement& omega, const DefiningSet& T);

// Run-length bound: map each j in T to i = (j-1)/r and return the longest
// cyclic run of consecutive i values (mod n) plus one; 1 for empty T.
std::uint64_t bch_bound(const CosetSpec& spec, const DefiningSet& T);

// Full build. Verifies that g divides x^n - eta exactly and that
// g(omega^j) = 0 exactly for j in T.
ConstacyclicCode build_code_from_set(const CosetSpec& spec, const FieldTower& tower, DefiningSet T);
ConstacyclicCode build_code(const CosetSpec& spec, const FieldTower& tower, std::uint64_t delta);

}  // namespace qmds
