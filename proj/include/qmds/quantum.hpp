#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qmds/code.hpp"
#include "qmds/coset.hpp"

namespace qmds {

// One of the twelve admissible (a, t) residue classes: q = 2am + t with
// a | t^2 + 1, giving codes of length n = (q^2+1)/a and centered defining
// sets that stay dual-containing up to delta_max = slope*m + offset.
struct FamilyPattern {
  std::uint64_t a = 0;
  std::uint64_t t = 0;
  std::uint64_t delta_slope = 0;
  std::uint64_t delta_offset = 0;
};

std::span<const FamilyPattern> family_patterns();

struct FamilySpec {
  std::uint64_t a = 0;
  std::uint64_t t = 0;
  std::uint64_t m = 0;
  std::uint64_t q = 0;
  std::uint64_t n = 0;          // (q^2+1)/a
  std::uint64_t delta_max = 0;  // slope*m + offset
  std::uint64_t d_max = 0;      // 2*delta_max + 2
};

bool is_odd_prime_power(std::uint64_t q);

// All family memberships of q (possibly several), ordered by a. Throws if q
// is not an odd prime power. m = 0 is admitted.
std::vector<FamilySpec> classify_q(std::uint64_t q);

struct QuantumCodeParams {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::int64_t k = 0;  // logical dimension 2*k_classical - n
  std::uint64_t d = 0;
  bool mds = false;  // 2d == n - k + 2
  std::optional<FamilySpec> family;
  std::uint64_t delta = 0;
  std::vector<std::uint64_t> defining_set;
};

// Hermitian map: a dual-containing [n, k, d] code over GF(q^2) yields an
// [[n, 2k-n, >= d]]_q quantum code. Refuses when dual containment does not
// hold.
QuantumCodeParams hermitian_construct(std::uint64_t q, std::uint64_t n, std::uint64_t k_classical,
                                      std::uint64_t d, bool dual_containment_ok);

struct FamilyEnumeration {
  FamilySpec fs;
  std::vector<QuantumCodeParams> codes;  // one per even d in [2, d_max]
  bool truncated = false;  // delta_max exceeded n/2 - 1 (degenerate tiny q)
};

// Runs the full pipeline (centered set, dual containment, code build,
// Hermitian map) for every even d; never emits a formula-only entry.
FamilyEnumeration enumerate_family(const FamilySpec& fs);

// Largest delta for which the centered defining set stays dual-containing,
// found by incremental extension: each step adds one coset and checks only
// its interactions. nullopt if even delta = 0 fails. Monotonicity holds
// because the centered sets are nested.
std::optional<std::uint64_t> max_delta_search(const CosetSpec& spec);

// Same answer by re-evaluating the full criterion at every delta; used to
// cross-check the incremental search.
std::optional<std::uint64_t> max_delta_search_full(const CosetSpec& spec);

// The coset frame of a family member: r = q+1, n = (q^2+1)/a.
CosetSpec family_coset_spec(std::uint64_t q, std::uint64_t a);

}  // namespace qmds
