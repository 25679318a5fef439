#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmds {

// Arithmetic frame for q^2-cyclotomic cosets modulo rn over the exponent set
// Omega = {1 + ir : 0 <= i < n}, kept as residues in [0, rn). Validated at
// construction: gcd(n, q) = 1, r | q+1 (which also closes Omega under
// multiplication by q^2), and s = (q^2+1)/2 is set when r = q+1 with q odd.
struct CosetSpec {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t n = 0;
  std::uint64_t rn = 0;
  std::optional<std::uint64_t> s;

  static CosetSpec make(std::uint64_t q, std::uint64_t r, std::uint64_t n);

  bool in_omega(std::uint64_t j) const { return j < rn && j % r == 1 % r; }
  std::vector<std::uint64_t> omega() const;  // sorted residues
};

struct CyclotomicCoset {
  std::uint64_t rep = 0;                 // minimal member
  std::vector<std::uint64_t> members;    // sorted, closed under *q^2 mod rn

  bool contains(std::uint64_t x) const;
  bool operator==(const CyclotomicCoset& rhs) const { return members == rhs.members; }
};

// Orbit of j under multiplication by q^2 modulo rn.
CyclotomicCoset coset_of(const CosetSpec& spec, std::uint64_t j);

// (-q*j) mod rn, normalized to [0, rn).
std::uint64_t skew_image(const CosetSpec& spec, std::uint64_t j);

// True iff the skew image of the coset lands inside the coset itself.
bool is_skew_symmetric(const CosetSpec& spec, const CyclotomicCoset& c);

// True iff the skew image of c1 is a member of c2 (symmetric in c1, c2).
// The cosets must be distinct.
bool is_skew_asymmetric_pair(const CosetSpec& spec, const CyclotomicCoset& c1, const CyclotomicCoset& c2);

// A union of q^2-cyclotomic cosets inside Omega.
struct DefiningSet {
  CosetSpec spec;
  std::vector<CyclotomicCoset> cosets;   // sorted by representative
  std::vector<std::uint64_t> elements;   // sorted disjoint union

  static DefiningSet from_reps(const CosetSpec& spec, std::vector<std::uint64_t> reps);
  static DefiningSet empty(const CosetSpec& spec);

  std::size_t size() const { return elements.size(); }
  bool contains(std::uint64_t x) const;
};

struct DualContainmentVerdict {
  bool ok = false;
  // An element of T intersect T^{-q} when the verdict is negative.
  std::optional<std::uint64_t> witness;
};

// Set criterion: the code contains its Hermitian dual iff T and T^{-q} are
// disjoint. In debug builds the answer is cross-checked against the coset
// classification below.
DualContainmentVerdict dual_containing(const DefiningSet& T);

// Equivalent criterion via coset classification: T contains no
// skew-symmetric coset and no skew-asymmetric pair of cosets.
DualContainmentVerdict dual_containing_by_classification(const DefiningSet& T);

struct CosetStructureReport {
  bool pass = false;
  std::uint64_t singleton_count = 0;
  std::uint64_t pair_count = 0;
  std::vector<std::uint64_t> singletons;
  std::string counterexample;  // empty when pass
};

// Checks that the cosets over Omega follow the reflection pattern around the
// anchor (s for r = q+1, 0 for r = 1): singletons exactly at the anchor and
// anchor + rn/2 (when in Omega), every other coset a pair {x, y} with
// x + y == 2*anchor (mod rn). Throws for specs outside these two cases.
CosetStructureReport verify_coset_structure(const CosetSpec& spec);

}  // namespace qmds
