#include "qmds/coset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "qmds/numeric.hpp"

namespace qmds {

CosetSpec CosetSpec::make(std::uint64_t q, std::uint64_t r, std::uint64_t n) {
  if (q < 2 || r < 1 || n < 1) throw std::invalid_argument("CosetSpec: q, r, n must be positive");
  if (std::gcd(n, q) != 1) throw std::invalid_argument("CosetSpec: gcd(n, q) must be 1");
  if ((q + 1) % r != 0) throw std::invalid_argument("CosetSpec: r must divide q+1");

  CosetSpec spec;
  spec.q = q;
  spec.r = r;
  spec.n = n;
  spec.rn = r * n;
  // r | q+1 gives q^2 == 1 (mod r), which closes Omega under *q^2. Checked
  // here so a violated hypothesis fails loudly instead of corrupting sets.
  if (mul_mod(q % r, q % r, r) != 1 % r) {
    throw std::invalid_argument("CosetSpec: Omega is not closed under multiplication by q^2");
  }
  if (r == q + 1 && q % 2 == 1) {
    // (q^2+1)/2 can exceed rn on tiny frames (a > 2(q+1)); store the residue.
    spec.s = ((q * q + 1) / 2) % spec.rn;
    assert(spec.in_omega(*spec.s));
  }
  return spec;
}

std::vector<std::uint64_t> CosetSpec::omega() const {
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back((1 + i * r) % rn);
  std::sort(out.begin(), out.end());
  return out;
}

bool CyclotomicCoset::contains(std::uint64_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

CyclotomicCoset coset_of(const CosetSpec& spec, std::uint64_t j) {
  if (j >= spec.rn) throw std::invalid_argument("coset_of: residue out of range");
  const std::uint64_t q2 = mul_mod(spec.q, spec.q, spec.rn);
  CyclotomicCoset c;
  std::uint64_t x = j;
  do {
    c.members.push_back(x);
    x = mul_mod(x, q2, spec.rn);
  } while (x != j);
  std::sort(c.members.begin(), c.members.end());
  c.rep = c.members.front();
  return c;
}

std::uint64_t skew_image(const CosetSpec& spec, std::uint64_t j) {
  const std::uint64_t t = mul_mod(spec.q, j % spec.rn, spec.rn);
  return t == 0 ? 0 : spec.rn - t;
}

bool is_skew_symmetric(const CosetSpec& spec, const CyclotomicCoset& c) {
  return c.contains(skew_image(spec, c.rep));
}

bool is_skew_asymmetric_pair(const CosetSpec& spec, const CyclotomicCoset& c1, const CyclotomicCoset& c2) {
  if (c1 == c2) throw std::invalid_argument("is_skew_asymmetric_pair: cosets must be distinct");
  return c2.contains(skew_image(spec, c1.rep));
}

DefiningSet DefiningSet::from_reps(const CosetSpec& spec, std::vector<std::uint64_t> reps) {
  DefiningSet T;
  T.spec = spec;
  for (std::uint64_t rep : reps) {
    CyclotomicCoset c = coset_of(spec, rep);
    bool duplicate = false;
    for (const CyclotomicCoset& seen : T.cosets) {
      if (seen == c) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    for (std::uint64_t x : c.members) {
      if (!spec.in_omega(x)) {
        throw std::invalid_argument("DefiningSet: coset member " + std::to_string(x) + " leaves Omega");
      }
    }
    T.cosets.push_back(std::move(c));
  }
  std::sort(T.cosets.begin(), T.cosets.end(),
            [](const CyclotomicCoset& a, const CyclotomicCoset& b) { return a.rep < b.rep; });
  for (const CyclotomicCoset& c : T.cosets) {
    T.elements.insert(T.elements.end(), c.members.begin(), c.members.end());
  }
  std::sort(T.elements.begin(), T.elements.end());
  // Orbits are equivalence classes, so distinct cosets cannot overlap.
  assert(std::adjacent_find(T.elements.begin(), T.elements.end()) == T.elements.end());
  return T;
}

DefiningSet DefiningSet::empty(const CosetSpec& spec) {
  DefiningSet T;
  T.spec = spec;
  return T;
}

bool DefiningSet::contains(std::uint64_t x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

DualContainmentVerdict dual_containing(const DefiningSet& T) {
  DualContainmentVerdict v;
  v.ok = true;
  std::vector<std::uint64_t> image;
  image.reserve(T.elements.size());
  for (std::uint64_t z : T.elements) image.push_back(skew_image(T.spec, z));
  std::sort(image.begin(), image.end());
  for (std::uint64_t z : T.elements) {
    if (std::binary_search(image.begin(), image.end(), z)) {
      v.ok = false;
      v.witness = z;
      break;
    }
  }
#ifndef NDEBUG
  assert(dual_containing_by_classification(T).ok == v.ok);
#endif
  return v;
}

DualContainmentVerdict dual_containing_by_classification(const DefiningSet& T) {
  DualContainmentVerdict v;
  v.ok = true;
  for (std::size_t i = 0; i < T.cosets.size(); ++i) {
    if (is_skew_symmetric(T.spec, T.cosets[i])) {
      v.ok = false;
      v.witness = T.cosets[i].rep;
      return v;
    }
    for (std::size_t j = i + 1; j < T.cosets.size(); ++j) {
      if (is_skew_asymmetric_pair(T.spec, T.cosets[i], T.cosets[j])) {
        v.ok = false;
        v.witness = T.cosets[i].rep;
        return v;
      }
    }
  }
  return v;
}

CosetStructureReport verify_coset_structure(const CosetSpec& spec) {
  std::uint64_t anchor;
  if (spec.r == spec.q + 1 && spec.s.has_value()) {
    anchor = *spec.s;
  } else if (spec.r == 1) {
    anchor = 0;
  } else {
    throw std::invalid_argument("verify_coset_structure: spec must have r = q+1 (odd q) or r = 1");
  }

  CosetStructureReport report;
  const std::uint64_t rn = spec.rn;
  const std::uint64_t twin = (anchor + rn / 2) % rn;  // rn is even for odd q or even n
  for (std::uint64_t i = 0; i < spec.n; ++i) {
    const std::uint64_t j = (1 + i * spec.r) % rn;
    const CyclotomicCoset c = coset_of(spec, j);
    if (c.members.size() == 1) {
      if (j != anchor && j != twin) {
        report.counterexample = "unexpected singleton coset at " + std::to_string(j);
        return report;
      }
      if (j == c.rep) {
        ++report.singleton_count;
        report.singletons.push_back(j);
      }
    } else if (c.members.size() == 2) {
      const std::uint64_t sum = (c.members[0] + c.members[1]) % rn;
      if (sum != (2 * anchor) % rn) {
        report.counterexample = "coset of " + std::to_string(j) + " is not a reflection pair";
        return report;
      }
      if (j == c.rep) ++report.pair_count;
    } else {
      report.counterexample = "coset of " + std::to_string(j) + " has size " + std::to_string(c.members.size());
      return report;
    }
  }
  std::sort(report.singletons.begin(), report.singletons.end());
  report.pass = true;
  return report;
}

}  // namespace qmds
