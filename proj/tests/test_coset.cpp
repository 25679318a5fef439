#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qmds/coset.hpp"
#include "qmds/numeric.hpp"
#include "qmds/quantum.hpp"

using namespace qmds;

namespace {

// All defining sets built from at most max_cosets distinct cosets of spec.
std::vector<DefiningSet> small_defining_sets(const CosetSpec& spec, std::size_t max_cosets) {
  std::set<std::uint64_t> reps;
  for (std::uint64_t j : spec.omega()) reps.insert(coset_of(spec, j).rep);
  const std::vector<std::uint64_t> all(reps.begin(), reps.end());

  std::vector<DefiningSet> out;
  const std::size_t combos = std::size_t{1} << all.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<std::uint64_t> chosen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask & (std::size_t{1} << i)) chosen.push_back(all[i]);
    }
    if (chosen.size() > max_cosets) continue;
    out.push_back(DefiningSet::from_reps(spec, std::move(chosen)));
  }
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(CosetSpec::make(3, 4, 3), std::invalid_argument);  // gcd(n, q) != 1
  CHECK_THROWS_AS(CosetSpec::make(3, 3, 5), std::invalid_argument);  // r does not divide q+1
  const CosetSpec spec = CosetSpec::make(3, 4, 5);
  CHECK(spec.rn == 20);
  REQUIRE(spec.s.has_value());
  CHECK(*spec.s == 5);
  CHECK(spec.omega() == std::vector<std::uint64_t>{1, 5, 9, 13, 17});
}

TEST_CASE("cosets of the q=31 frame") {
  const CosetSpec spec = CosetSpec::make(31, 32, 74);
  REQUIRE(spec.s.has_value());
  CHECK(*spec.s == 481);
  CHECK(coset_of(spec, 481).members == std::vector<std::uint64_t>{481});
  CHECK(coset_of(spec, 449).members == std::vector<std::uint64_t>{449, 513});
  CHECK(coset_of(spec, 513).members == std::vector<std::uint64_t>{449, 513});
}

TEST_CASE("cosets of the small q=3 frame") {
  const CosetSpec spec = CosetSpec::make(3, 4, 5);
  CHECK(coset_of(spec, 5).members == std::vector<std::uint64_t>{5});
  CHECK(coset_of(spec, 1).members == std::vector<std::uint64_t>{1, 9});
  CHECK(coset_of(spec, 13).members == std::vector<std::uint64_t>{13, 17});
}

TEST_CASE("skew images") {
  const CosetSpec q31 = CosetSpec::make(31, 32, 74);
  CHECK(skew_image(q31, 481) == 1665);  // 31*481 = 703 (mod 2368); 2368-703
  CHECK(skew_image(q31, 0) == 0);
  const CosetSpec q3 = CosetSpec::make(3, 4, 5);
  CHECK(skew_image(q3, 5) == 5);  // -15 == 5 (mod 20)
}

TEST_CASE("skew symmetry and asymmetric pairs") {
  const CosetSpec q3 = CosetSpec::make(3, 4, 5);
  CHECK(is_skew_symmetric(q3, coset_of(q3, 5)));
  CHECK(is_skew_asymmetric_pair(q3, coset_of(q3, 1), coset_of(q3, 13)));  // skew(1) = 17
  CHECK(is_skew_asymmetric_pair(q3, coset_of(q3, 13), coset_of(q3, 1)));  // symmetric in the pair

  const CosetSpec q31 = CosetSpec::make(31, 32, 74);
  CHECK_FALSE(is_skew_symmetric(q31, coset_of(q31, 481)));
  CHECK(is_skew_asymmetric_pair(q31, coset_of(q31, 481), coset_of(q31, 1665)));
  CHECK_FALSE(is_skew_asymmetric_pair(q31, coset_of(q31, 481), coset_of(q31, 449)));
  CHECK_FALSE(is_skew_symmetric(q31, coset_of(q31, 449)));
  CHECK_THROWS_AS(is_skew_asymmetric_pair(q31, coset_of(q31, 481), coset_of(q31, 481)), std::invalid_argument);
}

TEST_CASE("defining sets stay inside Omega and stay disjoint") {
  const CosetSpec spec = CosetSpec::make(3, 4, 5);
  const DefiningSet T = DefiningSet::from_reps(spec, {1, 9, 5});  // 9 duplicates coset of 1
  CHECK(T.elements == std::vector<std::uint64_t>{1, 5, 9});
  CHECK(T.cosets.size() == 2);
}

TEST_CASE("dual containment verdicts") {
  const CosetSpec q3 = CosetSpec::make(3, 4, 5);
  const auto bad = dual_containing(DefiningSet::from_reps(q3, {5}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == 5);

  CHECK(dual_containing(DefiningSet::empty(q3)).ok);
  CHECK(dual_containing(DefiningSet::from_reps(q3, {1})).ok);  // T = {1, 9}

  const CosetSpec q31 = CosetSpec::make(31, 32, 74);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t i = 0; i <= 5; ++i) reps.push_back(481 + 32 * i);
  CHECK(dual_containing(DefiningSet::from_reps(q31, reps)).ok);
}

TEST_CASE("set criterion and coset classification agree on every small set") {
  for (const auto& [q, r, n] : std::vector<std::array<std::uint64_t, 3>>{{3, 4, 5}, {5, 6, 13}}) {
    const CosetSpec spec = CosetSpec::make(q, r, n);
    std::size_t checked = 0;
    for (const DefiningSet& T : small_defining_sets(spec, 4)) {
      CHECK(dual_containing(T).ok == dual_containing_by_classification(T).ok);
      ++checked;
    }
    CHECK(checked >= 8);
  }
}

TEST_CASE("orbit closure and involution move cosets onto themselves") {
  for (const auto& [q, a] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{31, 13}, {47, 17}, {41, 29}}) {
    const CosetSpec spec = family_coset_spec(q, a);
    for (std::uint64_t j : spec.omega()) {
      const CyclotomicCoset c = coset_of(spec, j);
      for (std::uint64_t x : c.members) {
        CHECK(c.contains(mul_mod(x, mul_mod(q, q, spec.rn), spec.rn)));
        CHECK(c.contains(skew_image(spec, skew_image(spec, x))));
      }
    }
  }
}

TEST_CASE("cosets partition Omega") {
  const CosetSpec spec = family_coset_spec(47, 13);
  std::set<std::uint64_t> seen;
  for (std::uint64_t j : spec.omega()) {
    for (std::uint64_t x : coset_of(spec, j).members) {
      CHECK(spec.in_omega(x));
      seen.insert(x);
    }
  }
  CHECK(seen.size() == spec.n);
}

TEST_CASE("coset structure for r = q+1 frames") {
  const CosetStructureReport r31 = verify_coset_structure(family_coset_spec(31, 13));
  CHECK(r31.pass);
  CHECK(r31.singletons == std::vector<std::uint64_t>{481, 1665});
  CHECK(r31.pair_count == 36);  // n/2 - 1

  const CosetStructureReport r47 = verify_coset_structure(family_coset_spec(47, 13));
  CHECK(r47.pass);
  CHECK(r47.singleton_count == 2);
  CHECK(r47.pair_count == 84);  // n = 170
}

TEST_CASE("coset structure for the cyclic (r = 1) frame") {
  const CosetSpec spec = CosetSpec::make(41, 1, 58);
  const CosetStructureReport rep = verify_coset_structure(spec);
  CHECK(rep.pass);
  CHECK(rep.singletons == std::vector<std::uint64_t>{0, 29});
  CHECK(rep.pair_count == 28);
  // The coset of i is {i, n-i}.
  CHECK(coset_of(spec, 7).members == std::vector<std::uint64_t>{7, 51});
}

TEST_CASE("structure check rejects unsupported frames") {
  CHECK_THROWS_AS(verify_coset_structure(CosetSpec::make(31, 16, 74)), std::invalid_argument);
}
