#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmds/numeric.hpp"

using namespace qmds;

TEST_CASE("mul_mod and pow_mod handle large operands") {
  CHECK(mul_mod(0, 12345, 97) == 0);
  CHECK(mul_mod(31, 481, 2368) == 703);  // 31*481 = 14911 = 6*2368 + 703
  // (m-1)^2 == 1 (mod m) with the square far beyond 64 bits.
  const std::uint64_t m = 4294967311ull;
  CHECK(mul_mod(m - 1, m - 1, m) == 1);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(5, 0, 7) == 1);
  CHECK(pow_mod(7, 96, 97) == 1);  // Fermat
}

TEST_CASE("is_prime on knowns") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK(is_prime(191));
  CHECK(is_prime(2147483647ull));  // 2^31 - 1
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(961));      // 31^2
  CHECK_FALSE(is_prime(341));      // Fermat pseudoprime base 2
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("prime_factors") {
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(2368) == std::vector<std::uint64_t>{2, 37});  // 2^6 * 37
  CHECK(prime_factors(923520) == std::vector<std::uint64_t>{2, 3, 5, 13, 37});  // 31^4 - 1
  CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
}

TEST_CASE("try_prime_power") {
  PrimePowerParts parts;
  REQUIRE(try_prime_power(81, parts));
  CHECK(parts.p == 3);
  CHECK(parts.l == 4);
  REQUIRE(try_prime_power(31, parts));
  CHECK(parts.p == 31);
  CHECK(parts.l == 1);
  CHECK_FALSE(try_prime_power(1, parts));
  CHECK_FALSE(try_prime_power(12, parts));
}
