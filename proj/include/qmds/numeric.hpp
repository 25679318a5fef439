#pragma once

#include <cstdint>
#include <vector>

namespace qmds {

// Modular arithmetic on 64-bit operands. Intermediates use 128 bits so that
// products of the magnitudes that occur here (rn*q, values near q^4) cannot
// overflow.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Distinct prime factors of n in increasing order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

struct PrimePowerParts {
  std::uint64_t p = 0;
  unsigned l = 0;
};

// Decomposes n as p^l with p prime; returns false if n is not a prime power.
bool try_prime_power(std::uint64_t n, PrimePowerParts& out);

}  // namespace qmds
