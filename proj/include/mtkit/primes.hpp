#pragma once

#include <cstdint>
#include <vector>

#include "mtkit/error.hpp"

namespace mtkit {

bool is_prime_u64(std::uint64_t n);

// Primes up to and including `bound` (simple sieve; desk scale).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Element of the prime field Z/ell.
struct PrimeFieldElement {
  std::uint64_t ell;
  std::uint64_t value;  // in [0, ell)

  PrimeFieldElement(std::uint64_t l, std::int64_t v);

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  bool operator==(const PrimeFieldElement& o) const = default;
};

bool is_primitive_root(std::uint64_t ell, std::uint64_t g);

// Smallest primitive root mod ell.
std::uint64_t find_primitive_root(std::uint64_t ell);

// Exponent e in Z/(ell-1) with g^e = a mod ell, by exhaustive search.
// Throws not_primitive_root / not_unit.
std::uint64_t discrete_log(std::uint64_t ell, std::uint64_t g, std::uint64_t a);

}  // namespace mtkit
