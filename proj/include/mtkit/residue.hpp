#pragma once

#include <cstdint>

#include "mtkit/error.hpp"
#include "mtkit/numeric.hpp"

namespace mtkit {

// Arithmetic context for Z/p^k with an odd prime p and explicit precision k.
// p = 2 is rejected at construction. p^k must fit well below 2^63 so that
// products are safe through the __int128 path and values survive JSON.
struct PkContext {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;  // p^k

  PkContext() = default;
  PkContext(std::uint64_t p_, unsigned k_);

  bool operator==(const PkContext& o) const { return p == o.p && k == o.k; }

  std::uint64_t reduce(const Int& a) const;
  std::uint64_t reduce_i64(std::int64_t a) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b) % q; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, q); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, q); }

  // p-adic valuation in [0, k]; val(0) = k by convention.
  unsigned val(std::uint64_t a) const;

  bool is_unit(std::uint64_t a) const { return a % p != 0; }

  // Inverse of a unit (Euler / power lift). Throws not_unit otherwise.
  std::uint64_t inv(std::uint64_t a) const;
};

// PrecisionInteger: a residue in Z/p^k that carries its own (p, k).
// Mixed-precision arithmetic is an error, never a coercion.
struct Residue {
  PkContext ctx;
  std::uint64_t value = 0;

  Residue() = default;
  Residue(PkContext c, std::uint64_t v) : ctx(c), value(v % c.q) {}

  static Residue from_int(const PkContext& c, const Int& a) { return Residue(c, c.reduce(a)); }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  bool operator==(const Residue& o) const { return ctx == o.ctx && value == o.value; }
};

// Unit root of x^2 - a_p x + p in Z/p^k (the root congruent to a_p mod p),
// lifted by Newton iteration. Throws not_ordinary when p | a_p.
Residue hensel_unit_root(std::int64_t a_p, std::uint64_t p, unsigned k);

// Image of a p-integral rational in Z/p^k. Throws not_p_integral when p
// divides the denominator.
Residue rational_to_precision(const Rat& r, std::uint64_t p, unsigned k);
std::uint64_t rational_to_pk(const Rat& r, const PkContext& ctx);

}  // namespace mtkit
