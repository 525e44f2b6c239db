#pragma once

#include <cstdint>
#include <vector>

#include "mtkit/residue.hpp"

namespace mtkit {

// Element of (Z/p^k)[Y] / Phi_{p^m}(Y), the ring receiving values of a
// character of order p^m. Coefficient vector has length phi(p^m) =
// p^(m-1)(p-1); the degenerate case m = 0 is Z/p^k itself (modulus Y - 1).
struct CyclotomicElement {
  PkContext ctx;
  unsigned m = 0;
  std::vector<std::uint64_t> coeffs;  // index i holds the Y^i coefficient

  CyclotomicElement() = default;
  CyclotomicElement(PkContext c, unsigned m_);

  static std::size_t degree(std::uint64_t p, unsigned m);

  static CyclotomicElement zero(PkContext c, unsigned m_) { return CyclotomicElement(c, m_); }
  static CyclotomicElement one(PkContext c, unsigned m_);
  // The canonical root: class of Y (for m = 0 this is 1).
  static CyclotomicElement root(PkContext c, unsigned m_);

  bool is_zero() const;
  // Value as a residue; only meaningful when m = 0.
  Residue as_residue() const;

  CyclotomicElement operator+(const CyclotomicElement& o) const;
  CyclotomicElement operator-(const CyclotomicElement& o) const;
  CyclotomicElement operator*(const CyclotomicElement& o) const;
  CyclotomicElement scaled(std::uint64_t c) const;
  bool operator==(const CyclotomicElement& o) const;
};

}  // namespace mtkit
