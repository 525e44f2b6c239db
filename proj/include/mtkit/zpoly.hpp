#pragma once

#include <cstdint>
#include <map>

#include "mtkit/numeric.hpp"

namespace mtkit {

// Sparse integer polynomial, used for exact identity checks among the
// omega/Phi polynomials. Working in the basis T = 1+X keeps these
// polynomials to a handful of terms even at large layers; equality in T
// is equality in X since T -> 1+X is an automorphism of Z[T].
class ZPoly {
 public:
  ZPoly() = default;

  static ZPoly monomial(std::int64_t exp, Int c = 1);
  static ZPoly constant(Int c) { return monomial(0, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  std::int64_t degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  std::size_t term_count() const { return terms_.size(); }
  Int coeff(std::int64_t exp) const;

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  bool operator==(const ZPoly& o) const { return terms_ == o.terms_; }

  const std::map<std::int64_t, Int>& terms() const { return terms_; }

  void set(std::int64_t exp, Int c);

 private:
  std::map<std::int64_t, Int> terms_;  // exponent -> nonzero coefficient
};

// omega_n, Phi_m(1+X) and the +/- products, all as exact polynomials in
// T = 1+X.
ZPoly omega_T(std::uint64_t p, unsigned n);                       // T^(p^n) - 1
ZPoly phi_T(std::uint64_t p, unsigned m);                         // sum_{j<p} T^(j p^(m-1))
ZPoly omega_tilde_T(std::uint64_t p, unsigned n, int sign);       // product over even/odd m
ZPoly omega_pm_T(std::uint64_t p, unsigned n, int sign);          // (T-1) * omega_tilde
}  // namespace mtkit
