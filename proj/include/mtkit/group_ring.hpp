#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mtkit/cyclotomic.hpp"
#include "mtkit/residue.hpp"

namespace mtkit {

enum class CoeffMode { exact_rational, mod_pk };

// Shape of the finite-level group ring
//   Lambda_{n,k} = (Z/p^k)[X] / ((1+X)^(p^n) - 1)
// or its exact-rational variant Q[X]/(omega_n). The identification
// gamma <-> 1+X is fixed once and recorded in all CLI output.
struct RingShape {
  std::uint64_t p = 3;
  unsigned n = 0;
  CoeffMode mode = CoeffMode::mod_pk;
  unsigned k = 1;  // ignored in exact mode

  RingShape() = default;
  RingShape(std::uint64_t p_, unsigned n_, CoeffMode mode_, unsigned k_ = 1);

  static RingShape exact(std::uint64_t p, unsigned n) {
    return RingShape(p, n, CoeffMode::exact_rational);
  }
  static RingShape mod(std::uint64_t p, unsigned n, unsigned k) {
    return RingShape(p, n, CoeffMode::mod_pk, k);
  }

  std::size_t dim() const;  // p^n
  PkContext ctx() const;    // mod-p^k mode only
  RingShape at_layer(unsigned m) const;

  bool operator==(const RingShape& o) const;
};

// Character of Gal(Q_n/Q) of order p^m (m = 0 is trivial), normalized by
// chi(1+X) = class of Y in (Z/p^k)[Y]/Phi_{p^m}(Y).
struct Character {
  std::uint64_t p = 3;
  unsigned m = 0;
};

struct VanishingOrder {
  unsigned order = 0;
  bool at_least_cap = false;
};

// Element of Lambda_{n,k} (or the exact variant), stored as X-power
// coefficients c[0..p^n-1]. Immutable in spirit: every operation returns a
// fresh value.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(RingShape s);  // zero

  static GroupRingElement zero(RingShape s) { return GroupRingElement(s); }
  static GroupRingElement one(RingShape s);
  static GroupRingElement constant(RingShape s, const Rat& c);
  static GroupRingElement monomial(RingShape s, std::size_t i, const Rat& c = 1);
  static GroupRingElement from_mod_coeffs(RingShape s, std::vector<std::uint64_t> c);
  static GroupRingElement from_exact_coeffs(RingShape s, std::vector<Rat> c);
  // Assemble from coefficients over the group basis (1+X)^j.
  static GroupRingElement from_group_coeffs(RingShape s, const std::vector<Rat>& g);
  static GroupRingElement from_group_coeffs_mod(RingShape s, const std::vector<std::uint64_t>& g);

  const RingShape& shape() const { return shape_; }
  std::size_t dim() const { return shape_.dim(); }

  const std::vector<std::uint64_t>& mod_coeffs() const;
  const std::vector<Rat>& exact_coeffs() const;

  // Coefficients over the group basis (1+X)^j.
  std::vector<std::uint64_t> group_coeffs_mod() const;
  std::vector<Rat> group_coeffs_exact() const;

  bool is_zero() const;
  bool operator==(const GroupRingElement& o) const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement scaled(const Rat& c) const;
  GroupRingElement scaled_mod(std::uint64_t c) const;

  // Multiplication by X (shift + reduction); cheaper than a full product.
  GroupRingElement times_x() const;

  // Natural quotient Lambda_n -> Lambda_m, i.e. reduction mod omega_m.
  GroupRingElement project(unsigned m) const;

  // Trace map Lambda_m -> Lambda_n (sigma -> sum of preimages): lift then
  // multiply by prod_{m<j<=n} Phi_j(1+X).
  GroupRingElement trace_to(unsigned n) const;

  // Group inversion sigma -> sigma^{-1}, i.e. (1+X) -> (1+X)^(p^n - 1).
  GroupRingElement involution() const;

  // Algebra homomorphism Lambda_{n,k} -> (Z/p^k)[Y]/Phi_{p^m}(Y) sending
  // 1+X to the canonical root. Requires chi.m <= n and mod-p^k mode.
  CyclotomicElement eval_character(const Character& chi) const;

  // Unit test in the local ring Lambda_{n,k}: the image in
  // Lambda_{n,k}/(p,X) = F_p must be nonzero. Mod-p^k mode only.
  bool is_unit() const;
  // Inverse of a unit to precision k (Newton against the nilpotent part).
  GroupRingElement inverse() const;

  // Exact -> mod-p^k conversion; requires p-integral coefficients.
  GroupRingElement reduce_mod(unsigned k) const;

  Rat constant_term_exact() const;
  std::uint64_t constant_term_mod() const;

 private:
  RingShape shape_;
  std::vector<std::uint64_t> mc_;
  std::vector<Rat> rc_;

  void check_same_shape(const GroupRingElement& o) const;
};

// (1+X)^(p^n) - 1 expanded as a polynomial, returned one layer up so the
// expansion survives reduction.
GroupRingElement omega(const RingShape& shape);

// Phi_m(1+X) = omega_m/omega_{m-1} as an element of layer n, 1 <= m <= n.
GroupRingElement cyclo_shift(const RingShape& shape, unsigned m);

// omega^{+/-}_n = X * prod Phi_m over even/odd m<=n, and the tilde variants
// without the X factor.
GroupRingElement omega_pm(const RingShape& shape, int sign);
GroupRingElement omega_tilde(const RingShape& shape, int sign);

// The unit c^{+/-} = prod (1+X)^(-p^(m-1)(p-1)) over even/odd m <= n.
GroupRingElement involution_unit(const RingShape& shape, int sign);

// Largest r <= cap with f in I_chi^r, where I_chi = ker(eval_character).
// Defined in the ideal-lattice layer.
VanishingOrder vanishing_order(const GroupRingElement& f, const Character& chi, unsigned cap);

}  // namespace mtkit
