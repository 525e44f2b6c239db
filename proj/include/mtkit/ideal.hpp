#pragma once

#include <vector>

#include "mtkit/group_ring.hpp"
#include "mtkit/lattice.hpp"

namespace mtkit {

// Finitely generated ideal of Lambda_{n,k}, stored as the Howell-canonical
// basis of its coefficient lattice over Z/p^k (the lattice is closed under
// multiplication by X, i.e. it is the full ideal). Equality of ideals is
// equality of canonical bases.
class IdealLattice {
 public:
  explicit IdealLattice(RingShape shape);  // zero ideal

  static IdealLattice from_generators(const std::vector<GroupRingElement>& gens);
  static IdealLattice from_rows(RingShape shape, PkMatrix rows);  // closes under X
  static IdealLattice zero(RingShape shape) { return IdealLattice(shape); }
  static IdealLattice unit(RingShape shape);

  const RingShape& shape() const { return shape_; }
  const PkMatrix& basis() const { return basis_.basis; }
  std::vector<GroupRingElement> basis_elements() const;

  // Minimal Lambda-module generators (Nakayama over the local ring).
  std::vector<GroupRingElement> min_generators() const;

  bool contains(const GroupRingElement& f) const;
  bool is_zero() const { return basis_.basis.rows.empty(); }
  bool is_unit_ideal() const;
  unsigned log_cardinality() const { return basis_.log_cardinality(shape_.k); }

  bool operator==(const IdealLattice& o) const;

  IdealLattice operator+(const IdealLattice& o) const;
  IdealLattice operator*(const IdealLattice& o) const;

  // Image under the quotient Lambda_{n,k} -> Lambda_{m,k}.
  IdealLattice project(unsigned m) const;

 private:
  RingShape shape_;
  HowellForm basis_;

  void check_shape(const RingShape& o) const;
};

IdealLattice ideal_of(const GroupRingElement& g);
IdealLattice ideal_of(const GroupRingElement& g1, const GroupRingElement& g2);

inline bool ideal_membership(const GroupRingElement& f, const IdealLattice& i) {
  return i.contains(f);
}
inline bool ideal_equal(const IdealLattice& a, const IdealLattice& b) { return a == b; }
inline IdealLattice ideal_sum(const IdealLattice& a, const IdealLattice& b) { return a + b; }
inline IdealLattice ideal_product(const IdealLattice& a, const IdealLattice& b) { return a * b; }

// Minimal Lambda-generators of a lattice in Lambda^blocks (rows of length
// blocks * p^n, closed under blockwise X-multiplication after closure).
std::vector<std::vector<std::uint64_t>> module_generators(const RingShape& shape,
                                                          std::size_t blocks,
                                                          const PkMatrix& lattice);

// Blockwise multiplication-by-X on a vector in Lambda^blocks.
std::vector<std::uint64_t> shift_blocks(const RingShape& shape, std::size_t blocks,
                                        const std::vector<std::uint64_t>& v);

// Augmentation-style ideal at a character: I_chi = ker(eval_character),
// computed as a kernel lattice.
IdealLattice character_kernel_ideal(const RingShape& shape, const Character& chi);

}  // namespace mtkit
