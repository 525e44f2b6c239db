#pragma once

#include "mtkit/fp_module.hpp"

namespace mtkit {

// Pair of group-ring elements standing in for the two Coleman coordinates
// of a global class; admissibility means the constant terms satisfy
// b1(0) = ((p-1)/2) * b2(0), so that b1 - ((p-1)/2) b2 is divisible by X.
struct GlobalImagePair {
  RingShape shape;
  GroupRingElement b1;
  GroupRingElement b2;

  GlobalImagePair(GroupRingElement b1_, GroupRingElement b2_);
};

struct PresentationA {
  RingShape shape;
  std::vector<std::vector<GroupRingElement>> matrix;  // 2 x 3
};

// Presentation of (omega~^+, omega~^-)Lambda_n / omega~^{-sign} Lambda_n:
// generators {omega~^+, omega~^-}, syzygy relations from the kernel of
// (x,y) -> x omega~^+ + y omega~^-, plus the quotient relation.
FPModule local_quotient_module(const RingShape& shape, int sign);

struct InvolutionIdentity {
  GroupRingElement c;
  bool holds = false;
  bool c_is_unit = false;
};

// Checks involution(omega~^sign) = c^sign * omega~^sign with c^sign a unit.
InvolutionIdentity involution_identity_check(const RingShape& shape, int sign);

// Verifies that the span of ((p-1)/2, 1) and (X, 0) in Lambda^2 equals the
// kernel of r(h, k) = h(0) - ((p-1)/2) k(0), and that r is surjective.
bool kernel_basis_check(const RingShape& shape);

PresentationA presentation_A(const GlobalImagePair& pair);

struct FittYPrimeReport {
  std::vector<GroupRingElement> minors;  // the three 2x2 minors
  IdealLattice minor_ideal;
  IdealLattice reference;  // (omega~^+ b1, omega~^- b2)
  bool equal = false;
};

FittYPrimeReport fitt_Yprime(const GlobalImagePair& pair);

}  // namespace mtkit
