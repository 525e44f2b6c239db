#pragma once

#include <optional>
#include <vector>

#include "mtkit/ideal.hpp"

namespace mtkit {

// Finitely presented Lambda_{n,k}-module given by a relation matrix:
// R^s --matrix--> R^r -> M -> 0, stored row-major (r rows, s columns).
struct FPModule {
  RingShape shape;
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<std::vector<GroupRingElement>> matrix;

  FPModule() = default;
  FPModule(RingShape shape_, std::size_t r_, std::size_t s_);

  static FPModule cyclic(const GroupRingElement& f);  // R/(f)

  const GroupRingElement& at(std::size_t i, std::size_t j) const { return matrix[i][j]; }
  void set(std::size_t i, std::size_t j, GroupRingElement v);
};

// Ideal of r x r minors of the relation matrix; zero ideal when s < r,
// unit ideal when r = 0. Generator counts above 6 are rejected.
IdealLattice fitting_ideal(const FPModule& m);

// Determinant over the group ring by cofactor expansion.
GroupRingElement ring_det(const std::vector<std::vector<GroupRingElement>>& a, RingShape shape);

struct LinearSolution {
  std::vector<GroupRingElement> x;  // one solution of A x = b
  PkMatrix kernel;                  // lattice of homogeneous solutions (coords in Lambda^c)
};

// Exact solve of A x = b over Lambda_{n,k}; A is r x c, b has length r.
std::optional<LinearSolution> solve_linear(const std::vector<std::vector<GroupRingElement>>& a,
                                           const std::vector<GroupRingElement>& b);

// Kernel of x -> A x as a lattice in Lambda^c (coordinates blockwise).
PkMatrix linear_kernel(const std::vector<std::vector<GroupRingElement>>& a, RingShape shape);

// Block presentation [[A1, coupling], [0, A3]] of the middle term of an
// extension of the A3-module by the A1-module.
FPModule build_extension(const FPModule& m1, const FPModule& m3,
                         const std::vector<std::vector<GroupRingElement>>& coupling);

struct QuotientSpec {
  enum class Kind { p_power, omega_layer } kind;
  unsigned value;  // j for (p^j), m for (omega_m)

  static QuotientSpec p_power(unsigned j) { return {Kind::p_power, j}; }
  static QuotientSpec omega_layer(unsigned m) { return {Kind::omega_layer, m}; }
};

// M/IM over R/I for I = (p^j) or I = (omega_m), m < n.
FPModule base_change(const FPModule& m, const QuotientSpec& spec);

}  // namespace mtkit
