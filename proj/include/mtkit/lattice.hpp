#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mtkit/residue.hpp"

namespace mtkit {

// Dense matrix over Z/p^k whose rows span a lattice (a Z/p^k-submodule of
// (Z/p^k)^cols). The Howell form is the canonical generating matrix: two
// row sets span the same lattice iff their Howell forms are identical.
struct PkMatrix {
  PkContext ctx;
  std::size_t cols = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  PkMatrix() = default;
  PkMatrix(PkContext c, std::size_t cols_) : ctx(c), cols(cols_) {}

  void add_row(std::vector<std::uint64_t> r);
  bool operator==(const PkMatrix& o) const { return cols == o.cols && rows == o.rows; }
};

struct HowellPivot {
  std::size_t col;
  unsigned val;  // pivot entry is p^val
};

// Howell normal form together with the data needed for membership tests
// and linear solving.
struct HowellForm {
  PkMatrix basis;                  // canonical rows, pivot columns increasing
  std::vector<HowellPivot> pivots; // one per basis row
  // transform[i] * original = basis[i]; filled when requested.
  std::vector<std::vector<std::uint64_t>> transform;
  // Generators of {u : u * original = 0}; filled when requested.
  std::vector<std::vector<std::uint64_t>> kernel;

  // Number of lattice points, as p^e; returns e.
  unsigned log_cardinality(unsigned k) const;
};

HowellForm howell(const PkMatrix& m, bool want_transform = false);

// Kernel of u -> u*M as a Howell-canonical lattice in (Z/p^k)^rows.
// Completeness is cross-checked internally via |ker| * |im| = q^rows.
PkMatrix kernel_lattice(const PkMatrix& m);

// Membership of v in the row span; when `combo` is given and the form was
// built with transforms, fills the coefficients over the original rows.
bool span_contains(const HowellForm& h, const std::vector<std::uint64_t>& v,
                   std::vector<std::uint64_t>* combo = nullptr);

// Some u with u*M = b, or nullopt.
std::optional<std::vector<std::uint64_t>> solve_span(const PkMatrix& m,
                                                     const std::vector<std::uint64_t>& b);

}  // namespace mtkit
