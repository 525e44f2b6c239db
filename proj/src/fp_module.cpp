#include "mtkit/fp_module.hpp"

namespace mtkit {

FPModule::FPModule(RingShape shape_, std::size_t r_, std::size_t s_)
    : shape(shape_), r(r_), s(s_) {
  matrix.assign(r_, std::vector<GroupRingElement>(s_, GroupRingElement::zero(shape_)));
}

FPModule FPModule::cyclic(const GroupRingElement& f) {
  FPModule m(f.shape(), 1, 1);
  m.matrix[0][0] = f;
  return m;
}

void FPModule::set(std::size_t i, std::size_t j, GroupRingElement v) {
  require(v.shape() == shape, errc::shape_mismatch, "entry shape mismatch");
  matrix[i][j] = std::move(v);
}

GroupRingElement ring_det(const std::vector<std::vector<GroupRingElement>>& a, RingShape shape) {
  const std::size_t n = a.size();
  if (n == 0) return GroupRingElement::one(shape);
  if (n == 1) return a[0][0];
  GroupRingElement acc = GroupRingElement::zero(shape);
  // Laplace expansion along the first row; n <= 6 in practice.
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<GroupRingElement>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<GroupRingElement> row;
      row.reserve(n - 1);
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(a[i][jj]);
      sub.push_back(std::move(row));
    }
    GroupRingElement term = a[0][j] * ring_det(sub, shape);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

IdealLattice fitting_ideal(const FPModule& m) {
  if (m.r == 0) return IdealLattice::unit(m.shape);
  if (m.s < m.r) return IdealLattice::zero(m.shape);
  require(m.r <= 6, errc::invalid_argument, "minor enumeration limited to r <= 6");

  std::vector<GroupRingElement> minors;
  std::vector<std::size_t> cols(m.r);
  for (std::size_t i = 0; i < m.r; ++i) cols[i] = i;
  while (true) {
    std::vector<std::vector<GroupRingElement>> sub(m.r);
    for (std::size_t i = 0; i < m.r; ++i)
      for (std::size_t j : cols) sub[i].push_back(m.at(i, j));
    minors.push_back(ring_det(sub, m.shape));

    // next column combination
    std::size_t i = m.r;
    while (i > 0 && cols[i - 1] == m.s - (m.r - (i - 1))) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < m.r; ++j) cols[j] = cols[j - 1] + 1;
  }
  return IdealLattice::from_generators(minors);
}

PkMatrix linear_kernel(const std::vector<std::vector<GroupRingElement>>& a, RingShape shape) {
  const PkContext ctx = shape.ctx();
  const std::size_t d = shape.dim();
  const std::size_t r = a.size();
  const std::size_t c = r == 0 ? 0 : a[0].size();
  // Row (j, t) is the image of the basis vector X^t e_j under A.
  PkMatrix big(ctx, r * d);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<GroupRingElement> col;
    for (std::size_t i = 0; i < r; ++i) col.push_back(a[i][j]);
    for (std::size_t t = 0; t < d; ++t) {
      std::vector<std::uint64_t> row;
      row.reserve(r * d);
      for (std::size_t i = 0; i < r; ++i) {
        const auto& cc = col[i].mod_coeffs();
        row.insert(row.end(), cc.begin(), cc.end());
      }
      big.add_row(std::move(row));
      for (auto& e : col) e = e.times_x();
    }
  }
  return kernel_lattice(big);
}

std::optional<LinearSolution> solve_linear(const std::vector<std::vector<GroupRingElement>>& a,
                                           const std::vector<GroupRingElement>& b) {
  require(!a.empty() && !a[0].empty(), errc::invalid_argument, "empty system");
  RingShape shape = a[0][0].shape();
  const std::size_t r = a.size();
  const std::size_t c = a[0].size();
  require(b.size() == r, errc::shape_mismatch, "rhs length mismatch");
  for (const auto& row : a) {
    require(row.size() == c, errc::shape_mismatch, "ragged matrix");
    for (const auto& e : row) require(e.shape() == shape, errc::shape_mismatch, "entry shape");
  }
  const PkContext ctx = shape.ctx();
  const std::size_t d = shape.dim();

  PkMatrix big(ctx, r * d);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<GroupRingElement> col;
    for (std::size_t i = 0; i < r; ++i) col.push_back(a[i][j]);
    for (std::size_t t = 0; t < d; ++t) {
      std::vector<std::uint64_t> row;
      row.reserve(r * d);
      for (std::size_t i = 0; i < r; ++i) {
        const auto& cc = col[i].mod_coeffs();
        row.insert(row.end(), cc.begin(), cc.end());
      }
      big.add_row(std::move(row));
      for (auto& e : col) e = e.times_x();
    }
  }

  std::vector<std::uint64_t> rhs;
  rhs.reserve(r * d);
  for (const auto& e : b) {
    require(e.shape() == shape, errc::shape_mismatch, "rhs shape");
    const auto& cc = e.mod_coeffs();
    rhs.insert(rhs.end(), cc.begin(), cc.end());
  }

  auto combo = solve_span(big, rhs);
  if (!combo) return std::nullopt;

  LinearSolution sol;
  sol.x.reserve(c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<std::uint64_t> coeffs(combo->begin() + static_cast<std::ptrdiff_t>(j * d),
                                      combo->begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
    sol.x.push_back(GroupRingElement::from_mod_coeffs(shape, std::move(coeffs)));
  }
  sol.kernel = kernel_lattice(big);
  return sol;
}

FPModule build_extension(const FPModule& m1, const FPModule& m3,
                         const std::vector<std::vector<GroupRingElement>>& coupling) {
  require(m1.shape == m3.shape, errc::shape_mismatch, "extension shape mismatch");
  require(coupling.size() == m1.r, errc::shape_mismatch, "coupling row count");
  for (const auto& row : coupling)
    require(row.size() == m3.s, errc::shape_mismatch, "coupling column count");

  FPModule m2(m1.shape, m1.r + m3.r, m1.s + m3.s);
  for (std::size_t i = 0; i < m1.r; ++i)
    for (std::size_t j = 0; j < m1.s; ++j) m2.matrix[i][j] = m1.at(i, j);
  for (std::size_t i = 0; i < m1.r; ++i)
    for (std::size_t j = 0; j < m3.s; ++j) m2.matrix[i][m1.s + j] = coupling[i][j];
  for (std::size_t i = 0; i < m3.r; ++i)
    for (std::size_t j = 0; j < m3.s; ++j) m2.matrix[m1.r + i][m1.s + j] = m3.at(i, j);
  return m2;
}

FPModule base_change(const FPModule& m, const QuotientSpec& spec) {
  if (spec.kind == QuotientSpec::Kind::p_power) {
    unsigned j = spec.value;
    require(j >= 1 && j <= m.shape.k, errc::unsupported_quotient, "need 1 <= j <= k for (p^j)");
    if (j == m.shape.k) return m;  // p^k is already zero
    RingShape target = RingShape::mod(m.shape.p, m.shape.n, j);
    FPModule out(target, m.r, m.s);
    auto ctx = target.ctx();
    for (std::size_t i = 0; i < m.r; ++i)
      for (std::size_t jj = 0; jj < m.s; ++jj) {
        std::vector<std::uint64_t> c = m.at(i, jj).mod_coeffs();
        for (auto& x : c) x %= ctx.q;
        out.matrix[i][jj] = GroupRingElement::from_mod_coeffs(target, std::move(c));
      }
    return out;
  }
  unsigned layer = spec.value;
  require(layer < m.shape.n, errc::unsupported_quotient, "need m < n for (omega_m)");
  RingShape target = m.shape.at_layer(layer);
  FPModule out(target, m.r, m.s);
  for (std::size_t i = 0; i < m.r; ++i)
    for (std::size_t jj = 0; jj < m.s; ++jj) out.matrix[i][jj] = m.at(i, jj).project(layer);
  return out;
}

}  // namespace mtkit
