#include "mtkit/ideal.hpp"

namespace mtkit {

IdealLattice::IdealLattice(RingShape shape) : shape_(shape) {
  shape.ctx();  // mod-p^k only
  basis_.basis = PkMatrix(shape.ctx(), shape.dim());
}

void IdealLattice::check_shape(const RingShape& o) const {
  require(shape_ == o, errc::shape_mismatch, "ideal shape mismatch");
}

IdealLattice IdealLattice::from_rows(RingShape shape, PkMatrix rows) {
  IdealLattice i(shape);
  const std::size_t d = shape.dim();
  PkMatrix closed(shape.ctx(), d);
  for (const auto& r : rows.rows) {
    GroupRingElement g = GroupRingElement::from_mod_coeffs(shape, r);
    for (std::size_t s = 0; s < d; ++s) {
      closed.add_row(g.mod_coeffs());
      g = g.times_x();
    }
  }
  i.basis_ = howell(closed);
  return i;
}

IdealLattice IdealLattice::from_generators(const std::vector<GroupRingElement>& gens) {
  require(!gens.empty(), errc::invalid_argument, "need at least one generator");
  RingShape shape = gens.front().shape();
  PkMatrix rows(shape.ctx(), shape.dim());
  for (const auto& g : gens) {
    require(g.shape() == shape, errc::shape_mismatch, "generator shape mismatch");
    rows.add_row(g.mod_coeffs());
  }
  return from_rows(shape, std::move(rows));
}

IdealLattice IdealLattice::unit(RingShape shape) {
  return from_generators({GroupRingElement::one(shape)});
}

std::vector<GroupRingElement> IdealLattice::basis_elements() const {
  std::vector<GroupRingElement> out;
  out.reserve(basis_.basis.rows.size());
  for (const auto& r : basis_.basis.rows) out.push_back(GroupRingElement::from_mod_coeffs(shape_, r));
  return out;
}

bool IdealLattice::contains(const GroupRingElement& f) const {
  check_shape(f.shape());
  return span_contains(basis_, f.mod_coeffs());
}

bool IdealLattice::is_unit_ideal() const {
  return contains(GroupRingElement::one(shape_));
}

bool IdealLattice::operator==(const IdealLattice& o) const {
  return shape_ == o.shape_ && basis_.basis == o.basis_.basis;
}

IdealLattice IdealLattice::operator+(const IdealLattice& o) const {
  check_shape(o.shape_);
  PkMatrix rows(shape_.ctx(), shape_.dim());
  for (const auto& r : basis_.basis.rows) rows.rows.push_back(r);
  for (const auto& r : o.basis_.basis.rows) rows.rows.push_back(r);
  IdealLattice out(shape_);
  out.basis_ = howell(rows);  // both inputs already X-closed
  return out;
}

IdealLattice IdealLattice::operator*(const IdealLattice& o) const {
  check_shape(o.shape_);
  PkMatrix rows(shape_.ctx(), shape_.dim());
  auto lhs = basis_elements();
  auto rhs = o.basis_elements();
  for (const auto& a : lhs)
    for (const auto& b : rhs) rows.add_row((a * b).mod_coeffs());
  IdealLattice out(shape_);
  out.basis_ = howell(rows);  // products of X-closed lattices stay X-closed
  return out;
}

IdealLattice IdealLattice::project(unsigned m) const {
  require(m <= shape_.n, errc::layer_out_of_range, "ideal projection above layer");
  RingShape target = shape_.at_layer(m);
  std::vector<GroupRingElement> gens;
  for (const auto& r : basis_.basis.rows)
    gens.push_back(GroupRingElement::from_mod_coeffs(shape_, r).project(m));
  if (gens.empty()) return IdealLattice(target);
  return from_generators(gens);
}

std::vector<GroupRingElement> IdealLattice::min_generators() const {
  std::vector<GroupRingElement> out;
  if (is_zero()) return out;
  auto raw = module_generators(shape_, 1, basis_.basis);
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back(GroupRingElement::from_mod_coeffs(shape_, r));
  return out;
}

IdealLattice ideal_of(const GroupRingElement& g) { return IdealLattice::from_generators({g}); }

IdealLattice ideal_of(const GroupRingElement& g1, const GroupRingElement& g2) {
  return IdealLattice::from_generators({g1, g2});
}

std::vector<std::uint64_t> shift_blocks(const RingShape& shape, std::size_t blocks,
                                        const std::vector<std::uint64_t>& v) {
  const std::size_t d = shape.dim();
  require(v.size() == blocks * d, errc::shape_mismatch, "block vector length mismatch");
  std::vector<std::uint64_t> out(v.size());
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<std::uint64_t> part(v.begin() + static_cast<std::ptrdiff_t>(b * d),
                                    v.begin() + static_cast<std::ptrdiff_t>((b + 1) * d));
    auto shifted = GroupRingElement::from_mod_coeffs(shape, part).times_x().mod_coeffs();
    std::copy(shifted.begin(), shifted.end(), out.begin() + static_cast<std::ptrdiff_t>(b * d));
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> module_generators(const RingShape& shape,
                                                          std::size_t blocks,
                                                          const PkMatrix& lattice) {
  const PkContext ctx = shape.ctx();
  const std::size_t d = shape.dim();
  const std::size_t width = blocks * d;

  // m * L for the maximal ideal m = (p, X).
  PkMatrix small(ctx, width);
  for (const auto& r : lattice.rows) {
    std::vector<std::uint64_t> pr(r);
    for (auto& x : pr) x = ctx.mul(x, shape.p % ctx.q);
    small.add_row(std::move(pr));
    small.add_row(shift_blocks(shape, blocks, r));
  }

  auto lambda_closure = [&](const std::vector<std::uint64_t>& r, PkMatrix& into) {
    std::vector<std::uint64_t> cur = r;
    for (std::size_t s = 0; s < d; ++s) {
      into.add_row(cur);
      cur = shift_blocks(shape, blocks, cur);
    }
  };

  PkMatrix current = small;
  HowellForm current_h = howell(current);
  std::vector<std::vector<std::uint64_t>> gens;
  for (const auto& r : lattice.rows) {
    if (span_contains(current_h, r)) continue;
    gens.push_back(r);
    lambda_closure(r, current);
    current_h = howell(current);
    current = current_h.basis;  // keep the working set small
  }
  return gens;
}

IdealLattice character_kernel_ideal(const RingShape& shape, const Character& chi) {
  require(chi.m <= shape.n, errc::layer_out_of_range, "character order exceeds layer");
  const PkContext ctx = shape.ctx();
  const std::size_t d = shape.dim();
  // Rows: images of the X-power basis under eval_character.
  std::size_t target_len = CyclotomicElement::degree(shape.p, chi.m);
  PkMatrix m(ctx, target_len);
  for (std::size_t t = 0; t < d; ++t) {
    auto img = GroupRingElement::monomial(shape, t).eval_character(chi);
    m.add_row(img.coeffs);
  }
  PkMatrix ker = kernel_lattice(m);  // rows live in Lambda coordinates
  return IdealLattice::from_rows(shape, std::move(ker));
}

VanishingOrder vanishing_order(const GroupRingElement& f, const Character& chi, unsigned cap) {
  IdealLattice i_chi = character_kernel_ideal(f.shape(), chi);
  IdealLattice power = i_chi;
  VanishingOrder out;
  for (unsigned r = 1; r <= cap; ++r) {
    if (r > 1) power = power * i_chi;
    if (!power.contains(f)) {
      out.order = r - 1;
      return out;
    }
  }
  out.order = cap;
  out.at_least_cap = true;
  return out;
}

}  // namespace mtkit
