#include "mtkit/selmer.hpp"

namespace mtkit {

GlobalImagePair::GlobalImagePair(GroupRingElement b1_, GroupRingElement b2_)
    : shape(b1_.shape()), b1(std::move(b1_)), b2(std::move(b2_)) {
  require(b1.shape() == b2.shape(), errc::shape_mismatch, "pair shape mismatch");
  auto ctx = shape.ctx();
  std::uint64_t half = (shape.p - 1) / 2;
  std::uint64_t want = ctx.mul(half, b2.constant_term_mod());
  require(b1.constant_term_mod() == want, errc::constant_term_mismatch,
          "b1(0) != ((p-1)/2) b2(0)");
}

FPModule local_quotient_module(const RingShape& shape, int sign) {
  require(sign == 1 || sign == -1, errc::invalid_argument, "sign must be +1 or -1");
  GroupRingElement wp = omega_tilde(shape, 1);
  GroupRingElement wm = omega_tilde(shape, -1);

  // Syzygies of (omega~^+, omega~^-) inside Lambda^2.
  std::vector<std::vector<GroupRingElement>> row{{wp, wm}};
  PkMatrix ker = linear_kernel(row, shape);
  auto gens = module_generators(shape, 2, ker);

  const std::size_t d = shape.dim();
  FPModule m(shape, 2, gens.size() + 1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<std::uint64_t> x(gens[j].begin(), gens[j].begin() + static_cast<std::ptrdiff_t>(d));
    std::vector<std::uint64_t> y(gens[j].begin() + static_cast<std::ptrdiff_t>(d), gens[j].end());
    m.matrix[0][j] = GroupRingElement::from_mod_coeffs(shape, std::move(x));
    m.matrix[1][j] = GroupRingElement::from_mod_coeffs(shape, std::move(y));
  }
  // Quotient by omega~^{-sign}: kill the matching generator.
  if (sign > 0) {
    m.matrix[0][gens.size()] = GroupRingElement::zero(shape);
    m.matrix[1][gens.size()] = GroupRingElement::one(shape);
  } else {
    m.matrix[0][gens.size()] = GroupRingElement::one(shape);
    m.matrix[1][gens.size()] = GroupRingElement::zero(shape);
  }
  return m;
}

InvolutionIdentity involution_identity_check(const RingShape& shape, int sign) {
  InvolutionIdentity out{involution_unit(shape, sign), false, false};
  GroupRingElement wt = omega_tilde(shape, sign);
  out.holds = wt.involution() == out.c * wt;
  out.c_is_unit = shape.mode == CoeffMode::mod_pk ? out.c.is_unit()
                                                  : out.c.constant_term_exact() != 0;
  return out;
}

bool kernel_basis_check(const RingShape& shape) {
  const PkContext ctx = shape.ctx();
  const std::size_t d = shape.dim();
  const std::uint64_t half = (shape.p - 1) / 2;

  // r as a (2d) x 1 matrix over Z/p^k: X^t -> t==0 ? 1 : 0 on the first
  // block, -(p-1)/2 at the constant of the second block.
  PkMatrix m(ctx, 1);
  for (std::size_t t = 0; t < 2 * d; ++t) {
    std::uint64_t v = 0;
    if (t == 0) v = 1;
    if (t == d) v = ctx.neg(half % ctx.q);
    m.add_row({v});
  }
  PkMatrix ker = kernel_lattice(m);

  // Lambda-span of ((p-1)/2, 1) and (X, 0).
  PkMatrix span(ctx, 2 * d);
  std::vector<std::uint64_t> v1(2 * d, 0), v2(2 * d, 0);
  v1[0] = half % ctx.q;
  v1[d] = 1;
  if (d > 1)
    v2[1] = 1;  // X
  else
    v2[0] = 0;  // X = 0 at layer 0
  for (auto* v : {&v1, &v2}) {
    std::vector<std::uint64_t> cur = *v;
    for (std::size_t s = 0; s < d; ++s) {
      span.add_row(cur);
      cur = shift_blocks(shape, 2, cur);
    }
  }
  HowellForm span_h = howell(span);
  HowellForm ker_h = howell(ker);
  if (!(span_h.basis == ker_h.basis)) return false;

  // Surjectivity of r: the image lattice must be everything.
  HowellForm im = howell(m);
  return im.pivots.size() == 1 && im.pivots[0].val == 0;
}

PresentationA presentation_A(const GlobalImagePair& pair) {
  const RingShape& shape = pair.shape;
  const std::size_t d = shape.dim();
  std::uint64_t half = (shape.p - 1) / 2;

  // (b1 - ((p-1)/2) b2) / X: constant term vanishes by admissibility, so
  // the quotient is the coefficient shift (degrees stay below p^n).
  GroupRingElement g = pair.b1 - pair.b2.scaled_mod(half);
  require(g.constant_term_mod() == 0, errc::constant_term_mismatch, "pair not divisible by X");
  std::vector<std::uint64_t> q(d, 0);
  const auto& gc = g.mod_coeffs();
  for (std::size_t i = 0; i + 1 < d; ++i) q[i] = gc[i + 1];
  GroupRingElement h = GroupRingElement::from_mod_coeffs(shape, std::move(q));

  PresentationA a;
  a.shape = shape;
  a.matrix = {{GroupRingElement::zero(shape), omega_pm(shape, 1), pair.b2},
              {omega_tilde(shape, -1), -omega_tilde(shape, 1).scaled_mod(half), h}};
  return a;
}

FittYPrimeReport fitt_Yprime(const GlobalImagePair& pair) {
  PresentationA a = presentation_A(pair);
  const auto& m = a.matrix;
  auto det2 = [&](std::size_t c1, std::size_t c2) {
    return m[0][c1] * m[1][c2] - m[0][c2] * m[1][c1];
  };
  std::vector<GroupRingElement> minors{det2(0, 1), det2(0, 2), det2(1, 2)};

  IdealLattice minor_ideal = IdealLattice::from_generators(minors);
  IdealLattice reference =
      ideal_of(omega_tilde(pair.shape, 1) * pair.b1, omega_tilde(pair.shape, -1) * pair.b2);
  bool equal = minor_ideal == reference;
  return FittYPrimeReport{std::move(minors), std::move(minor_ideal), std::move(reference), equal};
}

}  // namespace mtkit
