#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mtkit/selmer.hpp"

using namespace mtkit;

static GroupRingElement random_elem(const RingShape& s, std::mt19937_64& rng) {
  std::vector<std::uint64_t> c(s.dim());
  for (auto& x : c) x = rng() % s.ctx().q;
  return GroupRingElement::from_mod_coeffs(s, c);
}

// Admissible pair built as b1 = ((p-1)/2) b2 + X h.
static GlobalImagePair random_pair(const RingShape& s, std::mt19937_64& rng) {
  auto b2 = random_elem(s, rng);
  auto h = random_elem(s, rng);
  auto b1 = b2.scaled_mod((s.p - 1) / 2) + GroupRingElement::monomial(s, 1 % s.dim()) * h;
  if (s.dim() == 1) b1 = b2.scaled_mod((s.p - 1) / 2);
  return GlobalImagePair(b1, b2);
}

TEST_CASE("local quotient module: stated examples") {
  // n=0: omega~ = 1, module trivial, Fitting ideal = (1)
  for (int sign : {1, -1}) {
    auto m0 = local_quotient_module(RingShape::mod(3, 0, 3), sign);
    CHECK(fitting_ideal(m0).is_unit_ideal());
  }

  // p=3, n=1, sign=+: module = Lambda_1/(omega~^-_1), Fitt = (Phi_1(1+X))
  auto s1 = RingShape::mod(3, 1, 3);
  auto m1 = local_quotient_module(s1, 1);
  CHECK(fitting_ideal(m1) == ideal_of(cyclo_shift(s1, 1)));

  // p=3, n=2, sign=-: Fitt = (omega~^+_2)
  auto s2 = RingShape::mod(3, 2, 3);
  auto m2 = local_quotient_module(s2, -1);
  CHECK(fitting_ideal(m2) == ideal_of(omega_tilde(s2, 1)));
}

TEST_CASE("local quotient Fitting ideal equals (omega~^{-sign}) across shapes") {
  for (std::uint64_t p : {3ull, 5ull}) {
    for (unsigned n = 0; n <= 3; ++n) {
      for (unsigned k : {2u, 4u}) {
        auto s = RingShape::mod(p, n, k);
        for (int sign : {1, -1}) {
          auto m = local_quotient_module(s, sign);
          CHECK(fitting_ideal(m) == ideal_of(omega_tilde(s, -sign)));
        }
      }
    }
  }
}

TEST_CASE("involution identity report") {
  // (p=3, n=1, -): c^- = (1+X)^{-2} = (1+X)
  auto s = RingShape::mod(3, 1, 4);
  auto rep = involution_identity_check(s, -1);
  CHECK(rep.holds);
  CHECK(rep.c_is_unit);
  std::vector<std::uint64_t> g(3, 0);
  g[1] = 1;  // the group element (1+X)
  CHECK(rep.c == GroupRingElement::from_group_coeffs_mod(s, g));

  // (p=3, n=2, +): c^+ = (1+X)^{-6} reduced; identity holds
  auto rep2 = involution_identity_check(RingShape::mod(3, 2, 4), 1);
  CHECK(rep2.holds);
  CHECK(rep2.c_is_unit);
  std::vector<std::uint64_t> g2(9, 0);
  g2[3] = 1;  // -6 = 3 mod 9
  CHECK(rep2.c == GroupRingElement::from_group_coeffs_mod(RingShape::mod(3, 2, 4), g2));

  // n = 0: empty product, c = 1
  auto rep0 = involution_identity_check(RingShape::mod(5, 0, 2), 1);
  CHECK(rep0.holds);
  CHECK(rep0.c == GroupRingElement::one(RingShape::mod(5, 0, 2)));
}

TEST_CASE("kernel basis of the Coleman cokernel map") {
  CHECK(kernel_basis_check(RingShape::mod(3, 0, 2)));
  CHECK(kernel_basis_check(RingShape::mod(3, 2, 4)));
  for (std::uint64_t p : {3ull, 5ull})
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned k : {1u, 3u, 6u}) CHECK(kernel_basis_check(RingShape::mod(p, n, k)));

  // sanity: (1, 0) is not in the kernel since r(1,0) = 1
  auto s = RingShape::mod(3, 1, 2);
  const std::size_t d = s.dim();
  PkMatrix span(s.ctx(), 2 * d);
  std::vector<std::uint64_t> v1(2 * d, 0), v2(2 * d, 0);
  v1[0] = (s.p - 1) / 2;
  v1[d] = 1;
  v2[1] = 1;
  for (auto* v : {&v1, &v2}) {
    std::vector<std::uint64_t> cur = *v;
    for (std::size_t i = 0; i < d; ++i) {
      span.add_row(cur);
      cur = shift_blocks(s, 2, cur);
    }
  }
  auto h = howell(span);
  std::vector<std::uint64_t> one_zero(2 * d, 0);
  one_zero[0] = 1;
  CHECK_FALSE(span_contains(h, one_zero));
}

TEST_CASE("presentation matrix A: stated examples") {
  auto s = RingShape::mod(3, 2, 4);

  // b2 = 0, b1 = X: third column (0, 1)
  auto p1 = GlobalImagePair(GroupRingElement::monomial(s, 1), GroupRingElement::zero(s));
  auto a1 = presentation_A(p1);
  CHECK(a1.matrix[0][2].is_zero());
  CHECK(a1.matrix[1][2] == GroupRingElement::one(s));
  CHECK(a1.matrix[0][1] == omega_pm(s, 1));
  CHECK(a1.matrix[1][0] == omega_tilde(s, -1));

  // b2 = 2, b1 = (p-1)/2 * 2 = p-1: third column (2, 0)
  auto p2 = GlobalImagePair(GroupRingElement::constant(s, 2), GroupRingElement::constant(s, 2));
  auto a2 = presentation_A(p2);
  CHECK(a2.matrix[0][2] == GroupRingElement::constant(s, 2));
  CHECK(a2.matrix[1][2].is_zero());

  // random: b1 := ((p-1)/2) b2 + X h gives third column (b2, h)
  std::mt19937_64 rng(211);
  for (int t = 0; t < 20; ++t) {
    auto b2 = random_elem(s, rng);
    auto h = random_elem(s, rng);
    auto b1 = b2 + GroupRingElement::monomial(s, 1) * h;  // (p-1)/2 = 1 at p=3
    auto a = presentation_A(GlobalImagePair(b1, b2));
    CHECK(a.matrix[0][2] == b2);
    // third-row entry agrees with h modulo the annihilator of X
    CHECK(GroupRingElement::monomial(s, 1) * a.matrix[1][2] ==
          GroupRingElement::monomial(s, 1) * h);
  }

  // inadmissible pair rejected
  CHECK_THROWS_WITH_AS(
      GlobalImagePair(GroupRingElement::one(s), GroupRingElement::zero(s)),
      doctest::Contains("ConstantTermMismatch"), mt_error);
}

TEST_CASE("Fitt(Y') formula: minors match (omega~^+ b1, omega~^- b2)") {
  // b1 = b2 = 0: zero ideal
  auto s = RingShape::mod(3, 2, 4);
  auto z = fitt_Yprime(GlobalImagePair(GroupRingElement::zero(s), GroupRingElement::zero(s)));
  CHECK(z.minor_ideal.is_zero());
  CHECK(z.equal);

  // b2 = 0, b1 = X h: ideal(omega~^+ X h) = ideal(omega^+ h)
  std::mt19937_64 rng(223);
  auto h = random_elem(s, rng);
  auto rep = fitt_Yprime(GlobalImagePair(GroupRingElement::monomial(s, 1) * h,
                                         GroupRingElement::zero(s)));
  CHECK(rep.equal);
  CHECK(rep.minor_ideal == ideal_of(omega_pm(s, 1) * h));

  // the omega_n minor is identically zero
  CHECK(rep.minors[0].is_zero());

  // randomized instances across shapes
  for (std::uint64_t p : {3ull, 5ull}) {
    for (unsigned n = 1; n <= 3; ++n) {
      auto sh = RingShape::mod(p, n, 4);
      for (int t = 0; t < 10; ++t) {
        auto pair = random_pair(sh, rng);
        auto r = fitt_Yprime(pair);
        CHECK(r.equal);
      }
    }
  }
}

TEST_CASE("Fitt(Y') is invariant under unit scaling of the pair") {
  std::mt19937_64 rng(227);
  auto s = RingShape::mod(3, 2, 3);
  for (int t = 0; t < 10; ++t) {
    auto pair = random_pair(s, rng);
    GroupRingElement u = GroupRingElement::zero(s);
    do {
      u = random_elem(s, rng);
    } while (!u.is_unit());
    auto scaled = GlobalImagePair(u * pair.b1, u * pair.b2);
    CHECK(fitt_Yprime(pair).minor_ideal == fitt_Yprime(scaled).minor_ideal);
  }
}

TEST_CASE("minor identity omega^+ omega~^- = omega_n = 0 in the finite ring") {
  for (std::uint64_t p : {3ull, 5ull})
    for (unsigned n = 0; n <= 4; ++n) {
      auto s = RingShape::mod(p, n, 4);
      CHECK((omega_pm(s, 1) * omega_tilde(s, -1)).is_zero());
      CHECK((omega_pm(s, -1) * omega_tilde(s, 1)).is_zero());
    }
}
