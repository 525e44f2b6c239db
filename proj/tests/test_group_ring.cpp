#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mtkit/group_ring.hpp"
#include "mtkit/ideal.hpp"
#include "mtkit/zpoly.hpp"

using namespace mtkit;

static GroupRingElement random_elem(const RingShape& s, std::mt19937_64& rng) {
  std::vector<std::uint64_t> c(s.dim());
  for (auto& x : c) x = rng() % s.ctx().q;
  return GroupRingElement::from_mod_coeffs(s, c);
}

static GroupRingElement random_exact(const RingShape& s, std::mt19937_64& rng) {
  std::vector<Rat> c(s.dim());
  for (auto& x : c) x = Rat(static_cast<long>(rng() % 41) - 20);
  return GroupRingElement::from_exact_coeffs(s, c);
}

TEST_CASE("omega expansion matches binomials") {
  // (p=3,n=0) -> X ; (p=3,n=1) -> X^3+3X^2+3X ; (p=5,n=1) -> binomials
  auto w0 = omega(RingShape::exact(3, 0));
  CHECK(w0.exact_coeffs() == std::vector<Rat>{0, 1, 0});
  auto w1 = omega(RingShape::exact(3, 1));
  std::vector<Rat> want{0, 3, 3, 1, 0, 0, 0, 0, 0};
  CHECK(w1.exact_coeffs() == want);
  auto w5 = omega(RingShape::exact(5, 1));
  std::vector<Rat> want5{0, 5, 10, 10, 5, 1};
  want5.resize(25, Rat(0));
  CHECK(w5.exact_coeffs() == want5);
  // omega reduces to zero inside its own layer
  CHECK(w1.project(1).is_zero());
}

TEST_CASE("cyclo_shift: direct expansions") {
  // p=3, n=1, m=1: (1+X)^0+(1+X)^1+(1+X)^2 = 3 + 3X + X^2
  auto f = cyclo_shift(RingShape::exact(3, 1), 1);
  CHECK(f.exact_coeffs() == std::vector<Rat>{3, 3, 1});

  // p=5, n=1, m=1: sum_j (1+X)^j, j<5
  auto g = cyclo_shift(RingShape::exact(5, 1), 1);
  std::vector<Rat> acc(5, Rat(0));
  std::vector<Rat> pw(5, Rat(0));
  pw[0] = 1;
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 5; ++i) acc[i] += pw[i];
    // multiply pw by (1+X), no wraparound at these degrees
    for (int i = 4; i >= 1; --i) pw[i] = pw[i] + pw[i - 1];
  }
  CHECK(g.exact_coeffs() == acc);

  // p=3, n=2, m=2: sum_j (1+X)^{3j}; check against direct group-basis build
  auto h = cyclo_shift(RingShape::exact(3, 2), 2);
  std::vector<Rat> grp(9, Rat(0));
  grp[0] = grp[3] = grp[6] = 1;
  CHECK(h == GroupRingElement::from_group_coeffs(RingShape::exact(3, 2), grp));

  CHECK_THROWS_WITH_AS(cyclo_shift(RingShape::exact(3, 1), 2), doctest::Contains("LayerOutOfRange"),
                       mt_error);
}

TEST_CASE("omega_pm paper cases at small layers") {
  // p=3: omega^+_1 = X (empty even product)
  auto wp1 = omega_pm(RingShape::exact(3, 1), 1);
  CHECK(wp1.exact_coeffs() == std::vector<Rat>{0, 1, 0});
  // omega^-_1 = X Phi_1(1+X) = omega_1 which reduces to 0 in layer 1
  auto wm1 = omega_pm(RingShape::exact(3, 1), -1);
  CHECK(wm1.is_zero());
  // layer 2: omega~^+_2 = Phi_2(1+X), omega~^-_2 = Phi_1(1+X)
  auto s2 = RingShape::exact(3, 2);
  CHECK(omega_tilde(s2, 1) == cyclo_shift(s2, 2));
  CHECK(omega_tilde(s2, -1) == cyclo_shift(s2, 1));
}

TEST_CASE("omega calculus: exact polynomial identities (T basis)") {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    for (unsigned n = 0; n <= 5; ++n) {
      CHECK(omega_pm_T(p, n, 1) * omega_tilde_T(p, n, -1) == omega_T(p, n));
      CHECK(omega_pm_T(p, n, -1) * omega_tilde_T(p, n, 1) == omega_T(p, n));
      if (n >= 1) CHECK(omega_T(p, n - 1) * phi_T(p, n) == omega_T(p, n));
      // omega^+- = X * omega~^+-
      ZPoly x = ZPoly::monomial(1) - ZPoly::constant(1);
      CHECK(omega_pm_T(p, n, 1) == x * omega_tilde_T(p, n, 1));
    }
  }
}

TEST_CASE("project: examples and ring homomorphism") {
  auto s2 = RingShape::exact(3, 2);
  // project(omega~^-_2, 1) = Phi_1(1+X) mod omega_1
  auto pr = omega_tilde(s2, -1).project(1);
  // Phi_1 at layer 1 equals 3+3X+X^2 already reduced
  CHECK(pr == cyclo_shift(RingShape::exact(3, 1), 1));

  CHECK(GroupRingElement::one(s2).project(0) == GroupRingElement::one(RingShape::exact(3, 0)));

  std::mt19937_64 rng(5);
  auto sm = RingShape::mod(3, 3, 3);
  for (int i = 0; i < 20; ++i) {
    auto f = random_elem(sm, rng), g = random_elem(sm, rng);
    CHECK((f + g).project(1) == f.project(1) + g.project(1));
    CHECK((f * g).project(1) == f.project(1) * g.project(1));
  }
  CHECK_THROWS_AS(GroupRingElement::one(RingShape::mod(3, 1, 2)).project(2), mt_error);
}

TEST_CASE("trace: examples and project-trace composition") {
  // trace(1, 0->1) at p=3 = Phi_1(1+X)
  auto one0 = GroupRingElement::one(RingShape::exact(3, 0));
  CHECK(one0.trace_to(1) == cyclo_shift(RingShape::exact(3, 1), 1));

  auto z = GroupRingElement::zero(RingShape::exact(3, 1));
  CHECK(z.trace_to(2).is_zero());

  std::mt19937_64 rng(13);
  for (unsigned m = 0; m <= 1; ++m) {
    auto sm = RingShape::mod(3, m, 4);
    for (int i = 0; i < 10; ++i) {
      auto f = random_elem(sm, rng);
      unsigned n = m + 2;
      auto roundtrip = f.trace_to(n).project(m);
      std::uint64_t scale = pow_u64(3, n - m);
      CHECK(roundtrip == f.scaled_mod(scale));
    }
  }
}

TEST_CASE("involution: examples and automorphism property") {
  auto s = RingShape::mod(3, 2, 3);
  CHECK(GroupRingElement::one(s).involution() == GroupRingElement::one(s));

  // involution(1+X) = (1+X)^(p^n - 1)
  std::vector<std::uint64_t> g(s.dim(), 0);
  g[1] = 1;
  auto t = GroupRingElement::from_group_coeffs_mod(s, g);
  std::vector<std::uint64_t> g2(s.dim(), 0);
  g2[s.dim() - 1] = 1;
  CHECK(t.involution() == GroupRingElement::from_group_coeffs_mod(s, g2));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto f = random_elem(s, rng), h = random_elem(s, rng);
    CHECK(f.involution().involution() == f);
    CHECK((f * h).involution() == f.involution() * h.involution());
    CHECK((f + h).involution() == f.involution() + h.involution());
  }

  // exact mode too
  auto se = RingShape::exact(3, 1);
  std::mt19937_64 rng2(19);
  auto fe = random_exact(se, rng2);
  CHECK(fe.involution().involution() == fe);
}

TEST_CASE("involution of omega~ is a unit multiple (section-4 identities)") {
  for (std::uint64_t p : {3ull, 5ull}) {
    for (unsigned n = 0; n <= 4; ++n) {
      for (unsigned k : {1u, 3u, 6u}) {
        auto s = RingShape::mod(p, n, k);
        for (int sign : {1, -1}) {
          auto wt = omega_tilde(s, sign);
          auto c = involution_unit(s, sign);
          CHECK(wt.involution() == c * wt);
          CHECK(c.is_unit());
        }
      }
    }
  }
}

TEST_CASE("eval_character: examples and homomorphism") {
  auto s = RingShape::mod(3, 2, 3);
  std::mt19937_64 rng(23);
  auto f = random_elem(s, rng);

  // trivial character = evaluation at X = 0
  auto triv = f.eval_character(Character{3, 0});
  CHECK(triv.as_residue().value == f.constant_term_mod());

  // Phi_1(1+X) dies at a character of order p
  auto phi1 = cyclo_shift(s, 1);
  CHECK(phi1.eval_character(Character{3, 1}).is_zero());

  // omega^+_2 dies at the order-p^2 character (Phi_2 divides it)
  CHECK(omega_pm(s, 1).eval_character(Character{3, 2}).is_zero());

  for (int i = 0; i < 15; ++i) {
    auto a = random_elem(s, rng), b = random_elem(s, rng);
    for (unsigned m : {0u, 1u, 2u}) {
      Character chi{3, m};
      CHECK((a * b).eval_character(chi) == a.eval_character(chi) * b.eval_character(chi));
      CHECK((a + b).eval_character(chi) == a.eval_character(chi) + b.eval_character(chi));
    }
  }
  CHECK_THROWS_AS(f.eval_character(Character{3, 3}), mt_error);
}

TEST_CASE("is_unit agrees with exhaustive invertibility on the 27-element ring") {
  auto s = RingShape::mod(3, 1, 1);
  std::vector<GroupRingElement> all;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b)
      for (std::uint64_t c = 0; c < 3; ++c)
        all.push_back(GroupRingElement::from_mod_coeffs(s, {a, b, c}));
  auto one = GroupRingElement::one(s);
  for (const auto& f : all) {
    bool invertible = false;
    for (const auto& g : all)
      if (f * g == one) invertible = true;
    CHECK(f.is_unit() == invertible);
    if (invertible) CHECK(f * f.inverse() == one);
  }
  CHECK(one.is_unit());
  CHECK_FALSE(GroupRingElement::monomial(s, 1).is_unit());
}

TEST_CASE("inverse at higher precision") {
  auto s = RingShape::mod(5, 2, 4);
  std::mt19937_64 rng(29);
  int found = 0;
  while (found < 10) {
    auto f = random_elem(s, rng);
    if (!f.is_unit()) continue;
    ++found;
    CHECK(f * f.inverse() == GroupRingElement::one(s));
  }
}

TEST_CASE("vanishing order at characters") {
  auto s = RingShape::mod(3, 2, 4);
  Character triv{3, 0};
  auto v1 = vanishing_order(GroupRingElement::one(s), triv, 5);
  CHECK(v1.order == 0);
  CHECK_FALSE(v1.at_least_cap);

  auto vx = vanishing_order(GroupRingElement::monomial(s, 1), triv, 5);
  CHECK(vx.order == 1);
  CHECK_FALSE(vx.at_least_cap);

  auto v0 = vanishing_order(GroupRingElement::zero(s), Character{3, 1}, 5);
  CHECK(v0.at_least_cap);

  // X^3 has order exactly 3 at the trivial character when k is large enough
  auto x3 = GroupRingElement::monomial(s, 1) * GroupRingElement::monomial(s, 1) *
            GroupRingElement::monomial(s, 1);
  auto vx3 = vanishing_order(x3, triv, 5);
  CHECK(vx3.order == 3);

  // Phi_1(1+X) vanishes to order exactly 1 at a character of order 3
  auto vphi = vanishing_order(cyclo_shift(s, 1), Character{3, 1}, 4);
  CHECK(vphi.order == 1);
}

TEST_CASE("group basis round trip") {
  std::mt19937_64 rng(31);
  auto s = RingShape::mod(5, 2, 3);
  for (int i = 0; i < 10; ++i) {
    auto f = random_elem(s, rng);
    CHECK(GroupRingElement::from_group_coeffs_mod(s, f.group_coeffs_mod()) == f);
  }
  auto se = RingShape::exact(3, 2);
  for (int i = 0; i < 10; ++i) {
    auto f = random_exact(se, rng);
    CHECK(GroupRingElement::from_group_coeffs(se, f.group_coeffs_exact()) == f);
  }
}

TEST_CASE("shape guards") {
  CHECK_THROWS_AS(RingShape::mod(2, 1, 1), mt_error);  // p = 2 rejected
  CHECK_THROWS_AS(RingShape::mod(9, 1, 1), mt_error);  // composite
  CHECK_THROWS_AS(RingShape::mod(3, 1, 0), mt_error);  // k >= 1
  auto a = GroupRingElement::one(RingShape::mod(3, 1, 2));
  auto b = GroupRingElement::one(RingShape::mod(3, 1, 3));
  CHECK_THROWS_WITH_AS(a + b, doctest::Contains("ShapeMismatch"), mt_error);
  auto c = GroupRingElement::one(RingShape::exact(3, 1));
  CHECK_THROWS_AS(a * c, mt_error);
  CHECK_THROWS_AS(c.is_unit(), mt_error);  // exact mode unsupported
}
