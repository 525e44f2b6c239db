#include "mtkit/group_ring.hpp"

#include <map>
#include <mutex>

#include "mtkit/primes.hpp"

namespace mtkit {

RingShape::RingShape(std::uint64_t p_, unsigned n_, CoeffMode mode_, unsigned k_)
    : p(p_), n(n_), mode(mode_), k(k_) {
  require(p_ >= 3 && p_ % 2 == 1 && is_prime_u64(p_), errc::invalid_argument,
          "p must be an odd prime");
  if (mode_ == CoeffMode::mod_pk) {
    PkContext check(p_, k_);  // validates k and the p^k bound
    (void)check;
  }
  std::size_t d = 1;
  for (unsigned i = 0; i < n_; ++i) {
    require(d <= (std::size_t(1) << 24) / p_, errc::layer_out_of_range, "layer too large");
    d *= p_;
  }
}

std::size_t RingShape::dim() const {
  std::size_t d = 1;
  for (unsigned i = 0; i < n; ++i) d *= p;
  return d;
}

PkContext RingShape::ctx() const {
  require(mode == CoeffMode::mod_pk, errc::exact_mode_unsupported,
          "operation needs mod-p^k coefficients");
  return PkContext(p, k);
}

RingShape RingShape::at_layer(unsigned m) const { return RingShape(p, m, mode, k); }

bool RingShape::operator==(const RingShape& o) const {
  if (p != o.p || n != o.n || mode != o.mode) return false;
  return mode == CoeffMode::exact_rational || k == o.k;
}

// X^(p^m) mod omega_m has coefficients -C(p^m, i); cached per (p, m).
static const std::vector<Int>& reduction_row(std::uint64_t p, unsigned m) {
  static std::map<std::pair<std::uint64_t, unsigned>, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t d = 1;
  for (unsigned i = 0; i < m; ++i) d *= p;
  std::vector<Int> row(d, 0);
  for (std::size_t i = 1; i < d; ++i) row[i] = -binomial(d, i);
  return cache.emplace(key, std::move(row)).first->second;
}

GroupRingElement::GroupRingElement(RingShape s) : shape_(s) {
  if (s.mode == CoeffMode::mod_pk)
    mc_.assign(s.dim(), 0);
  else
    rc_.assign(s.dim(), Rat(0));
}

GroupRingElement GroupRingElement::one(RingShape s) { return constant(s, 1); }

GroupRingElement GroupRingElement::constant(RingShape s, const Rat& c) {
  GroupRingElement e(s);
  if (s.mode == CoeffMode::mod_pk)
    e.mc_[0] = rational_to_pk(c, s.ctx());
  else
    e.rc_[0] = c;
  return e;
}

GroupRingElement GroupRingElement::monomial(RingShape s, std::size_t i, const Rat& c) {
  require(i < s.dim(), errc::invalid_argument, "monomial degree out of range");
  GroupRingElement e(s);
  if (s.mode == CoeffMode::mod_pk)
    e.mc_[i] = rational_to_pk(c, s.ctx());
  else
    e.rc_[i] = c;
  return e;
}

GroupRingElement GroupRingElement::from_mod_coeffs(RingShape s, std::vector<std::uint64_t> c) {
  require(s.mode == CoeffMode::mod_pk, errc::shape_mismatch, "shape is not mod-p^k");
  require(c.size() == s.dim(), errc::shape_mismatch, "coefficient count != p^n");
  GroupRingElement e(s);
  auto ctx = s.ctx();
  for (auto& x : c) x %= ctx.q;
  e.mc_ = std::move(c);
  return e;
}

GroupRingElement GroupRingElement::from_exact_coeffs(RingShape s, std::vector<Rat> c) {
  require(s.mode == CoeffMode::exact_rational, errc::shape_mismatch, "shape is not exact");
  require(c.size() == s.dim(), errc::shape_mismatch, "coefficient count != p^n");
  GroupRingElement e(s);
  e.rc_ = std::move(c);
  return e;
}

const std::vector<std::uint64_t>& GroupRingElement::mod_coeffs() const {
  require(shape_.mode == CoeffMode::mod_pk, errc::exact_mode_unsupported, "not mod-p^k");
  return mc_;
}

const std::vector<Rat>& GroupRingElement::exact_coeffs() const {
  require(shape_.mode == CoeffMode::exact_rational, errc::shape_mismatch, "not exact mode");
  return rc_;
}

GroupRingElement GroupRingElement::from_group_coeffs(RingShape s, const std::vector<Rat>& g) {
  require(s.mode == CoeffMode::exact_rational, errc::shape_mismatch, "shape is not exact");
  require(g.size() == s.dim(), errc::shape_mismatch, "coefficient count != p^n");
  // Horner over (1+X); degrees stay below p^n, so no reduction happens.
  std::vector<Rat> acc(s.dim(), Rat(0));
  for (std::size_t j = g.size(); j-- > 0;) {
    for (std::size_t i = acc.size(); i-- > 1;) acc[i] = acc[i] + acc[i - 1];
    acc[0] += g[j];
  }
  GroupRingElement e(s);
  e.rc_ = std::move(acc);
  return e;
}

GroupRingElement GroupRingElement::from_group_coeffs_mod(RingShape s,
                                                         const std::vector<std::uint64_t>& g) {
  require(s.mode == CoeffMode::mod_pk, errc::shape_mismatch, "shape is not mod-p^k");
  require(g.size() == s.dim(), errc::shape_mismatch, "coefficient count != p^n");
  auto ctx = s.ctx();
  std::vector<std::uint64_t> acc(s.dim(), 0);
  for (std::size_t j = g.size(); j-- > 0;) {
    for (std::size_t i = acc.size(); i-- > 1;) acc[i] = ctx.add(acc[i], acc[i - 1]);
    acc[0] = ctx.add(acc[0], g[j] % ctx.q);
  }
  GroupRingElement e(s);
  e.mc_ = std::move(acc);
  return e;
}

std::vector<Rat> GroupRingElement::group_coeffs_exact() const {
  require(shape_.mode == CoeffMode::exact_rational, errc::shape_mismatch, "not exact mode");
  // Horner for X = T - 1 over the group generator T.
  std::vector<Rat> acc(dim(), Rat(0));
  for (std::size_t i = rc_.size(); i-- > 0;) {
    Rat prev(0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      Rat cur = acc[j];
      acc[j] = prev - cur;
      prev = cur;
    }
    acc[0] += rc_[i];
  }
  return acc;
}

std::vector<std::uint64_t> GroupRingElement::group_coeffs_mod() const {
  require(shape_.mode == CoeffMode::mod_pk, errc::exact_mode_unsupported, "not mod-p^k");
  auto ctx = shape_.ctx();
  std::vector<std::uint64_t> acc(dim(), 0);
  for (std::size_t i = mc_.size(); i-- > 0;) {
    std::uint64_t prev = 0;
    for (std::size_t j = 0; j < acc.size(); ++j) {
      std::uint64_t cur = acc[j];
      acc[j] = ctx.sub(prev, cur);
      prev = cur;
    }
    acc[0] = ctx.add(acc[0], mc_[i]);
  }
  return acc;
}

bool GroupRingElement::is_zero() const {
  if (shape_.mode == CoeffMode::mod_pk) {
    for (auto c : mc_)
      if (c) return false;
    return true;
  }
  for (const auto& c : rc_)
    if (c != 0) return false;
  return true;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return shape_ == o.shape_ && mc_ == o.mc_ && rc_ == o.rc_;
}

void GroupRingElement::check_same_shape(const GroupRingElement& o) const {
  require(shape_ == o.shape_, errc::shape_mismatch, "group ring shape mismatch");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  check_same_shape(o);
  GroupRingElement r(shape_);
  if (shape_.mode == CoeffMode::mod_pk) {
    auto ctx = shape_.ctx();
    for (std::size_t i = 0; i < mc_.size(); ++i) r.mc_[i] = ctx.add(mc_[i], o.mc_[i]);
  } else {
    for (std::size_t i = 0; i < rc_.size(); ++i) r.rc_[i] = rc_[i] + o.rc_[i];
  }
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  check_same_shape(o);
  GroupRingElement r(shape_);
  if (shape_.mode == CoeffMode::mod_pk) {
    auto ctx = shape_.ctx();
    for (std::size_t i = 0; i < mc_.size(); ++i) r.mc_[i] = ctx.sub(mc_[i], o.mc_[i]);
  } else {
    for (std::size_t i = 0; i < rc_.size(); ++i) r.rc_[i] = rc_[i] - o.rc_[i];
  }
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(shape_);
  if (shape_.mode == CoeffMode::mod_pk) {
    auto ctx = shape_.ctx();
    for (std::size_t i = 0; i < mc_.size(); ++i) r.mc_[i] = ctx.neg(mc_[i]);
  } else {
    for (std::size_t i = 0; i < rc_.size(); ++i) r.rc_[i] = -rc_[i];
  }
  return r;
}

GroupRingElement GroupRingElement::scaled(const Rat& c) const {
  GroupRingElement r(shape_);
  if (shape_.mode == CoeffMode::mod_pk) {
    auto ctx = shape_.ctx();
    std::uint64_t cm = rational_to_pk(c, ctx);
    for (std::size_t i = 0; i < mc_.size(); ++i) r.mc_[i] = ctx.mul(mc_[i], cm);
  } else {
    for (std::size_t i = 0; i < rc_.size(); ++i) r.rc_[i] = rc_[i] * c;
  }
  return r;
}

GroupRingElement GroupRingElement::scaled_mod(std::uint64_t c) const {
  auto ctx = shape_.ctx();
  GroupRingElement r(shape_);
  for (std::size_t i = 0; i < mc_.size(); ++i) r.mc_[i] = ctx.mul(mc_[i], c % ctx.q);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  check_same_shape(o);
  const std::size_t d = dim();
  const auto& red = reduction_row(shape_.p, shape_.n);
  GroupRingElement r(shape_);
  if (shape_.mode == CoeffMode::mod_pk) {
    auto ctx = shape_.ctx();
    std::vector<std::uint64_t> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (mc_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        prod[i + j] = ctx.add(prod[i + j], ctx.mul(mc_[i], o.mc_[j]));
    }
    std::vector<std::uint64_t> redm(d, 0);
    for (std::size_t i = 1; i < d; ++i) redm[i] = ctx.reduce(red[i]);
    for (std::size_t t = prod.size(); t-- > d;) {
      std::uint64_t c = prod[t];
      if (c == 0) continue;
      prod[t] = 0;
      for (std::size_t i = 1; i < d; ++i)
        prod[t - d + i] = ctx.add(prod[t - d + i], ctx.mul(c, redm[i]));
    }
    for (std::size_t i = 0; i < d; ++i) r.mc_[i] = prod[i];
  } else {
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (rc_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) prod[i + j] += rc_[i] * o.rc_[j];
    }
    for (std::size_t t = prod.size(); t-- > d;) {
      if (prod[t] == 0) continue;
      Rat c = prod[t];
      prod[t] = 0;
      for (std::size_t i = 1; i < d; ++i) prod[t - d + i] += c * Rat(red[i]);
    }
    for (std::size_t i = 0; i < d; ++i) r.rc_[i] = prod[i];
  }
  return r;
}

GroupRingElement GroupRingElement::times_x() const {
  const std::size_t d = dim();
  const auto& red = reduction_row(shape_.p, shape_.n);
  GroupRingElement r(shape_);
  if (shape_.mode == CoeffMode::mod_pk) {
    auto ctx = shape_.ctx();
    std::uint64_t top = mc_[d - 1];
    for (std::size_t i = d; i-- > 1;) r.mc_[i] = mc_[i - 1];
    r.mc_[0] = 0;
    if (top != 0)
      for (std::size_t i = 1; i < d; ++i)
        r.mc_[i] = ctx.add(r.mc_[i], ctx.mul(top, ctx.reduce(red[i])));
  } else {
    Rat top = rc_[d - 1];
    for (std::size_t i = d; i-- > 1;) r.rc_[i] = rc_[i - 1];
    r.rc_[0] = 0;
    if (top != 0)
      for (std::size_t i = 1; i < d; ++i) r.rc_[i] += top * Rat(red[i]);
  }
  return r;
}

GroupRingElement GroupRingElement::project(unsigned m) const {
  require(m <= shape_.n, errc::layer_out_of_range, "projection target above source layer");
  if (m == shape_.n) return *this;
  RingShape target = shape_.at_layer(m);
  const std::size_t dm = target.dim();
  const auto& red = reduction_row(shape_.p, m);
  GroupRingElement r(target);
  if (shape_.mode == CoeffMode::mod_pk) {
    auto ctx = shape_.ctx();
    std::vector<std::uint64_t> redm(dm, 0);
    for (std::size_t i = 1; i < dm; ++i) redm[i] = ctx.reduce(red[i]);
    std::vector<std::uint64_t> work = mc_;
    for (std::size_t t = work.size(); t-- > dm;) {
      std::uint64_t c = work[t];
      if (c == 0) continue;
      work[t] = 0;
      for (std::size_t i = 1; i < dm; ++i)
        work[t - dm + i] = ctx.add(work[t - dm + i], ctx.mul(c, redm[i]));
    }
    for (std::size_t i = 0; i < dm; ++i) r.mc_[i] = work[i];
  } else {
    std::vector<Rat> work = rc_;
    for (std::size_t t = work.size(); t-- > dm;) {
      if (work[t] == 0) continue;
      Rat c = work[t];
      work[t] = 0;
      for (std::size_t i = 1; i < dm; ++i) work[t - dm + i] += c * Rat(red[i]);
    }
    for (std::size_t i = 0; i < dm; ++i) r.rc_[i] = work[i];
  }
  return r;
}

GroupRingElement GroupRingElement::trace_to(unsigned n) const {
  require(n > shape_.n, errc::layer_out_of_range, "trace target must be a higher layer");
  RingShape target = shape_.at_layer(n);
  GroupRingElement lift(target);
  if (shape_.mode == CoeffMode::mod_pk) {
    for (std::size_t i = 0; i < mc_.size(); ++i) lift.mc_[i] = mc_[i];
  } else {
    for (std::size_t i = 0; i < rc_.size(); ++i) lift.rc_[i] = rc_[i];
  }
  for (unsigned j = shape_.n + 1; j <= n; ++j) lift = lift * cyclo_shift(target, j);
  return lift;
}

GroupRingElement GroupRingElement::involution() const {
  const std::size_t d = dim();
  if (shape_.mode == CoeffMode::mod_pk) {
    auto g = group_coeffs_mod();
    std::vector<std::uint64_t> h(d);
    for (std::size_t j = 0; j < d; ++j) h[(d - j) % d] = g[j];
    return from_group_coeffs_mod(shape_, h);
  }
  auto g = group_coeffs_exact();
  std::vector<Rat> h(d, Rat(0));
  for (std::size_t j = 0; j < d; ++j) h[(d - j) % d] = g[j];
  return from_group_coeffs(shape_, h);
}

CyclotomicElement GroupRingElement::eval_character(const Character& chi) const {
  require(chi.p == shape_.p, errc::shape_mismatch, "character prime mismatch");
  require(chi.m <= shape_.n, errc::layer_out_of_range, "character order exceeds layer");
  auto ctx = shape_.ctx();
  auto g = group_coeffs_mod();
  std::size_t pm = 1;
  for (unsigned i = 0; i < chi.m; ++i) pm *= shape_.p;
  // gamma^j depends only on j mod p^m through the character.
  std::vector<std::uint64_t> acc(pm, 0);
  for (std::size_t j = 0; j < g.size(); ++j) acc[j % pm] = ctx.add(acc[j % pm], g[j]);
  CyclotomicElement zeta = CyclotomicElement::root(ctx, chi.m);
  CyclotomicElement power = CyclotomicElement::one(ctx, chi.m);
  CyclotomicElement out = CyclotomicElement::zero(ctx, chi.m);
  for (std::size_t t = 0; t < pm; ++t) {
    out = out + power.scaled(acc[t]);
    power = power * zeta;
  }
  return out;
}

bool GroupRingElement::is_unit() const {
  require(shape_.mode == CoeffMode::mod_pk, errc::exact_mode_unsupported,
          "unit test needs mod-p^k coefficients");
  return mc_[0] % shape_.p != 0;
}

GroupRingElement GroupRingElement::inverse() const {
  require(is_unit(), errc::not_unit, "inverse of a non-unit");
  auto ctx = shape_.ctx();
  GroupRingElement x = constant(shape_, Rat(static_cast<long>(ctx.inv(mc_[0]))));
  GroupRingElement two = constant(shape_, 2);
  // Newton against the maximal ideal (p, X), which is nilpotent here.
  for (unsigned it = 0; it < 40; ++it) {
    GroupRingElement e = two - (*this * x);
    x = x * e;
    if ((*this * x) == one(shape_)) return x;
  }
  fail(errc::internal, "unit inversion did not converge");
}

GroupRingElement GroupRingElement::reduce_mod(unsigned k) const {
  require(shape_.mode == CoeffMode::exact_rational, errc::shape_mismatch,
          "reduce_mod starts from exact mode");
  RingShape target = RingShape::mod(shape_.p, shape_.n, k);
  auto ctx = target.ctx();
  GroupRingElement r(target);
  for (std::size_t i = 0; i < rc_.size(); ++i) r.mc_[i] = rational_to_pk(rc_[i], ctx);
  return r;
}

Rat GroupRingElement::constant_term_exact() const { return exact_coeffs()[0]; }
std::uint64_t GroupRingElement::constant_term_mod() const { return mod_coeffs()[0]; }

GroupRingElement omega(const RingShape& shape) {
  RingShape ambient = shape.at_layer(shape.n + 1);
  const std::size_t d = shape.dim();
  GroupRingElement r(ambient);
  if (shape.mode == CoeffMode::mod_pk) {
    auto ctx = shape.ctx();
    std::vector<std::uint64_t> c(ambient.dim(), 0);
    for (std::size_t i = 1; i <= d; ++i) c[i] = ctx.reduce(binomial(d, i));
    return GroupRingElement::from_mod_coeffs(ambient, std::move(c));
  }
  std::vector<Rat> c(ambient.dim(), Rat(0));
  for (std::size_t i = 1; i <= d; ++i) c[i] = Rat(binomial(d, i));
  return GroupRingElement::from_exact_coeffs(ambient, std::move(c));
}

GroupRingElement cyclo_shift(const RingShape& shape, unsigned m) {
  require(m >= 1 && m <= shape.n, errc::layer_out_of_range, "Phi_m needs 1 <= m <= n");
  std::size_t step = 1;
  for (unsigned i = 0; i + 1 < m; ++i) step *= shape.p;
  if (shape.mode == CoeffMode::mod_pk) {
    std::vector<std::uint64_t> g(shape.dim(), 0);
    for (std::uint64_t j = 0; j < shape.p; ++j) g[j * step] = 1;
    return GroupRingElement::from_group_coeffs_mod(shape, g);
  }
  std::vector<Rat> g(shape.dim(), Rat(0));
  for (std::uint64_t j = 0; j < shape.p; ++j) g[j * step] = 1;
  return GroupRingElement::from_group_coeffs(shape, g);
}

GroupRingElement omega_tilde(const RingShape& shape, int sign) {
  require(sign == 1 || sign == -1, errc::invalid_argument, "sign must be +1 or -1");
  GroupRingElement f = GroupRingElement::one(shape);
  unsigned start = sign > 0 ? 2 : 1;
  for (unsigned m = start; m <= shape.n; m += 2) f = f * cyclo_shift(shape, m);
  return f;
}

GroupRingElement omega_pm(const RingShape& shape, int sign) {
  GroupRingElement x = shape.dim() == 1 ? GroupRingElement::zero(shape)
                                        : GroupRingElement::monomial(shape, 1);
  return x * omega_tilde(shape, sign);
}

GroupRingElement involution_unit(const RingShape& shape, int sign) {
  require(sign == 1 || sign == -1, errc::invalid_argument, "sign must be +1 or -1");
  const std::size_t d = shape.dim();
  // Exponent of (1+X), computed mod p^n since (1+X)^(p^n) = 1.
  std::size_t e = 0;
  unsigned start = sign > 0 ? 2 : 1;
  for (unsigned m = start; m <= shape.n; m += 2) {
    std::size_t pm1 = 1;
    for (unsigned i = 0; i + 1 < m; ++i) pm1 *= shape.p;
    e += pm1 * (shape.p - 1);  // to be negated mod p^n
  }
  e %= d;
  std::size_t idx = (d - e) % d;
  if (shape.mode == CoeffMode::mod_pk) {
    std::vector<std::uint64_t> g(d, 0);
    g[idx] = 1;
    return GroupRingElement::from_group_coeffs_mod(shape, g);
  }
  std::vector<Rat> g(d, Rat(0));
  g[idx] = 1;
  return GroupRingElement::from_group_coeffs(shape, g);
}

}  // namespace mtkit
