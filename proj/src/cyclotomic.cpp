#include "mtkit/cyclotomic.hpp"

namespace mtkit {

std::size_t CyclotomicElement::degree(std::uint64_t p, unsigned m) {
  if (m == 0) return 1;
  std::size_t d = p - 1;
  for (unsigned i = 1; i < m; ++i) d *= p;
  return d;
}

CyclotomicElement::CyclotomicElement(PkContext c, unsigned m_) : ctx(c), m(m_) {
  coeffs.assign(degree(c.p, m_), 0);
}

CyclotomicElement CyclotomicElement::one(PkContext c, unsigned m_) {
  CyclotomicElement e(c, m_);
  e.coeffs[0] = 1 % c.q;
  return e;
}

CyclotomicElement CyclotomicElement::root(PkContext c, unsigned m_) {
  CyclotomicElement e(c, m_);
  if (m_ == 0) {
    e.coeffs[0] = 1 % c.q;
  } else {
    e.coeffs[1 % e.coeffs.size()] = 1;  // phi(p^m) >= 2 for odd p, m >= 1
  }
  return e;
}

bool CyclotomicElement::is_zero() const {
  for (auto c : coeffs)
    if (c != 0) return false;
  return true;
}

Residue CyclotomicElement::as_residue() const {
  require(m == 0, errc::invalid_argument, "as_residue needs a trivial-character target");
  return Residue(ctx, coeffs[0]);
}

static void check_same(const CyclotomicElement& a, const CyclotomicElement& b) {
  require(a.ctx == b.ctx && a.m == b.m, errc::shape_mismatch, "cyclotomic ring mismatch");
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
  check_same(*this, o);
  CyclotomicElement r(ctx, m);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = ctx.add(coeffs[i], o.coeffs[i]);
  return r;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
  check_same(*this, o);
  CyclotomicElement r(ctx, m);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = ctx.sub(coeffs[i], o.coeffs[i]);
  return r;
}

CyclotomicElement CyclotomicElement::scaled(std::uint64_t c) const {
  CyclotomicElement r(ctx, m);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = ctx.mul(coeffs[i], c % ctx.q);
  return r;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
  check_same(*this, o);
  const std::size_t d = coeffs.size();
  std::vector<std::uint64_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      prod[i + j] = ctx.add(prod[i + j], ctx.mul(coeffs[i], o.coeffs[j]));
  }
  if (m == 0) {
    // modulus Y - 1: fold Y^1 onto Y^0
    prod[0] = ctx.add(prod[0], prod[1]);
  } else {
    // Phi_{p^m}(Y) = sum_{j<p} Y^(j p^(m-1)), so
    // Y^d = -(Y^0 + Y^s + ... + Y^((p-2)s)) with s = p^(m-1).
    std::size_t s = d / (ctx.p - 1);
    for (std::size_t t = 2 * d - 1; t >= d; --t) {
      std::uint64_t c = prod[t];
      if (c == 0) continue;
      prod[t] = 0;
      std::uint64_t nc = ctx.neg(c);
      for (std::uint64_t j = 0; j + 1 < ctx.p; ++j) prod[t - d + j * s] = ctx.add(prod[t - d + j * s], nc);
    }
  }
  CyclotomicElement r(ctx, m);
  for (std::size_t i = 0; i < d; ++i) r.coeffs[i] = prod[i];
  return r;
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
  return ctx == o.ctx && m == o.m && coeffs == o.coeffs;
}

}  // namespace mtkit
