#include "mtkit/zpoly.hpp"

namespace mtkit {

ZPoly ZPoly::monomial(std::int64_t exp, Int c) {
  ZPoly f;
  if (c != 0) f.terms_[exp] = std::move(c);
  return f;
}

Int ZPoly::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void ZPoly::set(std::int64_t exp, Int c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = std::move(c);
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  ZPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) - c);
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  ZPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

static std::int64_t ipow(std::uint64_t p, unsigned e) {
  std::int64_t r = 1;
  while (e--) r *= static_cast<std::int64_t>(p);
  return r;
}

ZPoly omega_T(std::uint64_t p, unsigned n) {
  return ZPoly::monomial(ipow(p, n)) - ZPoly::constant(1);
}

ZPoly phi_T(std::uint64_t p, unsigned m) {
  require(m >= 1, errc::layer_out_of_range, "Phi_m needs m >= 1");
  ZPoly f;
  std::int64_t s = ipow(p, m - 1);
  for (std::uint64_t j = 0; j < p; ++j) f.set(static_cast<std::int64_t>(j) * s, 1);
  return f;
}

ZPoly omega_tilde_T(std::uint64_t p, unsigned n, int sign) {
  ZPoly f = ZPoly::constant(1);
  unsigned start = sign > 0 ? 2 : 1;
  for (unsigned m = start; m <= n; m += 2) f = f * phi_T(p, m);
  return f;
}

ZPoly omega_pm_T(std::uint64_t p, unsigned n, int sign) {
  return (ZPoly::monomial(1) - ZPoly::constant(1)) * omega_tilde_T(p, n, sign);
}

}  // namespace mtkit
