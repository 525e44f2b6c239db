#include "mtkit/residue.hpp"

#include "mtkit/primes.hpp"

namespace mtkit {

PkContext::PkContext(std::uint64_t p_, unsigned k_) : p(p_), k(k_) {
  require(p_ >= 3 && p_ % 2 == 1, errc::invalid_argument, "p must be an odd prime");
  require(is_prime_u64(p_), errc::invalid_argument, "p must be an odd prime");
  require(k_ >= 1, errc::invalid_argument, "precision k must be >= 1");
  q = 1;
  for (unsigned i = 0; i < k_; ++i) {
    require(q <= (std::uint64_t(1) << 52) / p_, errc::invalid_argument, "p^k too large");
    q *= p_;
  }
}

std::uint64_t PkContext::reduce(const Int& a) const {
  Int m = a % Int(static_cast<unsigned long>(q));
  if (m < 0) m += Int(static_cast<unsigned long>(q));
  return m.get_ui();
}

std::uint64_t PkContext::reduce_i64(std::int64_t a) const {
  std::int64_t m = a % static_cast<std::int64_t>(q);
  if (m < 0) m += static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(m);
}

unsigned PkContext::val(std::uint64_t a) const {
  if (a == 0) return k;
  unsigned v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

std::uint64_t PkContext::inv(std::uint64_t a) const {
  a %= q;
  require(is_unit(a), errc::not_unit, "inverse of a non-unit in Z/p^k");
  // |(Z/p^k)^x| = p^(k-1)(p-1)
  std::uint64_t order = q / p * (p - 1);
  return pow(a, order - 1);
}

Residue Residue::operator+(const Residue& o) const {
  require(ctx == o.ctx, errc::shape_mismatch, "mixed (p,k) in residue addition");
  return Residue(ctx, ctx.add(value, o.value));
}

Residue Residue::operator-(const Residue& o) const {
  require(ctx == o.ctx, errc::shape_mismatch, "mixed (p,k) in residue subtraction");
  return Residue(ctx, ctx.sub(value, o.value));
}

Residue Residue::operator*(const Residue& o) const {
  require(ctx == o.ctx, errc::shape_mismatch, "mixed (p,k) in residue multiplication");
  return Residue(ctx, ctx.mul(value, o.value));
}

Residue hensel_unit_root(std::int64_t a_p, std::uint64_t p, unsigned k) {
  PkContext ctx(p, k);
  std::uint64_t a = ctx.reduce_i64(a_p);
  require(a % p != 0, errc::not_ordinary, "p divides a_p, no unit root");
  // f(x) = x^2 - a x + p, f'(x) = 2x - a. Start at x = a (a root mod p since
  // x(x - a) = -p = 0 there); f'(a) = a is a unit, so Newton converges.
  std::uint64_t x = a;
  for (unsigned i = 0; i < k + 2; ++i) {
    std::uint64_t fx = ctx.add(ctx.sub(ctx.mul(x, x), ctx.mul(a, x)), p % ctx.q);
    std::uint64_t dfx = ctx.sub(ctx.mul(2 % ctx.q, x), a);
    x = ctx.sub(x, ctx.mul(fx, ctx.inv(dfx)));
  }
  std::uint64_t fx = ctx.add(ctx.sub(ctx.mul(x, x), ctx.mul(a, x)), p % ctx.q);
  require(fx == 0, errc::internal, "Newton iteration failed to converge");
  return Residue(ctx, x);
}

std::uint64_t rational_to_pk(const Rat& r, const PkContext& ctx) {
  const Int& den = r.get_den();
  require(!mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(ctx.p)),
          errc::not_p_integral, "p divides the denominator");
  std::uint64_t n = ctx.reduce(r.get_num());
  std::uint64_t d = ctx.reduce(den);
  return ctx.mul(n, ctx.inv(d));
}

Residue rational_to_precision(const Rat& r, std::uint64_t p, unsigned k) {
  PkContext ctx(p, k);
  return Residue(ctx, rational_to_pk(r, ctx));
}

}  // namespace mtkit
