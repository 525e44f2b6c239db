#include "mtkit/primes.hpp"

#include "mtkit/numeric.hpp"

namespace mtkit {

const char* errc_name(errc e) {
  switch (e) {
    case errc::not_ordinary: return "NotOrdinary";
    case errc::not_primitive_root: return "NotPrimitiveRoot";
    case errc::not_unit: return "NotUnit";
    case errc::not_p_integral: return "NotPIntegral";
    case errc::layer_out_of_range: return "LayerOutOfRange";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::exact_mode_unsupported: return "ExactModeUnsupported";
    case errc::unsupported_quotient: return "UnsupportedQuotient";
    case errc::bad_reduction: return "BadReduction";
    case errc::prime_too_large: return "PrimeTooLarge";
    case errc::level_too_large: return "LevelTooLarge";
    case errc::eigenspace_not_rank_one: return "EigenspaceNotRankOne";
    case errc::inconsistent_eigenvalues: return "InconsistentEigenvalues";
    case errc::bad_prime: return "BadPrime";
    case errc::symbol_unavailable: return "SymbolUnavailable";
    case errc::not_divisible: return "NotDivisible";
    case errc::not_kolyvagin: return "NotKolyvagin";
    case errc::constant_term_mismatch: return "ConstantTermMismatch";
    case errc::cache_miss: return "CacheMiss";
    case errc::corrupt_cache: return "CorruptCache";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

PrimeFieldElement::PrimeFieldElement(std::uint64_t l, std::int64_t v) : ell(l) {
  require(is_prime_u64(l), errc::invalid_argument, "modulus is not prime");
  std::int64_t m = v % static_cast<std::int64_t>(l);
  if (m < 0) m += static_cast<std::int64_t>(l);
  value = static_cast<std::uint64_t>(m);
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  require(ell == o.ell, errc::shape_mismatch, "prime field mismatch");
  return PrimeFieldElement(ell, static_cast<std::int64_t>((value + o.value) % ell));
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  require(ell == o.ell, errc::shape_mismatch, "prime field mismatch");
  return PrimeFieldElement(ell, static_cast<std::int64_t>(mulmod(value, o.value, ell)));
}

bool is_primitive_root(std::uint64_t ell, std::uint64_t g) {
  if (g % ell == 0) return false;
  std::uint64_t order = ell - 1;
  for (std::uint64_t q : primes_up_to(order)) {
    if (order % q != 0) continue;
    if (powmod(g, order / q, ell) == 1) return false;
  }
  return true;
}

std::uint64_t find_primitive_root(std::uint64_t ell) {
  require(is_prime_u64(ell), errc::invalid_argument, "modulus is not prime");
  for (std::uint64_t g = 2; g < ell; ++g)
    if (is_primitive_root(ell, g)) return g;
  require(ell == 2, errc::internal, "no primitive root found");
  return 1;
}

std::uint64_t discrete_log(std::uint64_t ell, std::uint64_t g, std::uint64_t a) {
  require(is_prime_u64(ell), errc::invalid_argument, "modulus is not prime");
  require(ell < 100000, errc::prime_too_large, "discrete log restricted to ell < 10^5");
  g %= ell;
  a %= ell;
  require(a != 0, errc::not_unit, "argument is not a unit");
  require(is_primitive_root(ell, g), errc::not_primitive_root, "base is not a primitive root");
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e < ell - 1; ++e) {
    if (x == a) return e;
    x = mulmod(x, g, ell);
  }
  fail(errc::internal, "discrete log not found");
}

}  // namespace mtkit
