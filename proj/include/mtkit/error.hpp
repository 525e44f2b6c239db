#pragma once

#include <stdexcept>
#include <string>

namespace mtkit {

// Failure kinds surfaced by the library. The CLI maps these to exit codes;
// tests match on them.
enum class errc {
  not_ordinary,
  not_primitive_root,
  not_unit,
  not_p_integral,
  layer_out_of_range,
  shape_mismatch,
  exact_mode_unsupported,
  unsupported_quotient,
  bad_reduction,
  prime_too_large,
  level_too_large,
  eigenspace_not_rank_one,
  inconsistent_eigenvalues,
  bad_prime,
  symbol_unavailable,
  not_divisible,
  not_kolyvagin,
  constant_term_mismatch,
  cache_miss,
  corrupt_cache,
  parse_error,
  io_error,
  invalid_argument,
  internal,
};

const char* errc_name(errc e);

class mt_error : public std::runtime_error {
 public:
  mt_error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw mt_error(kind, what); }

inline void require(bool cond, errc kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace mtkit
