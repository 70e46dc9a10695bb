#ifndef SURJTOP_INTEGER_HPP
#define SURJTOP_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace surjtop {

  // Arbitrary-precision integer used for exponents, coefficients and matrix
  // entries.
  using Integer = mpz_class;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised when a self-check on a computed result fails.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  inline bool is_odd(Integer const& x) {
    return mpz_odd_p(x.get_mpz_t()) != 0;
  }

  inline bool is_even(Integer const& x) {
    return !is_odd(x);
  }

  inline std::string to_string(Integer const& x) {
    return x.get_str();
  }

  // Decimal with optional leading '-'. Throws Error on anything else.
  Integer parse_integer(std::string_view text);

  std::optional<std::int64_t> to_int64(Integer const& x);

  // Throws Error when x does not fit.
  std::size_t to_size(Integer const& x, std::string_view what);

}  // namespace surjtop

#endif  // SURJTOP_INTEGER_HPP
