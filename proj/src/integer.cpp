#include "surjtop/integer.hpp"

#include <cctype>
#include <limits>

namespace surjtop {

  Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') {
      ++i;
    }
    if (i == text.size()) {
      throw Error("expected an integer, got \"" + std::string(text) + "\"");
    }
    for (std::size_t k = i; k < text.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
        throw Error("expected an integer, got \"" + std::string(text) + "\"");
      }
    }
    return Integer(std::string(text), 10);
  }

  std::optional<std::int64_t> to_int64(Integer const& x) {
    static Integer const lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static Integer const hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    if (x < lo || x > hi) {
      return std::nullopt;
    }
    return std::stoll(x.get_str());
  }

  std::size_t to_size(Integer const& x, std::string_view what) {
    if (sgn(x) < 0 || !x.fits_ulong_p()) {
      throw Error(std::string(what) + " out of range: " + x.get_str());
    }
    return static_cast<std::size_t>(x.get_ui());
  }

}  // namespace surjtop
