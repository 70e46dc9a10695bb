#ifndef SURJTOP_FREEGROUP_HPP
#define SURJTOP_FREEGROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surjtop/integer.hpp"

namespace surjtop {

  // Ordered, duplicate-free list of generator names. The declaration order
  // fixes the column order of every matrix built from a presentation.
  class GeneratorSet {
   public:
    explicit GeneratorSet(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return names_.size();
    }
    std::string const& name(std::size_t index) const {
      return names_.at(index);
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(GeneratorSet const&) const = default;

   private:
    std::vector<std::string> names_;
  };

  using Alphabet = std::shared_ptr<GeneratorSet const>;

  Alphabet make_alphabet(std::vector<std::string> names);

  bool is_identifier(std::string_view text);

  // +1 / -1, the multiplicative group of order two.
  enum class Sign : int { plus = 1, minus = -1 };

  constexpr Sign operator*(Sign a, Sign b) noexcept {
    return a == b ? Sign::plus : Sign::minus;
  }

  constexpr int to_int(Sign s) noexcept {
    return static_cast<int>(s);
  }

  // s^e; only the parity of e matters.
  inline Sign power(Sign s, Integer const& e) {
    return (s == Sign::minus && is_odd(e)) ? Sign::minus : Sign::plus;
  }

  // One sign per generator, in generator order.
  using SignAssignment = std::vector<Sign>;

  // A run g^e of a single generator; indices are 0-based.
  struct Syllable {
    std::size_t generator;
    Integer     exponent;

    bool operator==(Syllable const& other) const {
      return generator == other.generator && exponent == other.exponent;
    }
  };

  // Freely reduced word: no zero exponents and no two adjacent syllables on
  // the same generator. The empty word is the identity.
  class FreeWord {
   public:
    explicit FreeWord(Alphabet alphabet);

    // Reduces an arbitrary syllable sequence. Throws Error when an index is
    // outside the alphabet.
    static FreeWord reduce(Alphabet alphabet, std::span<Syllable const> raw);

    static FreeWord generator(Alphabet alphabet,
                              std::size_t index,
                              Integer const& exponent = 1);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::vector<Syllable> const& syllables() const noexcept {
      return syllables_;
    }
    bool is_identity() const noexcept {
      return syllables_.empty();
    }
    // Number of letters x^{±1} after expanding every syllable.
    Integer letter_length() const;

    bool operator==(FreeWord const& other) const;
    // Total order used to key group-ring elements.
    bool operator<(FreeWord const& other) const;

   private:
    FreeWord(Alphabet alphabet, std::vector<Syllable> syllables);

    Alphabet              alphabet_;
    std::vector<Syllable> syllables_;
  };

  // Throws Error when the two alphabets differ.
  void check_same_alphabet(Alphabet const& a, Alphabet const& b);

  FreeWord multiply(FreeWord const& u, FreeWord const& v);
  FreeWord invert(FreeWord const& w);
  FreeWord power(FreeWord const& w, Integer const& e);

  inline FreeWord operator*(FreeWord const& u, FreeWord const& v) {
    return multiply(u, v);
  }

  Integer exponent_sum(FreeWord const& w, std::size_t generator);

  // Value of the sign character defined by `signs` on w. Throws Error when
  // `signs` does not cover the alphabet.
  Sign sign_eval(FreeWord const& w, SignAssignment const& signs);

  // "x^4 y x y"; the identity prints as "1".
  std::string to_string(FreeWord const& w);

}  // namespace surjtop

#endif  // SURJTOP_FREEGROUP_HPP
