#include "surjtop/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace surjtop {

  namespace {
    // Pushes g^e onto a reduced stack of syllables, cancelling as needed.
    void push_syllable(std::vector<Syllable>& stack,
                       std::size_t            generator,
                       Integer const&         exponent) {
      if (sgn(exponent) == 0) {
        return;
      }
      if (!stack.empty() && stack.back().generator == generator) {
        stack.back().exponent += exponent;
        if (sgn(stack.back().exponent) == 0) {
          stack.pop_back();
        }
        return;
      }
      stack.push_back({generator, exponent});
    }
  }  // namespace

  bool is_identifier(std::string_view text) {
    if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) {
      return false;
    }
    return std::all_of(text.begin() + 1, text.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  GeneratorSet::GeneratorSet(std::vector<std::string> names)
      : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i])) {
        throw Error("invalid generator name \"" + names_[i] + "\"");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[j] == names_[i]) {
          throw Error("duplicate generator \"" + names_[i] + "\"");
        }
      }
    }
  }

  std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
  }

  Alphabet make_alphabet(std::vector<std::string> names) {
    return std::make_shared<GeneratorSet const>(std::move(names));
  }

  void check_same_alphabet(Alphabet const& a, Alphabet const& b) {
    if (a != b && !(a && b && *a == *b)) {
      throw Error("generator set mismatch");
    }
  }

  FreeWord::FreeWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) {
      throw Error("free word requires a generator set");
    }
  }

  FreeWord::FreeWord(Alphabet alphabet, std::vector<Syllable> syllables)
      : alphabet_(std::move(alphabet)), syllables_(std::move(syllables)) {}

  FreeWord FreeWord::reduce(Alphabet alphabet, std::span<Syllable const> raw) {
    FreeWord result(std::move(alphabet));
    auto const n = result.alphabet_->size();
    for (auto const& s : raw) {
      if (s.generator >= n) {
        throw Error("generator index " + std::to_string(s.generator)
                    + " out of range for " + std::to_string(n) + " generators");
      }
      push_syllable(result.syllables_, s.generator, s.exponent);
    }
    return result;
  }

  FreeWord FreeWord::generator(Alphabet alphabet,
                               std::size_t index,
                               Integer const& exponent) {
    Syllable s{index, exponent};
    return reduce(std::move(alphabet), std::span<Syllable const>(&s, 1));
  }

  Integer FreeWord::letter_length() const {
    Integer total = 0;
    for (auto const& s : syllables_) {
      total += abs(s.exponent);
    }
    return total;
  }

  bool FreeWord::operator==(FreeWord const& other) const {
    if (syllables_ != other.syllables_) {
      return false;
    }
    return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
  }

  bool FreeWord::operator<(FreeWord const& other) const {
    auto const& a = syllables_;
    auto const& b = other.syllables_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i].generator != b[i].generator) {
        return a[i].generator < b[i].generator;
      }
      if (a[i].exponent != b[i].exponent) {
        return a[i].exponent < b[i].exponent;
      }
    }
    return a.size() < b.size();
  }

  FreeWord multiply(FreeWord const& u, FreeWord const& v) {
    check_same_alphabet(u.alphabet(), v.alphabet());
    std::vector<Syllable> out = u.syllables();
    for (auto const& s : v.syllables()) {
      push_syllable(out, s.generator, s.exponent);
    }
    return FreeWord::reduce(u.alphabet(), out);
  }

  FreeWord invert(FreeWord const& w) {
    std::vector<Syllable> out;
    out.reserve(w.syllables().size());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
      out.push_back({it->generator, -it->exponent});
    }
    return FreeWord::reduce(w.alphabet(), out);
  }

  FreeWord power(FreeWord const& w, Integer const& e) {
    if (w.syllables().size() == 1) {
      auto const& s = w.syllables().front();
      return FreeWord::generator(w.alphabet(), s.generator, s.exponent * e);
    }
    FreeWord base   = sgn(e) < 0 ? invert(w) : w;
    FreeWord result(w.alphabet());
    Integer  k = abs(e);
    while (sgn(k) > 0) {
      if (is_odd(k)) {
        result = multiply(result, base);
      }
      k >>= 1;
      if (sgn(k) > 0) {
        base = multiply(base, base);
      }
    }
    return result;
  }

  Integer exponent_sum(FreeWord const& w, std::size_t generator) {
    Integer total = 0;
    for (auto const& s : w.syllables()) {
      if (s.generator == generator) {
        total += s.exponent;
      }
    }
    return total;
  }

  Sign sign_eval(FreeWord const& w, SignAssignment const& signs) {
    if (signs.size() != w.alphabet()->size()) {
      throw Error("sign assignment covers " + std::to_string(signs.size())
                  + " generators, expected "
                  + std::to_string(w.alphabet()->size()));
    }
    Sign result = Sign::plus;
    for (auto const& s : w.syllables()) {
      result = result * power(signs[s.generator], s.exponent);
    }
    return result;
  }

  std::string to_string(FreeWord const& w) {
    if (w.is_identity()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w.syllables()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += w.alphabet()->name(s.generator);
      if (s.exponent != 1) {
        out += '^';
        out += s.exponent.get_str();
      }
    }
    return out;
  }

}  // namespace surjtop
