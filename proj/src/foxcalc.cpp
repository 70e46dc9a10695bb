#include "surjtop/foxcalc.hpp"

#include <utility>
#include <vector>

namespace surjtop {

  namespace {
    // Letter expansions longer than this are refused by fox_derivative; the
    // closed-form augmented_derivative has no such limit.
    constexpr unsigned long max_expanded_letters = 10'000'000;

    // Sum of eps^t for t = 0, ..., k - 1.
    Integer geometric_from_zero(Sign eps, Integer const& k) {
      if (eps == Sign::plus) {
        return k;
      }
      return is_odd(k) ? Integer(1) : Integer(0);
    }

    // Sum of eps^t for t = 1, ..., k.
    Integer geometric_from_one(Sign eps, Integer const& k) {
      if (eps == Sign::plus) {
        return k;
      }
      return is_odd(k) ? Integer(-1) : Integer(0);
    }
  }  // namespace

  GroupRingElement::GroupRingElement(Alphabet alphabet)
      : alphabet_(std::move(alphabet)) {}

  GroupRingElement GroupRingElement::term(FreeWord const& w,
                                          Integer const&  coefficient) {
    GroupRingElement a(w.alphabet());
    a.add_term(w, coefficient);
    return a;
  }

  Integer GroupRingElement::coefficient(FreeWord const& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void GroupRingElement::add_term(FreeWord const& w, Integer const& coefficient) {
    check_same_alphabet(alphabet_, w.alphabet());
    if (sgn(coefficient) == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (sgn(it->second) == 0) {
        terms_.erase(it);
      }
    }
  }

  bool GroupRingElement::operator==(GroupRingElement const& other) const {
    return terms_ == other.terms_;
  }

  GroupRingElement gre_add(GroupRingElement const& a, GroupRingElement const& b) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    GroupRingElement sum = a;
    for (auto const& [w, c] : b.terms()) {
      sum.add_term(w, c);
    }
    return sum;
  }

  GroupRingElement gre_scale_word(FreeWord const& w, GroupRingElement const& a) {
    check_same_alphabet(w.alphabet(), a.alphabet());
    GroupRingElement out(a.alphabet());
    for (auto const& [u, c] : a.terms()) {
      out.add_term(multiply(w, u), c);
    }
    return out;
  }

  std::string to_string(GroupRingElement const& a) {
    if (a.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [w, c] : a.terms()) {
      if (out.empty()) {
        out += sgn(c) < 0 ? "-" : "";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      Integer const m = abs(c);
      if (m != 1 || w.is_identity()) {
        out += m.get_str();
        if (!w.is_identity()) {
          out += '*';
        }
      }
      if (!w.is_identity()) {
        out += to_string(w);
      }
    }
    return out;
  }

  GroupRingElement fox_derivative(FreeWord const& w, std::size_t generator) {
    Alphabet const& alphabet = w.alphabet();
    if (generator >= alphabet->size()) {
      throw Error("generator index out of range");
    }
    if (w.letter_length() > max_expanded_letters) {
      throw Error("word too long to expand letter by letter");
    }
    GroupRingElement      result(alphabet);
    std::vector<Syllable> prefix;
    for (auto const& s : w.syllables()) {
      long const count = Integer(abs(s.exponent)).get_si();
      int const  step  = sgn(s.exponent);
      prefix.push_back({s.generator, Integer(0)});
      for (long t = 0; t < count; ++t) {
        if (step > 0) {
          if (s.generator == generator) {
            result.add_term(FreeWord::reduce(alphabet, prefix), 1);
          }
          prefix.back().exponent += 1;
        } else {
          prefix.back().exponent -= 1;
          if (s.generator == generator) {
            result.add_term(FreeWord::reduce(alphabet, prefix), -1);
          }
        }
      }
    }
    return result;
  }

  Integer augment(GroupRingElement const& a, SignAssignment const& signs) {
    Integer total = 0;
    for (auto const& [w, c] : a.terms()) {
      total += to_int(sign_eval(w, signs)) * c;
    }
    return total;
  }

  Integer augmented_derivative(FreeWord const&       w,
                               std::size_t           generator,
                               SignAssignment const& signs) {
    if (signs.size() != w.alphabet()->size()) {
      throw Error("sign assignment does not cover the generators");
    }
    if (generator >= signs.size()) {
      throw Error("generator index out of range");
    }
    Integer total  = 0;
    Sign    prefix = Sign::plus;
    for (auto const& s : w.syllables()) {
      Sign const eps = signs[s.generator];
      if (s.generator == generator) {
        if (sgn(s.exponent) > 0) {
          total += to_int(prefix) * geometric_from_zero(eps, s.exponent);
        } else {
          total -= to_int(prefix) * geometric_from_one(eps, -s.exponent);
        }
      }
      prefix = prefix * power(eps, s.exponent);
    }
    return total;
  }

  IntMatrix twisted_matrix(Presentation const& p, SignAssignment const& signs) {
    for (auto const& r : p.relators()) {
      if (sign_eval(r, signs) != Sign::plus) {
        throw Error("sign assignment does not kill relator " + to_string(r));
      }
    }
    IntMatrix m(p.num_relators(), p.num_generators());
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      for (std::size_t j = 0; j < p.num_generators(); ++j) {
        m(i, j) = augmented_derivative(p.relators()[i], j, signs);
      }
    }
    return m;
  }

}  // namespace surjtop
