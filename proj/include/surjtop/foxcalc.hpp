#ifndef SURJTOP_FOXCALC_HPP
#define SURJTOP_FOXCALC_HPP

#include <cstddef>
#include <map>
#include <string>

#include "surjtop/freegroup.hpp"
#include "surjtop/intlinalg.hpp"
#include "surjtop/presentation.hpp"

namespace surjtop {

  // Finitely supported integer combination of free words, an element of the
  // integral group ring of the free group. Zero coefficients are never
  // stored.
  class GroupRingElement {
   public:
    explicit GroupRingElement(Alphabet alphabet);

    static GroupRingElement term(FreeWord const& w, Integer const& coefficient = 1);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::map<FreeWord, Integer> const& terms() const noexcept {
      return terms_;
    }
    bool is_zero() const noexcept {
      return terms_.empty();
    }
    // Coefficient of w, zero when absent.
    Integer coefficient(FreeWord const& w) const;

    void add_term(FreeWord const& w, Integer const& coefficient);

    bool operator==(GroupRingElement const& other) const;

   private:
    Alphabet                    alphabet_;
    std::map<FreeWord, Integer> terms_;
  };

  GroupRingElement gre_add(GroupRingElement const& a, GroupRingElement const& b);

  // Left multiplication w * a.
  GroupRingElement gre_scale_word(FreeWord const& w, GroupRingElement const& a);

  inline GroupRingElement operator+(GroupRingElement const& a,
                                    GroupRingElement const& b) {
    return gre_add(a, b);
  }

  std::string to_string(GroupRingElement const& a);

  // Fox derivative by the prefix rule over the letter expansion of w.
  GroupRingElement fox_derivative(FreeWord const& w, std::size_t generator);

  // Sum of coefficient * sign(word).
  Integer augment(GroupRingElement const& a, SignAssignment const& signs);

  // augment(fox_derivative(w, generator), signs), evaluated syllable by
  // syllable in closed form; cost does not depend on the exponent sizes.
  Integer augmented_derivative(FreeWord const&       w,
                               std::size_t           generator,
                               SignAssignment const& signs);

  // Matrix whose (i, j) entry is the augmented derivative of relator i with
  // respect to generator j. Throws Error when `signs` does not kill every
  // relator.
  IntMatrix twisted_matrix(Presentation const& p, SignAssignment const& signs);

}  // namespace surjtop

#endif  // SURJTOP_FOXCALC_HPP
