#ifndef SURJTOP_COEFFSYS_HPP
#define SURJTOP_COEFFSYS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surjtop/freegroup.hpp"
#include "surjtop/presentation.hpp"

namespace surjtop {

  // A local Z_2 coefficient system over the model two-complex of a
  // presentation: one sign per generator such that every relator evaluates
  // to +1. Only constructible through `make`, which checks this.
  class CoefficientSystem {
   public:
    // Throws Error when `signs` has the wrong length or does not kill every
    // relator of `p`.
    static CoefficientSystem make(Presentation const& p, SignAssignment signs);

    static CoefficientSystem trivial(Presentation const& p);

    SignAssignment const& signs() const noexcept {
      return signs_;
    }
    // "trivial" for the all-plus system; "beta1", "beta2", "beta3" on two
    // generators; otherwise empty.
    std::optional<std::string> const& label() const noexcept {
      return label_;
    }
    bool is_trivial() const;

    bool operator==(CoefficientSystem const& other) const {
      return signs_ == other.signs_;
    }

   private:
    CoefficientSystem(SignAssignment signs, std::optional<std::string> label);

    SignAssignment             signs_;
    std::optional<std::string> label_;
  };

  bool is_valid_system(Presentation const& p, SignAssignment const& signs);

  // All coefficient systems, trivial first, then lexicographic with + < -.
  // Computed from a basis of the mod-2 nullspace of the exponent matrix.
  std::vector<CoefficientSystem> enumerate_systems(Presentation const& p);

  // Rank over F_2 of a matrix reduced mod 2.
  std::size_t rank_mod2(IntMatrix const& a);

  // Label given to a sign vector on two generators, per the parity table.
  std::optional<std::string> two_generator_label(SignAssignment const& signs);

  // Labels of the admissible systems for a one-relator presentation on two
  // generators whose relator has exponent sums (a, b).
  std::vector<std::string> feasible_homs_2_1(Integer const& a, Integer const& b);

  // Parses "x=-1, y=+" against the generators of `alphabet`. Omitted
  // generators default to +1.
  SignAssignment parse_sign_assignment(GeneratorSet const& generators,
                                       std::string_view    text);

  // "x=+1, y=-1"
  std::string format_sign_assignment(GeneratorSet const&   generators,
                                     SignAssignment const& signs);

  // Label when present, otherwise the sign vector.
  std::string display_name(GeneratorSet const& generators,
                           CoefficientSystem const& system);

}  // namespace surjtop

#endif  // SURJTOP_COEFFSYS_HPP
