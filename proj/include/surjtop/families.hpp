#ifndef SURJTOP_FAMILIES_HPP
#define SURJTOP_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surjtop/coeffsys.hpp"
#include "surjtop/presentation.hpp"

namespace surjtop {

  // One-relator presentations on generators (x, y) with prescribed twisted
  // cohomology. Each constructor throws Error on out-of-range parameters.

  enum class Family { example_k1, example_k2, case1, case2, case3 };

  std::string_view to_string(Family family);
  // Accepts "example-k1", "example-k2", "case1", "case2", "case3".
  Family parse_family(std::string_view name);

  // < x, y | x^(k+1) y x y >, k odd >= 1. Order k under beta2.
  Presentation example_k1(Integer const& k);

  // < x, y | x^(k+2+l) y^2 x^-l >, k odd >= 1, l >= 0. Order k+2 under beta2.
  Presentation example_k2(Integer const& k, Integer const& l);

  // The block y^-1 x^-1 y^-1 x y^2 appended to raise the twisted order.
  FreeWord order_step_block(Alphabet const& xy);

  // x^(p+2) y x^(p+1) y^(2q+1) followed by j blocks. Exponent sums
  // (2p+3, 2q+2); order 2j+1 under beta2.
  Presentation case1_word(Integer const& p, Integer const& q, std::size_t j);

  // case1_word with x and y exchanged. Exponent sums (2q+2, 2p+3); order
  // 2j+1 under beta1.
  Presentation case2_word(Integer const& p, Integer const& q, std::size_t j);

  // x^(p+2) y^2 x^(p+1) y^(2q+1), the n = 0 word of case 3.
  FreeWord case3_base_word(Alphabet const& xy, Integer const& p, Integer const& q);

  // case3_base_word followed by n >= 1 blocks. Exponent sums (2p+3, 2q+3);
  // order 2n-1 under beta3.
  Presentation case3_word(Integer const& p, Integer const& q, std::size_t n);

  struct FamilyParams {
    Integer k = 1;
    Integer l = 0;
    Integer p = 0;
    Integer q = 0;
    Integer j = 0;
    Integer n = 1;
  };

  // Presentation for `family` with the parameters that family reads.
  Presentation build_family(Family family, FamilyParams const& params);

  // The coefficient system and twisted order the family is built to realise.
  struct FamilyPrediction {
    std::string label;
    Integer     order;
  };
  FamilyPrediction predict_family(Family family, FamilyParams const& params);

  struct Realization {
    Presentation      presentation;
    CoefficientSystem system;
    Family            family;
    FamilyParams      params;
    Integer           order;  // recomputed twisted order, equal to c
  };

  // A presentation < x, y | r > with exponent sums (a, b) whose twisted
  // cohomology under the nontrivial feasible system is Z/c. Requires
  // gcd(a, b) = 1, a, b >= 2 and c odd >= 1. The result is recomputed and
  // checked before returning; a mismatch raises InternalError.
  Realization realize_order(Integer const& a, Integer const& b, Integer const& c);

}  // namespace surjtop

#endif  // SURJTOP_FAMILIES_HPP
