#ifndef SURJTOP_CLASSIFY_HPP
#define SURJTOP_CLASSIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "surjtop/coeffsys.hpp"
#include "surjtop/intlinalg.hpp"
#include "surjtop/presentation.hpp"

namespace surjtop {

  // The homotopy class that is not strongly surjective is the one whose
  // induced class f*(nu) vanishes.
  inline constexpr std::string_view non_surjective_witness = "zero cohomology class";

  struct HypothesisCheck {
    bool         ok = false;
    AbelianGroup h2_untwisted;
    std::string  reason;  // empty when ok
  };

  // Maps K -> RP^2 inducing one coefficient system.
  struct AlphaReport {
    CoefficientSystem system;
    IntMatrix         delta_alpha;
    AbelianGroup      h2;
    Integer           c_star;               // based classes = |H^2(K; Z_alpha)|
    Integer           c_free;               // free classes = (c_star + 1) / 2
    Integer           strongly_surjective;  // c_free - 1
  };

  struct ClassificationReport {
    std::string              presentation;
    bool                     hypothesis_ok = false;
    std::string              reason;
    AbelianGroup             h2_untwisted;
    std::vector<AlphaReport> reports;
    Integer                  total_free_classes          = 0;
    Integer                  total_strongly_surjective   = 0;
  };

  struct ClassifyOptions {
    // Re-verify odd finiteness of every twisted group instead of relying on
    // the untwisted check alone; disagreement raises InternalError.
    bool paranoid = false;
  };

  // Raised by classify_alpha when the untwisted H^2 is not finite of odd
  // order.
  class HypothesisError : public Error {
   public:
    using Error::Error;
  };

  HypothesisCheck check_hypothesis(Presentation const& p);

  AlphaReport classify_alpha(Presentation const&      p,
                             CoefficientSystem const& alpha,
                             ClassifyOptions          options = {});

  ClassificationReport classify_presentation(Presentation const& p,
                                             ClassifyOptions     options = {});

}  // namespace surjtop

#endif  // SURJTOP_CLASSIFY_HPP
