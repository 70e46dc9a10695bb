#include "surjtop/classify.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <thread>

#include "surjtop/foxcalc.hpp"

namespace surjtop {

  namespace {

    std::string describe_failure(AbelianGroup const& h2) {
      if (h2.free_rank > 0) {
        return "H2 = " + to_string(h2) + " has free rank "
               + std::to_string(h2.free_rank);
      }
      return "H2 = " + to_string(h2) + " has even order "
             + group_order(h2)->get_str();
    }

    // Independent recomputation of the twisted matrix through explicit Fox
    // derivatives, plus the mod-2 congruence with the exponent matrix.
    void audit_twisted_matrix(Presentation const& p,
                              SignAssignment const& signs,
                              IntMatrix const& twisted) {
      IntMatrix const delta = exponent_matrix(p);
      for (std::size_t i = 0; i < p.num_relators(); ++i) {
        for (std::size_t j = 0; j < p.num_generators(); ++j) {
          if (is_odd(twisted(i, j) - delta(i, j))) {
            throw InternalError("twisted matrix not congruent to the exponent "
                                "matrix mod 2");
          }
          if (p.relators()[i].letter_length() <= 100'000) {
            Integer const slow = augment(fox_derivative(p.relators()[i], j), signs);
            if (slow != twisted(i, j)) {
              throw InternalError("closed-form and letter-by-letter Fox "
                                  "derivatives disagree");
            }
          }
        }
      }
    }

  }  // namespace

  HypothesisCheck check_hypothesis(Presentation const& p) {
    HypothesisCheck check;
    check.h2_untwisted = cokernel(exponent_matrix(p));
    check.ok           = is_finite_odd(check.h2_untwisted);
    if (!check.ok) {
      check.reason = describe_failure(check.h2_untwisted);
    }
    return check;
  }

  AlphaReport classify_alpha(Presentation const&      p,
                             CoefficientSystem const& alpha,
                             ClassifyOptions          options) {
    HypothesisCheck const check = check_hypothesis(p);
    if (!check.ok) {
      throw HypothesisError(check.reason);
    }
    if (alpha.signs().size() != p.num_generators()
        || !is_valid_system(p, alpha.signs())) {
      throw Error("coefficient system is not valid for this presentation");
    }
    IntMatrix twisted = twisted_matrix(p, alpha.signs());
    if (options.paranoid) {
      audit_twisted_matrix(p, alpha.signs(), twisted);
    }
    AbelianGroup h2 = cokernel(twisted);
    if (!is_finite_odd(h2)) {
      throw InternalError("twisted H2 = " + to_string(h2)
                          + " is not finite of odd order although the "
                            "untwisted group is");
    }
    Integer c_star = *group_order(h2);
    Integer c_free = (c_star + 1) / 2;
    Integer strong = c_free - 1;
    return AlphaReport{alpha,
                       std::move(twisted),
                       std::move(h2),
                       std::move(c_star),
                       std::move(c_free),
                       std::move(strong)};
  }

  ClassificationReport classify_presentation(Presentation const& p,
                                             ClassifyOptions     options) {
    ClassificationReport report;
    report.presentation   = format_presentation(p);
    HypothesisCheck check = check_hypothesis(p);
    report.hypothesis_ok  = check.ok;
    report.h2_untwisted   = check.h2_untwisted;
    report.reason         = check.reason;
    if (!check.ok) {
      return report;
    }
    auto const systems = enumerate_systems(p);
    std::vector<std::optional<AlphaReport>> slots(systems.size());
    std::size_t const workers = std::clamp<std::size_t>(
        std::thread::hardware_concurrency(), 1, systems.size());
    std::vector<std::future<void>> pending;
    for (std::size_t w = 0; w < workers; ++w) {
      pending.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < systems.size(); i += workers) {
          slots[i] = classify_alpha(p, systems[i], options);
        }
      }));
    }
    for (auto& f : pending) {
      f.get();
    }
    for (auto& slot : slots) {
      report.total_free_classes += slot->c_free;
      report.total_strongly_surjective += slot->strongly_surjective;
      report.reports.push_back(std::move(*slot));
    }
    return report;
  }

}  // namespace surjtop
