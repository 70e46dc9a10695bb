#ifndef SURJTOP_REPORT_HPP
#define SURJTOP_REPORT_HPP

#include <json.hpp>

#include "surjtop/classify.hpp"

namespace surjtop {

  using Json = nlohmann::ordered_json;

  // Integers that fit in 64 bits become JSON numbers, larger ones decimal
  // strings.
  Json to_json(Integer const& x);
  Json to_json(IntMatrix const& m);
  // {"torsion": [...], "free_rank": n}
  Json to_json(AbelianGroup const& g);
  // {"x": 1, "y": -1}
  Json signs_to_json(GeneratorSet const& generators, SignAssignment const& signs);

  // Report schema:
  // {presentation, hypothesis_ok, h2_untwisted, alphas: [{signs, label,
  //  delta_alpha, h2, c_star, c_free, strongly_surjective}], totals:
  //  {free_classes, strongly_surjective}}
  Json to_json(ClassificationReport const& report, GeneratorSet const& generators);

}  // namespace surjtop

#endif  // SURJTOP_REPORT_HPP
