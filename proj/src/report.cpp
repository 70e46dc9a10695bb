#include "surjtop/report.hpp"

namespace surjtop {

  Json to_json(Integer const& x) {
    if (auto v = to_int64(x)) {
      return *v;
    }
    return x.get_str();
  }

  Json to_json(IntMatrix const& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(to_json(m(i, j)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  Json to_json(AbelianGroup const& g) {
    Json torsion = Json::array();
    for (auto const& d : g.torsion) {
      torsion.push_back(to_json(d));
    }
    Json out;
    out["torsion"]   = std::move(torsion);
    out["free_rank"] = g.free_rank;
    return out;
  }

  Json signs_to_json(GeneratorSet const& generators, SignAssignment const& signs) {
    Json out = Json::object();
    for (std::size_t i = 0; i < signs.size(); ++i) {
      out[generators.name(i)] = to_int(signs[i]);
    }
    return out;
  }

  Json to_json(ClassificationReport const& report, GeneratorSet const& generators) {
    Json out;
    out["presentation"]  = report.presentation;
    out["hypothesis_ok"] = report.hypothesis_ok;
    out["h2_untwisted"]  = to_json(report.h2_untwisted);
    Json alphas          = Json::array();
    for (auto const& a : report.reports) {
      Json entry;
      entry["signs"] = signs_to_json(generators, a.system.signs());
      if (a.system.label()) {
        entry["label"] = *a.system.label();
      } else {
        entry["label"] = nullptr;
      }
      entry["delta_alpha"]         = to_json(a.delta_alpha);
      entry["h2"]                  = to_json(a.h2);
      entry["c_star"]              = to_json(a.c_star);
      entry["c_free"]              = to_json(a.c_free);
      entry["strongly_surjective"] = to_json(a.strongly_surjective);
      alphas.push_back(std::move(entry));
    }
    out["alphas"] = std::move(alphas);
    Json totals;
    totals["free_classes"]        = to_json(report.total_free_classes);
    totals["strongly_surjective"] = to_json(report.total_strongly_surjective);
    out["totals"]                 = std::move(totals);
    return out;
  }

}  // namespace surjtop
