#include "surjtop/coeffsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <utility>

namespace surjtop {

  namespace {

    // Dense F_2 row.
    class BitRow {
     public:
      explicit BitRow(std::size_t size) : words_((size + 63) / 64, 0) {}

      bool get(std::size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1U;
      }
      void set(std::size_t i) {
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      BitRow& operator^=(BitRow const& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) {
          words_[k] ^= other.words_[k];
        }
        return *this;
      }

     private:
      std::vector<std::uint64_t> words_;
    };

    struct Echelon {
      std::vector<BitRow>      rows;        // reduced rows, one per pivot
      std::vector<std::size_t> pivot_cols;  // pivot column of each row
    };

    Echelon reduced_echelon_mod2(IntMatrix const& a) {
      std::vector<BitRow> rows;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        BitRow row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if (is_odd(a(i, j))) {
            row.set(j);
          }
        }
        rows.push_back(std::move(row));
      }
      Echelon     e;
      std::size_t next = 0;
      for (std::size_t col = 0; col < a.cols() && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].get(col)) {
          ++pivot;
        }
        if (pivot == rows.size()) {
          continue;
        }
        std::swap(rows[next], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i != next && rows[i].get(col)) {
            rows[i] ^= rows[next];
          }
        }
        e.pivot_cols.push_back(col);
        ++next;
      }
      rows.resize(next, BitRow(a.cols()));
      e.rows = std::move(rows);
      return e;
    }

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r\n");
      return std::string(s.substr(b, e - b + 1));
    }

  }  // namespace

  CoefficientSystem::CoefficientSystem(SignAssignment signs,
                                       std::optional<std::string> label)
      : signs_(std::move(signs)), label_(std::move(label)) {}

  CoefficientSystem CoefficientSystem::make(Presentation const& p,
                                            SignAssignment      signs) {
    if (signs.size() != p.num_generators()) {
      throw Error("sign assignment has " + std::to_string(signs.size())
                  + " entries, expected " + std::to_string(p.num_generators()));
    }
    if (!is_valid_system(p, signs)) {
      throw Error("sign assignment " + format_sign_assignment(p.generators(), signs)
                  + " does not kill every relator");
    }
    std::optional<std::string> label;
    if (std::all_of(signs.begin(), signs.end(),
                    [](Sign s) { return s == Sign::plus; })) {
      label = "trivial";
    } else if (signs.size() == 2) {
      label = two_generator_label(signs);
    }
    return CoefficientSystem(std::move(signs), std::move(label));
  }

  CoefficientSystem CoefficientSystem::trivial(Presentation const& p) {
    return make(p, SignAssignment(p.num_generators(), Sign::plus));
  }

  bool CoefficientSystem::is_trivial() const {
    return std::all_of(signs_.begin(), signs_.end(),
                       [](Sign s) { return s == Sign::plus; });
  }

  bool is_valid_system(Presentation const& p, SignAssignment const& signs) {
    return std::all_of(p.relators().begin(), p.relators().end(),
                       [&](FreeWord const& r) {
                         return sign_eval(r, signs) == Sign::plus;
                       });
  }

  std::size_t rank_mod2(IntMatrix const& a) {
    return reduced_echelon_mod2(a).pivot_cols.size();
  }

  std::vector<CoefficientSystem> enumerate_systems(Presentation const& p) {
    std::size_t const n = p.num_generators();
    Echelon const     e = reduced_echelon_mod2(exponent_matrix(p));

    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) {
      is_pivot[c] = true;
    }
    std::vector<BitRow> basis;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      BitRow v(n);
      v.set(f);
      for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.rows[r].get(f)) {
          v.set(e.pivot_cols[r]);
        }
      }
      basis.push_back(std::move(v));
    }
    if (basis.size() > 20) {
      throw Error("2^" + std::to_string(basis.size())
                  + " coefficient systems are too many to enumerate");
    }

    std::vector<SignAssignment> vectors;
    for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()); ++mask) {
      BitRow v(n);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if ((mask >> k) & 1U) {
          v ^= basis[k];
        }
      }
      SignAssignment signs(n, Sign::plus);
      for (std::size_t j = 0; j < n; ++j) {
        if (v.get(j)) {
          signs[j] = Sign::minus;
        }
      }
      vectors.push_back(std::move(signs));
    }
    // + sorts before -, and the all-plus vector comes first.
    std::sort(vectors.begin(), vectors.end(),
              [](SignAssignment const& a, SignAssignment const& b) {
                return std::lexicographical_compare(
                    a.begin(), a.end(), b.begin(), b.end(),
                    [](Sign x, Sign y) { return x == Sign::plus && y == Sign::minus; });
              });

    std::vector<CoefficientSystem> systems;
    systems.reserve(vectors.size());
    for (auto& signs : vectors) {
      systems.push_back(CoefficientSystem::make(p, std::move(signs)));
    }
    return systems;
  }

  std::optional<std::string> two_generator_label(SignAssignment const& signs) {
    if (signs.size() != 2) {
      return std::nullopt;
    }
    bool const x = signs[0] == Sign::minus;
    bool const y = signs[1] == Sign::minus;
    if (!x && !y) {
      return "trivial";
    }
    if (x && !y) {
      return "beta1";
    }
    if (!x && y) {
      return "beta2";
    }
    return "beta3";
  }

  std::vector<std::string> feasible_homs_2_1(Integer const& a, Integer const& b) {
    bool const a_odd = is_odd(a);
    bool const b_odd = is_odd(b);
    if (!a_odd && b_odd) {
      return {"trivial", "beta1"};
    }
    if (a_odd && !b_odd) {
      return {"trivial", "beta2"};
    }
    if (a_odd && b_odd) {
      return {"trivial", "beta3"};
    }
    return {"trivial", "beta1", "beta2", "beta3"};
  }

  SignAssignment parse_sign_assignment(GeneratorSet const& generators,
                                       std::string_view    text) {
    SignAssignment    signs(generators.size(), Sign::plus);
    std::vector<bool> seen(generators.size(), false);
    if (trim(text).empty()) {
      return signs;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string const item = trim(text.substr(start, end - start));
      auto const        eq   = item.find('=');
      if (eq == std::string::npos) {
        throw Error("expected gen=+1|-1 in sign assignment, got \"" + item + "\"");
      }
      std::string const name  = trim(std::string_view(item).substr(0, eq));
      std::string const value = trim(std::string_view(item).substr(eq + 1));
      auto const        index = generators.index_of(name);
      if (!index) {
        throw Error("unknown generator \"" + name + "\" in sign assignment");
      }
      if (seen[*index]) {
        throw Error("generator \"" + name + "\" assigned twice");
      }
      seen[*index] = true;
      if (value == "+1" || value == "+" || value == "1") {
        signs[*index] = Sign::plus;
      } else if (value == "-1" || value == "-") {
        signs[*index] = Sign::minus;
      } else {
        throw Error("sign for \"" + name + "\" must be +1, -1, + or -, got \""
                    + value + "\"");
      }
      start = end + 1;
    }
    return signs;
  }

  std::string format_sign_assignment(GeneratorSet const&   generators,
                                     SignAssignment const& signs) {
    std::string out;
    for (std::size_t i = 0; i < signs.size() && i < generators.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += generators.name(i);
      out += signs[i] == Sign::plus ? "=+1" : "=-1";
    }
    return out;
  }

  std::string display_name(GeneratorSet const&      generators,
                           CoefficientSystem const& system) {
    if (system.label()) {
      return *system.label();
    }
    return format_sign_assignment(generators, system.signs());
  }

}  // namespace surjtop
