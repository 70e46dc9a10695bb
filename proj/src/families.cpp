#include "surjtop/families.hpp"

#include <utility>

#include "surjtop/foxcalc.hpp"

namespace surjtop {

  namespace {

    constexpr std::size_t x = 0;
    constexpr std::size_t y = 1;

    Alphabet xy_alphabet() {
      return make_alphabet({"x", "y"});
    }

    FreeWord word(Alphabet const& a, std::vector<Syllable> const& raw) {
      return FreeWord::reduce(a, raw);
    }

    void require(bool condition, std::string const& message) {
      if (!condition) {
        throw Error(message);
      }
    }

    void require_nonnegative(Integer const& v, char const* name) {
      require(sgn(v) >= 0, std::string(name) + " must be >= 0, got " + v.get_str());
    }

    FreeWord swap_xy(FreeWord const& w) {
      std::vector<Syllable> raw;
      for (auto const& s : w.syllables()) {
        raw.push_back({s.generator == x ? y : x, s.exponent});
      }
      return FreeWord::reduce(w.alphabet(), raw);
    }

    FreeWord case1_relator(Alphabet const& a,
                           Integer const&  p,
                           Integer const&  q,
                           std::size_t     j) {
      require_nonnegative(p, "p");
      require_nonnegative(q, "q");
      FreeWord r = word(a, {{x, p + 2}, {y, 1}, {x, p + 1}, {y, 2 * q + 1}});
      return multiply(r, power(order_step_block(a), j));
    }

  }  // namespace

  std::string_view to_string(Family family) {
    switch (family) {
      case Family::example_k1:
        return "example-k1";
      case Family::example_k2:
        return "example-k2";
      case Family::case1:
        return "case1";
      case Family::case2:
        return "case2";
      case Family::case3:
        return "case3";
    }
    return "";
  }

  Family parse_family(std::string_view name) {
    for (Family f : {Family::example_k1, Family::example_k2, Family::case1,
                     Family::case2, Family::case3}) {
      if (to_string(f) == name) {
        return f;
      }
    }
    throw Error("unknown family \"" + std::string(name)
                + "\" (expected example-k1, example-k2, case1, case2 or case3)");
  }

  Presentation example_k1(Integer const& k) {
    require(sgn(k) > 0 && is_odd(k), "k must be odd and >= 1, got " + k.get_str());
    Alphabet a = xy_alphabet();
    return Presentation(a, {word(a, {{x, k + 1}, {y, 1}, {x, 1}, {y, 1}})});
  }

  Presentation example_k2(Integer const& k, Integer const& l) {
    require(sgn(k) > 0 && is_odd(k), "k must be odd and >= 1, got " + k.get_str());
    require_nonnegative(l, "l");
    Alphabet a = xy_alphabet();
    return Presentation(a, {word(a, {{x, k + 2 + l}, {y, 2}, {x, -l}})});
  }

  FreeWord order_step_block(Alphabet const& xy) {
    return word(xy, {{y, -1}, {x, -1}, {y, -1}, {x, 1}, {y, 2}});
  }

  Presentation case1_word(Integer const& p, Integer const& q, std::size_t j) {
    Alphabet a = xy_alphabet();
    return Presentation(a, {case1_relator(a, p, q, j)});
  }

  Presentation case2_word(Integer const& p, Integer const& q, std::size_t j) {
    Alphabet a = xy_alphabet();
    return Presentation(a, {swap_xy(case1_relator(a, p, q, j))});
  }

  FreeWord case3_base_word(Alphabet const& xy, Integer const& p, Integer const& q) {
    require_nonnegative(p, "p");
    require_nonnegative(q, "q");
    return word(xy, {{x, p + 2}, {y, 2}, {x, p + 1}, {y, 2 * q + 1}});
  }

  Presentation case3_word(Integer const& p, Integer const& q, std::size_t n) {
    require(n >= 1, "n must be >= 1");
    Alphabet a = xy_alphabet();
    FreeWord r = multiply(case3_base_word(a, p, q), power(order_step_block(a), n));
    return Presentation(a, {r});
  }

  Presentation build_family(Family family, FamilyParams const& params) {
    switch (family) {
      case Family::example_k1:
        return example_k1(params.k);
      case Family::example_k2:
        return example_k2(params.k, params.l);
      case Family::case1:
        return case1_word(params.p, params.q, to_size(params.j, "j"));
      case Family::case2:
        return case2_word(params.p, params.q, to_size(params.j, "j"));
      case Family::case3:
        return case3_word(params.p, params.q, to_size(params.n, "n"));
    }
    throw Error("unknown family");
  }

  FamilyPrediction predict_family(Family family, FamilyParams const& params) {
    switch (family) {
      case Family::example_k1:
        return {"beta2", params.k};
      case Family::example_k2:
        return {"beta2", params.k + 2};
      case Family::case1:
        return {"beta2", 2 * params.j + 1};
      case Family::case2:
        return {"beta1", 2 * params.j + 1};
      case Family::case3:
        return {"beta3", 2 * params.n - 1};
    }
    throw Error("unknown family");
  }

  Realization realize_order(Integer const& a, Integer const& b, Integer const& c) {
    require(a >= 2 && b >= 2, "a and b must both be >= 2");
    require(gcd(a, b) == 1, "a and b must be coprime, gcd(" + a.get_str() + ", "
                                + b.get_str() + ") = " + Integer(gcd(a, b)).get_str());
    require(sgn(c) > 0 && is_odd(c), "c must be odd and >= 1, got " + c.get_str());

    FamilyParams params;
    Family       family;
    if (is_odd(a) && is_even(b)) {
      family   = Family::case1;
      params.p = (a - 3) / 2;
      params.q = (b - 2) / 2;
      params.j = (c - 1) / 2;
    } else if (is_even(a) && is_odd(b)) {
      family   = Family::case2;
      params.p = (b - 3) / 2;
      params.q = (a - 2) / 2;
      params.j = (c - 1) / 2;
    } else {
      family   = Family::case3;
      params.p = (a - 3) / 2;
      params.q = (b - 3) / 2;
      params.n = (c + 1) / 2;
    }
    Presentation      pres  = build_family(family, params);
    std::string const label = predict_family(family, params).label;

    CoefficientSystem const* chosen  = nullptr;
    auto const               systems = enumerate_systems(pres);
    for (auto const& s : systems) {
      if (s.label() == label) {
        chosen = &s;
      }
    }
    if (chosen == nullptr) {
      throw InternalError("system " + label + " is not admissible for "
                          + format_presentation(pres));
    }
    IntMatrix const delta = exponent_matrix(pres);
    if (delta(0, 0) != a || delta(0, 1) != b) {
      throw InternalError("exponent sums of " + format_presentation(pres)
                          + " differ from the requested pair");
    }
    auto const order = group_order(cokernel(twisted_matrix(pres, chosen->signs())));
    if (!order || *order != c) {
      throw InternalError("twisted order of " + format_presentation(pres)
                          + " differs from the requested " + c.get_str());
    }
    return Realization{std::move(pres), *chosen, family, params, *order};
  }

}  // namespace surjtop
