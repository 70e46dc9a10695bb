#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "surjtop/coeffsys.hpp"

using namespace surjtop;

namespace {
  std::vector<SignAssignment> signs_of(std::vector<CoefficientSystem> const& v) {
    std::vector<SignAssignment> out;
    for (auto const& s : v) {
      out.push_back(s.signs());
    }
    return out;
  }

  std::vector<std::string> labels_of(std::vector<CoefficientSystem> const& v) {
    std::vector<std::string> out;
    for (auto const& s : v) {
      out.push_back(*s.label());
    }
    return out;
  }

  constexpr Sign P = Sign::plus;
  constexpr Sign M = Sign::minus;
}  // namespace

TEST_CASE("validity of sign assignments") {
  auto const p = parse_presentation("< x, y | x^4 y x y >");
  CHECK(!is_valid_system(p, {M, P}));
  CHECK(is_valid_system(p, {P, M}));
  CHECK(is_valid_system(p, {P, P}));
  CHECK(!is_valid_system(p, {M, M}));
  CHECK_THROWS_AS(is_valid_system(p, {P}), Error);
  CHECK_THROWS_AS(CoefficientSystem::make(p, {M, P}), Error);
  CHECK(CoefficientSystem::trivial(p).is_trivial());
}

TEST_CASE("enumeration examples") {
  auto const k1 = parse_presentation("< x, y | x^4 y x y >");
  CHECK(labels_of(enumerate_systems(k1)) == std::vector<std::string>{"trivial", "beta2"});
  auto const xy = parse_presentation("< x, y | x y >");
  CHECK(labels_of(enumerate_systems(xy)) == std::vector<std::string>{"trivial", "beta3"});
  auto const rp2     = parse_presentation("< x | x^2 >");
  auto const systems = enumerate_systems(rp2);
  REQUIRE(systems.size() == 2);
  CHECK(systems[0].signs() == SignAssignment{P});
  CHECK(systems[1].signs() == SignAssignment{M});
  CHECK(!systems[1].label());
  CHECK(display_name(rp2.generators(), systems[1]) == "x=-1");
  auto const free2 = parse_presentation("< x, y | >");
  CHECK(labels_of(enumerate_systems(free2))
        == std::vector<std::string>{"trivial", "beta2", "beta1", "beta3"});
}

TEST_CASE("enumeration agrees with brute force") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 400; ++iter) {
    auto const p       = oracle::random_presentation(rng, 5, 4, 10);
    auto const systems = enumerate_systems(p);
    CHECK(signs_of(systems) == oracle::brute_force_systems(p));
    CHECK(systems.front().is_trivial());
    std::size_t const r = rank_mod2(exponent_matrix(p));
    CHECK(systems.size() == (std::size_t{1} << (p.num_generators() - r)));
  }
}

TEST_CASE("feasible homomorphism table") {
  using L = std::vector<std::string>;
  CHECK(feasible_homs_2_1(5, 2) == L{"trivial", "beta2"});
  CHECK(feasible_homs_2_1(3, 3) == L{"trivial", "beta3"});
  CHECK(feasible_homs_2_1(2, 3) == L{"trivial", "beta1"});
  CHECK(feasible_homs_2_1(2, 2) == L{"trivial", "beta1", "beta2", "beta3"});
  CHECK(feasible_homs_2_1(-4, 0) == L{"trivial", "beta1", "beta2", "beta3"});
}

TEST_CASE("enumeration matches the feasible table on two generators") {
  std::mt19937 rng(99);
  auto const   xy = oracle::alphabet_of_size(2);
  for (int iter = 0; iter < 500; ++iter) {
    auto const r = oracle::random_word(rng, xy, 12);
    if (r.is_identity()) {
      continue;
    }
    Presentation const p(xy, {r});
    auto               got  = labels_of(enumerate_systems(p));
    auto               want = feasible_homs_2_1(exponent_sum(r, 0), exponent_sum(r, 1));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("F2 rank") {
  CHECK(rank_mod2(IntMatrix{{2, 4}, {6, 8}}) == 0);
  CHECK(rank_mod2(IntMatrix{{1, 1}, {3, -1}}) == 1);
  CHECK(rank_mod2(IntMatrix{{1, 0}, {0, 1}}) == 2);
  CHECK(rank_mod2(IntMatrix(0, 3)) == 0);
}

TEST_CASE("sign assignment text") {
  auto const p = parse_presentation("< x, y | >");
  auto const& g = p.generators();
  CHECK(parse_sign_assignment(g, "x=-1, y=+") == SignAssignment{M, P});
  CHECK(parse_sign_assignment(g, "y=-") == SignAssignment{P, M});
  CHECK(parse_sign_assignment(g, "") == SignAssignment{P, P});
  CHECK(parse_sign_assignment(g, " x = - , y=1 ") == SignAssignment{M, P});
  CHECK_THROWS_AS(parse_sign_assignment(g, "z=-1"), Error);
  CHECK_THROWS_AS(parse_sign_assignment(g, "x=-1,x=+1"), Error);
  CHECK_THROWS_AS(parse_sign_assignment(g, "x=2"), Error);
  CHECK_THROWS_AS(parse_sign_assignment(g, "x"), Error);
  CHECK(format_sign_assignment(g, {P, M}) == "x=+1, y=-1");
  CHECK(parse_sign_assignment(g, format_sign_assignment(g, {M, M})) == SignAssignment{M, M});
}
