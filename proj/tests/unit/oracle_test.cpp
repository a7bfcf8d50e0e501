#include <doctest.h>

#include "support.hpp"

using namespace testing;
namespace oc = sparsenerve::oracle;

TEST_SUITE("oracle") {
  TEST_CASE("brute Rips examples") {
    const auto m = line3();
    const auto half = oc::brute_rips(m, 0.5, 2);
    CHECK(half.simplices == S({{0}, {1}, {2}, {0, 1}}));
    CHECK(oc::brute_rips(m, 0.1, 2).simplices == S({{0}, {1}, {2}}));
    const auto full = oc::brute_rips(m, 1.5, 2);
    CHECK(full.count(2) == 1);
    CHECK(full.is_face_closed());
    CHECK(full.euler_characteristic() == 1);
  }

  TEST_CASE("brute maximal cliques") {
    const auto m = line3();
    CHECK(oc::brute_maximal_cliques_rips(m, 1.0) == S({{0, 1}, {1, 2}}));
    CHECK(oc::brute_maximal_cliques_rips(m, 0.0) == S({{0}, {1}, {2}}));
    CHECK(oc::brute_maximal_cliques_rips(m, 1.5) == S({{0, 1, 2}}));
  }

  TEST_CASE("brute Rips agrees with its maximal cliques") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto m = random_planar(12, seed);
      const double r = 0.1 + 0.04 * static_cast<double>(seed);
      const auto cliques = oc::brute_maximal_cliques_rips(m, r);
      std::size_t largest = 0;
      for (const auto& c : cliques) largest = std::max(largest, c.size());
      const auto rips = oc::brute_rips(m, r, static_cast<int>(largest));
      for (const auto& s : rips.simplices)
        CHECK(std::any_of(cliques.begin(), cliques.end(),
                          [&](const Simplex& c) { return is_subset(s, c); }));
      for (const auto& c : cliques)
        CHECK(std::binary_search(rips.simplices.begin(), rips.simplices.end(), c,
                                 [](const Simplex& a, const Simplex& b) {
                                   if (a.size() != b.size()) return a.size() < b.size();
                                   return a < b;
                                 }));
    }
  }

  TEST_CASE("subdivision examples") {
    const auto edge = oc::closure(S({{0, 1}}), 1);
    const auto sd = oc::subdivision_level(edge, 1, 2);
    CHECK(sd.count(0) == 3);
    CHECK(sd.count(1) == 2);
    CHECK(oc::subdivision_level(edge, 3, 2).simplices.empty());

    const auto boundary = oc::closure(S({{0, 1}, {0, 2}, {1, 2}}), 1);
    const auto level2 = oc::subdivision_level(boundary, 2, 2);
    CHECK(level2.count(0) == 3);
    CHECK(level2.count(1) == 0);
  }

  TEST_CASE("first subdivision level preserves Euler characteristic") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto m = random_planar(7, 300 + seed);
      const auto cliques = oc::brute_maximal_cliques_rips(m, 0.15 + 0.05 * seed);
      const auto l = oc::closure(cliques, 6);
      const auto sd = oc::subdivision_level(l, 1, 7);
      CHECK(sd.count(0) == l.simplices.size());
      CHECK(sd.euler_characteristic() == l.euler_characteristic());
      CHECK(sd.is_face_closed());
    }
  }

  TEST_CASE("flags are chains") {
    const auto tri = oc::closure(S({{0, 1, 2}}), 2);
    const auto flags = oc::enumerate_flags(tri, 1, 3);
    // 7 singletons, 12 two-chains, 6 full chains.
    CHECK(flags.size() == 25);
    for (const auto& f : flags)
      for (std::size_t i = 0; i + 1 < f.chain.size(); ++i)
        CHECK(is_proper_subset(f.chain[i], f.chain[i + 1]));
  }

  TEST_CASE("brute nerve examples") {
    const auto pair = S({{0, 1}, {1, 2}});
    CHECK(oc::brute_nerve(pair, 1, 3).count(1) == 1);
    const auto two = oc::brute_nerve(pair, 2, 3);
    CHECK(two.count(0) == 2);
    CHECK(two.count(1) == 0);
    CHECK(oc::brute_nerve(S({{0, 1, 2}}), 3, 3).count(0) == 1);
    CHECK(oc::brute_nerve(S({{0, 1, 2}}), 4, 3).simplices.empty());
  }

  TEST_CASE("betti numbers") {
    CHECK(oc::betti_gf2(oc::closure(S({{0}}), 2), 1) == std::vector<std::size_t>{1, 0});
    CHECK(oc::betti_gf2(oc::closure(S({{0, 1}, {0, 2}, {1, 2}}), 2), 1) ==
          std::vector<std::size_t>{1, 1});
    CHECK(oc::betti_gf2(oc::closure(S({{0, 1, 2}}), 2), 1) == std::vector<std::size_t>{1, 0});
    const auto sphere = oc::closure(S({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), 3);
    CHECK(oc::betti_gf2(sphere, 2) == std::vector<std::size_t>{1, 0, 1});
    CHECK_THROWS_AS(oc::betti_gf2(oc::closure(S({{0, 1}}), 1), 1), std::invalid_argument);
  }

  TEST_CASE("cover lemma check finds a dropped clique") {
    const auto m = line3();
    CHECK(oc::check_cover_lemma(m, 0, 0.1, 0.5, build_cover_set(m, 0, 0.1, 0.5)).passed);
    auto cover = build_cover_set(m, 1, 1.0, 0.5);
    apply_mutation(cover, CoverMutation::drop_cover);
    const auto check = oc::check_cover_lemma(m, 1, 1.0, 0.5, cover);
    CHECK_FALSE(check.passed);
    REQUIRE(check.uncovered.has_value());
    CHECK(*check.uncovered == Simplex{0, 1});
  }

  TEST_CASE("budgets fail loudly") {
    const auto m = random_planar(20, 1);
    CHECK_THROWS_AS(oc::brute_rips(m, 10.0, 10, {100}), oc::BudgetExceeded);
    CHECK_THROWS_AS(oc::closure(S({{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}), 9, {50}),
                    oc::BudgetExceeded);
  }

  TEST_CASE("nerve set counts on LINE3") {
    const auto f = build_sparse_filtration(line3(), 0.5);
    std::vector<std::vector<Simplex>> steps;
    for (const auto& s : f.steps) steps.push_back(s.maximal);
    CHECK(oc::count_nerve_sets(steps, 1) == std::vector<std::size_t>{6, 1});
  }
}
