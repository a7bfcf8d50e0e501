#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_SUITE("metric") {
  TEST_CASE("simplex ordering and subsets") {
    CHECK(Simplex{0, 1} < Simplex{0, 1, 2});
    CHECK(Simplex{0, 2} > Simplex{0, 1, 2});
    CHECK(is_subset(Simplex{1}, Simplex{0, 1}));
    CHECK_FALSE(is_proper_subset(Simplex{0, 1}, Simplex{0, 1}));
    CHECK(Simplex::from_unordered({3, 1, 3, 2}) == Simplex{1, 2, 3});
    CHECK_THROWS_AS(Simplex({2, 1}), std::invalid_argument);
    CHECK(to_string(Simplex{0, 4}) == "[0,4]");
    CHECK(intersect(Simplex{0, 1, 3}.vertices(), Simplex{1, 2, 3}.vertices()) ==
          std::vector<Vertex>{1, 3});
  }

  TEST_CASE("matrix loader accepts csv, whitespace and a header row") {
    std::istringstream csv("a,b,c\n0,1,3\n1,0,2\n3,2,0\n");
    const auto m = load_distance_matrix(csv);
    CHECK(m.size() == 3);
    CHECK(m(0, 2) == 3.0);
    CHECK(m.labels() == std::vector<std::string>{"a", "b", "c"});

    std::istringstream ws("# comment\n0 1e0\n1.0 0\n");
    CHECK(load_distance_matrix(ws)(1, 0) == 1.0);
  }

  TEST_CASE("matrix loader rejects malformed input") {
    std::istringstream ragged("0,1\n1\n");
    CHECK_THROWS_AS(load_distance_matrix(ragged), ParseError);
    std::istringstream bad("0,x\n1,0\n");
    CHECK_THROWS_AS(load_distance_matrix(bad), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(load_distance_matrix(empty), ParseError);
  }

  TEST_CASE("metric validation") {
    CHECK_THROWS_AS(MetricSpace::from_table(2, {0, 1, 2, 0}), MetricError);
    CHECK_THROWS_AS(MetricSpace::from_table(2, {0, 0, 0, 0}), MetricError);
    CHECK_THROWS_AS(MetricSpace::from_table(2, {0, -1, -1, 0}), MetricError);
    CHECK_THROWS_AS(MetricSpace::from_table(2, {1, 1, 1, 0}), MetricError);
    CHECK_THROWS_AS(MetricSpace::from_table(3, {0, 1, 5, 1, 0, 1, 5, 1, 0}), MetricError);
    // Asymmetry within relative tolerance is accepted and symmetrized.
    const auto m = MetricSpace::from_table(2, {0, 1, 1 + 1e-14, 0});
    CHECK(m(0, 1) == m(1, 0));
    CHECK_FALSE(m.check_invariants().has_value());
  }

  TEST_CASE("point clouds under each norm") {
    const std::vector<std::vector<double>> rows{{0, 0}, {3, 4}};
    CHECK(load_point_cloud(rows, Norm::l2)(0, 1) == doctest::Approx(5.0));
    CHECK(load_point_cloud(rows, Norm::l1)(0, 1) == 7.0);
    CHECK(load_point_cloud(rows, Norm::linf)(0, 1) == 4.0);
    const std::vector<std::vector<double>> dup{{1, 1}, {1, 1}};
    CHECK_THROWS_AS(load_point_cloud(dup, Norm::l2), MetricError);
    const std::vector<std::vector<double>> ragged{{1, 1}, {1}};
    CHECK_THROWS_AS(load_point_cloud(ragged, Norm::l2), MetricError);
    CHECK(parse_norm("linf") == Norm::linf);
    CHECK_FALSE(parse_norm("l3").has_value());
  }

  TEST_CASE("balls and births on LINE3") {
    const auto m = line3();
    CHECK(ball(m, 1, 1.0) == std::vector<Vertex>{0, 1});
    CHECK(ball(m, 0, 0.0) == std::vector<Vertex>{0});
    CHECK(ball(m, 1, 2.0) == std::vector<Vertex>{0, 1, 2});
    const auto edges = rips_edges(m);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == BirthEdge{0, 1, 0.5});
    CHECK(edges[1] == BirthEdge{1, 2, 1.0});
    CHECK(edges[2] == BirthEdge{0, 2, 1.5});
    CHECK(distinct_births(edges) == std::vector<double>{0.5, 1.0, 1.5});
  }

  TEST_CASE("balls grow with the radius") {
    const auto m = random_planar(30, 3);
    for (Vertex x = 0; x < 30; x += 7)
      for (double r = 0.05; r < 1.0; r += 0.1) {
        const auto small = ball(m, x, r);
        const auto large = ball(m, x, r * 1.5);
        CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
      }
  }
}
