#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::vector<Simplex>> members_of(const Presentation& p, std::uint32_t dim) {
  std::vector<std::vector<Simplex>> out;
  for (const auto& g : p.generators) {
    if (g.dim != dim) continue;
    std::vector<Simplex> ms;
    for (auto c : g.members) ms.push_back(p.cells[c]);
    out.push_back(std::move(ms));
  }
  return out;
}

const Simplex& cell_of_generator(const Presentation& p, std::uint32_t g) {
  return p.cells[p.generators[g].members.front()];
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("grade order and join") {
    const Grade a{2, 1.0}, b{1, 1.5};
    CHECK(a.leq(b));
    CHECK_FALSE(b.leq(a));
    CHECK(join(a, Grade{3, 0.5}) == Grade{2, 1.0});
    CHECK(join(Grade{3, 0.5}, b) == Grade{1, 1.5});
  }

  TEST_CASE("LINE3 absorption relations") {
    const auto seq = incremental_maximal(build_sparse_filtration(line3(), 0.5));
    REQUIRE(seq.new_maximal.size() == 4);
    CHECK(seq.new_maximal[0] == S({{0}, {1}, {2}}));
    CHECK(seq.new_maximal[1] == S({{0, 1}}));
    CHECK(seq.new_maximal[2] == S({{1, 2}}));
    CHECK(seq.new_maximal[3] == S({{0, 1, 2}}));
    REQUIRE(seq.dominations.size() == 5);
    const std::vector<std::tuple<Simplex, Simplex, Grade>> expected{
        {Simplex{0}, Simplex{0, 1}, {1, 0.5}},     {Simplex{1}, Simplex{0, 1}, {1, 0.5}},
        {Simplex{2}, Simplex{1, 2}, {1, 1.0}},     {Simplex{0, 1}, Simplex{0, 1, 2}, {2, 1.5}},
        {Simplex{1, 2}, Simplex{0, 1, 2}, {2, 1.5}}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(seq.dominations[i].dominated == std::get<0>(expected[i]));
      CHECK(seq.dominations[i].absorber == std::get<1>(expected[i]));
      CHECK(seq.dominations[i].grade == std::get<2>(expected[i]));
    }
  }

  TEST_CASE("LINE3 presentation has size 12") {
    const auto p = build_presentation(line3(), 0.5, 1);
    CHECK(p.generators.size() == 7);
    CHECK(p.relations.size() == 5);
    CHECK(presentation_size(p) == 12);
    const auto g1 = members_of(p, 1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == S({{0, 1}, {1, 2}}));
    for (const auto& g : p.generators)
      if (g.dim == 1) CHECK(g.grade == Grade{1, 1.0});
    CHECK(members_of(p, 0).size() == 6);
  }

  TEST_CASE("skeleton zero and tiny spaces") {
    const auto p0 = build_presentation(line3(), 0.5, 0);
    CHECK(p0.generators.size() == 6);
    CHECK(presentation_size(build_presentation(MetricSpace::from_table(1, {0}), 0.5, 3)) == 1);
    const auto two = build_presentation(on_line({0, 2}), 0.5, 0);
    CHECK(presentation_size(two) == 5);
    REQUIRE(two.relations.size() == 2);
    CHECK(two.relations[0].grade == Grade{1, 1.0});
    CHECK_THROWS_AS(build_presentation(line3(), 0.5, -1), std::invalid_argument);
  }

  TEST_CASE("equidistant points give one maximal simplex and no pairs") {
    const auto m = MetricSpace::from_table(4, {0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0});
    const auto p = build_presentation(m, 0.1, 1);
    CHECK(members_of(p, 1).empty());
    CHECK(members_of(p, 0).back() == S({{0, 1, 2, 3}}));
  }

  TEST_CASE("LINE3 reconstruction") {
    const auto p = build_presentation(line3(), 0.5, 1);
    const auto at11 = reconstruct_complex(p, {1, 1.0});
    CHECK(at11.classes.size() == 2);
    CHECK(at11.faces.size() == 3);
    CHECK(labeled_faces(at11) ==
          std::set<std::vector<Simplex>>{S({{0, 1}}), S({{1, 2}}), S({{0, 1}, {1, 2}})});

    const auto at21 = reconstruct_complex(p, {2, 1.0});
    CHECK(labeled_faces(at21) == std::set<std::vector<Simplex>>{S({{0, 1}}), S({{1, 2}})});
    CHECK(reconstruct_complex(p, {4, 0.0}).faces.empty());
  }

  TEST_CASE("generators and relations are well graded") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto m = random_planar(14, 40 + seed);
      const auto p = build_presentation(m, 0.3, 2);
      for (const auto& g : p.generators) {
        std::vector<Vertex> common(p.cells[g.members.front()].begin(),
                                   p.cells[g.members.front()].end());
        for (auto c : g.members) common = intersect(common, p.cells[c].vertices());
        CHECK(g.grade.mult == common.size());
        CHECK(g.members.size() == g.dim + 1);
      }
      for (const auto& r : p.relations) {
        const auto& src = cell_of_generator(p, r.src);
        const auto& dst = cell_of_generator(p, r.dst);
        CHECK(is_proper_subset(src, dst));
        CHECK(r.grade == join(p.generators[r.src].grade, p.generators[r.dst].grade));
        // No earlier proper superset, and the absorber is the least one at its radius.
        for (const auto& g : p.generators) {
          if (g.dim != 0) continue;
          const auto& tau = p.cells[g.members.front()];
          if (!is_proper_subset(src, tau)) continue;
          CHECK(g.grade.radius >= p.generators[r.dst].grade.radius);
          if (g.grade.radius == p.generators[r.dst].grade.radius) CHECK(dst <= tau);
        }
      }
    }
  }

  TEST_CASE("reconstruction matches the brute nerve") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto m = random_planar(12, 60 + seed);
      const int k = static_cast<int>(seed % 3);
      const auto f = build_sparse_filtration(m, 0.25);
      const auto p = present(f, k);
      for (std::size_t i = 0; i < f.steps.size(); ++i) {
        std::size_t largest = 0;
        for (const auto& s : f.steps[i].maximal) largest = std::max(largest, s.size());
        for (std::uint32_t mult = 1; mult <= largest + 1; ++mult) {
          const auto mine = labeled_faces(reconstruct_complex(p, {mult, f.grid.at(i)}));
          const auto brute = oracle::labeled_faces(oracle::brute_nerve(
              f.steps[i].maximal, static_cast<int>(mult), static_cast<std::size_t>(k) + 1));
          CHECK(mine == brute);
        }
      }
    }
  }

  TEST_CASE("non-degenerate generators stay faces at smaller grades") {
    const auto m = random_planar(12, 77);
    const auto p = build_presentation(m, 0.25, 1);
    auto non_degenerate = [&](const Generator& g, const Grade& at) {
      const auto rc = reconstruct_complex(p, at);
      std::vector<std::size_t> class_of(p.cells.size(), 0);
      for (std::size_t c = 0; c < rc.classes.size(); ++c)
        for (auto cell : rc.classes[c]) class_of[cell] = c;
      std::set<std::size_t> seen;
      for (auto cell : g.members) seen.insert(class_of[cell]);
      return seen.size() == g.members.size();
    };
    std::size_t checked = 0;
    for (const auto& g : p.generators) {
      if (g.dim == 0) continue;
      for (std::size_t i = 0; i <= p.grid.size(); ++i) {
        const Grade hi{g.grade.mult, p.grid.at(i)};
        if (!g.grade.leq(hi) || !non_degenerate(g, hi)) continue;
        for (std::size_t j = 0; j <= i; ++j)
          for (std::uint32_t mult = hi.mult; mult <= g.grade.mult; ++mult) {
            const Grade lo{mult, p.grid.at(j)};
            if (!g.grade.leq(lo)) continue;
            CHECK(non_degenerate(g, lo));
            ++checked;
          }
      }
      if (checked > 400) break;
    }
    CHECK(checked > 0);
  }

  TEST_CASE("counting path agrees with materialized presentation") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto m = random_planar(25 + 5 * seed, seed);
      const int k = static_cast<int>(seed % 3);
      const auto f = build_sparse_filtration(m, 0.5);
      const auto p = present(f, k);
      const auto c = count_presentation(f, k);
      CHECK(c.generators_by_dim == p.stats.generators_by_dim);
      CHECK(c.relations == p.relations.size());
      CHECK(c.size() == p.size());
      CHECK(c.max_maximal == p.stats.max_maximal);
    }
  }

  TEST_CASE("generator counts match the oracle") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto m = random_planar(15, 90 + seed);
      const auto f = build_sparse_filtration(m, 0.5);
      std::vector<std::vector<Simplex>> steps;
      for (const auto& s : f.steps) steps.push_back(s.maximal);
      CHECK(oracle::count_nerve_sets(steps, 2) == present(f, 2).stats.generators_by_dim);
    }
  }

  TEST_CASE("serialization") {
    const auto p = build_presentation(line3(), 0.5, 1);
    std::ostringstream json;
    write_presentation_json(json, p);
    CHECK(json.str().find("\"size\":12") != std::string::npos);
    CHECK(json.str().back() == '\n');
    std::ostringstream text;
    write_presentation_text(text, p);
    CHECK(text.str().rfind("# epsilon=0.5 n=3 k=1 size=12", 0) == 0);
    CHECK(format_number(0.1) == "0.1");
  }
}
