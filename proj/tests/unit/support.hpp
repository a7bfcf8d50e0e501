#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "sparsenerve/sparsenerve.hpp"

namespace testing {

using namespace sparsenerve;

// a=0, b=1, c=2 with d(a,b)=1, d(b,c)=2, d(a,c)=3.
inline MetricSpace line3() {
  return MetricSpace::from_table(3, {0, 1, 3, 1, 0, 2, 3, 2, 0});
}

inline MetricSpace on_line(const std::vector<double>& xs) {
  std::vector<std::vector<double>> rows;
  for (double x : xs) rows.push_back({x});
  return load_point_cloud(rows, Norm::l2);
}

inline MetricSpace random_planar(std::size_t n, std::uint64_t seed) {
  return load_point_cloud(uniform_cube_points(n, 2, seed), Norm::l2);
}

inline std::vector<Simplex> S(std::initializer_list<std::initializer_list<Vertex>> list) {
  std::vector<Simplex> out;
  for (auto s : list) out.emplace_back(s);
  return out;
}

}  // namespace testing
