#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sparsenerve {

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
/// Unlike std::uniform_real_distribution this is identical across standard libraries.
inline double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// n points uniform in [0,1)^dim, drawn coordinate by coordinate, point by point, from
/// mt19937_64 seeded with `seed`. The first m points of a larger sample equal the
/// m-point sample for the same seed.
inline std::vector<std::vector<double>> uniform_cube_points(std::size_t n, std::size_t dim,
                                                            std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
  for (auto& row : rows)
    for (auto& c : row) c = unit_uniform(gen);
  return rows;
}

}  // namespace sparsenerve
