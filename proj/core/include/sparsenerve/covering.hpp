#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sparsenerve/metric.hpp"
#include "sparsenerve/simplex.hpp"

namespace sparsenerve {

/// An alpha-packing W of a target set Y: every point of Y lies within alpha of W,
/// and distinct members of W are at distance >= alpha.
struct Packing {
  double alpha = 0.0;
  Vertex seed = 0;
  std::vector<Vertex> members;  // ascending
};

/// Greedy packing seeded at `seed`: visits the rest of `subset` in ascending order and
/// keeps a point iff its distance to the current members exceeds alpha.
/// `subset` must be sorted ascending; throws std::invalid_argument if seed is not in it.
Packing greedy_packing(const MetricSpace& m, std::span<const Vertex> subset, double alpha,
                       Vertex seed);

/// Maximal cliques of an undirected graph on `vertices` (pivoting Bron-Kerbosch).
/// Isolated vertices come back as singletons. Output is sorted lexicographically.
std::vector<Simplex> maximal_cliques(std::span<const Vertex> vertices,
                                     const std::function<bool(Vertex, Vertex)>& adjacent);

/// Only the maximal cliques that contain `root` (which must be in `vertices`).
std::vector<Simplex> maximal_cliques_containing(
    std::span<const Vertex> vertices, const std::function<bool(Vertex, Vertex)>& adjacent,
    Vertex root);

/// S(x, r): a small set of cliques of the Rips complex at r(1+eps), each containing x,
/// that covers every Rips simplex at r through x.
struct CoverSet {
  Vertex anchor = 0;
  double radius = 0.0;
  std::vector<Simplex> cliques;  // deduplicated, lexicographic
  std::size_t packing_size = 0;  // |W|, reported for stats
};

/// Builds S(x, r):
///   W     = greedy (r*eps/2)-packing of ball(x, 2r) seeded at x,
///   Gamma = maximal cliques through x of the graph on W with edges of length <= 2r(1+eps/2),
///   each clique sigma is expanded to {y in ball(x, 2r) : dist(y, sigma) <= r*eps/2}.
/// Throws std::invalid_argument unless r > 0 and eps > 0.
CoverSet build_cover_set(const MetricSpace& m, Vertex x, double r, double eps);

}  // namespace sparsenerve
