#pragma once

#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsenerve/simplex.hpp"

namespace sparsenerve {

/// Malformed input text (bad number, ragged table, empty file).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parsed but does not describe a metric space.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Norm { l1, l2, linf };

std::optional<Norm> parse_norm(std::string_view name);

/// Relative tolerance for symmetry and triangle-inequality validation.
inline constexpr double kMetricTolerance = 1e-12;

/// A finite metric space on points 0..n-1 with a dense, exactly symmetric distance table.
/// Immutable after construction; construction validates all metric axioms.
class MetricSpace {
 public:
  /// Validates a row-major n*n table. Asymmetry and triangle violations up to
  /// kMetricTolerance * (max entry) are accepted; the upper triangle is kept.
  static MetricSpace from_table(std::size_t n, std::vector<double> table,
                                std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  double operator()(Vertex i, Vertex j) const noexcept { return dist_[i * n_ + j]; }
  std::span<const double> row(Vertex i) const noexcept { return {dist_.data() + i * n_, n_}; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  double max_distance() const noexcept { return max_; }

  /// Largest pairwise distance among the simplex vertices (0 for a vertex).
  double diameter(const Simplex& s) const noexcept;
  double diameter(std::span<const Vertex> vertices) const noexcept;

  /// Distance from a point to the nearest vertex of a nonempty vertex set.
  double distance_to(Vertex y, std::span<const Vertex> set) const noexcept;

  /// Re-checks every invariant exactly (symmetry, zero diagonal, positivity) and the
  /// triangle inequality within tolerance. Returns a description of the first violation.
  std::optional<std::string> check_invariants() const;

 private:
  MetricSpace() = default;

  std::size_t n_ = 0;
  std::vector<double> dist_;
  std::vector<std::string> labels_;
  double max_ = 0.0;
};

/// An edge of the Rips filtration with its radius-convention birth time dist/2.
struct BirthEdge {
  Vertex u;
  Vertex v;
  double birth;

  friend bool operator==(const BirthEdge&, const BirthEdge&) = default;
};

/// CSV distance matrix: n rows of n numbers, with an optional header row of labels.
MetricSpace load_distance_matrix(std::istream& in);

/// Distances between coordinate rows under the chosen norm.
/// Throws MetricError on ragged rows or duplicate points.
MetricSpace load_point_cloud(std::span<const std::vector<double>> rows, Norm norm);

/// CSV point cloud, one point per row, optional header row.
std::vector<std::vector<double>> read_point_rows(std::istream& in);

/// Points at distance <= r from x, ascending; always contains x.
std::vector<Vertex> ball(const MetricSpace& m, Vertex x, double r);

/// All n(n-1)/2 edges sorted by birth, ties broken by (u, v).
std::vector<BirthEdge> rips_edges(const MetricSpace& m);

/// Sorted distinct birth values of rips_edges(m).
std::vector<double> distinct_births(std::span<const BirthEdge> edges);

}  // namespace sparsenerve
