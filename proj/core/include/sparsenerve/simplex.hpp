#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sparsenerve {

using Vertex = std::uint32_t;

/// A finite nonempty set of points, stored as a strictly increasing vertex list.
///
/// Ordering is the lexicographic order induced by the input point order:
/// vertex lists are compared element-wise and a proper prefix sorts first.
class Simplex {
 public:
  Simplex() = default;

  /// Takes ownership of an already sorted, duplicate-free list.
  /// Throws std::invalid_argument if the list is empty or not strictly increasing.
  explicit Simplex(std::vector<Vertex> sorted_vertices);
  Simplex(std::initializer_list<Vertex> sorted_vertices);

  /// Sorts and deduplicates an arbitrary vertex list.
  static Simplex from_unordered(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(Vertex v) const noexcept;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
};

/// True iff every vertex of `inner` is a vertex of `outer`. Linear merge scan.
bool is_subset(const Simplex& inner, const Simplex& outer) noexcept;

inline bool is_proper_subset(const Simplex& inner, const Simplex& outer) noexcept {
  return inner.size() < outer.size() && is_subset(inner, outer);
}

/// Common vertices of two simplices; may be empty.
std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b);

/// "[0,1,2]" style rendering used in reports and diagnostics.
std::string to_string(const Simplex& s);

/// Sorts lexicographically and removes duplicates.
void sort_unique(std::vector<Simplex>& simplices);

}  // namespace sparsenerve
