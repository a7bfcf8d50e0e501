#include "sparsenerve/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparsenerve {

Simplex::Simplex(std::vector<Vertex> sorted_vertices) : vertices_(std::move(sorted_vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex must be nonempty");
  if (std::adjacent_find(vertices_.begin(), vertices_.end(), std::greater_equal<>()) !=
      vertices_.end())
    throw std::invalid_argument("simplex vertices must be strictly increasing");
}

Simplex::Simplex(std::initializer_list<Vertex> sorted_vertices)
    : Simplex(std::vector<Vertex>(sorted_vertices)) {}

Simplex Simplex::from_unordered(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Simplex(std::move(vertices));
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool is_subset(const Simplex& inner, const Simplex& outer) noexcept {
  if (inner.size() > outer.size()) return false;
  auto o = outer.begin();
  for (Vertex v : inner) {
    while (o != outer.end() && *o < v) ++o;
    if (o == outer.end() || *o != v) return false;
    ++o;
  }
  return true;
}

std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.vertices()[i]);
  }
  out += ']';
  return out;
}

void sort_unique(std::vector<Simplex>& simplices) {
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
}

}  // namespace sparsenerve
