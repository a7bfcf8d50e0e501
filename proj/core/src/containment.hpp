#pragma once

// Inverted vertex index for superset queries over a growing list of simplices.

#include <cstdint>
#include <span>
#include <vector>

#include "sparsenerve/simplex.hpp"

namespace sparsenerve::detail {

class ContainmentIndex {
 public:
  ContainmentIndex() = default;
  explicit ContainmentIndex(std::span<const Simplex> simplices) {
    for (const auto& s : simplices) add(s);
  }

  /// The referenced simplex must outlive the index.
  std::uint32_t add(const Simplex& s) {
    const auto id = static_cast<std::uint32_t>(items_.size());
    items_.push_back(&s);
    for (Vertex v : s) {
      if (v >= postings_.size()) postings_.resize(v + 1);
      postings_[v].push_back(id);
    }
    return id;
  }

  std::size_t size() const noexcept { return items_.size(); }
  const Simplex& operator[](std::uint32_t id) const { return *items_[id]; }

  /// Calls f(id) for every indexed simplex that contains `s` (including equal ones),
  /// in insertion order. Stops early when f returns true; returns whether it did.
  template <class F>
  bool find_superset(const Simplex& s, F&& f) const {
    const std::vector<std::uint32_t>* shortest = nullptr;
    for (Vertex v : s) {
      if (v >= postings_.size() || postings_[v].empty()) return false;
      if (!shortest || postings_[v].size() < shortest->size()) shortest = &postings_[v];
    }
    if (!shortest) return false;
    for (auto id : *shortest) {
      const Simplex& candidate = *items_[id];
      if (candidate.size() >= s.size() && is_subset(s, candidate) && f(id)) return true;
    }
    return false;
  }

  bool has_superset(const Simplex& s) const {
    return find_superset(s, [](std::uint32_t) { return true; });
  }

  bool has_proper_superset(const Simplex& s) const {
    return find_superset(s, [&](std::uint32_t id) { return items_[id]->size() > s.size(); });
  }

 private:
  std::vector<const Simplex*> items_;
  std::vector<std::vector<std::uint32_t>> postings_;
};

}  // namespace sparsenerve::detail
