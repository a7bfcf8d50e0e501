#include "sparsenerve/covering.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace sparsenerve {

namespace {

// Fixed-width bitset over local vertex positions 0..size-1.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
    return r;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Bron-Kerbosch with Tomita pivoting on local positions.
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(std::vector<Bits> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<Bits> run(const Bits& r, const Bits& p, const Bits& x) {
    out_.clear();
    expand(r, p, x);
    return std::move(out_);
  }

 private:
  void expand(Bits r, Bits p, Bits x) {
    if (p.none()) {
      if (x.none()) out_.push_back(std::move(r));
      return;
    }
    // Pivot maximizing |P ∩ N(u)|; lowest position wins ties.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      const std::size_t c = p.count_and(adj_[u]);
      if (!have || c > best || (c == best && u < pivot)) {
        pivot = u;
        best = c;
        have = true;
      }
    };
    p.for_each(consider);
    x.for_each(consider);

    const Bits branch = p.minus(adj_[pivot]);
    branch.for_each([&](std::size_t v) {
      Bits r2 = r;
      r2.set(v);
      expand(std::move(r2), p & adj_[v], x & adj_[v]);
      p.reset(v);
      x.set(v);
    });
  }

  std::vector<Bits> adj_;
  std::vector<Bits> out_;
};

std::vector<Bits> local_adjacency(std::span<const Vertex> vertices,
                                  const std::function<bool(Vertex, Vertex)>& adjacent) {
  const std::size_t m = vertices.size();
  std::vector<Bits> adj(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (adjacent(vertices[a], vertices[b])) {
        adj[a].set(b);
        adj[b].set(a);
      }
  return adj;
}

Simplex to_simplex(const Bits& bits, std::span<const Vertex> vertices) {
  std::vector<Vertex> vs;
  bits.for_each([&](std::size_t i) { vs.push_back(vertices[i]); });
  return Simplex::from_unordered(std::move(vs));
}

void check_vertices(std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("clique enumeration: duplicate vertices");
}

}  // namespace

Packing greedy_packing(const MetricSpace& m, std::span<const Vertex> subset, double alpha,
                       Vertex seed) {
  if (!std::binary_search(subset.begin(), subset.end(), seed))
    throw std::invalid_argument("greedy_packing: seed is not in the target set");
  if (alpha < 0.0) throw std::invalid_argument("greedy_packing: alpha must be nonnegative");

  Packing out{alpha, seed, {seed}};
  for (Vertex z : subset) {
    if (z == seed) continue;
    const auto row = m.row(z);
    const bool far = std::all_of(out.members.begin(), out.members.end(),
                                 [&](Vertex w) { return row[w] > alpha; });
    if (far) out.members.push_back(z);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<Simplex> maximal_cliques(std::span<const Vertex> vertices,
                                     const std::function<bool(Vertex, Vertex)>& adjacent) {
  check_vertices(vertices);
  const std::size_t m = vertices.size();
  if (m == 0) return {};
  Bits all(m);
  for (std::size_t i = 0; i < m; ++i) all.set(i);
  CliqueEnumerator bk(local_adjacency(vertices, adjacent));
  std::vector<Simplex> out;
  for (const auto& c : bk.run(Bits(m), all, Bits(m))) out.push_back(to_simplex(c, vertices));
  sort_unique(out);
  return out;
}

std::vector<Simplex> maximal_cliques_containing(
    std::span<const Vertex> vertices, const std::function<bool(Vertex, Vertex)>& adjacent,
    Vertex root) {
  check_vertices(vertices);
  const auto it = std::find(vertices.begin(), vertices.end(), root);
  if (it == vertices.end()) throw std::invalid_argument("clique root is not a vertex");
  const auto pos = static_cast<std::size_t>(it - vertices.begin());
  auto adj = local_adjacency(vertices, adjacent);
  Bits r(vertices.size());
  r.set(pos);
  const Bits p = adj[pos];
  CliqueEnumerator bk(std::move(adj));
  std::vector<Simplex> out;
  for (const auto& c : bk.run(r, p, Bits(vertices.size())))
    out.push_back(to_simplex(c, vertices));
  sort_unique(out);
  return out;
}

CoverSet build_cover_set(const MetricSpace& m, Vertex x, double r, double eps) {
  if (!(r > 0.0)) throw std::invalid_argument("build_cover_set: radius must be positive");
  if (!(eps > 0.0)) throw std::invalid_argument("build_cover_set: epsilon must be positive");

  const double slack = r * eps / 2.0;
  // 2r(1 + eps/2), written with the same rounded slack used for the expansion.
  const double threshold = 2.0 * r + 2.0 * slack;

  const auto region = ball(m, x, 2.0 * r);
  const auto packing = greedy_packing(m, region, slack, x);
  const auto& w = packing.members;
  const std::size_t size = w.size();

  std::vector<Bits> adj(size, Bits(size));
  std::size_t root = 0;
  for (std::size_t a = 0; a < size; ++a) {
    if (w[a] == x) root = a;
    for (std::size_t b = a + 1; b < size; ++b)
      if (m(w[a], w[b]) <= threshold) {
        adj[a].set(b);
        adj[b].set(a);
      }
  }
  Bits seed(size);
  seed.set(root);
  const Bits candidates = adj[root];
  CliqueEnumerator bk(std::move(adj));
  const auto gamma = bk.run(seed, candidates, Bits(size));

  // near[y] = packing members within slack of y.
  std::vector<Bits> near(region.size(), Bits(size));
  for (std::size_t i = 0; i < region.size(); ++i) {
    const auto row = m.row(region[i]);
    for (std::size_t a = 0; a < size; ++a)
      if (row[w[a]] <= slack) near[i].set(a);
  }

  CoverSet out{x, r, {}, size};
  out.cliques.reserve(gamma.size());
  for (const auto& sigma : gamma) {
    std::vector<Vertex> expanded;
    for (std::size_t i = 0; i < region.size(); ++i)
      if (near[i].intersects(sigma)) expanded.push_back(region[i]);
    out.cliques.emplace_back(std::move(expanded));
  }
  sort_unique(out.cliques);
  return out;
}

}  // namespace sparsenerve
