#include "sparsenerve/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>

#include "sparsenerve/filtration.hpp"

namespace sparsenerve::oracle {

namespace {

void charge(std::size_t& used, const Budget& budget, const char* what) {
  if (++used > budget.max_cells)
    throw BudgetExceeded(std::string(what) + ": more than " + std::to_string(budget.max_cells) +
                         " cells");
}

bool by_dimension(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void finish(ExplicitComplex& c) {
  std::sort(c.simplices.begin(), c.simplices.end(), by_dimension);
  c.simplices.erase(std::unique(c.simplices.begin(), c.simplices.end()), c.simplices.end());
}

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Vertex v : s) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

// Bron-Kerbosch over plain vectors, pivot on the largest candidate neighbourhood.
class CliqueSearch {
 public:
  CliqueSearch(std::function<bool(Vertex, Vertex)> adjacent, Budget budget)
      : adjacent_(std::move(adjacent)), budget_(budget) {}

  std::vector<Simplex> run(std::vector<Vertex> r, std::vector<Vertex> p) {
    out_.clear();
    search(r, std::move(p), {});
    sort_unique(out_);
    return std::move(out_);
  }

 private:
  std::vector<Vertex> neighbours_in(Vertex v, const std::vector<Vertex>& set) const {
    std::vector<Vertex> out;
    for (Vertex u : set)
      if (u != v && adjacent_(u, v)) out.push_back(u);
    return out;
  }

  void search(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty()) {
        charge(used_, budget_, "maximal cliques");
        out_.push_back(Simplex::from_unordered(r));
      }
      return;
    }
    Vertex pivot = p.front();
    std::size_t best = 0;
    bool first = true;
    for (const auto* set : {&p, &x})
      for (Vertex u : *set) {
        const std::size_t c = neighbours_in(u, p).size();
        if (first || c > best) {
          pivot = u;
          best = c;
          first = false;
        }
      }
    const std::vector<Vertex> branch = [&] {
      std::vector<Vertex> b;
      for (Vertex v : p)
        if (v == pivot || !adjacent_(v, pivot)) b.push_back(v);
      return b;
    }();
    for (Vertex v : branch) {
      r.push_back(v);
      search(r, neighbours_in(v, p), neighbours_in(v, x));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  std::function<bool(Vertex, Vertex)> adjacent_;
  Budget budget_;
  std::size_t used_ = 0;
  std::vector<Simplex> out_;
};

std::size_t symmetric_difference_into(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b,
                                      std::vector<std::uint32_t>& out) {
  out.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

}  // namespace

std::size_t ExplicitComplex::count(int dim) const {
  return static_cast<std::size_t>(std::count_if(
      simplices.begin(), simplices.end(),
      [&](const Simplex& s) { return s.size() == static_cast<std::size_t>(dim) + 1; }));
}

long long ExplicitComplex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

bool ExplicitComplex::is_face_closed() const {
  std::set<Simplex> present(simplices.begin(), simplices.end());
  for (const auto& s : simplices) {
    if (s.size() == 1) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s.vertices()[i]);
      if (!present.contains(Simplex(std::move(face)))) return false;
    }
  }
  return true;
}

ExplicitComplex brute_rips(const MetricSpace& m, double r, int dim_cap, Budget budget) {
  ExplicitComplex c;
  c.dim_cap = dim_cap;
  const double threshold = 2.0 * r;
  const auto n = static_cast<Vertex>(m.size());
  std::size_t used = 0;
  std::vector<Vertex> current;
  std::function<void(Vertex)> extend = [&](Vertex from) {
    charge(used, budget, "brute_rips");
    c.simplices.emplace_back(current);
    if (current.size() > static_cast<std::size_t>(dim_cap)) return;
    for (Vertex v = from; v < n; ++v) {
      const bool fits = std::all_of(current.begin(), current.end(),
                                    [&](Vertex u) { return m(u, v) <= threshold; });
      if (!fits) continue;
      current.push_back(v);
      extend(v + 1);
      current.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    current = {v};
    extend(v + 1);
  }
  finish(c);
  return c;
}

std::vector<Simplex> brute_maximal_cliques_rips(const MetricSpace& m, double r, Budget budget) {
  const double threshold = 2.0 * r;
  std::vector<Vertex> all(m.size());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  CliqueSearch search([&](Vertex a, Vertex b) { return m(a, b) <= threshold; }, budget);
  return search.run({}, std::move(all));
}

ExplicitComplex closure(std::span<const Simplex> generators, int dim_cap, Budget budget) {
  ExplicitComplex c;
  c.dim_cap = dim_cap;
  std::size_t estimate = 0;
  for (const auto& g : generators) {
    // Faces of g with at most dim_cap + 1 vertices, saturating at the budget.
    std::size_t faces = 0;
    std::size_t binom = 1;
    for (std::size_t size = 1; size <= g.size() && size <= static_cast<std::size_t>(dim_cap) + 1;
         ++size) {
      binom = binom * (g.size() - size + 1) / size;
      faces += binom;
      if (binom > budget.max_cells || faces > budget.max_cells) break;
    }
    estimate += faces;
    if (estimate > budget.max_cells)
      throw BudgetExceeded("closure: more than " + std::to_string(budget.max_cells) + " cells");
  }

  std::size_t used = 0;
  std::set<Simplex> seen;
  for (const auto& g : generators) {
    const auto verts = g.vertices();
    std::vector<Vertex> current;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      if (!current.empty() && seen.insert(Simplex(current)).second)
        charge(used, budget, "closure");
      if (current.size() > static_cast<std::size_t>(dim_cap)) return;
      for (std::size_t i = from; i < verts.size(); ++i) {
        current.push_back(verts[i]);
        extend(i + 1);
        current.pop_back();
      }
    };
    extend(0);
  }
  c.simplices.assign(seen.begin(), seen.end());
  finish(c);
  return c;
}

std::vector<Flag> enumerate_flags(const ExplicitComplex& l, int multiplicity,
                                  std::size_t max_length, Budget budget) {
  std::vector<const Simplex*> poset;
  for (const auto& s : l.simplices)
    if (s.size() >= static_cast<std::size_t>(std::max(multiplicity, 1))) poset.push_back(&s);
  std::sort(poset.begin(), poset.end(),
            [](const Simplex* a, const Simplex* b) { return by_dimension(*a, *b); });

  std::vector<std::vector<std::size_t>> above(poset.size());
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = a + 1; b < poset.size(); ++b)
      if (is_proper_subset(*poset[a], *poset[b])) above[a].push_back(b);

  std::vector<Flag> flags;
  std::size_t used = 0;
  std::vector<std::size_t> chain;
  std::function<void()> extend = [&] {
    charge(used, budget, "flags");
    Flag f;
    for (auto i : chain) f.chain.push_back(*poset[i]);
    flags.push_back(std::move(f));
    if (chain.size() >= max_length) return;
    for (auto b : above[chain.back()]) {
      chain.push_back(b);
      extend();
      chain.pop_back();
    }
  };
  for (std::size_t a = 0; a < poset.size(); ++a) {
    chain = {a};
    extend();
  }
  return flags;
}

ExplicitComplex subdivision_level(const ExplicitComplex& l, int multiplicity, int dim_cap,
                                  Budget budget) {
  ExplicitComplex c;
  c.dim_cap = dim_cap;
  for (const auto& s : l.simplices)
    if (s.size() >= static_cast<std::size_t>(std::max(multiplicity, 1))) c.labels.push_back(s);
  std::sort(c.labels.begin(), c.labels.end(), by_dimension);

  std::unordered_map<Simplex, Vertex, SimplexHash> index;
  for (Vertex i = 0; i < c.labels.size(); ++i) index.emplace(c.labels[i], i);

  const auto flags =
      enumerate_flags(l, multiplicity, static_cast<std::size_t>(dim_cap) + 1, budget);
  c.simplices.reserve(flags.size());
  for (const auto& f : flags) {
    std::vector<Vertex> ids;
    for (const auto& s : f.chain) ids.push_back(index.at(s));
    c.simplices.emplace_back(std::move(ids));
  }
  finish(c);
  return c;
}

ExplicitComplex brute_nerve(std::span<const Simplex> maximal, int multiplicity,
                            std::size_t size_cap, Budget budget) {
  ExplicitComplex c;
  c.dim_cap = static_cast<int>(size_cap) - 1;
  c.labels.assign(maximal.begin(), maximal.end());
  const auto need = static_cast<std::size_t>(std::max(multiplicity, 1));
  std::size_t used = 0;

  std::vector<Vertex> members;
  std::function<void(std::size_t, const std::vector<Vertex>&)> extend =
      [&](std::size_t from, const std::vector<Vertex>& common) {
        charge(used, budget, "nerve");
        c.simplices.emplace_back(members);
        if (members.size() >= size_cap) return;
        for (std::size_t i = from; i < maximal.size(); ++i) {
          auto next = intersect(common, maximal[i].vertices());
          if (next.size() < need) continue;
          members.push_back(static_cast<Vertex>(i));
          extend(i + 1, next);
          members.pop_back();
        }
      };
  if (size_cap > 0)
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if (maximal[i].size() < need) continue;
      members = {static_cast<Vertex>(i)};
      const std::vector<Vertex> common(maximal[i].begin(), maximal[i].end());
      extend(i + 1, common);
    }
  finish(c);
  return c;
}

std::set<std::vector<Simplex>> labeled_faces(const ExplicitComplex& c) {
  std::set<std::vector<Simplex>> out;
  for (const auto& s : c.simplices) {
    std::vector<Simplex> face;
    for (Vertex v : s) face.push_back(c.labels.at(v));
    std::sort(face.begin(), face.end());
    out.insert(std::move(face));
  }
  return out;
}

std::vector<std::size_t> betti_gf2(const ExplicitComplex& l, int max_dim, Budget budget) {
  if (l.dim_cap <= max_dim)
    throw std::invalid_argument("betti_gf2: complex must be stored through dimension max_dim+1");
  if (l.simplices.size() > budget.max_cells)
    throw BudgetExceeded("betti_gf2: complex has " + std::to_string(l.simplices.size()) +
                         " cells");

  const auto top = static_cast<std::size_t>(max_dim) + 1;
  std::vector<std::vector<const Simplex*>> cells(top + 1);
  for (const auto& s : l.simplices)
    if (s.size() - 1 <= top) cells[s.size() - 1].push_back(&s);

  std::vector<std::unordered_map<Simplex, std::uint32_t, SimplexHash>> index(top + 1);
  for (std::size_t d = 0; d <= top; ++d)
    for (std::uint32_t i = 0; i < cells[d].size(); ++i) index[d].emplace(*cells[d][i], i);

  // rank[d] = rank of the boundary map from d-cells to (d-1)-cells.
  std::vector<std::size_t> rank(top + 2, 0);
  std::vector<std::vector<bool>> cleared(top + 1);
  for (std::size_t d = 0; d <= top; ++d) cleared[d].assign(cells[d].size(), false);

  for (std::size_t d = top; d >= 1; --d) {
    std::vector<std::int64_t> owner(cells[d - 1].size(), -1);
    std::vector<std::vector<std::uint32_t>> reduced;
    std::vector<std::uint32_t> scratch;
    for (std::uint32_t c = 0; c < cells[d].size(); ++c) {
      if (cleared[d][c]) continue;
      const Simplex& s = *cells[d][c];
      std::vector<std::uint32_t> col;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s.vertices()[i]);
        const auto it = index[d - 1].find(Simplex(std::move(face)));
        if (it == index[d - 1].end())
          throw std::invalid_argument("betti_gf2: complex is not face-closed");
        col.push_back(it->second);
      }
      std::sort(col.begin(), col.end());
      while (!col.empty() && owner[col.back()] >= 0) {
        symmetric_difference_into(col, reduced[static_cast<std::size_t>(owner[col.back()])],
                                  scratch);
        col.swap(scratch);
      }
      if (!col.empty()) {
        owner[col.back()] = static_cast<std::int64_t>(reduced.size());
        cleared[d - 1][col.back()] = true;
        reduced.push_back(std::move(col));
        ++rank[d];
      }
    }
  }

  std::vector<std::size_t> betti(static_cast<std::size_t>(max_dim) + 1);
  for (std::size_t d = 0; d < betti.size(); ++d)
    betti[d] = cells[d].size() - rank[d] - rank[d + 1];
  return betti;
}

CoverCheck check_cover_lemma(const MetricSpace& m, Vertex x, double r, double eps,
                             const CoverSet& cover, Budget budget) {
  CoverCheck check;
  const double threshold = 2.0 * r;
  const double bound = 2.0 * inflate(r, eps) * (1.0 + kInterleavingSlack);

  for (const auto& c : cover.cliques)
    if (m.diameter(c) > bound || !c.contains(x)) {
      check.passed = false;
      check.too_wide = c;
      break;
    }

  std::vector<Vertex> neighbours;
  for (Vertex y = 0; y < m.size(); ++y)
    if (y != x && m(x, y) <= threshold) neighbours.push_back(y);
  CliqueSearch search([&](Vertex a, Vertex b) { return m(a, b) <= threshold; }, budget);
  for (const auto& clique : search.run({x}, std::move(neighbours))) {
    ++check.cliques_checked;
    const bool covered = std::any_of(cover.cliques.begin(), cover.cliques.end(),
                                     [&](const Simplex& t) { return is_subset(clique, t); });
    if (!covered) {
      check.passed = false;
      check.uncovered = clique;
      break;
    }
  }
  return check;
}

std::vector<std::size_t> count_nerve_sets(std::span<const std::vector<Simplex>> maximal_steps,
                                          int k, Budget budget) {
  std::set<std::vector<Simplex>> seen;
  std::size_t used = 0;
  for (const auto& step : maximal_steps) {
    std::vector<Simplex> members;
    std::function<void(std::size_t, const std::vector<Vertex>&)> extend =
        [&](std::size_t from, const std::vector<Vertex>& common) {
          if (seen.insert(members).second) charge(used, budget, "nerve sets");
          if (members.size() >= static_cast<std::size_t>(k) + 1) return;
          for (std::size_t i = from; i < step.size(); ++i) {
            auto next = intersect(common, step[i].vertices());
            if (next.empty()) continue;
            members.push_back(step[i]);
            extend(i + 1, next);
            members.pop_back();
          }
        };
    for (std::size_t i = 0; i < step.size(); ++i) {
      members = {step[i]};
      extend(i + 1, std::vector<Vertex>(step[i].begin(), step[i].end()));
    }
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(k) + 1, 0);
  for (const auto& s : seen) ++counts[s.size() - 1];
  return counts;
}

}  // namespace sparsenerve::oracle
