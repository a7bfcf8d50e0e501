#include "sparsenerve/presentation.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

#include "containment.hpp"
#include "parallel.hpp"

namespace sparsenerve {

namespace {

std::vector<Simplex> difference(const std::vector<Simplex>& a, const std::vector<Simplex>& b) {
  std::vector<Simplex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::vector<bool> newly_maximal(const std::vector<Simplex>& maximal,
                                const std::vector<Simplex>& fresh) {
  std::vector<bool> out(maximal.size());
  for (std::size_t a = 0; a < maximal.size(); ++a)
    out[a] = std::binary_search(fresh.begin(), fresh.end(), maximal[a]);
  return out;
}

// Calls visit(chosen, common) once for every set of 2..max_members positions into
// `maximal` whose members share a vertex and include a newly maximal one. Sets are
// enumerated under each shared vertex v and kept only where v is the least common vertex.
template <class Visit>
void for_each_shared_set(const std::vector<Simplex>& maximal, const std::vector<bool>& is_new,
                         std::size_t max_members, Visit&& visit) {
  std::map<Vertex, std::vector<std::uint32_t>> containing;
  for (std::uint32_t a = 0; a < maximal.size(); ++a)
    for (Vertex v : maximal[a]) containing[v].push_back(a);

  std::vector<std::uint32_t> chosen;
  for (const auto& [v, members] : containing) {
    // new_after[p]: some member at position >= p is newly maximal.
    std::vector<bool> new_after(members.size() + 1, false);
    for (std::size_t p = members.size(); p-- > 0;)
      new_after[p] = new_after[p + 1] || is_new[members[p]];
    if (!new_after[0]) continue;

    auto extend = [&](auto&& self, std::size_t from, bool has_new,
                      const std::vector<Vertex>& common) -> void {
      if (chosen.size() >= 2 && has_new && common.front() == v) visit(chosen, common);
      if (chosen.size() >= max_members) return;
      for (std::size_t p = from; p < members.size(); ++p) {
        if (!has_new && !new_after[p]) break;
        const auto a = members[p];
        chosen.push_back(a);
        self(self, p + 1, has_new || is_new[a], intersect(common, maximal[a].vertices()));
        chosen.pop_back();
      }
    };
    for (std::size_t p = 0; p < members.size(); ++p) {
      if (!new_after[p]) break;
      const auto a = members[p];
      chosen = {a};
      extend(extend, p + 1, is_new[a], std::vector<Vertex>(maximal[a].begin(), maximal[a].end()));
    }
  }
}

// Pairs of members sharing a vertex with at least one newly maximal member, by bitsets.
std::size_t count_shared_pairs(const std::vector<Simplex>& maximal, const std::vector<bool>& is_new,
                               std::size_t points) {
  const std::size_t words = (maximal.size() + 63) / 64;
  std::vector<std::uint64_t> incidence(points * words, 0), fresh(words, 0), row(words);
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    for (Vertex v : maximal[a]) incidence[v * words + a / 64] |= std::uint64_t{1} << (a % 64);
    if (is_new[a]) fresh[a / 64] |= std::uint64_t{1} << (a % 64);
  }
  std::size_t total = 0;
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    std::fill(row.begin(), row.end(), 0);
    for (Vertex v : maximal[a])
      for (std::size_t w = a / 64; w < words; ++w) row[w] |= incidence[v * words + w];
    // Only partners b > a, so each pair is counted once.
    row[a / 64] &= ~std::uint64_t{0} << (a % 64) << 1;
    for (std::size_t w = a / 64; w < words; ++w)
      total += static_cast<std::size_t>(std::popcount(is_new[a] ? row[w] : row[w] & fresh[w]));
  }
  return total;
}

}  // namespace

MaximalSequence incremental_maximal(const SparseFiltration& f) {
  MaximalSequence seq;
  if (f.steps.empty()) return seq;
  seq.new_maximal.push_back(f.steps.front().maximal);

  std::map<Simplex, std::size_t> born;
  for (const auto& s : f.steps.front().maximal) born.emplace(s, 0);

  for (std::size_t i = 0; i + 1 < f.steps.size(); ++i) {
    const auto& prev = f.steps[i].maximal;
    const auto& next = f.steps[i + 1].maximal;
    auto fresh = difference(next, prev);
    const auto gone = difference(prev, next);
    const double q = f.grid.at(i + 1);

    // Insertion order is lexicographic, so the first proper superset found is the least.
    const detail::ContainmentIndex index(fresh);
    for (const auto& sigma : gone) {
      const Simplex* absorber = nullptr;
      index.find_superset(sigma, [&](std::uint32_t id) {
        if (index[id].size() > sigma.size()) absorber = &index[id];
        return absorber != nullptr;
      });
      if (!absorber)
        throw std::logic_error("incremental_maximal: " + to_string(sigma) +
                               " left the maximal set without an absorber");
      const Grade own{static_cast<std::uint32_t>(sigma.size()), f.grid.at(born.at(sigma))};
      const Grade other{static_cast<std::uint32_t>(absorber->size()), q};
      seq.dominations.push_back({sigma, *absorber, join(own, other)});
    }
    for (const auto& s : fresh) born.emplace(s, i + 1);
    seq.new_maximal.push_back(std::move(fresh));
  }
  return seq;
}

GeneratorTable generators_k(const SparseFiltration& f, const MaximalSequence& seq, int k,
                            unsigned threads) {
  if (k < 0) throw std::invalid_argument("generators_k: skeleton must be nonnegative");
  GeneratorTable table;
  table.by_dim.resize(static_cast<std::size_t>(k) + 1);

  for (std::size_t i = 0; i < seq.new_maximal.size(); ++i) {
    auto layer = seq.new_maximal[i];
    std::stable_sort(layer.begin(), layer.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    for (auto& s : layer) {
      table.cells.push_back(std::move(s));
      table.cell_step.push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::map<Simplex, std::uint32_t> cell_of;
  for (std::uint32_t c = 0; c < table.cells.size(); ++c) {
    cell_of.emplace(table.cells[c], c);
    table.by_dim[0].push_back(
        {0,
         {static_cast<std::uint32_t>(table.cells[c].size()), f.grid.at(table.cell_step[c])},
         {c}});
  }
  if (k == 0) return table;

  const std::size_t steps = std::min(f.steps.size(), seq.new_maximal.size());
  std::vector<std::vector<Generator>> per_step(steps);
  detail::parallel_for(steps, threads, [&](std::size_t i) {
    const auto& maximal = f.steps[i].maximal;
    const auto& fresh = seq.new_maximal[i];
    if (fresh.empty()) return;
    const double q = f.grid.at(i);
    std::vector<std::uint32_t> cell(maximal.size());
    for (std::uint32_t a = 0; a < maximal.size(); ++a) cell[a] = cell_of.at(maximal[a]);
    auto& out = per_step[i];
    for_each_shared_set(maximal, newly_maximal(maximal, fresh), static_cast<std::size_t>(k) + 1,
                        [&](const std::vector<std::uint32_t>& chosen,
                            const std::vector<Vertex>& common) {
                          std::vector<std::uint32_t> ids;
                          ids.reserve(chosen.size());
                          for (auto a : chosen) ids.push_back(cell[a]);
                          out.push_back({static_cast<std::uint32_t>(chosen.size() - 1),
                                         {static_cast<std::uint32_t>(common.size()), q},
                                         std::move(ids)});
                        });
  });

  for (auto& step : per_step)
    for (auto& g : step) table.by_dim[g.dim].push_back(std::move(g));
  return table;
}

Presentation present(const SparseFiltration& f, int k, unsigned threads) {
  auto seq = incremental_maximal(f);
  auto table = generators_k(f, seq, k, threads);

  Presentation p;
  p.epsilon = f.eps;
  p.points = f.points;
  p.skeleton = k;
  p.grid = f.grid;
  p.cells = std::move(table.cells);

  for (auto& dim : table.by_dim) {
    p.stats.generators_by_dim.push_back(dim.size());
    for (auto& g : dim) p.generators.push_back(std::move(g));
  }
  const auto& cells = p.cells;
  auto members_less = [&](const Generator& a, const Generator& b) {
    return std::lexicographical_compare(
        a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
        [&](std::uint32_t x, std::uint32_t y) { return cells[x] < cells[y]; });
  };
  std::sort(p.generators.begin(), p.generators.end(),
            [&](const Generator& a, const Generator& b) {
              if (a.grade.radius != b.grade.radius) return a.grade.radius < b.grade.radius;
              if (a.grade.mult != b.grade.mult) return a.grade.mult < b.grade.mult;
              return members_less(a, b);
            });

  p.cell_generator.assign(p.cells.size(), 0);
  for (std::uint32_t g = 0; g < p.generators.size(); ++g)
    if (p.generators[g].dim == 0) p.cell_generator[p.generators[g].members.front()] = g;

  std::map<Simplex, std::uint32_t> cell_of;
  for (std::uint32_t c = 0; c < p.cells.size(); ++c) cell_of.emplace(p.cells[c], c);
  for (const auto& d : seq.dominations)
    p.relations.push_back({p.cell_generator[cell_of.at(d.dominated)],
                           p.cell_generator[cell_of.at(d.absorber)], d.grade});
  std::sort(p.relations.begin(), p.relations.end(), [](const Relation& a, const Relation& b) {
    if (a.grade.radius != b.grade.radius) return a.grade.radius < b.grade.radius;
    if (a.grade.mult != b.grade.mult) return a.grade.mult < b.grade.mult;
    if (a.src != b.src) return a.src < b.src;
    return a.dst < b.dst;
  });

  p.stats.grid_size = f.grid.size();
  p.stats.max_maximal = f.max_maximal();
  p.stats.cover_sets = f.cover_sets_built;
  p.stats.max_packing = f.max_packing_size;
  return p;
}

Presentation build_presentation(const MetricSpace& m, double eps, int k,
                                const BuildOptions& options) {
  if (k < 0) throw std::invalid_argument("build_presentation: skeleton must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  const auto f = build_sparse_filtration(m, eps, options);
  auto p = present(f, k, options.threads);
  p.stats.build_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return p;
}

PresentationCounts count_presentation(const SparseFiltration& f, int k, unsigned threads) {
  if (k < 0) throw std::invalid_argument("count_presentation: skeleton must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  const auto seq = incremental_maximal(f);
  PresentationCounts c;
  c.grid_size = f.grid.size();
  c.max_maximal = f.max_maximal();
  c.relations = seq.dominations.size();
  c.generators_by_dim.assign(static_cast<std::size_t>(k) + 1, 0);
  for (const auto& layer : seq.new_maximal) c.generators_by_dim[0] += layer.size();

  if (k >= 1) {
    const std::size_t steps = std::min(f.steps.size(), seq.new_maximal.size());
    std::vector<std::vector<std::size_t>> per_step(steps);
    detail::parallel_for(steps, threads, [&](std::size_t i) {
      const auto& maximal = f.steps[i].maximal;
      const auto& fresh = seq.new_maximal[i];
      auto& counts = per_step[i];
      counts.assign(static_cast<std::size_t>(k) + 1, 0);
      if (fresh.empty()) return;
      const auto is_new = newly_maximal(maximal, fresh);
      counts[1] = count_shared_pairs(maximal, is_new, f.points);
      if (k >= 2)
        for_each_shared_set(maximal, is_new, static_cast<std::size_t>(k) + 1,
                            [&](const std::vector<std::uint32_t>& chosen, const auto&) {
                              if (chosen.size() >= 3) ++counts[chosen.size() - 1];
                            });
    });
    for (const auto& counts : per_step)
      for (std::size_t j = 1; j < counts.size(); ++j) c.generators_by_dim[j] += counts[j];
  }
  c.build_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

ReconstructedComplex reconstruct_complex(const Presentation& p, const Grade& at) {
  const auto cells = static_cast<std::uint32_t>(p.cells.size());
  std::vector<bool> in_range(cells, false);
  for (std::uint32_t c = 0; c < cells; ++c)
    in_range[c] = p.generators[p.cell_generator[c]].grade.leq(at);

  UnionFind classes(cells);
  std::vector<bool> absorbed(cells, false);
  for (const auto& r : p.relations) {
    if (!r.grade.leq(at)) continue;
    const auto src = p.generators[r.src].members.front();
    const auto dst = p.generators[r.dst].members.front();
    classes.unite(src, dst);
    absorbed[src] = true;
  }

  ReconstructedComplex out;
  std::vector<std::int64_t> class_of_root(cells, -1);
  std::vector<std::uint32_t> class_of(cells, 0);
  for (std::uint32_t c = 0; c < cells; ++c) {
    if (!in_range[c]) continue;
    const auto root = classes.find(c);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::int64_t>(out.classes.size());
      out.classes.emplace_back();
      out.labels.emplace_back();
    }
    const auto id = static_cast<std::uint32_t>(class_of_root[root]);
    class_of[c] = id;
    out.classes[id].push_back(c);
    if (!absorbed[c]) out.labels[id] = p.cells[c];
  }

  for (const auto& g : p.generators) {
    if (!g.grade.leq(at)) continue;
    std::vector<Vertex> ids;
    for (auto c : g.members) ids.push_back(class_of[c]);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) continue;  // degenerate at p
    out.faces.emplace_back(std::move(ids));
  }
  std::sort(out.faces.begin(), out.faces.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.faces.erase(std::unique(out.faces.begin(), out.faces.end()), out.faces.end());
  return out;
}

std::set<std::vector<Simplex>> labeled_faces(const ReconstructedComplex& c) {
  std::set<std::vector<Simplex>> out;
  for (const auto& f : c.faces) {
    std::vector<Simplex> face;
    for (Vertex v : f) face.push_back(c.labels.at(v));
    std::sort(face.begin(), face.end());
    out.insert(std::move(face));
  }
  return out;
}

}  // namespace sparsenerve
