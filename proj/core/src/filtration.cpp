#include "sparsenerve/filtration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "containment.hpp"
#include "parallel.hpp"
#include "sparsenerve/oracle.hpp"

namespace sparsenerve {

CriticalGrid critical_grid(std::span<const double> births, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("critical_grid: epsilon must be positive");
  if (births.empty())
    throw std::invalid_argument("critical_grid: no edge births (|X| <= 1 is the trivial case)");
  if (!(births.front() > 0.0))
    throw std::invalid_argument("critical_grid: births must be positive");
  for (std::size_t i = 1; i < births.size(); ++i)
    if (!(births[i - 1] < births[i]))
      throw std::invalid_argument("critical_grid: births must be sorted and distinct");

  CriticalGrid grid{{births.front()}, eps};
  auto next = births.begin();
  while (true) {
    const double q = grid.values.back();
    next = std::upper_bound(next, births.end(), q);
    if (next == births.end()) break;
    grid.values.push_back(std::max(*next, inflate(q, eps)));
  }
  return grid;
}

std::optional<std::string> check_grid(const CriticalGrid& grid, std::span<const double> births) {
  const auto& q = grid.values;
  if (q.empty()) return births.empty() ? std::nullopt : std::optional<std::string>("empty grid");
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    if (!(inflate(q[i], grid.eps) <= q[i + 1])) {
      std::ostringstream os;
      os.precision(17);
      os << "separation fails: q_" << i + 1 << "=" << q[i] << " q_" << i + 2 << "=" << q[i + 1];
      return os.str();
    }
  for (double r : births) {
    const auto it = std::lower_bound(q.begin(), q.end(), r);
    if (it == q.end() || !(*it <= inflate(r, grid.eps))) {
      std::ostringstream os;
      os.precision(17);
      os << "no grid value in [r, r(1+eps)] for r=" << r;
      return os.str();
    }
  }
  if (!births.empty() && q.back() < births.back()) return "q_n < max R";
  return std::nullopt;
}

EdgeAssignment assign_edges(std::span<const BirthEdge> edges, const CriticalGrid& grid) {
  EdgeAssignment out;
  out.by_step.resize(grid.size() + 1);
  for (const auto& e : edges) {
    const auto it = std::lower_bound(grid.values.begin(), grid.values.end(), e.birth);
    if (it == grid.values.end())
      throw std::invalid_argument("assign_edges: edge birth exceeds the last grid value");
    const auto step = static_cast<std::size_t>(it - grid.values.begin()) + 1;
    out.by_step[step].push_back({e, std::min(e.u, e.v)});
  }
  return out;
}

void apply_mutation(CoverSet& cover, CoverMutation mutation) {
  if (mutation != CoverMutation::drop_cover) return;
  const auto it = std::find_if(cover.cliques.begin(), cover.cliques.end(),
                               [](const Simplex& s) { return s.size() >= 2; });
  if (it != cover.cliques.end()) cover.cliques.erase(it);
}

std::size_t SparseFiltration::max_maximal() const noexcept {
  std::size_t best = 0;
  for (const auto& s : steps) best = std::max(best, s.maximal.size());
  return best;
}

std::vector<Simplex> merge_maximal(std::span<const Simplex> previous,
                                   std::span<const Simplex> added) {
  // Non-maximal members of `added` first, larger simplices before smaller ones.
  std::vector<const Simplex*> order;
  order.reserve(added.size());
  for (const auto& s : added) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const Simplex* a, const Simplex* b) {
    if (a->size() != b->size()) return a->size() > b->size();
    return *a < *b;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [](const Simplex* a, const Simplex* b) { return *a == *b; }),
              order.end());

  detail::ContainmentIndex kept_index;
  std::vector<const Simplex*> kept;
  for (const Simplex* s : order)
    if (!kept_index.has_superset(*s)) {
      kept_index.add(*s);
      kept.push_back(s);
    }

  const detail::ContainmentIndex previous_index(previous);
  std::vector<Simplex> fresh;
  for (const Simplex* s : kept)
    if (!previous_index.has_superset(*s)) fresh.push_back(*s);

  const detail::ContainmentIndex fresh_index(fresh);
  std::vector<Simplex> out;
  out.reserve(previous.size() + fresh.size());
  for (const auto& s : previous)
    if (!fresh_index.has_superset(s)) out.push_back(s);
  out.insert(out.end(), fresh.begin(), fresh.end());
  std::sort(out.begin(), out.end());
  return out;
}

SparseFiltration build_sparse_filtration(const MetricSpace& m, double eps,
                                         const BuildOptions& options) {
  if (!(eps > 0.0))
    throw std::invalid_argument("build_sparse_filtration: epsilon must be positive");

  SparseFiltration f;
  f.eps = eps;
  f.points = m.size();
  FiltrationStep origin;
  for (Vertex v = 0; v < m.size(); ++v) origin.maximal.push_back(Simplex{v});
  f.steps.push_back(std::move(origin));
  if (m.size() <= 1) return f;

  const auto edges = rips_edges(m);
  const auto births = distinct_births(edges);
  f.grid = critical_grid(births, eps);
  const auto assignment = assign_edges(edges, f.grid);

  for (std::size_t i = 1; i <= f.grid.size(); ++i) {
    const double q = f.grid.at(i);
    std::vector<Vertex> anchors;
    for (const auto& e : assignment.by_step[i]) anchors.push_back(e.anchor);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

    std::vector<CoverSet> covers(anchors.size());
    detail::parallel_for(anchors.size(), options.threads, [&](std::size_t a) {
      covers[a] = build_cover_set(m, anchors[a], q, eps);
      apply_mutation(covers[a], options.mutation);
    });

    FiltrationStep step;
    step.q = q;
    for (auto& c : covers) {
      f.max_packing_size = std::max(f.max_packing_size, c.packing_size);
      step.cover.insert(step.cover.end(), std::make_move_iterator(c.cliques.begin()),
                        std::make_move_iterator(c.cliques.end()));
    }
    f.cover_sets_built += covers.size();
    sort_unique(step.cover);
    step.maximal = merge_maximal(f.steps.back().maximal, step.cover);
    f.steps.push_back(std::move(step));
  }
  return f;
}

std::size_t step_at(const SparseFiltration& f, double r) {
  const auto& q = f.grid.values;
  return static_cast<std::size_t>(std::upper_bound(q.begin(), q.end(), r) - q.begin());
}

const std::vector<Simplex>& complex_at(const SparseFiltration& f, double r) {
  return f.steps.at(step_at(f, r)).maximal;
}

std::vector<double> interleaving_radii(const SparseFiltration& f, const MetricSpace& m) {
  auto radii = distinct_births(rips_edges(m));
  radii.insert(radii.end(), f.grid.values.begin(), f.grid.values.end());
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

InterleavingReport verify_interleaving(const SparseFiltration& f, const MetricSpace& m,
                                       double eps, std::span<const double> radii) {
  InterleavingReport report;
  auto fail = [&](std::string what) {
    report.passed = false;
    report.failures.push_back(std::move(what));
  };
  for (double r : radii) {
    ++report.radii_checked;
    const double bound = 2.0 * inflate(r, eps) * (1.0 + kInterleavingSlack);
    for (const auto& s : complex_at(f, r))
      if (m.diameter(s) > bound) {
        std::ostringstream os;
        os.precision(17);
        os << "A_r not in R_r(1+eps) at r=" << r << ": simplex " << to_string(s) << " diameter "
           << m.diameter(s);
        fail(os.str());
      }

    const auto& target = complex_at(f, inflate(r, eps) * (1.0 + kInterleavingSlack));
    const detail::ContainmentIndex index(target);
    for (const auto& clique : oracle::brute_maximal_cliques_rips(m, r))
      if (!index.has_superset(clique)) {
        std::ostringstream os;
        os.precision(17);
        os << "R_r not in A_r(1+eps) at r=" << r << ": clique " << to_string(clique);
        fail(os.str());
      }
  }
  return report;
}

}  // namespace sparsenerve
