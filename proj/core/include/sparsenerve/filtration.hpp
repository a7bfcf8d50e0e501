#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsenerve/covering.hpp"
#include "sparsenerve/metric.hpp"
#include "sparsenerve/simplex.hpp"

namespace sparsenerve {

/// r(1+eps) with one rounded multiplication. Every grid computation and every grid
/// check goes through this helper so comparisons see identically rounded values.
inline double inflate(double r, double eps) noexcept { return r * (1.0 + eps); }

/// Relative slack applied on the comparison side of interleaving checks.
inline constexpr double kInterleavingSlack = 1e-9;

/// The radius grid q_1 < ... < q_n (with implicit q_0 = 0) at which A(X) changes.
struct CriticalGrid {
  std::vector<double> values;  // q_1..q_n
  double eps = 0.0;

  std::size_t size() const noexcept { return values.size(); }
  /// q_i for i in 0..n, with q_0 = 0.
  double at(std::size_t i) const { return i == 0 ? 0.0 : values.at(i - 1); }
};

/// q_1 = min R; while some r in R exceeds q_i, q_{i+1} = max(min{r > q_i}, q_i(1+eps)).
/// `births` must be sorted, distinct and positive; throws std::invalid_argument otherwise
/// (an empty set means |X| <= 1, which callers handle as the trivial filtration).
CriticalGrid critical_grid(std::span<const double> births, double eps);

/// Checks q_i(1+eps) <= q_{i+1}, that every r in R has some q_i in [r, r(1+eps)], and
/// q_n >= max R, all on stored values with no tolerance.
std::optional<std::string> check_grid(const CriticalGrid& grid, std::span<const double> births);

struct AssignedEdge {
  BirthEdge edge;
  Vertex anchor;  // x_e, always the lower-index endpoint
};

/// E_i = edges with birth in (q_{i-1}, q_i]; by_step[0] is always empty.
struct EdgeAssignment {
  std::vector<std::vector<AssignedEdge>> by_step;
};

EdgeAssignment assign_edges(std::span<const BirthEdge> edges, const CriticalGrid& grid);

/// Test-only fault injection applied to every cover set during construction.
enum class CoverMutation {
  none,
  drop_cover,  // remove the lexicographically first clique with >= 2 vertices
};

void apply_mutation(CoverSet& cover, CoverMutation mutation);

struct BuildOptions {
  CoverMutation mutation = CoverMutation::none;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct FiltrationStep {
  double q = 0.0;
  std::vector<Simplex> cover;    // S(q_i), deduplicated; empty at step 0
  std::vector<Simplex> maximal;  // maximal simplices of A(X)_{q_i}, lexicographic
};

/// The sparse approximation A(X), stored by grid step.
struct SparseFiltration {
  double eps = 0.0;
  std::size_t points = 0;
  CriticalGrid grid;
  std::vector<FiltrationStep> steps;  // steps[i] is grid step i, 0..n

  std::size_t cover_sets_built = 0;
  std::size_t max_packing_size = 0;

  std::size_t max_maximal() const noexcept;
};

/// Builds A(X): per grid step, the union of S(x_e, q_i) over e in E_i, then the
/// maximal simplices of the accumulated complex by incremental containment tests.
/// For |X| <= 1 the result has only step 0.
SparseFiltration build_sparse_filtration(const MetricSpace& m, double eps,
                                         const BuildOptions& options = {});

/// Maximal simplices of A(X)_r: those of the last grid step with q_i <= r.
const std::vector<Simplex>& complex_at(const SparseFiltration& f, double r);

/// Index of the last grid step with q_i <= r.
std::size_t step_at(const SparseFiltration& f, double r);

/// Maximal simplices of the complex generated by `previous` and `added`, where
/// `previous` is already an antichain. Output is lexicographic.
std::vector<Simplex> merge_maximal(std::span<const Simplex> previous,
                                   std::span<const Simplex> added);

struct InterleavingReport {
  bool passed = true;
  std::size_t radii_checked = 0;
  std::vector<std::string> failures;  // one witness description per failure
};

/// For each r: (a) every maximal simplex of A_r has diameter <= 2r(1+eps)(1+slack);
/// (b) every maximal clique of R_r lies in a maximal simplex of A_{r(1+eps)(1+slack)}.
InterleavingReport verify_interleaving(const SparseFiltration& f, const MetricSpace& m,
                                       double eps, std::span<const double> radii);

/// R ∪ Q, sorted and distinct: the radii at which the interleaving is checked.
std::vector<double> interleaving_radii(const SparseFiltration& f, const MetricSpace& m);

}  // namespace sparsenerve
