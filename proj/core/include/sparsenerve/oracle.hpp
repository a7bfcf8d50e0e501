#pragma once

// Brute-force reference constructions for small inputs. Every routine enumerates
// exhaustively and throws BudgetExceeded instead of degrading.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "sparsenerve/covering.hpp"
#include "sparsenerve/metric.hpp"
#include "sparsenerve/simplex.hpp"

namespace sparsenerve::oracle {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t max_cells = 2'000'000;
};

/// A face-closed set of simplices on vertices 0..m-1, truncated at dimension dim_cap.
/// When the vertices stand for other objects (maximal simplices, poset elements),
/// labels[i] is the object behind vertex i.
struct ExplicitComplex {
  std::vector<Simplex> simplices;  // ordered by (size, lexicographic)
  int dim_cap = 0;
  std::vector<Simplex> labels;

  std::size_t count(int dim) const;
  long long euler_characteristic() const;
  bool is_face_closed() const;
};

/// A chain of simplices, each a proper subset of the next.
struct Flag {
  std::vector<Simplex> chain;
};

/// All simplices of diameter <= 2r with at most dim_cap + 1 vertices.
ExplicitComplex brute_rips(const MetricSpace& m, double r, int dim_cap, Budget budget = {});

/// Maximal cliques of the graph with an edge wherever dist <= 2r, lexicographic.
std::vector<Simplex> brute_maximal_cliques_rips(const MetricSpace& m, double r,
                                                Budget budget = {});

/// Face closure of a set of simplices, truncated at dim_cap.
ExplicitComplex closure(std::span<const Simplex> generators, int dim_cap, Budget budget = {});

/// Flags of L whose minimum has at least `multiplicity` vertices, with at most
/// max_length elements.
std::vector<Flag> enumerate_flags(const ExplicitComplex& l, int multiplicity,
                                  std::size_t max_length, Budget budget = {});

/// The subcomplex of the barycentric subdivision of L spanned by flags whose minimum
/// has dimension >= multiplicity - 1. Vertex i is labels[i], a simplex of L.
ExplicitComplex subdivision_level(const ExplicitComplex& l, int multiplicity, int dim_cap,
                                  Budget budget = {});

/// Nerve at multiplicity j: vertex i is maximal[i] (if it has >= j vertices); a set is
/// a face iff its common intersection has >= j vertices. Faces have <= size_cap members.
ExplicitComplex brute_nerve(std::span<const Simplex> maximal, int multiplicity,
                            std::size_t size_cap, Budget budget = {});

/// Faces of a labeled complex, each written as the sorted list of its vertex labels.
std::set<std::vector<Simplex>> labeled_faces(const ExplicitComplex& c);

/// Betti numbers over GF(2) in degrees 0..max_dim. Needs l.dim_cap > max_dim.
std::vector<std::size_t> betti_gf2(const ExplicitComplex& l, int max_dim, Budget budget = {});

struct CoverCheck {
  bool passed = true;
  std::optional<Simplex> uncovered;  // maximal Rips clique through x not inside any cover clique
  std::optional<Simplex> too_wide;   // cover clique with diameter > 2r(1+eps)(1+1e-9)
  std::size_t cliques_checked = 0;
};

/// Every maximal clique of R(X)_r through x must lie inside some clique of `cover`,
/// and every cover clique must have diameter <= 2r(1+eps) up to 1e-9 relative slack.
CoverCheck check_cover_lemma(const MetricSpace& m, Vertex x, double r, double eps,
                             const CoverSet& cover, Budget budget = {});

/// Distinct sets of at most k+1 simplices that are simultaneously maximal at some
/// step and share a vertex, counted by set size minus one. Indexed 0..k.
std::vector<std::size_t> count_nerve_sets(std::span<const std::vector<Simplex>> maximal_steps,
                                          int k, Budget budget = {});

}  // namespace sparsenerve::oracle
