#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sparsenerve/filtration.hpp"
#include "sparsenerve/metric.hpp"
#include "sparsenerve/simplex.hpp"

namespace sparsenerve {

/// An index in N^op x [0, inf): (m, r) <= (m', r') iff m >= m' and r <= r'.
struct Grade {
  std::uint32_t mult = 1;
  double radius = 0.0;

  bool leq(const Grade& other) const noexcept {
    return mult >= other.mult && radius <= other.radius;
  }
  friend Grade join(const Grade& a, const Grade& b) noexcept {
    return {std::min(a.mult, b.mult), std::max(a.radius, b.radius)};
  }
  friend bool operator==(const Grade&, const Grade&) = default;
};

/// A simplex that stops being maximal, and the lexicographically least new maximal
/// simplex that absorbs it.
struct Domination {
  Simplex dominated;
  Simplex absorber;
  Grade grade;  // gr(dominated) v gr(absorber)
};

struct MaximalSequence {
  std::vector<std::vector<Simplex>> new_maximal;  // L0_i for steps 0..n, lexicographic
  std::vector<Domination> dominations;            // in step order, then lexicographic
};

/// Newly maximal simplices per grid step and the absorption relations between steps.
MaximalSequence incremental_maximal(const SparseFiltration& f);

/// A (dim+1)-set of maximal simplices with a common vertex, first present at grade.radius.
/// members are cell ids (see GeneratorTable::cells), ordered lexicographically by simplex.
struct Generator {
  std::uint32_t dim = 0;
  Grade grade;
  std::vector<std::uint32_t> members;
};

struct GeneratorTable {
  std::vector<Simplex> cells;  // every simplex that is ever newly maximal, by (step, size, lex)
  std::vector<std::uint32_t> cell_step;
  std::vector<std::vector<Generator>> by_dim;  // 0..k
};

/// G^0..G^k: dimension-0 generators are the newly maximal simplices; for j >= 1, the
/// (j+1)-sets of maximal simplices at step i sharing a vertex with at least one member
/// newly maximal at step i, graded by (|intersection|, q_i).
GeneratorTable generators_k(const SparseFiltration& f, const MaximalSequence& seq, int k,
                            unsigned threads = 0);

struct Relation {
  std::uint32_t src = 0;  // generator index of the dominated simplex
  std::uint32_t dst = 0;  // generator index of its absorber
  Grade grade;
};

struct PresentationStats {
  std::size_t grid_size = 0;
  std::size_t max_maximal = 0;
  std::size_t cover_sets = 0;
  std::size_t max_packing = 0;
  std::vector<std::size_t> generators_by_dim;
  double build_ms = 0.0;
};

/// The pair (G, H) for the k-skeleton of the nerve of A(X).
/// Generators are ordered by (radius, mult, member simplices); relations by
/// (radius, mult, src, dst).
struct Presentation {
  double epsilon = 0.0;
  std::size_t points = 0;
  int skeleton = 0;
  CriticalGrid grid;
  std::vector<Simplex> cells;
  std::vector<std::uint32_t> cell_generator;  // cell id -> index of its dimension-0 generator
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  PresentationStats stats;

  std::size_t size() const noexcept { return generators.size() + relations.size(); }
};

/// Assembles a presentation from a built filtration.
Presentation present(const SparseFiltration& f, int k, unsigned threads = 0);

/// End-to-end: filtration, generators and relations for the k-skeleton.
Presentation build_presentation(const MetricSpace& m, double eps, int k,
                                const BuildOptions& options = {});

/// |G| + |H|.
inline std::size_t presentation_size(const Presentation& p) noexcept { return p.size(); }

/// Generator and relation counts of the presentation, obtained without materializing
/// the generators. build_ms covers only the counting, not the filtration.
struct PresentationCounts {
  std::size_t grid_size = 0;
  std::size_t max_maximal = 0;
  std::vector<std::size_t> generators_by_dim;
  std::size_t relations = 0;
  double build_ms = 0.0;

  std::size_t generators() const noexcept {
    std::size_t total = 0;
    for (auto g : generators_by_dim) total += g;
    return total;
  }
  std::size_t size() const noexcept { return generators() + relations; }
};

PresentationCounts count_presentation(const SparseFiltration& f, int k, unsigned threads = 0);

/// The complex (G/H)_p: vertex classes of in-range dimension-0 generators under the
/// in-range relations, and the non-degenerate in-range generators as faces.
struct ReconstructedComplex {
  std::vector<std::vector<std::uint32_t>> classes;  // cell ids per class
  std::vector<Simplex> labels;                      // per class: the member not yet absorbed
  std::vector<Simplex> faces;                       // over class ids, by (size, lex)
};

ReconstructedComplex reconstruct_complex(const Presentation& p, const Grade& at);

/// Faces of a reconstruction, each written as the sorted list of its class labels.
std::set<std::vector<Simplex>> labeled_faces(const ReconstructedComplex& c);

}  // namespace sparsenerve
