#pragma once

#include <ostream>
#include <string>

#include "sparsenerve/filtration.hpp"
#include "sparsenerve/presentation.hpp"

namespace sparsenerve {

/// {"epsilon", "n", "k", "grid", "generators": [{"dim", "grade": [m, r], "members"}],
///  "relations": [{"src", "dst", "grade"}], "size"}. Members are vertex lists; src and dst
/// index the generators array. Output is a single line terminated by '\n'.
void write_presentation_json(std::ostream& out, const Presentation& p);

/// One generator or relation per line, for diffing.
void write_presentation_text(std::ostream& out, const Presentation& p);

/// Debug dump: {"epsilon", "grid", "steps": [{"q", "cover", "maximal"}]}.
void write_filtration_json(std::ostream& out, const SparseFiltration& f);

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

}  // namespace sparsenerve
