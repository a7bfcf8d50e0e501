#include "sparsenerve/presentation_io.hpp"

#include <array>
#include <charconv>
#include <nlohmann/json.hpp>

namespace sparsenerve {

namespace {

using nlohmann::json;

json vertex_list(const Simplex& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

json simplex_list(const std::vector<Simplex>& simplices) {
  json out = json::array();
  for (const auto& s : simplices) out.push_back(vertex_list(s));
  return out;
}

json grade(const Grade& g) { return json::array({g.mult, g.radius}); }

std::string grade_text(const Grade& g) {
  return "(" + std::to_string(g.mult) + "," + format_number(g.radius) + ")";
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

void write_presentation_json(std::ostream& out, const Presentation& p) {
  json doc;
  doc["epsilon"] = p.epsilon;
  doc["n"] = p.points;
  doc["k"] = p.skeleton;
  doc["grid"] = p.grid.values;
  json generators = json::array();
  for (const auto& g : p.generators) {
    json members = json::array();
    for (auto c : g.members) members.push_back(vertex_list(p.cells[c]));
    generators.push_back({{"dim", g.dim}, {"grade", grade(g.grade)}, {"members", members}});
  }
  doc["generators"] = std::move(generators);
  json relations = json::array();
  for (const auto& r : p.relations)
    relations.push_back({{"src", r.src}, {"dst", r.dst}, {"grade", grade(r.grade)}});
  doc["relations"] = std::move(relations);
  doc["size"] = p.size();
  out << doc.dump() << '\n';
}

void write_presentation_text(std::ostream& out, const Presentation& p) {
  out << "# epsilon=" << format_number(p.epsilon) << " n=" << p.points << " k=" << p.skeleton
      << " size=" << p.size() << '\n';
  out << "grid";
  for (double q : p.grid.values) out << ' ' << format_number(q);
  out << '\n';
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const auto& g = p.generators[i];
    out << "G " << i << " dim=" << g.dim << " grade=" << grade_text(g.grade) << " members=";
    for (std::size_t m = 0; m < g.members.size(); ++m)
      out << (m ? " " : "") << to_string(p.cells[g.members[m]]);
    out << '\n';
  }
  for (const auto& r : p.relations)
    out << "H " << r.src << " -> " << r.dst << " grade=" << grade_text(r.grade) << '\n';
}

void write_filtration_json(std::ostream& out, const SparseFiltration& f) {
  json doc;
  doc["epsilon"] = f.eps;
  doc["grid"] = f.grid.values;
  json steps = json::array();
  for (const auto& s : f.steps)
    steps.push_back({{"q", s.q}, {"cover", simplex_list(s.cover)}, {"maximal", simplex_list(s.maximal)}});
  doc["steps"] = std::move(steps);
  out << doc.dump() << '\n';
}

}  // namespace sparsenerve
