#include "sparsenerve/metric.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace sparsenerve {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Comma-separated when a comma is present, whitespace-separated otherwise.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
  }
  return fields;
}

std::optional<double> parse_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) return std::nullopt;
  return value;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table read_table(std::istream& in) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto fields = split_fields(content);
    std::vector<double> row;
    row.reserve(fields.size());
    bool numeric = true;
    for (auto f : fields) {
      auto value = parse_number(f);
      if (!value) {
        numeric = false;
        break;
      }
      row.push_back(*value);
    }
    if (!numeric) {
      if (!first)
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric field in '" +
                         std::string(content) + "'");
      for (auto f : fields) table.header.emplace_back(f);
    } else {
      table.rows.push_back(std::move(row));
    }
    first = false;
  }
  if (table.rows.empty()) throw ParseError("no numeric rows in input");
  return table;
}

}  // namespace

std::optional<Norm> parse_norm(std::string_view name) {
  if (name == "l1") return Norm::l1;
  if (name == "l2") return Norm::l2;
  if (name == "linf") return Norm::linf;
  return std::nullopt;
}

MetricSpace MetricSpace::from_table(std::size_t n, std::vector<double> table,
                                    std::vector<std::string> labels) {
  if (n == 0) throw MetricError("metric space must have at least one point");
  if (table.size() != n * n) throw MetricError("distance table is not n x n");
  if (!labels.empty() && labels.size() != n)
    throw MetricError("label count does not match point count");

  double max_entry = 0.0;
  for (double d : table) {
    if (!std::isfinite(d)) throw MetricError("distance table contains a non-finite entry");
    if (d < 0.0) throw MetricError("distance table contains a negative entry");
    max_entry = std::max(max_entry, d);
  }
  const double tol = kMetricTolerance * max_entry;

  for (std::size_t i = 0; i < n; ++i) {
    if (table[i * n + i] > tol)
      throw MetricError("nonzero diagonal entry at row " + std::to_string(i));
    table[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = table[i * n + j];
      if (std::abs(upper - table[j * n + i]) > tol)
        throw MetricError("asymmetric entries at (" + std::to_string(i) + "," + std::to_string(j) +
                          ")");
      if (upper == 0.0)
        throw MetricError("pseudo-metric not supported: zero distance between points " +
                          std::to_string(i) + " and " + std::to_string(j));
      table[j * n + i] = upper;
    }
  }

  MetricSpace m;
  m.n_ = n;
  m.dist_ = std::move(table);
  m.max_ = max_entry;
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  m.labels_ = std::move(labels);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double dij = m.dist_[i * n + j];
      const double* row_j = m.dist_.data() + j * n;
      const double* row_i = m.dist_.data() + i * n;
      for (std::size_t k = 0; k < n; ++k)
        if (row_i[k] > dij + row_j[k] + tol)
          throw MetricError("triangle inequality violated for (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")");
    }
  return m;
}

double MetricSpace::diameter(const Simplex& s) const noexcept { return diameter(s.vertices()); }

double MetricSpace::diameter(std::span<const Vertex> vertices) const noexcept {
  double d = 0.0;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      d = std::max(d, (*this)(vertices[a], vertices[b]));
  return d;
}

double MetricSpace::distance_to(Vertex y, std::span<const Vertex> set) const noexcept {
  double d = std::numeric_limits<double>::infinity();
  for (Vertex v : set) d = std::min(d, (*this)(y, v));
  return d;
}

std::optional<std::string> MetricSpace::check_invariants() const {
  const double tol = kMetricTolerance * max_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (dist_[i * n_ + i] != 0.0) return "nonzero diagonal at " + std::to_string(i);
    for (std::size_t j = 0; j < n_; ++j) {
      if (dist_[i * n_ + j] != dist_[j * n_ + i])
        return "asymmetry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i != j && !(dist_[i * n_ + j] > 0.0))
        return "nonpositive distance at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (std::size_t k = 0; k < n_; ++k)
        if (dist_[i * n_ + k] > dist_[i * n_ + j] + dist_[j * n_ + k] + tol)
          return "triangle violation at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ")";
    }
  }
  return std::nullopt;
}

MetricSpace load_distance_matrix(std::istream& in) {
  Table table = read_table(in);
  const std::size_t n = table.rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table.rows[i].size() != n)
      throw ParseError("distance matrix row " + std::to_string(i) + " has " +
                       std::to_string(table.rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    flat.insert(flat.end(), table.rows[i].begin(), table.rows[i].end());
  }
  if (!table.header.empty() && table.header.size() != n)
    throw ParseError("header has " + std::to_string(table.header.size()) + " labels, expected " +
                     std::to_string(n));
  return MetricSpace::from_table(n, std::move(flat), std::move(table.header));
}

std::vector<std::vector<double>> read_point_rows(std::istream& in) {
  return read_table(in).rows;
}

MetricSpace load_point_cloud(std::span<const std::vector<double>> rows, Norm norm) {
  if (rows.empty()) throw MetricError("point cloud is empty");
  const std::size_t dim = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      throw MetricError("ragged point cloud: row " + std::to_string(i) + " has dimension " +
                        std::to_string(rows[i].size()) + ", expected " + std::to_string(dim));
    for (double c : rows[i])
      if (!std::isfinite(c)) throw MetricError("non-finite coordinate in row " + std::to_string(i));
  }

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rows[a] < rows[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (rows[order[i]] == rows[order[i - 1]])
      throw MetricError("duplicate points at rows " + std::to_string(std::min(order[i], order[i - 1])) +
                        " and " + std::to_string(std::max(order[i], order[i - 1])));

  const std::size_t n = rows.size();
  std::vector<double> table(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = std::abs(rows[i][c] - rows[j][c]);
        switch (norm) {
          case Norm::l1: d += diff; break;
          case Norm::l2: d += diff * diff; break;
          case Norm::linf: d = std::max(d, diff); break;
        }
      }
      if (norm == Norm::l2) d = std::sqrt(d);
      table[i * n + j] = table[j * n + i] = d;
    }
  return MetricSpace::from_table(n, std::move(table));
}

std::vector<Vertex> ball(const MetricSpace& m, Vertex x, double r) {
  std::vector<Vertex> out;
  const auto row = m.row(x);
  for (Vertex y = 0; y < row.size(); ++y)
    if (row[y] <= r) out.push_back(y);
  return out;
}

std::vector<BirthEdge> rips_edges(const MetricSpace& m) {
  const auto n = static_cast<Vertex>(m.size());
  std::vector<BirthEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, m(u, v) / 2.0});
  std::stable_sort(edges.begin(), edges.end(),
                   [](const BirthEdge& a, const BirthEdge& b) { return a.birth < b.birth; });
  return edges;
}

std::vector<double> distinct_births(std::span<const BirthEdge> edges) {
  std::vector<double> births;
  births.reserve(edges.size());
  for (const auto& e : edges) births.push_back(e.birth);
  std::sort(births.begin(), births.end());
  births.erase(std::unique(births.begin(), births.end()), births.end());
  return births;
}

}  // namespace sparsenerve
