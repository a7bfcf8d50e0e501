#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sparsenerve/covering.hpp"
#include "sparsenerve/presentation.hpp"
#include "sparsenerve/presentation_io.hpp"
#include "sparsenerve/sampling.hpp"

namespace sparsenerve::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback,
                          std::ios::openmode mode = std::ios::out) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, mode);
  if (!file) throw InputError("cannot open output file " + path);
  return file;
}

std::string describe(const std::vector<std::size_t>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s + "]";
}

CheckResult pass(std::string name, std::string detail) {
  return {CheckStatus::pass, std::move(name), std::move(detail)};
}
CheckResult fail(std::string name, std::string detail) {
  return {CheckStatus::fail, std::move(name), std::move(detail)};
}
CheckResult skip(std::string name, std::string detail) {
  return {CheckStatus::skip, std::move(name), std::move(detail)};
}

struct AnchorAtStep {
  std::size_t step;
  Vertex anchor;
};

std::vector<AnchorAtStep> anchors_by_step(const MetricSpace& m, const SparseFiltration& f) {
  std::vector<AnchorAtStep> out;
  if (m.size() <= 1) return out;
  const auto assignment = assign_edges(rips_edges(m), f.grid);
  for (std::size_t i = 1; i < assignment.by_step.size(); ++i) {
    std::vector<Vertex> anchors;
    for (const auto& e : assignment.by_step[i]) anchors.push_back(e.anchor);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    for (Vertex x : anchors) out.push_back({i, x});
  }
  return out;
}

std::vector<AnchorAtStep> sample(std::vector<AnchorAtStep> pairs, std::size_t cap) {
  if (pairs.size() <= cap || cap == 0) return pairs;
  std::vector<AnchorAtStep> out;
  for (std::size_t k = 0; k < cap; ++k) out.push_back(pairs[k * pairs.size() / cap]);
  return out;
}

CheckResult check_packings(const MetricSpace& m, const SparseFiltration& f,
                           const std::vector<AnchorAtStep>& pairs) {
  for (const auto& [step, x] : pairs) {
    const double q = f.grid.at(step);
    const double alpha = q * f.eps / 2.0;
    const auto region = ball(m, x, 2.0 * q);
    const auto w = greedy_packing(m, region, alpha, x);
    if (!std::binary_search(w.members.begin(), w.members.end(), x))
      return fail("packing", "seed missing at x=" + std::to_string(x));
    for (Vertex y : region)
      if (m.distance_to(y, w.members) > alpha)
        return fail("packing", "point " + std::to_string(y) + " not covered at x=" +
                                   std::to_string(x) + " q=" + format_number(q));
    for (std::size_t a = 0; a < w.members.size(); ++a)
      for (std::size_t b = a + 1; b < w.members.size(); ++b)
        if (m(w.members[a], w.members[b]) < alpha)
          return fail("packing", "members too close at x=" + std::to_string(x));
  }
  return pass("packing", std::to_string(pairs.size()) + " packings");
}

CheckResult check_covers(const MetricSpace& m, const SparseFiltration& f,
                         const std::vector<AnchorAtStep>& pairs, const RunConfig& config) {
  const oracle::Budget budget{config.budget};
  for (const auto& [step, x] : pairs) {
    const double q = f.grid.at(step);
    auto cover = build_cover_set(m, x, q, f.eps);
    apply_mutation(cover, config.mutation);
    const auto check = oracle::check_cover_lemma(m, x, q, f.eps, cover, budget);
    if (!check.passed) {
      std::string what = "x=" + std::to_string(x) + " q=" + format_number(q);
      if (check.uncovered) what += " uncovered clique " + to_string(*check.uncovered);
      if (check.too_wide) what += " oversized clique " + to_string(*check.too_wide);
      return fail("cover-lemma", what);
    }
  }
  return pass("cover-lemma", std::to_string(pairs.size()) + " (anchor, q) pairs");
}

CheckResult check_reconstruction(const Presentation& p, const SparseFiltration& f,
                                 const RunConfig& config) {
  const oracle::Budget budget{config.budget};
  std::size_t compared = 0;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const auto& maximal = f.steps[i].maximal;
    std::size_t largest = 0;
    for (const auto& s : maximal) largest = std::max(largest, s.size());
    for (std::uint32_t mult = 1; mult <= largest + 1; ++mult) {
      const Grade at{mult, f.grid.at(i)};
      const auto rebuilt = labeled_faces(reconstruct_complex(p, at));
      const auto nerve = oracle::labeled_faces(oracle::brute_nerve(
          maximal, static_cast<int>(mult), static_cast<std::size_t>(p.skeleton) + 1, budget));
      ++compared;
      if (rebuilt != nerve)
        return fail("reconstruction", "mismatch at grade (" + std::to_string(mult) + "," +
                                          format_number(at.radius) + "): " +
                                          std::to_string(rebuilt.size()) + " faces vs " +
                                          std::to_string(nerve.size()) + " in the nerve");
    }
  }
  return pass("reconstruction", std::to_string(compared) + " bigrades");
}

CheckResult check_generator_count(const Presentation& p, const SparseFiltration& f,
                                  const RunConfig& config) {
  std::vector<std::vector<Simplex>> steps;
  for (const auto& s : f.steps) steps.push_back(s.maximal);
  const auto expected = oracle::count_nerve_sets(steps, p.skeleton, oracle::Budget{config.budget});
  if (expected != p.stats.generators_by_dim)
    return fail("generator-count",
                "per-dimension " + describe(p.stats.generators_by_dim) + " vs brute " +
                    describe(expected));
  return pass("generator-count", describe(expected));
}

CheckResult check_homology(const SparseFiltration& f, const RunConfig& config) {
  const oracle::Budget budget{config.budget};
  std::size_t compared = 0;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const auto& maximal = f.steps[i].maximal;
    std::size_t largest = 0;
    for (const auto& s : maximal) largest = std::max(largest, s.size());
    const auto complex = oracle::closure(maximal, static_cast<int>(largest) - 1, budget);
    for (int j = 1; j <= 3; ++j) {
      const auto nerve = oracle::betti_gf2(oracle::brute_nerve(maximal, j, 4, budget), 2, budget);
      const auto subdivision =
          oracle::betti_gf2(oracle::subdivision_level(complex, j, 3, budget), 2, budget);
      ++compared;
      if (nerve != subdivision)
        return fail("homology", "q=" + format_number(f.grid.at(i)) + " j=" + std::to_string(j) +
                                    " nerve " + describe(nerve) + " vs subdivision " +
                                    describe(subdivision));
    }
  }
  return pass("homology", std::to_string(compared) + " (q, j) pairs in degrees <= 2");
}

template <class F>
CheckResult guarded(const std::string& name, F&& check) {
  try {
    return check();
  } catch (const oracle::BudgetExceeded& e) {
    return skip(name, std::string("budget exceeded: ") + e.what());
  }
}

std::vector<std::size_t> parse_schedule(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const auto value = std::stoull(item, &pos);
    if (pos != item.size() || value == 0) throw std::invalid_argument("bad --stats entry " + item);
    out.push_back(static_cast<std::size_t>(value));
  }
  if (out.empty()) throw std::invalid_argument("--stats needs at least one size");
  return out;
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("--epsilon must be positive");
  if (config.skeleton < 0) throw std::invalid_argument("--skeleton must be nonnegative");
  if (config.budget == 0) throw std::invalid_argument("--budget must be positive");
}

MetricSpace load_input(const RunConfig& config) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (config.input != "-") {
    file.open(config.input);
    if (!file) throw InputError("cannot open input file " + config.input);
    in = &file;
  }
  if (config.kind == InputKind::matrix) return load_distance_matrix(*in);
  const auto rows = read_point_rows(*in);
  return load_point_cloud(rows, config.metric);
}

std::vector<CheckResult> run_checks(const MetricSpace& m, const RunConfig& config) {
  std::vector<CheckResult> out;
  const auto f = build_sparse_filtration(m, config.epsilon, {config.mutation, 0});
  const auto births = distinct_births(rips_edges(m));

  if (auto problem = check_grid(f.grid, births))
    out.push_back(fail("grid", *problem));
  else
    out.push_back(pass("grid", "|Q|=" + std::to_string(f.grid.size())));

  const auto pairs = sample(anchors_by_step(m, f), config.max_cover_checks);
  out.push_back(check_packings(m, f, pairs));
  out.push_back(guarded("cover-lemma", [&] { return check_covers(m, f, pairs, config); }));

  out.push_back(guarded("interleaving", [&] {
    const auto radii = interleaving_radii(f, m);
    const auto report = verify_interleaving(f, m, config.epsilon, radii);
    if (!report.passed) return fail("interleaving", report.failures.front());
    return pass("interleaving", std::to_string(report.radii_checked) + " radii in R and Q");
  }));

  const auto p = present(f, config.skeleton);
  out.push_back(guarded("reconstruction", [&] { return check_reconstruction(p, f, config); }));
  out.push_back(guarded("generator-count", [&] { return check_generator_count(p, f, config); }));
  out.push_back(guarded("homology", [&] { return check_homology(f, config); }));
  return out;
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    const char* status = c.status == CheckStatus::pass   ? "PASS"
                         : c.status == CheckStatus::fail ? "FAIL"
                                                         : "SKIP";
    out << status << ' ' << c.name << ' ' << c.detail << '\n';
  }
}

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto m = load_input(config);
  const BuildOptions options{config.mutation, 0};
  const auto start = std::chrono::steady_clock::now();
  const auto f = build_sparse_filtration(m, config.epsilon, options);
  const auto p = present(f, config.skeleton);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ofstream file;
  std::ostream& sink = open_output(config.output, file, out);
  if (config.format == OutputFormat::json)
    write_presentation_json(sink, p);
  else
    write_presentation_text(sink, p);

  if (!config.dump_filtration.empty()) {
    std::ofstream dump(config.dump_filtration);
    if (!dump) throw InputError("cannot open " + config.dump_filtration);
    write_filtration_json(dump, f);
  }

  // Summary goes to stderr when the presentation itself went to stdout.
  std::ostream& summary = (&sink == &out) ? err : out;
  std::size_t relations = p.relations.size();
  summary << "n=" << m.size() << " epsilon=" << format_number(config.epsilon)
          << " k=" << config.skeleton << " |Q|=" << p.grid.size()
          << " |G|=" << p.generators.size() << " |H|=" << relations << " size=" << p.size()
          << " time_ms=" << std::fixed << std::setprecision(1) << ms << std::defaultfloat << '\n';

  if (config.verify) {
    const auto checks = run_checks(m, config);
    print_checks(summary, checks);
    const bool failed = std::any_of(checks.begin(), checks.end(),
                                    [](const auto& c) { return c.status == CheckStatus::fail; });
    if (failed) return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto m = load_input(config);
  const auto checks = run_checks(m, config);
  std::ofstream file;
  print_checks(open_output(config.output, file, out), checks);
  const bool failed = std::any_of(checks.begin(), checks.end(),
                                  [](const auto& c) { return c.status == CheckStatus::fail; });
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.stats_schedule.empty()) throw std::invalid_argument("stats needs --stats n1,n2,...");
  std::ofstream file;
  std::ostream& sink = open_output(config.output, file, out, std::ios::app);
  if (config.header)
    sink << "n,epsilon,grid_size,max_maximal,gen0,gen1,genk,relations,size,build_ms\n";
  for (std::size_t n : config.stats_schedule) {
    const auto m = load_point_cloud(uniform_cube_points(n, 2, config.seed), Norm::l2);
    const auto start = std::chrono::steady_clock::now();
    const auto f = build_sparse_filtration(m, config.epsilon, {config.mutation, 0});
    const auto c = count_presentation(f, config.skeleton);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const auto& dims = c.generators_by_dim;
    sink << n << ',' << format_number(config.epsilon) << ',' << c.grid_size << ','
         << c.max_maximal << ',' << dims.front() << ',' << (dims.size() > 1 ? dims[1] : 0) << ','
         << dims.back() << ',' << c.relations << ',' << c.size() << ',' << std::fixed
         << std::setprecision(1) << ms << std::defaultfloat << '\n';
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse (1+eps)-approximate Rips filtrations and their nerve presentations"};
  app.require_subcommand(1);

  RunConfig config;
  std::string kind = "matrix";
  std::string metric = "l2";
  std::string format = "json";
  std::string mutate = "none";
  std::string schedule;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Input CSV path ('-' for stdin)")->required();
    sub->add_option("--kind", kind, "Input kind")->check(CLI::IsMember({"matrix", "points"}));
    sub->add_option("--metric", metric, "Norm for point clouds")
        ->check(CLI::IsMember({"l1", "l2", "linf"}));
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--epsilon", config.epsilon, "Approximation parameter (> 0)");
    sub->add_option("--skeleton", config.skeleton, "Nerve skeleton dimension k (>= 0)");
    sub->add_option("--output", config.output, "Output path (default stdout)");
    sub->add_option("--budget", config.budget, "Oracle enumeration budget");
    sub->add_option("--mutate", mutate, "Test-only fault injection")
        ->check(CLI::IsMember({"none", "drop-cover"}));
  };

  auto* build = app.add_subcommand("build", "Compute the presentation (G, H)");
  add_input(build);
  add_common(build);
  build->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  build->add_flag("--verify", config.verify, "Also run the verification checks");
  build->add_option("--dump-filtration", config.dump_filtration, "Write the filtration as JSON");

  auto* verify = app.add_subcommand("verify", "Check the construction against brute-force oracles");
  add_input(verify);
  add_common(verify);

  auto* stats = app.add_subcommand("stats", "Scaling statistics on uniform random planar samples");
  add_common(stats);
  stats->add_option("--stats", schedule, "Comma-separated point counts, e.g. 100,200,400")
      ->required();
  stats->add_option("--seed", config.seed, "mt19937_64 seed");
  stats->add_flag("--header", config.header, "Print the CSV header row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    config.kind = kind == "points" ? InputKind::points : InputKind::matrix;
    config.metric = *parse_norm(metric);
    config.format = format == "text" ? OutputFormat::text : OutputFormat::json;
    config.mutation = mutate == "drop-cover" ? CoverMutation::drop_cover : CoverMutation::none;
    if (!schedule.empty()) config.stats_schedule = parse_schedule(schedule);
    validate(config);

    if (build->parsed()) return cmd_build(config, out, err);
    if (verify->parsed()) return cmd_verify(config, out, err);
    return cmd_stats(config, out, err);
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
  } catch (const MetricError& e) {
    err << "error: metric: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace sparsenerve::cli
