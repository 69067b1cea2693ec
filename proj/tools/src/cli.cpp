#include "shadowlab_cli/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "shadowlab/canonical.hpp"
#include "shadowlab/clique_degree.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/io/checkpoint.hpp"
#include "shadowlab/io/hg_format.hpp"
#include "shadowlab/io/report.hpp"
#include "shadowlab/kk_order.hpp"
#include "shadowlab/search.hpp"
#include "shadowlab/shifting.hpp"
#include "shadowlab/transform.hpp"
#include "shadowlab/verification.hpp"

namespace shadowlab::cli {

namespace {

using io::Json;

struct Outcome {
  io::ReportParams params;
  Json result;
};

/// "3..8" or a single "5".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "expected N or A..B, got '" + text + "'");
  }
}

VertexSubset parse_vertex_list(const std::string& text) {
  std::vector<Vertex> vs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      vs.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad vertex list '" + text + "'");
    }
  }
  return VertexSubset::from_vertices(vs);
}

Json family_summary(const SubsetFamily& f) {
  Json out;
  out["set_size"] = f.set_size();
  out["size"] = f.size();
  out["sets"] = io::to_json(f);
  return out;
}

void maybe_write(const std::string& path, const UniformHypergraph& h) {
  if (!path.empty()) io::write_hypergraph(h, path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shadows, Kruskal-Katona bounds, shifting and exact extremal search for uniform hypergraphs", "shadowlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::kToolVersion);

  bool no_timing = false;
  std::string input, output, t_text, a1_text, a2_text;
  int n = 0, k = 3, ell = 2, s = 1, i = 0, j = 0, jobs = 1, limit = 0, tceil = 0, copies = 1;
  std::uint64_t m = 0;
  std::size_t max_tasks = 0;
  bool enumerate = false;
  std::string checkpoint_out, resume, family, n_range, t_range;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--no-timing", no_timing, "Report elapsed_ms as null (for byte-comparable reports)");
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", output, "Also write the resulting graph as .hg"); };

  std::function<Outcome()> action;

  auto* shadow_cmd = app.add_subcommand("shadow", "s-shadow of the edge family of a .hg file");
  shadow_cmd->add_option("--input", input, "Input .hg file")->required();
  shadow_cmd->add_option("--s", s, "Target set size")->required();
  add_common(shadow_cmd);
  shadow_cmd->callback([&] {
    action = [&] {
      const UniformHypergraph h = io::read_hypergraph(input);
      Json r;
      r["input_edges"] = h.edge_count();
      r["s"] = s;
      r["shadow"] = family_summary(shadow(h.edges(), s));
      return Outcome{{h.n(), std::nullopt, std::nullopt, h.r()}, r};
    };
  });

  auto* kk_cmd = app.add_subcommand("kk", "Kruskal-Katona minimum shadow and its Lovasz bound");
  kk_cmd->add_option("--m", m, "Family size")->required();
  kk_cmd->add_option("--k", k, "Set size")->required();
  kk_cmd->add_option("--s", s, "Shadow level")->required();
  add_common(kk_cmd);
  kk_cmd->callback([&] {
    action = [&] {
      Json r;
      r["m"] = m;
      r["k"] = k;
      r["s"] = s;
      Json cascade = Json::array();
      for (auto [a, idx] : kk_cascade(m, k)) cascade.push_back(Json::array({a, idx}));
      r["cascade"] = std::move(cascade);
      r["discrete"] = kk_min_shadow(m, k, s);
      if (m >= 1) {
        const double x = lovasz_x(m, k);
        const double bound = gen_binomial(x, s);
        r["lovasz_x"] = io::real_to_json(x);
        r["lovasz_bound"] = io::real_to_json(bound);
      } else {
        r["lovasz_x"] = nullptr;
        r["lovasz_bound"] = nullptr;
      }
      return Outcome{{std::nullopt, std::nullopt, k, std::nullopt}, r};
    };
  });

  auto* compress_cmd = app.add_subcommand("compress", "Replace a family by the antilex initial segment of its size");
  compress_cmd->add_option("--input", input, "Input .hg file")->required();
  add_output(compress_cmd);
  add_common(compress_cmd);
  compress_cmd->callback([&] {
    action = [&] {
      const UniformHypergraph h = io::read_hypergraph(input);
      const SubsetFamily c = compress(h.edges());
      Json r;
      r["compressed"] = family_summary(c);
      if (h.r() >= 2) {
        r["shadow_before"] = shadow(h.edges(), h.r() - 1).size();
        r["shadow_after"] = shadow(c, h.r() - 1).size();
      }
      maybe_write(output, UniformHypergraph(h.n(), c));
      return Outcome{{h.n(), std::nullopt, std::nullopt, h.r()}, r};
    };
  });

  auto* shift_cmd = app.add_subcommand("shift", "Apply the shifting operator S_{i,j}");
  shift_cmd->add_option("--input", input, "Input .hg file")->required();
  shift_cmd->add_option("--i", i, "Target vertex (smaller)")->required();
  shift_cmd->add_option("--j", j, "Source vertex (larger)")->required();
  add_output(shift_cmd);
  add_common(shift_cmd);
  shift_cmd->callback([&] {
    action = [&] {
      const UniformHypergraph h = io::read_hypergraph(input);
      std::size_t moved = 0;
      const UniformHypergraph shifted = shift(h, i, j, moved);
      Json r;
      r["i"] = i;
      r["j"] = j;
      r["moved"] = moved;
      r["graph"] = io::to_json(shifted);
      maybe_write(output, shifted);
      return Outcome{{h.n(), std::nullopt, std::nullopt, h.r()}, r};
    };
  });

  auto* transform_cmd = app.add_subcommand("transform", "Run the two-clique merge transformation");
  transform_cmd->add_option("--input", input, "Input .hg file")->required();
  transform_cmd->add_option("--a1", a1_text, "First clique, e.g. 1,2,3")->required();
  transform_cmd->add_option("--a2", a2_text, "Second clique")->required();
  transform_cmd->add_option("--t", t_text, "Integer t")->required();
  transform_cmd->add_option("--k", k, "Clique order")->required();
  add_output(transform_cmd);
  add_common(transform_cmd);
  transform_cmd->callback([&] {
    action = [&] {
      const UniformHypergraph g = io::read_hypergraph(input);
      const Parameters params{g.n(), parse_rational(t_text), k, g.r()};
      params.validate();
      auto [gout, trace] = g_transform(g, parse_vertex_list(a1_text), parse_vertex_list(a2_text), params);
      maybe_write(output, gout);
      return Outcome{io::ReportParams::from(params), io::to_json(trace)};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Audit one graph: condition, excess, crossing edges, clique pairs");
  verify_cmd->add_option("--input", input, "Input .hg file")->required();
  verify_cmd->add_option("--t", t_text, "Degree parameter (decimal or p/q)")->required();
  verify_cmd->add_option("--k", k, "Clique order")->required();
  verify_cmd->add_option("--ell", ell, "Uniformity")->required();
  add_common(verify_cmd);
  verify_cmd->callback([&] {
    action = [&] {
      const UniformHypergraph h = io::read_hypergraph(input);
      const Parameters params{h.n(), parse_rational(t_text), k, ell};
      params.validate();
      Json r;
      r["condition"] = io::to_json(check_condition(h, params));
      r["audit"] = io::to_json(audit_witness(h, params));
      r["clique_order"] = clique_family_order(params);
      return Outcome{io::ReportParams::from(params), r};
    };
  });

  auto* search_cmd = app.add_subcommand("search", "Exact minimum edge count under the clique-degree condition");
  search_cmd->add_option("--n", n, "Vertex count");
  search_cmd->add_option("--t", t_text, "Degree parameter (decimal or p/q)");
  search_cmd->add_option("--k", k, "Clique order");
  search_cmd->add_option("--ell", ell, "Uniformity");
  search_cmd->add_flag("--enumerate", enumerate, "List every extremal graph up to isomorphism");
  search_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--limit", limit, "Largest n accepted (default 9 for ell=2, 7 otherwise)");
  search_cmd->add_option("--max-tasks", max_tasks, "Stop after this many frontier tasks");
  search_cmd->add_option("--checkpoint-out", checkpoint_out, "Write the frontier here when done or stopped");
  search_cmd->add_option("--resume", resume, "Continue from a checkpoint (its params win)");
  add_common(search_cmd);
  search_cmd->callback([&] {
    action = [&] {
      SearchOptions options;
      options.jobs = jobs;
      options.vertex_limit = limit;
      options.enumerate = enumerate;
      if (max_tasks > 0) options.max_tasks = max_tasks;
      SearchFrontier frontier;
      if (!resume.empty()) {
        frontier = io::load_frontier(resume);
        options.enumerate = frontier.enumerate;
      } else {
        if (n == 0 || t_text.empty()) throw Error(ErrorKind::InvalidInput, "search needs --n and --t (or --resume)");
        frontier = make_frontier(Parameters{n, parse_rational(t_text), k, ell}, options);
      }
      run_frontier(frontier, options);
      if (!checkpoint_out.empty()) io::save_frontier(frontier, checkpoint_out);
      const SearchResult result = summarize(frontier);
      return Outcome{io::ReportParams::from(result.params), io::to_json(result)};
    };
  });

  auto* construct_cmd = app.add_subcommand("construct", "Build the upper-bound or the counterexample family");
  construct_cmd->add_option("--family", family, "upper | counterexample")
      ->required()
      ->check(CLI::IsMember({"upper", "counterexample"}));
  construct_cmd->add_option("--n", n, "Vertex count (upper)");
  construct_cmd->add_option("--t", t_text, "Integer t (upper)");
  construct_cmd->add_option("--ell", ell, "Uniformity (upper)");
  construct_cmd->add_option("--k", k, "Clique order used for the condition check");
  construct_cmd->add_option("--tceil", tceil, "Even ceil(t) (counterexample)");
  construct_cmd->add_option("--copies", copies, "Disjoint copies (counterexample)");
  add_output(construct_cmd);
  add_common(construct_cmd);
  construct_cmd->callback([&] {
    action = [&] {
      Json r;
      r["family"] = family;
      if (family == "upper") {
        if (n == 0 || t_text.empty()) throw Error(ErrorKind::InvalidInput, "upper needs --n and --t");
        const Parameters params{n, parse_rational(t_text), k, ell};
        params.validate();
        const UniformHypergraph h = construct_upper(n, params.t_int(), ell);
        r["graph"] = io::to_json(h);
        r["condition"] = io::to_json(check_condition(h, params));
        maybe_write(output, h);
        return Outcome{io::ReportParams::from(params), r};
      }
      const UniformHypergraph h = construct_counterexample(tceil, copies);
      r["tceil"] = tceil;
      r["copies"] = copies;
      r["graph"] = io::to_json(h);
      r["triangles_per_vertex"] = clique_degrees(h, 3);
      maybe_write(output, h);
      return Outcome{{h.n(), std::nullopt, 3, 2}, r};
    };
  });

  auto* census_cmd = app.add_subcommand("census", "Tabulate optima and isolated-clique presence over n (and t)");
  census_cmd->add_option("--t", t_text, "Single degree parameter");
  census_cmd->add_option("--t-range", t_range, "Integer range A..B of t");
  census_cmd->add_option("--k", k, "Clique order");
  census_cmd->add_option("--ell", ell, "Uniformity");
  census_cmd->add_option("--n,--n-range", n_range, "Range A..B of n")->required();
  census_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--limit", limit, "Largest n accepted");
  add_common(census_cmd);
  census_cmd->callback([&] {
    action = [&] {
      std::vector<Rational> ts;
      if (!t_range.empty()) {
        const auto [lo, hi] = parse_range(t_range);
        for (int v = lo; v <= hi; ++v) ts.emplace_back(v);
      } else if (!t_text.empty()) {
        ts.push_back(parse_rational(t_text));
      } else {
        throw Error(ErrorKind::InvalidInput, "census needs --t or --t-range");
      }
      if (ts.empty()) throw Error(ErrorKind::InvalidInput, "empty t range");
      const auto [n_lo, n_hi] = parse_range(n_range);
      SearchOptions options;
      options.jobs = jobs;
      options.vertex_limit = limit;
      Json tables = Json::array();
      for (const Rational& t : ts) {
        Json rows = Json::array();
        std::optional<int> first_all;
        for (const CensusRow& row : census(t, k, ell, n_lo, n_hi, options)) {
          Json jr;
          jr["n"] = row.params.n;
          jr["in_range"] = row.in_range;
          jr["feasible"] = row.feasible;
          jr["optimum"] = row.feasible ? Json(row.optimum) : Json(nullptr);
          jr["witnesses"] = row.witnesses;
          jr["some_isolated"] = row.some_isolated;
          jr["all_isolated"] = row.all_isolated;
          if (row.all_isolated && !first_all) first_all = row.params.n;
          if (!row.all_isolated && row.feasible) first_all.reset();
          rows.push_back(std::move(jr));
        }
        Json table;
        table["t"] = io::to_json(t);
        table["rows"] = std::move(rows);
        // Smallest n from which every extremal graph up to n_hi has an isolated copy.
        table["all_isolated_from_n"] = first_all ? Json(*first_all) : Json(nullptr);
        tables.push_back(std::move(table));
      }
      Json r;
      r["tables"] = std::move(tables);
      return Outcome{{std::nullopt, ts.size() == 1 ? std::optional<Rational>(ts.front()) : std::nullopt, k, ell}, r};
    };
  });

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("shadowlab");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = action();
    const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::string command = app.get_subcommands().front()->get_name();
    const Json report = io::make_report(command, outcome.params, std::move(outcome.result),
                                        no_timing ? std::nullopt : std::optional<double>(elapsed));
    out << report.dump(2) << '\n';
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace shadowlab::cli
