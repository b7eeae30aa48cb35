// dyncol: dynamic 3-coloring toolkit.
//
// Exit codes: 0 affirmative, 1 negative, 2 input outside the class,
// 3 usage or parse error, 4 search budget exhausted, 5 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "dyncol/classc.hpp"
#include "dyncol/gadgets.hpp"
#include "dyncol/generators.hpp"
#include "dyncol/graph_io.hpp"
#include "dyncol/oracle.hpp"
#include "dyncol/report.hpp"

namespace {

using namespace dyncol;
using report::Json;

enum Exit : int { kYes = 0, kNo = 1, kNotInClass = 2, kUsage = 3, kUnknown = 4, kInternal = 5 };

constexpr std::uint64_t kDefaultSeed = 20240601;

struct Common {
  bool json = false;
  bool timings = false;
  std::uint64_t seed = kDefaultSeed;
  std::string output;  // empty: stdout
};

class PhaseClock {
 public:
  template <typename F>
  auto run(const std::string& phase, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(body())>) {
      body();
      record(phase, start);
    } else {
      auto value = body();
      record(phase, start);
      return value;
    }
  }
  Json json() const { return phases_; }

 private:
  void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
    phases_[phase] = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
                         .count();
  }
  Json phases_ = Json::object();
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return read_file(path);
}

void emit(const Common& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
  } else {
    write_file(common.output, text);
  }
}

struct Run {
  Common& common;
  std::string command;
  PhaseClock clock;
  Json body = Json::object();

  // Prints the run report in JSON mode; returns the exit code unchanged.
  int finish(int code, const Graph* input) {
    if (!common.json) return code;
    Json out{{"command", command}};
    if (input) out["input"] = report::graph_summary(*input);
    out["seed"] = common.seed;
    out["exit_code"] = code;
    for (auto& [key, value] : body.items()) out[key] = value;
    if (common.timings) out["timings_ns"] = clock.json();
    emit(common, out.dump(2) + "\n");
    return code;
  }
};

std::string coloring_line(const std::vector<int>& colors) {
  std::string out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(colors[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_recognize(Common& common, const std::string& input) {
  Run run{common, "recognize"};
  const Graph g = run.clock.run("parse", [&] { return parse_graph(slurp(input)); });
  const MembershipVerdict verdict = run.clock.run("recognize", [&] { return recognize_C(g); });
  run.body["membership"] = report::membership(verdict);
  if (!common.json) std::cout << (verdict.member ? "member" : "not member: " + describe(*verdict.obstruction)) << "\n";
  return run.finish(verdict.member ? kYes : kNotInClass, &g);
}

int cmd_decide(Common& common, const std::string& input) {
  Run run{common, "decide"};
  const Graph g = run.clock.run("parse", [&] { return parse_graph(slurp(input)); });
  const DecideVerdict verdict = run.clock.run("decide", [&] { return decide_dyn3(g); });
  run.body["decision"] = report::decision(verdict);
  if (!common.json) std::cout << (verdict.colorable ? "colorable " : "not colorable ") << to_string(verdict.reason) << "\n";
  return run.finish(verdict.colorable ? kYes : kNo, &g);
}

int cmd_color(Common& common, const std::string& input, const std::string& trace_path) {
  Run run{common, "color"};
  const Graph g = run.clock.run("parse", [&] { return parse_graph(slurp(input)); });
  const ColoringOutcome outcome = run.clock.run("color", [&] { return dynamic_3_color_detailed(g); });
  run.body["decision"] = report::decision(outcome.verdict);
  if (!outcome.coloring) {
    if (!common.json) std::cerr << "not colorable: " << to_string(outcome.verdict.reason) << "\n";
    return run.finish(kNo, &g);
  }
  const ViolationReport check = run.clock.run("verify", [&] { return verify_dynamic(g, *outcome.coloring); });
  if (!check.ok()) {
    std::cerr << "internal error: coloring failed verification\n";
    return run.finish(kInternal, &g);
  }
  if (!trace_path.empty()) write_file(trace_path, report::reduction(*outcome.reduction).dump(2) + "\n");
  run.body["coloring"] = report::coloring(*outcome.coloring);
  run.body["verified"] = true;
  if (common.json) {
    run.body["steps"] = outcome.reduction->trace.steps.size();
  } else {
    emit(common, format_coloring(*outcome.coloring));
  }
  return run.finish(kYes, &g);
}

int cmd_verify(Common& common, const std::string& input, const std::string& coloring_path, int k, bool edge,
               bool proper_only) {
  Run run{common, "verify"};
  const Graph g = run.clock.run("parse", [&] { return parse_graph(slurp(input)); });
  const std::string text = read_file(coloring_path);
  ViolationReport rep;
  if (edge) {
    const EdgeColoring c = parse_edge_coloring(text, g, k);
    rep = run.clock.run("verify", [&] { return verify_dynamic_edge(g, c); });
  } else {
    const VertexColoring c = parse_coloring(text, g.vertex_count(), k);
    rep = run.clock.run("verify", [&] { return proper_only ? verify_proper(g, c) : verify_dynamic(g, c); });
  }
  run.body["report"] = report::violations(rep);
  if (!common.json) {
    if (rep.ok()) std::cout << "ok\n";
    for (const auto& v : rep.violations) {
      std::cout << to_string(v.kind) << " at";
      for (Vertex x : v.site) std::cout << " " << x;
      std::cout << " colors " << coloring_line(v.colors_seen) << "\n";
    }
  }
  return run.finish(rep.ok() ? kYes : kNo, &g);
}

int cmd_exact(Common& common, const std::string& input, const std::string& mode, int k, const SearchBudget& budget) {
  Run run{common, "exact"};
  const Graph g = run.clock.run("parse", [&] { return parse_graph(slurp(input)); });
  run.body["mode"] = mode;

  if (mode == "independence") {
    const IndependenceResult r = run.clock.run("search", [&] { return exact_independence(g, budget); });
    run.body["nodes"] = r.nodes;
    if (!r.value) {
      if (!common.json) std::cout << "unknown\n";
      return run.finish(kUnknown, &g);
    }
    run.body["value"] = *r.value;
    run.body["witness"] = r.witness;
    if (!common.json) std::cout << *r.value << "\n";
    return run.finish(kYes, &g);
  }

  // The edge mode searches the line graph.
  const Graph target = mode == "edge" ? line_graph(g).graph : g;
  const bool dynamic = mode != "chromatic";
  if (k > 0) {
    const ColoringSearch r = run.clock.run("search", [&] {
      return dynamic ? find_dynamic_k_coloring(target, k, budget) : find_proper_k_coloring(target, k, budget);
    });
    run.body["k"] = k;
    run.body["status"] = to_string(r.status);
    run.body["nodes"] = r.nodes;
    if (r.coloring) run.body["witness"] = r.coloring->colors;
    if (!common.json) std::cout << to_string(r.status) << "\n";
    if (r.status == SearchStatus::Unknown) return run.finish(kUnknown, &g);
    return run.finish(r.status == SearchStatus::Found ? kYes : kNo, &g);
  }
  const ExactResult r = run.clock.run("search", [&] {
    if (mode == "chromatic") return exact_chromatic(g, budget);
    if (mode == "edge") return exact_dynamic_edge_chromatic(g, budget);
    return exact_dynamic_chromatic(g, budget);
  });
  run.body["nodes"] = r.nodes;
  if (!r.value) {
    if (!common.json) std::cout << "unknown\n";
    return run.finish(kUnknown, &g);
  }
  run.body["value"] = *r.value;
  if (r.witness) run.body["witness"] = r.witness->colors;
  if (!common.json) std::cout << *r.value << "\n";
  return run.finish(kYes, &g);
}

struct GenOptions {
  std::string family;
  int size = 0;
  std::string name;
  int max_vertices = 14;
};

int cmd_gen(Common& common, const GenOptions& opt) {
  Run run{common, "gen"};
  Graph g;
  std::string family = opt.family;
  if (opt.family == "cycle") {
    g = gen_cycle(opt.size);
  } else if (opt.family == "path") {
    g = gen_path(opt.size);
  } else if (opt.family == "complete") {
    g = gen_complete(opt.size);
  } else if (opt.family == "E") {
    g = gen_E(opt.size);
  } else if (opt.family == "T") {
    g = gen_T(opt.size, common.seed).graph;
  } else if (opt.family == "named") {
    g = named_graph(opt.name);
  } else {
    CorpusParams params;
    params.max_vertices = opt.max_vertices;
    Rng rng(common.seed);
    CorpusInstance inst = gen_C_instance(params, rng);
    g = std::move(inst.graph);
    family = inst.family;
  }
  run.body["family"] = family;
  if (common.json) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    run.body["edges"] = edges;
    return run.finish(kYes, &g);
  }
  emit(common, format_graph(g));
  return kYes;
}

int cmd_linegraph(Common& common, const std::string& input) {
  Run run{common, "linegraph"};
  const Graph g = run.clock.run("parse", [&] { return parse_graph(slurp(input)); });
  const LineGraph lg = run.clock.run("line-graph", [&] { return line_graph(g); });
  if (!common.json) {
    emit(common, format_graph(lg.graph));
    return kYes;
  }
  Json vertices = Json::array();
  for (const Edge& e : lg.edge_of_vertex) vertices.push_back({e.u, e.v});
  Json edges = Json::array();
  for (const Edge& e : lg.graph.edges()) edges.push_back({e.u, e.v});
  run.body["line_graph"] = report::graph_summary(lg.graph);
  run.body["edge_of_vertex"] = vertices;
  run.body["edges"] = edges;
  return run.finish(kYes, &g);
}

int cmd_reduce(Common& common, const std::string& input, const std::vector<int>& j, const std::string& what,
               const SearchBudget& budget) {
  Run run{common, "reduce"};
  const Graph cubic = run.clock.run("parse", [&] { return parse_graph(slurp(input)); });
  run.body["j"] = j;
  run.body["emit"] = what;
  if (what == "report") {
    const EquivalenceReport rep = run.clock.run("equivalence", [&] { return equivalence_report(cubic, j, budget); });
    run.body["report"] = report::equivalence(rep);
    const int code = !rep.consistent ? kNo : !rep.complete() ? kUnknown : kYes;
    if (!common.json) {
      auto word = [](const EquivalenceAnswer& a) { return a.yes ? (*a.yes ? "yes" : "no") : "unknown"; };
      std::cout << "source 3-edge-colorable: " << word(rep.source_edge_3) << "\n"
                << "B dynamically 3-edge-colorable: " << word(rep.subdivided_dynamic_edge_3) << "\n"
                << "L(B) dynamically 3-colorable: " << word(rep.line_dynamic_3) << "\n"
                << "consistent: " << (rep.consistent ? "yes" : "no") << "\n";
    }
    return run.finish(code, &cubic);
  }
  const ReductionInstance inst = run.clock.run("build", [&] { return clawfree_instance(cubic, j); });
  const Graph& out = what == "LB" ? inst.LB->graph : inst.B;
  if (!common.json) {
    emit(common, format_graph(out));
    return kYes;
  }
  Json paths = Json::array();
  for (const auto& p : inst.path_of_edge) paths.push_back(p);
  Json edges = Json::array();
  for (const Edge& e : out.edges()) edges.push_back({e.u, e.v});
  run.body["graph"] = report::graph_summary(out);
  run.body["path_of_edge"] = paths;
  if (what == "LB") {
    Json vertices = Json::array();
    for (const Edge& e : inst.LB->edge_of_vertex) vertices.push_back({e.u, e.v});
    run.body["edge_of_vertex"] = vertices;
  }
  run.body["edges"] = edges;
  return run.finish(kYes, &cubic);
}

// ---------------------------------------------------------------------------
// corpus: generator + oracle cross-validation.

struct CorpusCheck {
  std::string family;
  std::size_t n = 0;
  bool member = false;
  std::optional<bool> oracle;
  bool decide = false;
  bool colored = false;
  bool verified = false;
  std::string error;

  bool passed() const {
    return member && oracle && decide == *oracle && colored == *oracle && (!colored || verified) && error.empty();
  }
};

CorpusCheck check_instance(const CorpusInstance& inst, const SearchBudget& budget) {
  CorpusCheck out;
  out.family = inst.family;
  out.n = inst.graph.vertex_count();
  try {
    out.member = recognize_C(inst.graph).member;
    if (!out.member) return out;
    const ColoringSearch oracle = find_dynamic_k_coloring(inst.graph, 3, budget);
    if (oracle.status != SearchStatus::Unknown) out.oracle = oracle.status == SearchStatus::Found;
    const ColoringOutcome outcome = dynamic_3_color_detailed(inst.graph);
    out.decide = outcome.verdict.colorable;
    out.colored = outcome.coloring.has_value();
    out.verified = out.colored && verify_dynamic(inst.graph, *outcome.coloring).ok();
    if (inst.colorable && out.oracle && *inst.colorable != *out.oracle) out.error = "planted truth disagrees";
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

int cmd_corpus(Common& common, int count, int max_vertices, int threads, const std::string& dump_dir,
               const SearchBudget& budget) {
  Run run{common, "corpus"};
  CorpusParams params;
  params.max_vertices = max_vertices;
  const auto corpus = run.clock.run("generate", [&] { return gen_C_corpus(count, params, common.seed); });

  std::vector<CorpusCheck> checks(corpus.size());
  run.clock.run("check", [&] {
    const int workers = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < corpus.size(); i += workers) checks[i] = check_instance(corpus[i], budget);
      });
    }
    for (auto& t : pool) t.join();
  });

  std::size_t passed = 0, colorable = 0, unknown = 0;
  Json failures = Json::array();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const CorpusCheck& c = checks[i];
    if (c.oracle && *c.oracle) ++colorable;
    if (c.member && !c.oracle) ++unknown;
    if (c.passed()) {
      ++passed;
      continue;
    }
    Json f{{"index", i},
           {"family", c.family},
           {"n", c.n},
           {"member", c.member},
           {"oracle", c.oracle ? Json(*c.oracle) : Json(nullptr)},
           {"decide", c.decide},
           {"colored", c.colored},
           {"error", c.error}};
    if (!dump_dir.empty()) {
      std::filesystem::create_directories(dump_dir);
      const std::string path = (std::filesystem::path(dump_dir) / ("counterexample_" + std::to_string(i) + ".txt"))
                                   .string();
      write_file(path, "# family " + c.family + "\n" + format_graph(corpus[i].graph));
      f["dump"] = path;
    }
    failures.push_back(f);
  }
  run.body["instances"] = checks.size();
  run.body["passed"] = passed;
  run.body["colorable"] = colorable;
  run.body["oracle_unknown"] = unknown;
  run.body["failures"] = failures;
  if (!common.json) {
    std::cout << "instances " << checks.size() << " passed " << passed << " colorable " << colorable << " unknown "
              << unknown << "\n";
    for (const auto& f : failures) std::cout << "FAIL " << f.dump() << "\n";
    std::cout << (passed == checks.size() ? "PASS" : "FAIL") << "\n";
  }
  const int code = passed == checks.size() ? kYes : unknown > 0 && failures.size() == unknown ? kUnknown : kNo;
  return run.finish(code, nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic 3-coloring toolkit for claw-free graphs of maximum degree 3"};
  app.require_subcommand(1);
  Common common;
  SearchBudget budget;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Print a JSON report");
    sub->add_flag("--timings", common.timings, "Include per-phase timings in the JSON report");
    sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
    sub->add_option("-o,--output", common.output, "Write output to this file instead of stdout");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--time-limit", budget.time_limit_seconds, "Search time limit in seconds")->capture_default_str();
    sub->add_option("--max-nodes", budget.max_nodes, "Search node limit")->capture_default_str();
    sub->add_option("--max-vertices", budget.max_vertices, "Largest graph the exact search accepts")
        ->capture_default_str();
  };

  std::string input;
  auto* recognize = app.add_subcommand("recognize", "Test class membership");
  recognize->add_option("input", input, "Edge-list file, '-' for stdin")->required();
  add_common(recognize);

  auto* decide = app.add_subcommand("decide", "Decide dynamic 3-colorability of a class member");
  decide->add_option("input", input, "Edge-list file, '-' for stdin")->required();
  add_common(decide);

  std::string trace_path;
  auto* color = app.add_subcommand("color", "Dynamic 3-coloring of a class member, self-verified");
  color->add_option("input", input, "Edge-list file, '-' for stdin")->required();
  color->add_option("--trace", trace_path, "Write the reduction trace as JSON to this file");
  add_common(color);

  std::string coloring_path;
  int verify_k = 3;
  bool verify_edge = false, verify_proper_only = false;
  auto* verify = app.add_subcommand("verify", "Check a vertex or edge coloring");
  verify->add_option("input", input, "Edge-list file, '-' for stdin")->required();
  verify->add_option("--coloring", coloring_path, "Coloring file")->required();
  verify->add_option("--k", verify_k, "Palette size")->capture_default_str();
  verify->add_flag("--edge", verify_edge, "Coloring file holds an edge coloring");
  verify->add_flag("--proper", verify_proper_only, "Check the adjacency condition only");
  add_common(verify);

  std::string mode = "dynamic";
  int exact_k = 0;
  auto* exact = app.add_subcommand("exact", "Exact search with the brute-force oracle");
  exact->add_option("input", input, "Edge-list file, '-' for stdin")->required();
  exact->add_option("--mode", mode, "Quantity to compute")
      ->check(CLI::IsMember({"dynamic", "chromatic", "edge", "independence"}))
      ->capture_default_str();
  exact->add_option("--k", exact_k, "Test a single palette size instead")->check(CLI::PositiveNumber);
  add_common(exact);
  add_budget(exact);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", gen_opt.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "complete", "E", "T", "named", "corpus"}));
  gen->add_option("--size", gen_opt.size, "n for cycle/path/complete, i for E, triangles for T");
  gen->add_option("--name", gen_opt.name, "Named graph")->check(CLI::IsMember(named_graph_names()));
  gen->add_option("--max-vertices", gen_opt.max_vertices, "Upper size for corpus instances")->capture_default_str();
  add_common(gen);

  auto* linegraph = app.add_subcommand("linegraph", "Line graph of the input");
  linegraph->add_option("input", input, "Edge-list file, '-' for stdin")->required();
  add_common(linegraph);

  std::vector<int> j{1};
  std::string what = "B";
  auto* reduce = app.add_subcommand("reduce", "Edge-subdivision reduction instances from a cubic graph");
  reduce->add_option("--input", input, "Cubic edge-list file, '-' for stdin")->required();
  reduce->add_option("--j", j, "One value for all edges or one per edge in canonical order")
      ->delimiter(',')
      ->capture_default_str();
  reduce->add_option("--emit", what, "What to output")
      ->check(CLI::IsMember({"B", "LB", "report"}))
      ->capture_default_str();
  add_common(reduce);
  add_budget(reduce);

  int corpus_count = 500, corpus_max = 14, corpus_threads = 1;
  std::string dump_dir;
  auto* corpus = app.add_subcommand("corpus", "Cross-validate generator, decision and coloring against the oracle");
  corpus->add_option("--count", corpus_count, "Number of instances")->capture_default_str();
  corpus->add_option("--max-n", corpus_max, "Largest instance")->capture_default_str();
  corpus->add_option("--threads", corpus_threads, "Worker threads")->capture_default_str();
  corpus->add_option("--dump", dump_dir, "Directory for counterexample edge lists");
  add_common(corpus);
  add_budget(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*recognize) return cmd_recognize(common, input);
    if (*decide) return cmd_decide(common, input);
    if (*color) return cmd_color(common, input, trace_path);
    if (*verify) return cmd_verify(common, input, coloring_path, verify_k, verify_edge, verify_proper_only);
    if (*exact) return cmd_exact(common, input, mode, exact_k, budget);
    if (*gen) return cmd_gen(common, gen_opt);
    if (*linegraph) return cmd_linegraph(common, input);
    if (*reduce) return cmd_reduce(common, input, j, what, budget);
    if (*corpus) return cmd_corpus(common, corpus_count, corpus_max, corpus_threads, dump_dir, budget);
  } catch (const NotInClassError& e) {
    std::cerr << e.what() << "\n";
    return kNotInClass;
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
