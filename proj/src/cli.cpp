#include "dimkit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dimkit/driver.hpp"
#include "dimkit/generator.hpp"
#include "dimkit/oracle.hpp"
#include "dimkit/patterns.hpp"

namespace dimkit {

unsigned worker_count() {
  if (const char* env = std::getenv("DIMKIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Runs job(i) for i in [0, count) on up to worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  for (auto& t : pool) t.join();
}

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  return read_graph_file(path);
}

struct SolveFlags {
  bool json = false;
  bool check_p9 = false;
  bool deterministic = false;
  std::uint64_t budget_branches = 0;
  std::uint64_t budget_seeds = 0;
  int oracle_max_n = 18;

  void attach(CLI::App* app, int default_oracle_n) {
    oracle_max_n = default_oracle_n;
    app->add_flag("--json", json, "Print the JSON report");
    app->add_flag("--check-p9", check_p9, "Test the input for an induced P9");
    app->add_flag("--deterministic", deterministic, "Report 0 ms so runs compare byte for byte");
    app->add_option("--budget-branches", budget_branches, "Branch budget per component (0: n^2)");
    app->add_option("--budget-seeds", budget_seeds, "Seed budget per component (0: automatic)");
    app->add_option("--oracle-max-n", oracle_max_n,
                    "Exhaustive fallback for inconclusive components up to this size")
        ->capture_default_str();
  }

  SolveConfig config() const {
    SolveConfig cfg;
    cfg.check_p9 = check_p9;
    cfg.deterministic = deterministic;
    cfg.branch_budget = budget_branches;
    cfg.seed_budget = budget_seeds;
    cfg.oracle_max_n = oracle_max_n;
    return cfg;
  }
};

int exit_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Dim: return kExitDim;
    case SolveStatus::NoDim: return kExitNoDim;
    case SolveStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

void print_human(std::ostream& out, const SolveOutcome& o) {
  out << "# status: " << status_name(o.status) << '\n';
  if (!o.reason.empty()) out << "# reason: " << o.reason << '\n';
  out << "# edges tried " << o.stats.edges_tried << ", forced edges " << o.stats.forced_edges
      << ", branches " << o.stats.branches << ", " << o.stats.millis << " ms\n";
  out << serialize_matching(o.matching);
}

std::string file_stem(const std::string& kind, int n, std::uint64_t seed) {
  return kind + "_n" + std::to_string(n) + "_s" + std::to_string(seed);
}

struct GenFlags {
  int n = 10;
  int k = 2;
  int extra = 0;
  double p = 0.2;
  std::uint64_t seed = 1;
  int count = 1;
  int max_n = 6;
  std::string out_dir;
  bool k4_free = false;
  bool db_free = false;
  bool p9_free = false;
};

struct Emitted {
  std::string stem;
  Graph graph;
  std::string label;
  P9Label p9 = P9Label::Unchecked;
  std::uint64_t seed = 0;
};

int emit(const std::vector<Emitted>& items, const std::string& dir, std::ostream& out,
         std::ostream& err) {
  if (dir.empty()) {
    if (items.size() != 1) {
      err << "gen: --out is required for more than one instance\n";
      return kInputError;
    }
    out << serialize_graph(items[0].graph);
    return 0;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    err << "gen: cannot create " << dir << ": " << ec.message() << '\n';
    return kInputError;
  }
  std::ofstream manifest(std::filesystem::path(dir) / "manifest.jsonl");
  for (const Emitted& e : items) {
    std::string name = e.stem + ".graph";
    std::ofstream f(std::filesystem::path(dir) / name);
    f << serialize_graph(e.graph);
    if (!f) {
      err << "gen: cannot write " << name << '\n';
      return kInputError;
    }
    manifest << manifest_line(name, e.graph, e.label, e.p9, e.seed) << '\n';
  }
  out << items.size() << " instances written to " << dir << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dominating induced matching toolkit", "dimkit"};
  app.require_subcommand(1);

  std::string graph_path, matching_path;
  std::vector<std::string> corpus;
  SolveFlags sf;

  auto* solve_cmd = app.add_subcommand("solve", "Decide whether a graph has a d.i.m.");
  solve_cmd->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  sf.attach(solve_cmd, 18);

  auto* explain_cmd = app.add_subcommand("explain", "Solve and print every decision taken");
  explain_cmd->add_option("graph", graph_path, "Graph file")->required();
  SolveFlags ef;
  ef.attach(explain_cmd, 18);

  auto* verify_cmd = app.add_subcommand("verify", "Check a matching against the definition");
  verify_cmd->add_option("graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("matching", matching_path, "Matching file, one 'u v' per line")
      ->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search and d.i.m. count");
  oracle_cmd->add_option("graph", graph_path, "Graph file")->required();
  std::uint64_t oracle_limit = kDefaultOracleLimit;
  oracle_cmd->add_option("--limit", oracle_limit, "Search node limit")->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "Report structural facts about a graph");
  check_cmd->add_option("graph", graph_path, "Graph file")->required();

  GenFlags gf;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* planted_cmd = gen_cmd->add_subcommand("planted", "Graph with a planted d.i.m.");
  planted_cmd->add_option("--n", gf.n)->capture_default_str();
  planted_cmd->add_option("--k", gf.k, "Matched pairs")->capture_default_str();
  planted_cmd->add_option("--extra", gf.extra, "Extra White-Black edges")->capture_default_str();
  auto* random_cmd = gen_cmd->add_subcommand("random", "G(n, p) with optional filters");
  random_cmd->add_option("--n", gf.n)->capture_default_str();
  random_cmd->add_option("--p", gf.p)->capture_default_str();
  random_cmd->add_flag("--k4-free", gf.k4_free);
  random_cmd->add_flag("--diamond-butterfly-free", gf.db_free);
  random_cmd->add_flag("--p9-free", gf.p9_free);
  auto* small_cmd = gen_cmd->add_subcommand("small", "All connected graphs up to --max-n");
  small_cmd->add_option("--max-n", gf.max_n)->capture_default_str();
  for (auto* c : {planted_cmd, random_cmd}) {
    c->add_option("--seed", gf.seed)->capture_default_str();
    c->add_option("--count", gf.count)->capture_default_str();
  }
  for (auto* c : {planted_cmd, random_cmd, small_cmd})
    c->add_option("--out", gf.out_dir, "Directory for graph files and manifest.jsonl");

  auto* cross_cmd = app.add_subcommand("cross-check", "Compare solver and oracle");
  int cc_max_n = 8, cc_count = 1000;
  std::uint64_t cc_seed = 1;
  cross_cmd->add_option("corpus", corpus, "Graph files; random graphs when none");
  cross_cmd->add_option("--max-n", cc_max_n)->capture_default_str();
  cross_cmd->add_option("--count", cc_count)->capture_default_str();
  cross_cmd->add_option("--seed", cc_seed)->capture_default_str();
  SolveFlags cf;
  cf.attach(cross_cmd, 0);

  auto* bench_cmd = app.add_subcommand("bench", "CSV timings over planted instances");
  int bench_max_n = 2000;
  std::uint64_t bench_seed = 1;
  bool no_dim_family = false;
  bench_cmd->add_option("--max-n", bench_max_n)->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed)->capture_default_str();
  bench_cmd->add_flag("--no-dim-family", no_dim_family,
                      "Planted graph plus a disjoint C4, which has no d.i.m.");
  SolveFlags bf;
  bf.attach(bench_cmd, 18);

  std::vector<std::string> argv_store{"dimkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (solve_cmd->parsed() || explain_cmd->parsed()) {
      const bool explain = explain_cmd->parsed();
      SolveConfig cfg = explain ? ef.config() : sf.config();
      cfg.trace = explain;
      Graph g = load_graph(graph_path);
      SolveOutcome o = solve(g, cfg);
      if (explain)
        for (const std::string& line : o.log) out << line << '\n';
      if (explain ? ef.json : sf.json)
        out << to_json(o) << '\n';
      else
        print_human(out, o);
      return exit_for(o.status);
    }

    if (verify_cmd->parsed()) {
      Graph g = load_graph(graph_path);
      Matching m = read_matching_file(matching_path, g);
      VerifyResult v = verify_dim(g, m);
      if (v) {
        out << "ok: " << m.size() << " edges form a d.i.m.\n";
        return 0;
      }
      out << "not a d.i.m.: " << v.reason << '\n';
      return 1;
    }

    if (oracle_cmd->parsed()) {
      Graph g = load_graph(graph_path);
      OracleReport found = oracle_dim(g, oracle_limit);
      OracleReport counted = count_dims(g, oracle_limit);
      if (found.limit_hit) {
        out << "# status: limit reached after " << found.explored << " nodes\n";
        return kExitInconclusive;
      }
      out << "# status: " << (found.found ? "dim" : "no-dim") << '\n';
      if (counted.count) out << "# count: " << *counted.count << '\n';
      if (found.found) out << serialize_matching(*found.found);
      return found.found ? kExitDim : kExitNoDim;
    }

    if (check_cmd->parsed()) {
      Graph g = load_graph(graph_path);
      auto comps = connected_components(g);
      out << "n " << g.n() << "\nm " << g.m() << "\ncomponents " << comps.size() << '\n';
      auto k4 = find_k4(g);
      out << "k4 " << (k4 ? "yes" : "no") << '\n';
      if (!k4) {
        std::size_t diamonds = 0, butterflies = 0;
        for (const PatternHit& h : scan_forced_patterns(g))
          (h.kind == PatternKind::Diamond ? diamonds : butterflies) += 1;
        out << "diamonds " << diamonds << "\nbutterflies " << butterflies << '\n';
      }
      auto p9 = find_induced_path(g, 9);
      out << "p9 " << (p9 ? "present" : "free");
      if (p9)
        for (Vertex v : p9->vertices) out << ' ' << v;
      out << '\n';
      return 0;
    }

    if (gen_cmd->parsed()) {
      std::vector<Emitted> items;
      if (planted_cmd->parsed()) {
        for (int i = 0; i < gf.count; ++i) {
          std::uint64_t s = gf.seed + static_cast<std::uint64_t>(i);
          PlantedInstance pi = gen_planted(gf.n, gf.k, gf.extra, s);
          items.push_back({file_stem("planted", gf.n, s), pi.graph, "dim", pi.p9_free, s});
        }
      } else if (random_cmd->parsed()) {
        RandomFilters f{gf.k4_free, gf.db_free, gf.p9_free};
        for (int i = 0; i < gf.count; ++i) {
          std::uint64_t s = gf.seed + static_cast<std::uint64_t>(i);
          RandomDraw d = gen_random(gf.n, gf.p, s, f);
          if (!d.graph) {
            err << "gen: seed " << s << " rejected after " << d.attempts << " attempts ("
                << d.rejection << ")\n";
            return kInputError;
          }
          std::string label = "unknown";
          if (gf.n <= 20) label = oracle_dim(*d.graph).found ? "dim" : "no-dim";
          P9Label p9 = find_induced_path(*d.graph, 9) ? P9Label::Violated : P9Label::Verified;
          items.push_back({file_stem("random", gf.n, s), *d.graph, label, p9, s});
        }
      } else {
        std::size_t index = 0;
        for (CorpusEntry& e : emit_small_corpus(gf.max_n))
          items.push_back({"small_n" + std::to_string(e.graph.n()) + "_" + std::to_string(index++),
                           e.graph,
                           e.dim ? "dim" : "no-dim",
                           e.p9_free ? P9Label::Verified : P9Label::Violated, 0});
      }
      return emit(items, gf.out_dir, out, err);
    }

    if (cross_cmd->parsed()) {
      SolveConfig cfg = cf.config();
      cfg.deterministic = true;
      std::vector<Graph> graphs;
      std::vector<std::string> names;
      if (!corpus.empty()) {
        for (const std::string& p : corpus) {
          graphs.push_back(load_graph(p));
          names.push_back(p);
        }
      } else {
        if (cc_max_n < 2 || cc_count < 0) {
          err << "cross-check: need --max-n >= 2 and --count >= 0\n";
          return kInputError;
        }
        const double ps[] = {0.1, 0.2, 0.3};
        for (int i = 0; i < cc_count; ++i) {
          int n = 2 + i % (cc_max_n - 1);
          std::uint64_t s = cc_seed * 1000003ULL + static_cast<std::uint64_t>(i);
          graphs.push_back(*gen_random(n, ps[i % 3], s).graph);
          names.push_back("random #" + std::to_string(i) + " (n=" + std::to_string(n) + ")");
        }
      }
      std::vector<std::string> verdict(graphs.size());
      std::vector<int> kind(graphs.size(), 0);  // 0 agree, 1 disagree, 2 inconclusive
      parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        OracleReport o = oracle_dim(g);
        SolveOutcome s = solve(g, cfg);
        if (o.limit_hit) {
          kind[i] = 2;
          verdict[i] = "oracle limit";
          return;
        }
        if (s.status == SolveStatus::Inconclusive) {
          kind[i] = 2;
          verdict[i] = s.reason;
          return;
        }
        bool solver_dim = s.status == SolveStatus::Dim;
        if (solver_dim != o.found.has_value() || (solver_dim && !verify_outcome(g, s))) {
          kind[i] = 1;
          verdict[i] = std::string("solver ") + std::string(status_name(s.status)) + ", oracle " +
                       (o.found ? "dim" : "no-dim");
        }
      });
      std::size_t bad = 0, unsure = 0;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (kind[i] == 1) {
          ++bad;
          out << "disagreement: " << names[i] << ": " << verdict[i] << '\n';
        } else if (kind[i] == 2) {
          ++unsure;
          out << "inconclusive: " << names[i] << ": " << verdict[i] << '\n';
        }
      }
      out << graphs.size() << " instances, " << bad << " disagreements, " << unsure
          << " inconclusive\n";
      return bad == 0 ? 0 : 1;
    }

    if (bench_cmd->parsed()) {
      SolveConfig cfg = bf.config();
      std::vector<int> sizes;
      for (int n = 250; n <= bench_max_n; n *= 2) sizes.push_back(n);
      if (sizes.empty()) sizes.push_back(std::max(bench_max_n, 2));
      out << "n,m,millis,status\n";
      bool all_ok = true;
      for (int n : sizes) {
        PlantedInstance pi = gen_planted(n, n / 5, 3 * n / 2, bench_seed, true, false);
        Graph g = pi.graph;
        if (no_dim_family) g = disjoint_union(g, cycle_graph(4));
        auto t0 = std::chrono::steady_clock::now();
        SolveOutcome o = solve(g, cfg);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        SolveStatus expect = no_dim_family ? SolveStatus::NoDim : SolveStatus::Dim;
        if (o.status != expect) all_ok = false;
        out << g.n() << ',' << g.m() << ',' << ms << ',' << status_name(o.status) << '\n';
      }
      return all_ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace dimkit
