#include "maxleaf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "maxleaf/bench.hpp"
#include "maxleaf/certificate.hpp"
#include "maxleaf/generate.hpp"
#include "maxleaf/io.hpp"
#include "maxleaf/oracle.hpp"
#include "maxleaf/search.hpp"
#include "maxleaf/tree.hpp"

namespace maxleaf::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string gen;
  std::string format = "edgelist";
  std::string start = "first";
  std::uint64_t seed = 0;
  std::uint64_t budget = OracleOptions{}.budget;
};

void add_input_options(CLI::App* sub, InputOptions& o, bool with_budget) {
  sub->add_option("input", o.path, "Graph file, or - for standard input");
  sub->add_option("--gen", o.gen, "Generator spec instead of a file, e.g. cycle:5, grid:3x3, random:50,100");
  sub->add_option("--format", o.format, "Input/output format")->check(CLI::IsMember({"edgelist", "dimacs"}));
  sub->add_option("--start-policy", o.start, "first, maxdeg, or vertex:<id>");
  sub->add_option("--seed", o.seed, "Seed for random generators");
  if (with_budget) sub->add_option("--budget", o.budget, "Oracle tree budget");
}

Graph load_graph(const InputOptions& o, std::istream& in) {
  if (o.path.empty() == o.gen.empty()) {
    throw std::invalid_argument("give exactly one input: a file path, '-', or --gen=<spec>");
  }
  if (!o.gen.empty()) return generate(InstanceSpec::parse(o.gen, o.seed));

  std::ostringstream text;
  if (o.path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(o.path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + o.path + "'");
    text << file.rdbuf();
  }
  return parse_graph(text.str(), parse_format(o.format));
}

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string edge_lines(const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

void print_lemma_witnesses(const LemmaReport& report, std::ostream& err) {
  for (const auto& check : report.checks) {
    for (const auto& w : check.witnesses) {
      err << "lemma " << check.name << " violated at";
      for (auto v : w) err << ' ' << v;
      err << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Maximum-leaf spanning trees: greedy 2-approximation, certificates, exact oracle", "maxleaf"};
  app.require_subcommand(1);

  InputOptions solve_in;
  bool print_edges = false;
  bool print_dot = false;
  bool print_trace = false;
  auto* solve_cmd = app.add_subcommand("solve", "Build a spanning tree with the greedy expansion");
  add_input_options(solve_cmd, solve_in, false);
  solve_cmd->add_flag("--edges", print_edges, "Print tree edges, one 'u v' per line");
  solve_cmd->add_flag("--dot", print_dot, "Print a Graphviz rendering");
  solve_cmd->add_flag("--trace", print_trace, "Print one line per expansion step");

  InputOptions certify_in;
  auto* certify_cmd = app.add_subcommand("certify", "Print the rank-forest certificate and lemma checks");
  add_input_options(certify_cmd, certify_in, false);

  InputOptions oracle_in;
  bool oracle_edges = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact maximum leaf count by enumeration");
  add_input_options(oracle_cmd, oracle_in, true);
  oracle_cmd->add_flag("--edges", oracle_edges, "Print the optimal tree's edges");

  InputOptions compare_in;
  auto* compare_cmd = app.add_subcommand("compare", "Compare the greedy tree with the exact optimum");
  add_input_options(compare_cmd, compare_in, true);

  InputOptions gen_in;
  auto* gen_cmd = app.add_subcommand("gen", "Print a generated instance");
  gen_cmd->add_option("spec", gen_in.gen, "Generator spec, e.g. grid:3x3")->required();
  gen_cmd->add_option("--format", gen_in.format, "Output format")->check(CLI::IsMember({"edgelist", "dimacs"}));
  gen_cmd->add_option("--seed", gen_in.seed, "Generator seed");

  std::string ladder = "16:21";
  BenchOptions bench;
  std::string bench_start = "first";
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver over a doubling edge-count ladder");
  bench_cmd->add_option("--ladder", ladder, "Exponent range <start:stop> for m = 2^e");
  bench_cmd->add_option("--runs", bench.runs, "Timed runs per rung");
  bench_cmd->add_option("--seed", bench.seed, "Generator seed");
  bench_cmd->add_option("--start-policy", bench_start, "first, maxdeg, or vertex:<id>");

  TightSearchOptions tight;
  std::string tight_start = "first";
  std::string tight_out = "tight_best.edgelist";
  std::uint64_t tight_budget = OracleOptions{}.budget;
  auto* tight_cmd = app.add_subcommand("tight-search", "Search for instances far from optimal");
  tight_cmd->add_option("--n-max", tight.n_max, "Largest vertex count");
  tight_cmd->add_option("--n-min", tight.n_min, "Smallest vertex count");
  tight_cmd->add_option("--trials", tight.trials, "Graphs to evaluate");
  tight_cmd->add_option("--seed", tight.seed, "Search seed");
  tight_cmd->add_option("--start-policy", tight_start, "first, maxdeg, or vertex:<id>");
  tight_cmd->add_flag("--trees-only", tight.trees_only, "Only consider trees (m = n - 1)");
  tight_cmd->add_option("--out", tight_out, "File receiving the best instance (empty: none)");
  tight_cmd->add_option("--budget", tight_budget, "Oracle tree budget for the final check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) {
      const auto g = load_graph(solve_in, in);
      const auto sol = solve(g, StartPolicy::parse(solve_in.start));
      out << "n=" << g.num_vertices() << "\nm=" << g.num_edges()
          << "\nleaves=" << leaf_count(sol.tree) << "\n";
      if (print_trace) out << sol.trace.debug_lines();
      if (print_edges) out << edge_lines(sol.tree.edges());
      if (print_dot) out << to_dot(g, &sol.tree);
      return kOk;
    }

    if (*certify_cmd) {
      const auto g = load_graph(certify_in, in);
      const auto policy = StartPolicy::parse(certify_in.start);
      if (g.num_vertices() < 3) {
        if (!is_connected(g)) throw NotConnectedError();
        err << "unsupported size: certificates need n >= 3 (got n=" << g.num_vertices() << ")\n";
        return kUsage;
      }
      const auto run = certify(g, policy);
      out << run.certificate.to_text() << "lemmas=" << (run.lemmas.pass() ? "pass" : "fail") << "\n";
      if (!run.lemmas.pass()) {
        print_lemma_witnesses(run.lemmas, err);
        return kViolation;
      }
      return kOk;
    }

    if (*oracle_cmd) {
      const auto g = load_graph(oracle_in, in);
      OracleOptions opts;
      opts.budget = oracle_in.budget;
      const auto res = max_leaf_exact(g, opts);
      out << "n=" << g.num_vertices() << "\nm=" << g.num_edges() << "\nopt=" << res.opt_leaves
          << "\ntrees_examined=" << res.trees_examined
          << "\ncomplete=" << (res.complete ? "true" : "false") << "\n";
      if (oracle_edges) out << edge_lines(res.witness.edges());
      if (!res.complete) {
        err << "oracle budget of " << opts.budget << " trees exhausted; opt is a lower bound\n";
        return kBudget;
      }
      return kOk;
    }

    if (*compare_cmd) {
      const auto g = load_graph(compare_in, in);
      OracleOptions opts;
      opts.budget = compare_in.budget;
      const auto c = compare(g, StartPolicy::parse(compare_in.start), opts);
      out << "alg=" << c.alg_leaves << " opt=" << c.opt_leaves << " ratio=" << fixed4(c.ratio)
          << " bound_ok=" << (c.bound_ok ? "true" : "false") << "\n";
      if (c.certificate) {
        out << "upper_bound=" << c.certificate->upper_bound
            << " certificate_ok=" << (*c.certificate_ok ? "true" : "false") << "\n";
      }
      if (!c.bound_ok || (c.certificate_ok && !*c.certificate_ok)) {
        err << "approximation guarantee violated\n";
        return kViolation;
      }
      return kOk;
    }

    if (*gen_cmd) {
      const auto g = generate(InstanceSpec::parse(gen_in.gen, gen_in.seed));
      out << serialize_graph(g, parse_format(gen_in.format));
      return kOk;
    }

    if (*bench_cmd) {
      const auto colon = ladder.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("--ladder expects <start:stop>");
      bench.first_exponent = static_cast<unsigned>(std::stoul(ladder.substr(0, colon)));
      bench.last_exponent = static_cast<unsigned>(std::stoul(ladder.substr(colon + 1)));
      bench.policy = StartPolicy::parse(bench_start);
      out << bench_csv(run_bench(bench));
      return kOk;
    }

    if (*tight_cmd) {
      tight.policy = StartPolicy::parse(tight_start);
      const auto res = tight_search(tight);
      const auto& best = res.best;
      OracleOptions opts;
      opts.budget = tight_budget;
      const auto check = max_leaf_exact(best.graph, opts);
      out << "trials=" << res.trials_run << "\nn=" << best.graph.num_vertices()
          << "\nm=" << best.graph.num_edges() << "\nalg=" << best.alg_leaves
          << "\nopt=" << best.opt_leaves << "\nratio=" << fixed4(best.ratio())
          << "\ntight=" << (best.reaches_tight_ratio() ? "true" : "false")
          << "\noracle_checked=" << (check.complete ? "true" : "false") << "\n";
      out << serialize_graph(best.graph, Format::edgelist);
      if (!tight_out.empty()) {
        std::ofstream file(tight_out, std::ios::binary);
        if (!file) throw InputError("cannot write '" + tight_out + "'");
        file << "# alg=" << best.alg_leaves << " opt=" << best.opt_leaves << "\n"
             << serialize_graph(best.graph, Format::edgelist);
      }
      if (check.complete && check.opt_leaves != best.opt_leaves) {
        err << "oracles disagree: enumeration gives " << check.opt_leaves << "\n";
        return kViolation;
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kParseError;
  } catch (const NotConnectedError& e) {
    err << "error: " << e.what() << "\n";
    return kDisconnected;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what();
    for (auto v : e.witness()) err << ' ' << v;
    err << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace maxleaf::cli
