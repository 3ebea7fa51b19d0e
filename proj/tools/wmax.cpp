// wmax - Wiener index engine and extremal-structure verifier.
// Streaming subcommands read one graph6 string per line and emit one JSON
// object per line; exit codes: 0 success / all checks pass, 1 verification
// failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "wmax/blocks.hpp"
#include "wmax/canonical.hpp"
#include "wmax/compose.hpp"
#include "wmax/enumerate.hpp"
#include "wmax/families.hpp"
#include "wmax/graph.hpp"
#include "wmax/graph6.hpp"
#include "wmax/rewrites.hpp"
#include "wmax/search.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected N or LO..HI, got '" + text + "'");
  }
  if (r.lo > r.hi) throw CLI::ValidationError("empty range '" + text + "'");
  return r;
}

std::string strip(const std::string& line) {
  const auto end = line.find_last_not_of(" \t\r\n");
  return end == std::string::npos ? std::string() : line.substr(0, end + 1);
}

// applies fn to every nonempty graph6 line; emits an error object and
// returns exit 2 if any line is malformed or rejected
int for_each_line(const std::string& file,
                  const std::function<json(const wmax::Graph&)>& fn) {
  std::ifstream stream;
  if (!file.empty()) {
    stream.open(file);
    if (!stream) {
      std::cerr << "cannot open " << file << "\n";
      return kExitUsage;
    }
  }
  std::istream& in = file.empty() ? std::cin : stream;
  int exit_code = kExitOk;
  std::string line;
  for (long long lineno = 1; std::getline(in, line); ++lineno) {
    const std::string text = strip(line);
    if (text.empty()) continue;
    try {
      std::cout << fn(wmax::graph6_decode(text)).dump() << "\n";
    } catch (const std::exception& err) {
      std::cout << json{{"line", lineno}, {"error", err.what()}}.dump() << "\n";
      exit_code = kExitUsage;
    }
  }
  return exit_code;
}

json wiener_line(const wmax::Graph& g) {
  json out;
  out["w"] = wiener(g);
  json trans = json::array(), ecc = json::array();
  for (int v = 0; v < g.size(); ++v) {
    const auto dv = wmax::distance_vector(g, v);
    trans.push_back(dv.weighted_sum());
    ecc.push_back(dv.eccentricity());
  }
  out["transmissions"] = std::move(trans);
  out["eccentricities"] = std::move(ecc);
  return out;
}

json blocks_line(const wmax::Graph& g) {
  const auto dec = wmax::block_decomposition(g);
  const auto tree = wmax::blocks_tree(dec);
  json out;
  out["n"] = g.size();
  out["p"] = dec.block_count();
  out["cut_vertices"] = dec.cut_vertices;
  json blocks = json::array();
  for (const auto& b : dec.blocks) {
    json jb;
    jb["vertices"] = b.vertices;
    json edges = json::array();
    for (auto [u, v] : b.edges) edges.push_back({u, v});
    jb["edges"] = std::move(edges);
    blocks.push_back(std::move(jb));
  }
  out["blocks"] = std::move(blocks);
  json tree_edges = json::array();
  for (auto [b, v] : tree.edges) tree_edges.push_back({b, v});
  out["tree"] = std::move(tree_edges);
  return out;
}

json climb_line(const wmax::Graph& g) {
  const auto result = wmax::hill_climb(g);
  json out;
  out["fixpoint"] = wmax::graph6_encode(result.fixpoint);
  out["w"] = wiener(result.fixpoint);
  json steps = json::array();
  for (const auto& step : result.trace)
    steps.push_back(
        {{"rule", wmax::rule_name(step.rule)}, {"delta_w", step.delta_w}});
  out["steps"] = std::move(steps);
  return out;
}

json extremal_json(const wmax::ExtremalResult& r) {
  json out;
  out["n"] = r.n;
  out["p"] = r.p;
  out["max_w"] = r.max_w;
  out["extremal"] = r.extremal_graphs;
  out["family_match"] = r.family_match;
  json wit = json::array();
  for (auto [a, b] : r.witness_params) wit.push_back({a, b});
  out["witness_params"] = std::move(wit);
  return out;
}

int run_family(int a, int b, int p) {
  const wmax::FamilyParams params(a, b, p);
  const wmax::Graph g = wmax::two_cycles_path(params);
  json out;
  out["graph6"] = wmax::graph6_encode(g);
  out["n"] = params.n();
  out["p"] = params.p;
  out["a"] = params.a;
  out["b"] = params.b;
  out["w"] = wmax::wiener_chain(wmax::two_cycles_path_spec(params));
  out["w_cycle_a"] = wmax::closed_wiener_cycle(params.a);
  out["w_cycle_b"] = wmax::closed_wiener_cycle(params.b);
  out["w_path_middle"] = wmax::closed_wiener_path(params.p - 1);
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_search(Range ns, std::optional<Range> ps, int jobs) {
  for (int n = ns.lo; n <= ns.hi; ++n) {
    const Range pr = ps ? *ps : Range{1, n - 1};
    const auto all = wmax::max_wiener_all(n, jobs);
    for (int p = std::max(1, pr.lo); p <= std::min(n - 1, pr.hi); ++p)
      std::cout << extremal_json(all[static_cast<size_t>(p - 1)]).dump() << "\n";
  }
  return kExitOk;
}

struct VerifySelection {
  bool main = false, two_cycle = false, kdist = false, theta = false;
  std::optional<Range> n, k;
  int jobs = 0;
};

int run_verify(const VerifySelection& sel) {
  bool all_pass = true;
  auto clamp = [](Range r, int lo, int hi) {
    return Range{std::max(r.lo, lo), std::min(r.hi, hi)};
  };

  if (sel.main) {
    const Range r = clamp(sel.n.value_or(Range{3, 8}), 3, 10);
    for (int n = r.lo; n <= r.hi; ++n)
      for (const auto& c : wmax::verify_main(n, sel.jobs)) {
        all_pass = all_pass && c.pass;
        json out{{"check", "main"},
                 {"n", c.n},
                 {"p", c.p},
                 {"max_w", c.exhaustive_max},
                 {"family_w", c.family_best},
                 {"pass", c.pass}};
        json wit = json::array();
        for (auto [a, b] : c.witness_params) wit.push_back({a, b});
        out["witness_params"] = std::move(wit);
        out["outside_family"] = c.outside_family;
        std::cout << out.dump() << "\n";
      }
  }
  if (sel.two_cycle) {
    const Range r = clamp(sel.n.value_or(Range{5, 40}), 5, 40);
    for (int n = r.lo; n <= r.hi; ++n) {
      const auto c = wmax::verify_two_cycle_family(n);
      all_pass = all_pass && c.pass;
      std::cout << json{{"check", "two_cycle"},
                        {"n", c.n},
                        {"argmax_r", c.argmax_r},
                        {"edge_w", c.edge_case_w},
                        {"pass", c.pass}}
                       .dump()
                << "\n";
    }
  }
  if (sel.kdist) {
    const Range r = clamp(sel.n.value_or(Range{4, 8}), 4, 8);
    for (int n = r.lo; n <= r.hi; ++n) {
      const Range kr = clamp(sel.k.value_or(Range{3, n - 1}), 3, n - 1);
      for (int k = kr.lo; k <= kr.hi; ++k) {
        const auto c = wmax::verify_kdist(n, k, sel.jobs);
        all_pass = all_pass && c.pass;
        std::cout << json{{"check", "kdist"},
                          {"n", c.n},
                          {"k", c.k},
                          {"equality_count", c.equality_count},
                          {"witness_found", c.witness_found},
                          {"pass", c.pass}}
                         .dump()
                  << "\n";
      }
    }
  }
  if (sel.theta) {
    const Range r = clamp(sel.n.value_or(Range{4, 9}), 4, 9);
    for (int n = r.lo; n <= r.hi; ++n) {
      const auto c = wmax::verify_theta(n, sel.jobs);
      all_pass = all_pass && c.pass;
      std::cout << json{{"check", "theta"},
                        {"n", c.n},
                        {"classes", c.classes_checked},
                        {"witnesses", c.witnesses},
                        {"non_theta_witnesses", c.non_theta_witnesses},
                        {"pass", c.pass}}
                       .dump()
                << "\n";
    }
  }
  std::cout << json{{"all_pass", all_pass}}.dump() << "\n";
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener index engine and extremal-structure verifier"};
  app.require_subcommand(1);

  std::string file;
  auto* cmd_wiener = app.add_subcommand(
      "wiener", "Wiener index, transmissions and eccentricities per graph");
  cmd_wiener->add_option("file", file, "graph6 input file (default stdin)");
  auto* cmd_blocks =
      app.add_subcommand("blocks", "block decomposition and blocks-tree");
  cmd_blocks->add_option("file", file, "graph6 input file (default stdin)");
  auto* cmd_climb =
      app.add_subcommand("climb", "hill-climb to a rewrite fixpoint");
  cmd_climb->add_option("file", file, "graph6 input file (default stdin)");

  int fam_a = 0, fam_b = 0, fam_p = 0;
  auto* cmd_family = app.add_subcommand(
      "family", "build a two-cycles-with-a-path family member");
  cmd_family->add_option("--a", fam_a, "first cycle size (>= 2)")->required();
  cmd_family->add_option("--b", fam_b, "second cycle size (>= 2)")->required();
  cmd_family->add_option("--p", fam_p, "block count (>= 2)")->required();

  std::string search_n, search_p;
  int jobs = 0;
  auto* cmd_search = app.add_subcommand(
      "search", "exhaustive maximum W over graphs with n vertices, p blocks");
  cmd_search->add_option("--n", search_n, "vertex count or range LO..HI")
      ->required();
  cmd_search->add_option("--p", search_p, "block count or range LO..HI");
  cmd_search->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  VerifySelection sel;
  std::string verify_n, verify_k;
  auto* cmd_verify = app.add_subcommand("verify", "run theorem verifiers");
  cmd_verify->add_flag("--main", sel.main,
                       "exhaustive maximum equals the family maximum");
  cmd_verify->add_flag("--two-cycle", sel.two_cycle,
                       "two-cycle family argmax and orderings");
  cmd_verify->add_flag("--kdist", sel.kdist,
                       "k-subset minimum distance bound and equality cases");
  cmd_verify->add_flag("--theta", sel.theta,
                       "triple distance-sum bound over 2-connected graphs");
  cmd_verify->add_option("--n", verify_n, "restrict n (N or LO..HI)");
  cmd_verify->add_option("--k", verify_k, "restrict k (N or LO..HI)");
  cmd_verify->add_option("--jobs", sel.jobs, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the error message
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_wiener->parsed()) return for_each_line(file, wiener_line);
    if (cmd_blocks->parsed()) return for_each_line(file, blocks_line);
    if (cmd_climb->parsed()) return for_each_line(file, climb_line);
    if (cmd_family->parsed()) return run_family(fam_a, fam_b, fam_p);
    if (cmd_search->parsed()) {
      std::optional<Range> pr;
      if (!search_p.empty()) pr = parse_range(search_p);
      return run_search(parse_range(search_n), pr, jobs);
    }
    if (cmd_verify->parsed()) {
      if (!sel.main && !sel.two_cycle && !sel.kdist && !sel.theta) {
        std::cerr << "verify: select at least one of --main --two-cycle "
                     "--kdist --theta\n";
        return kExitUsage;
      }
      if (!verify_n.empty()) sel.n = parse_range(verify_n);
      if (!verify_k.empty()) sel.k = parse_range(verify_k);
      return run_verify(sel);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
