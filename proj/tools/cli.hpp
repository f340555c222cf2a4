// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Kept in a header so tests can drive run() in
// process; tools/lmss_main.cpp only forwards argv.
//
// Exit codes: 0 success, 1 negative verdict (chain "none", or --expect on a
// non-greedoid), 2 input error, 3 size cap exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lmss/lmss.hpp"
#include "lmss/serialize.hpp"

namespace lmss::cli {

using lmss::json::Json;

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kSizeCap = 3 };

struct Outcome {
  int code = kOk;
  Json report;
  std::string error;
};

/// `fixture:NAME` selects a built-in figure graph; anything else is a path.
inline Graph load_graph(const std::string& input) {
  constexpr std::string_view kFixture = "fixture:";
  if (input.starts_with(kFixture)) return fixture(input.substr(kFixture.size()));
  std::ifstream in(input);
  if (!in) throw InputError("cannot open '" + input + "'");
  return parse_edge_list(in);
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline VertexSet parse_set(const Graph& g, const std::string& text) { return g.set(split_list(text)); }

inline std::vector<Vertex> parse_order(const Graph& g, const std::string& text) {
  std::vector<Vertex> out;
  for (const auto& t : split_list(text)) out.push_back(g.index_of(t));
  return out;
}

// A matching token is "u-v", "u:v", or the concatenation "uv" when exactly
// one split yields two vertex names.
inline Edge parse_edge_token(const Graph& g, const std::string& tok) {
  for (char sep : {'-', ':'}) {
    if (auto pos = tok.find(sep); pos != std::string::npos && !g.find(tok))
      return g.edge(tok.substr(0, pos), tok.substr(pos + 1));
  }
  std::optional<Edge> found;
  for (std::size_t k = 1; k < tok.size(); ++k) {
    auto a = g.find(tok.substr(0, k));
    auto b = g.find(tok.substr(k));
    if (a && b) {
      if (found) throw InputError("ambiguous edge token '" + tok + "'");
      found = Edge::make(*a, *b);
    }
  }
  if (!found) throw InputError("cannot read edge token '" + tok + "'");
  if (!g.has_edge(*found)) throw InputError("'" + tok + "' is not an edge");
  return *found;
}

/// Matching given inline or as a file: JSON `[["a","b"],...]`, or a list
/// such as `{bd,cf}` / `b-d,c-f`.
inline Matching parse_matching(const Graph& g, const std::string& spec) {
  std::string text = spec;
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("matching JSON: ") + e.what());
    }
    return lmss::json::matching_from_json(g, j);
  }
  std::vector<Edge> edges;
  for (const auto& tok : split_list(text)) edges.push_back(parse_edge_token(g, tok));
  return Matching(g, std::move(edges));
}

inline Json base_report(const std::string& input, const Graph& g) {
  Json r;
  r["schema"] = 1;
  r["input"] = input;
  r["vertices"] = g.order();
  r["edges"] = g.size();
  r["bipartite"] = is_bipartite(g);
  return r;
}

template <class Body>
Outcome guarded(const std::string& input, Body body) {
  Outcome o;
  try {
    o = body();
  } catch (const SizeCapError& e) {
    o = {kSizeCap, {}, input + ": " + e.what()};
  } catch (const InputError& e) {
    o = {kInputError, {}, input + ": " + e.what()};
  }
  return o;
}

struct AnalyzeOptions {
  bool psi = false;
  bool omega = false;
  bool mu_r = false;
  bool timing = false;
};

inline Outcome analyze(const std::string& input, const AnalyzeOptions& opt) {
  return guarded(input, [&] {
    const auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(input);
    Json r = base_report(input, g);
    const Matching m = maximum_matching(g);
    r["alpha"] = stability_number(g);
    r["mu"] = m.size();
    r["koenig_egervary"] = is_koenig_egervary(g);
    r["has_unique_perfect_matching"] = has_unique_perfect_matching(g).unique;
    r["maximum_matching"] = lmss::json::matching_json(g, m);
    if (opt.omega) r["omega"] = lmss::json::family_json(g, enumerate_omega(g));
    if (opt.psi) r["psi"] = lmss::json::family_json(g, enumerate_psi(g));
    if (opt.mu_r) r["mu_r"] = mu_r(g);
    if (opt.timing)
      r["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return Outcome{kOk, std::move(r), {}};
  });
}

struct GreedoidOptions {
  bool expect = false;
  bool psi = false;
  bool timing = false;
};

inline Outcome greedoid(const std::string& input, const GreedoidOptions& opt) {
  return guarded(input, [&] {
    const auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(input);
    Json r = base_report(input, g);
    r["alpha"] = stability_number(g);
    r["mu"] = matching_number(g);
    r["koenig_egervary"] = is_koenig_egervary(g);
    const GreedoidVerdict verdict = psi_is_greedoid(g);
    r["greedoid"] = lmss::json::verdict_json(g, verdict);
    bool agree = true;
    if (is_bipartite(g)) {
      const MatchingCriterion mc = psi_is_greedoid_bipartite(g);
      Json crit;
      crit["all_maximum_matchings_ur"] = mc.is_greedoid;
      if (mc.witness) {
        crit["witness_matching"] = lmss::json::matching_json(g, *mc.witness);
        crit["witness_cycle"] = [&] {
          Json cyc = Json::array();
          for (Vertex v : is_uniquely_restricted(g, *mc.witness).witness) cyc.push_back(g.name(v));
          return cyc;
        }();
      }
      agree = mc.is_greedoid == verdict.is_greedoid;
      r["matching_criterion"] = std::move(crit);
      r["agreement"] = agree;
    }
    if (opt.psi) r["psi"] = lmss::json::family_json(g, enumerate_psi(g));
    if (opt.timing)
      r["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    int code = kOk;
    if (!agree || (opt.expect && !verdict.is_greedoid)) code = kNegative;
    return Outcome{code, std::move(r), {}};
  });
}

struct ChainOptions {
  std::optional<std::string> set;
  bool as_given = false;
  bool from_matching = false;
  std::optional<std::string> matching;
};

inline void add_derived_matching(Json& r, const Graph& g, const Chain& c) {
  if (is_bipartite(g) && is_stable(g, c.final_set()) && c.final_set().size() == stability_number(g))
    r["matching"] = lmss::json::matching_json(g, urm_from_chain(g, c));
}

inline Outcome chain(const std::string& input, const ChainOptions& opt) {
  return guarded(input, [&] {
    Graph g = load_graph(input);
    Json r = base_report(input, g);
    if (opt.from_matching) {
      const Matching m = opt.matching ? parse_matching(g, *opt.matching) : maximum_matching(g);
      const VertexSet s = opt.set ? parse_set(g, *opt.set) : maximum_stable_set(g);
      r["set"] = lmss::json::set_json(g, s);
      r["source_matching"] = lmss::json::matching_json(g, m);
      const Chain c = chain_from_urm(g, m, s);
      r["chain"] = lmss::json::chain_json(g, c);
      add_derived_matching(r, g, c);
      return Outcome{kOk, std::move(r), {}};
    }
    if (!opt.set) throw InputError("chain: give --set or --from-matching");
    if (opt.as_given) {
      const Chain c = Chain::from_order(parse_order(g, *opt.set));
      r["set"] = lmss::json::set_json(g, c.final_set());
      if (!is_accessibility_chain(g, c)) {
        r["chain"] = "none";
        return Outcome{kNegative, std::move(r), {}};
      }
      r["chain"] = lmss::json::chain_json(g, c);
      add_derived_matching(r, g, c);
      return Outcome{kOk, std::move(r), {}};
    }
    const VertexSet s = parse_set(g, *opt.set);
    r["set"] = lmss::json::set_json(g, s);
    auto c = find_accessibility_chain(g, s);
    if (!c) {
      r["chain"] = "none";
      return Outcome{kNegative, std::move(r), {}};
    }
    r["chain"] = lmss::json::chain_json(g, *c);
    add_derived_matching(r, g, *c);
    return Outcome{kOk, std::move(r), {}};
  });
}

struct DotOptions {
  std::optional<std::string> matching;
  std::optional<std::string> highlight;
};

inline std::string to_dot(const Graph& g, const Matching* m, const VertexSet* highlight) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  \"" + g.name(v) + "\"";
    if (highlight && highlight->contains(v)) out += " [style=filled, fillcolor=lightgray]";
    out += ";\n";
  }
  for (Edge e : g.edges()) {
    out += "  \"" + g.name(e.u) + "\" -- \"" + g.name(e.v) + "\"";
    if (m && m->contains(e)) out += " [style=bold, penwidth=3]";
    out += ";\n";
  }
  return out + "}\n";
}

inline int run_each(const std::vector<std::string>& inputs, unsigned jobs,
                    const std::function<Outcome(const std::string&)>& work, std::ostream& out,
                    std::ostream& err) {
  std::vector<Outcome> results(inputs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = work(inputs[i]);
  } else {
    for (std::size_t base = 0; base < inputs.size(); base += jobs) {
      std::vector<std::future<Outcome>> batch;
      for (std::size_t i = base; i < std::min(inputs.size(), base + jobs); ++i)
        batch.push_back(std::async(std::launch::async, work, inputs[i]));
      for (std::size_t k = 0; k < batch.size(); ++k) results[base + k] = batch[k].get();
    }
  }
  int code = kOk;
  Json reports = Json::array();
  for (auto& o : results) {
    if (!o.error.empty()) err << "error: " << o.error << '\n';
    if (!o.report.is_null()) reports.push_back(std::move(o.report));
    if (code == kOk) code = o.code;
  }
  if (reports.size() == 1 && inputs.size() == 1)
    out << reports[0].dump(2) << '\n';
  else if (!reports.empty())
    out << reports.dump(2) << '\n';
  return code;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local maximum stable sets, uniquely restricted matchings and greedoids", "lmss"};
  app.require_subcommand(1);
  unsigned jobs = 1;

  std::vector<std::string> inputs;
  AnalyzeOptions aopt;
  auto* analyze_cmd = app.add_subcommand("analyze", "alpha, mu, Koenig-Egervary and optional families");
  analyze_cmd->add_option("inputs", inputs, "edge-list files or fixture:NAME")->required();
  analyze_cmd->add_flag("--psi", aopt.psi, "list Psi(G)");
  analyze_cmd->add_flag("--omega", aopt.omega, "list Omega(G)");
  analyze_cmd->add_flag("--mu-r", aopt.mu_r, "compute mu_r(G)");
  analyze_cmd->add_flag("--timing", aopt.timing, "add timing_ms (output no longer reproducible)");
  analyze_cmd->add_option("--jobs", jobs, "inputs processed in parallel");

  GreedoidOptions gopt;
  auto* greedoid_cmd = app.add_subcommand("greedoid", "is Psi(G) a greedoid; matching criterion for bipartite G");
  greedoid_cmd->add_option("inputs", inputs, "edge-list files or fixture:NAME")->required();
  greedoid_cmd->add_flag("--expect", gopt.expect, "exit 1 unless Psi(G) is a greedoid");
  greedoid_cmd->add_flag("--psi", gopt.psi, "list Psi(G)");
  greedoid_cmd->add_flag("--timing", gopt.timing, "add timing_ms");
  greedoid_cmd->add_option("--jobs", jobs, "inputs processed in parallel");

  std::string chain_input;
  ChainOptions copt;
  std::string set_text, matching_text;
  auto* chain_cmd = app.add_subcommand("chain", "accessibility chains and UR matchings");
  chain_cmd->add_option("input", chain_input, "edge-list file or fixture:NAME")->required();
  auto* set_opt = chain_cmd->add_option("--set", set_text, "comma-separated vertex set");
  chain_cmd->add_flag("--as-given", copt.as_given, "use the --set order as the chain to validate");
  chain_cmd->add_flag("--from-matching", copt.from_matching, "build the chain from a UR maximum matching");
  auto* chain_matching_opt = chain_cmd->add_option("--matching", matching_text, "matching for --from-matching");

  std::string fixture_name;
  std::size_t cycle_n = 0, complete_n = 0, steps = 1;
  double attach_prob = 0.5;
  std::uint64_t seed = 0;
  bool unique_pm = false;
  auto* generate_cmd = app.add_subcommand("generate", "emit a graph in edge-list format");
  auto* fixture_opt = generate_cmd->add_option("--fixture", fixture_name, "fig1 ... fig8b");
  auto* cycle_opt = generate_cmd->add_option("--cycle", cycle_n, "C_n");
  auto* complete_opt = generate_cmd->add_option("--complete", complete_n, "K_n");
  auto* unique_opt = generate_cmd->add_flag("--unique-pm", unique_pm, "random bipartite graph with a unique perfect matching");
  generate_cmd->add_option("--steps", steps, "K2 extensions (vertices = 2 * steps)");
  generate_cmd->add_option("--attach-prob", attach_prob, "per-target attach probability");
  generate_cmd->add_option("--seed", seed, "PRNG seed");
  fixture_opt->excludes(cycle_opt)->excludes(complete_opt)->excludes(unique_opt);
  cycle_opt->excludes(complete_opt)->excludes(unique_opt);
  complete_opt->excludes(unique_opt);

  std::string dot_input;
  DotOptions dopt;
  std::string dot_matching, dot_highlight;
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz drawing");
  dot_cmd->add_option("input", dot_input, "edge-list file or fixture:NAME")->required();
  auto* dot_matching_opt = dot_cmd->add_option("--matching", dot_matching, "matching drawn bold (file or inline)");
  auto* dot_highlight_opt = dot_cmd->add_option("--highlight-set", dot_highlight, "vertices drawn filled");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (*analyze_cmd)
    return run_each(inputs, jobs, [&](const std::string& in) { return analyze(in, aopt); }, out, err);
  if (*greedoid_cmd)
    return run_each(inputs, jobs, [&](const std::string& in) { return greedoid(in, gopt); }, out, err);
  if (*chain_cmd) {
    if (*set_opt) copt.set = set_text;
    if (*chain_matching_opt) copt.matching = matching_text;
    return run_each({chain_input}, 1, [&](const std::string& in) { return chain(in, copt); }, out, err);
  }
  try {
    if (*generate_cmd) {
      Graph g;
      if (*fixture_opt)
        g = fixture(fixture_name);
      else if (*cycle_opt)
        g = cycle(cycle_n);
      else if (*complete_opt)
        g = complete(complete_n);
      else if (unique_pm)
        g = random_unique_pm_bipartite(steps, attach_prob, seed);
      else
        throw InputError("generate: choose --fixture, --cycle, --complete or --unique-pm");
      out << write_edge_list(g);
      return kOk;
    }
    if (*dot_cmd) {
      Graph g = load_graph(dot_input);
      std::optional<Matching> m;
      std::optional<VertexSet> h;
      if (*dot_matching_opt) m = parse_matching(g, dot_matching);
      if (*dot_highlight_opt) h = parse_set(g, dot_highlight);
      out << to_dot(g, m ? &*m : nullptr, h ? &*h : nullptr);
      return kOk;
    }
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace lmss::cli
