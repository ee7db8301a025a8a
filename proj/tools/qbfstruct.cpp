// qbfstruct command-line frontend.
//
// Exit status: 0 done, 1 I/O or parse error, 2 verification mismatch,
// 10 precondition not met (including budget guards).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qbfstruct/qbfstruct.hpp"

using json = nlohmann::ordered_json;
using namespace qbfs;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "auto";
  bool json = false;
  std::uint64_t seed = 1;
  int threads = 1;
  std::size_t var_budget = kDefaultVarBudget;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

Format detect(const std::string& text, const std::string& flag) {
  if (flag == "qdimacs") return Format::Qdimacs;
  if (flag == "qcdnf") return Format::Qcdnf;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string p, kind;
    ls >> p >> kind;
    if (p == "p") return kind == "qcdnf" ? Format::Qcdnf : Format::Qdimacs;
  }
  return Format::Qdimacs;
}

Qbf load(const std::string& path, const Global& g) {
  auto text = read_file(path);
  return parse(text, detect(text, g.format));
}

// Rewrites constant sides so every matrix has a file encoding.
Qbf encodable(Qbf q) {
  auto no_terms = q.terms.empty(), no_clauses = q.clauses.empty();
  switch (q.kind) {
    case MatrixKind::Cnf: break;
    case MatrixKind::Dnf:
      if (no_terms) q = Qbf{q.num_vars, q.prefix, MatrixKind::Cnf, {Clause{}}, {}};
      break;
    case MatrixKind::CnfAndDnf:
      if (no_terms) q = Qbf{q.num_vars, q.prefix, MatrixKind::Cnf, {Clause{}}, {}};
      else if (no_clauses) q.kind = MatrixKind::Dnf;
      break;
    case MatrixKind::DnfOrCnf:
      if (no_terms) q.kind = MatrixKind::Cnf;
      else if (no_clauses) q.kind = MatrixKind::Dnf;
      break;
  }
  return q;
}

std::string emit(const Qbf& q) {
  Qbf e = encodable(q);
  return serialize(e, e.kind == MatrixKind::Cnf ? Format::Qdimacs : Format::Qcdnf);
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

void print(const Global& g, const json& j, const std::string& plain) {
  if (g.json) std::cout << j.dump() << '\n';
  else std::cout << plain;
}

json trace_json(const std::vector<TraceEntry>& trace) {
  json arr = json::array();
  for (const auto& t : trace) {
    json e{{"rule", t.rule}};
    if (t.vars.size() == 1) e["var"] = t.vars[0];
    else e["vars"] = t.vars;
    if (t.values.size() == 1) e["assigned"] = t.values[0];
    else if (!t.values.empty()) e["values"] = t.values;
    if (!t.note.empty()) e["note"] = t.note;
    arr.push_back(e);
  }
  return arr;
}

GraphKind graph_kind(const std::string& s) { return s == "incidence" ? GraphKind::Incidence : GraphKind::Primal; }

// Smallest c-deletion set up to size `max_k`, as variable ids.
std::vector<int> find_c_deletion(const Qbf& q, int c, int max_k) {
  auto fg = build_graph(q, GraphKind::Primal);
  std::vector<int> cand;
  for (auto [qq, v] : q.prefix) cand.push_back(v - 1);
  std::sort(cand.begin(), cand.end());
  // variables outside the prefix are not part of the game: mark them deleted
  std::vector<int> outside;
  auto quant = q.quant_table();
  for (int v = 1; v <= q.num_vars; ++v)
    if (!quant[v]) outside.push_back(v - 1);
  for (int k = 0; k <= max_k; ++k) {
    std::optional<std::vector<int>> hit;
    detail::for_each_subset(cand, k, [&](const std::vector<int>& s) {
      std::vector<int> all = s;
      all.insert(all.end(), outside.begin(), outside.end());
      if (is_c_deletion_set(fg.g, all, c)) hit = s;
      return hit.has_value();
    });
    if (hit) {
      std::vector<int> vars;
      for (int x : *hit) vars.push_back(x + 1);
      return vars;
    }
  }
  throw PreconditionError("no " + std::to_string(c) + "-deletion set of size <= " + std::to_string(max_k));
}

// --------------------------------------------------------------------------

int cmd_stats(const Global& g, const std::string& path) {
  Qbf q = load(path, g);
  auto prim = build_graph(q, GraphKind::Primal);
  auto inc = build_graph(q, GraphKind::Incidence);
  json j{{"vars", q.num_vars},
         {"used_vars", matrix_vars(q).size()},
         {"prefix", q.prefix.size()},
         {"depth", q.depth()},
         {"kind", to_string(q.kind)},
         {"clauses", q.clauses.size()},
         {"terms", q.terms.size()},
         {"primal", {{"edges", prim.g.edges.size()}, {"fes", min_fes(prim.g).size()}}},
         {"incidence", {{"edges", inc.g.edges.size()}, {"fes", min_fes(inc.g).size()}}}};
  std::ostringstream os;
  os << "vars " << j["vars"] << " (used " << j["used_vars"] << "), depth " << q.depth() << ", kind "
     << to_string(q.kind) << "\nclauses " << q.clauses.size() << ", terms " << q.terms.size() << "\nprimal edges "
     << prim.g.edges.size() << ", fes " << j["primal"]["fes"] << "\nincidence edges " << inc.g.edges.size()
     << ", fes " << j["incidence"]["fes"] << '\n';
  print(g, j, os.str());
  return 0;
}

int cmd_params(const Global& g, const std::string& path, int max_k, int c) {
  Qbf q = load(path, g);
  auto prim = build_graph(q, GraphKind::Primal);
  auto inc = build_graph(q, GraphKind::Incidence);
  json j;
  auto put = [&](const std::string& name, const std::optional<std::vector<int>>& s, const FormulaGraph& fg) {
    if (!s) {
      j[name] = {{"size", nullptr}, {"note", "> " + std::to_string(max_k)}};
      return;
    }
    json vs = json::array();
    for (int x : *s) {
      if (fg.is_var_vertex(x)) vs.push_back("x" + std::to_string(fg.var_of_vertex(x)));
      else if (x < fg.num_vars + fg.num_clauses) vs.push_back("c" + std::to_string(x - fg.num_vars + 1));
      else vs.push_back("t" + std::to_string(x - fg.num_vars - fg.num_clauses + 1));
    }
    j[name] = {{"size", s->size()}, {"set", vs}};
  };
  put("fvs", min_deletion_set(prim.g, DeletionKind::Fvs, max_k), prim);
  put("sparse_fvs", min_deletion_set(prim.g, DeletionKind::SparseFvs, max_k, 1, &q, &prim), prim);
  put("vertex_cover", min_deletion_set(prim.g, DeletionKind::VertexCover, max_k), prim);
  put("incidence_vertex_cover", min_deletion_set(inc.g, DeletionKind::VertexCover, max_k), inc);
  j["fes"] = min_fes(prim.g).size();
  auto td = td_min_degree(prim.g);
  j["treewidth_upper"] = td.width();
  if (c > 0) {
    try {
      auto d = find_c_deletion(q, c, max_k);
      j["c_deletion"] = {{"c", c}, {"size", d.size()}, {"set", d}};
    } catch (const PreconditionError&) {
      j["c_deletion"] = {{"c", c}, {"size", nullptr}};
    }
  }
  std::ostringstream os;
  for (auto it = j.begin(); it != j.end(); ++it) os << it.key() << ": " << it.value().dump() << '\n';
  print(g, j, os.str());
  return 0;
}

int cmd_solve(const Global& g, const std::string& path, std::string strategy, const std::string& dset, int c,
              int max_k) {
  Qbf q = load(path, g);
  std::vector<int> d = parse_list(dset);
  if (strategy == "auto") strategy = matrix_vars(q).size() <= g.var_budget ? "brute" : "vc-cache";
  json j{{"strategy", strategy}};
  bool value = false;
  auto need_d = [&] {
    if (!d.empty()) return;
    if (c <= 0) throw PreconditionError("strategy " + strategy + " needs --deletion-set or --c");
    d = find_c_deletion(q, c, max_k);
  };
  if (strategy == "brute") {
    value = evaluate(q, g.var_budget);
  } else if (strategy == "vc-cache") {
    CacheStats st;
    value = solve_vc_cache(q, {}, &st);
    j["cache"] = {{"entries", st.entries}, {"hits", st.hits}, {"nodes", st.nodes}};
  } else if (strategy == "dedup") {
    auto r = solve_clause_dedup(q);
    value = r.value;
    j["distinct_clauses"] = r.distinct_clauses;
    j["input_clauses"] = r.input_clauses;
  } else if (strategy == "e1a") {
    need_d();
    value = solve_e1a(q, d, c, g.var_budget);
    j["deletion_set"] = d;
  } else if (strategy == "uni-complete") {
    need_d();
    auto ex = expand_universal_deletions(q, d, c);
    auto r = solve_universally_complete(ex.q, ex.d);
    value = r.value;
    j["deletion_set"] = d;
    if (r.witness) j["witness_bits"] = *r.witness;
  } else if (strategy == "single-del") {
    if (d.empty()) {
      if (c <= 0) throw PreconditionError("single-del needs --deletion-set or --c");
      for (auto [qq, v] : q.prefix)
        if (largest_component(q, {v}) <= c) {
          d = {v};
          break;
        }
      if (d.empty()) throw PreconditionError("no single-variable " + std::to_string(c) + "-deletion set");
    }
    if (d.size() != 1) throw PreconditionError("single-del takes exactly one deletion variable");
    auto r = solve_single_deletion(q, d[0], c);
    value = r.value;
    j["deletion_set"] = d;
    j["step"] = r.step;
    j["indices"] = {{"LC", r.lc ? json(*r.lc) : json(nullptr)}, {"EE_min", r.ee_min ? json(*r.ee_min) : json(nullptr)}};
  } else {
    throw PreconditionError("unknown strategy " + strategy);
  }
  json res{{"value", value}};
  res.update(j);
  print(g, res, value ? "TRUE\n" : "FALSE\n");
  return 0;
}

int cmd_kernelize(const Global& g, const std::string& path, const std::string& graph, const std::string& out,
                  std::string trace_path) {
  Qbf q = load(path, g);
  auto r = kernelize(q, graph_kind(graph));
  write_file(out, emit(r.kernel));
  json j{{"graph", graph},
         {"verdict", r.verdict ? json(*r.verdict) : json(nullptr)},
         {"stats",
          {{"k", r.stats.k},
           {"input_vars", r.stats.input_vars},
           {"input_clauses", r.stats.input_clauses},
           {"kernel_vars", r.stats.kernel_vars},
           {"kernel_clauses", r.stats.kernel_clauses},
           {"var_bound", kernel_var_bound(r.stats.k, graph_kind(graph))}}},
         {"trace", trace_json(r.trace)}};
  if (!trace_path.empty()) write_file(trace_path, j.dump(2) + "\n");
  else if (out.empty() || out == "-") std::cerr << j.dump() << '\n';
  else std::cout << j.dump() << '\n';
  return 0;
}

json names_json(const SawPlan& plan) {
  json n = json::object();
  for (const auto& [v, name] : plan.names) n[std::to_string(v)] = name;
  return n;
}

AlphaTdDecomposition alpha_from_json(const json& j) {
  // variable ids (1-based); a tree parent of 0 means no anchor
  AlphaTdDecomposition a;
  for (int v : j.at("main_path")) a.main_path.push_back(v - 1);
  for (auto& [k, p] : j.at("tree_parent").items()) a.tree_parent[std::stoi(k) - 1] = p.get<int>() - 1;
  for (const auto& pr : j.value("paths", json::array())) {
    std::vector<int> path;
    for (int v : pr.at(1)) path.push_back(v - 1);
    a.paths.emplace_back(pr.at(0).get<int>() - 1, path);
  }
  a.alpha = j.at("alpha");
  return a;
}

json alpha_to_json(const AlphaTdDecomposition& a) {
  json j;
  json mp = json::array();
  for (int v : a.main_path) mp.push_back(v + 1);
  json tp = json::object();
  for (auto [v, p] : a.tree_parent) tp[std::to_string(v + 1)] = p + 1;
  json ps = json::array();
  for (const auto& [r, p] : a.paths) {
    json path = json::array();
    for (int v : p) path.push_back(v + 1);
    ps.push_back(json::array({r + 1, path}));
  }
  return {{"main_path", mp}, {"tree_parent", tp}, {"paths", ps}, {"alpha", a.alpha}};
}

json td_to_json(const TreeDecomposition& td) {
  json bags = json::array();
  for (const auto& b : td.bags) {
    json bb = json::array();
    for (int v : b) bb.push_back(v + 1);
    bags.push_back(bb);
  }
  return {{"bags", bags}, {"parent", td.parent}};
}

TreeDecomposition td_from_json(const json& j) {
  TreeDecomposition td;
  for (const auto& b : j.at("bags")) {
    std::vector<int> bag;
    for (int v : b) bag.push_back(v - 1);
    td.bags.push_back(bag);
  }
  td.parent = j.at("parent").get<std::vector<int>>();
  return td;
}

int cmd_saw(const Global& g, const std::string& mode, const std::string& path, const std::string& out,
            const std::string& s_list, bool compat, bool normalize, const std::string& decomp, int max_k) {
  Qbf q = load(path, g);
  json j{{"mode", mode}};
  if (mode == "fvs") {
    std::vector<int> s = parse_list(s_list);
    if (s_list.empty()) {
      auto fg = build_graph(q, GraphKind::Primal);
      auto found = min_deletion_set(fg.g, DeletionKind::SparseFvs, max_k, 1, &q, &fg);
      if (!found) throw PreconditionError("no sparse feedback vertex set of size <= " + std::to_string(max_k));
      for (int x : *found) s.push_back(x + 1);
    }
    auto r = saw_reduce_fvs(q, s, {compat});
    Qbf res = normalize ? normalize_3dnf(r.q, r.plan) : r.q;
    write_file(out, emit(res));
    j["s"] = r.plan.s;
    j["s_prime"] = r.plan.s_prime;
    j["s_prime_size"] = r.plan.s_prime.size();
    j["names"] = names_json(r.plan);
    j["negated"] = r.negated;
  } else if (mode == "td") {
    if (decomp.empty()) throw PreconditionError("saw td needs --decomposition");
    auto a = alpha_from_json(json::parse(read_file(decomp)));
    auto r = saw_reduce_treedepth(q, a);
    write_file(out, emit(r.q));
    json parent = json::array();
    for (int p : r.td.parent) parent.push_back(p + 1);
    j["treedepth_parent"] = parent;
    j["height"] = r.td.height();
    j["height_bound"] = r.height_bound;
    j["names"] = names_json(r.plan);
    j["negated"] = r.negated;
  } else if (mode == "td-cnf") {
    auto fg = build_graph(q, GraphKind::Primal);
    TreeDecomposition td = decomp.empty() ? td_min_degree(fg.g) : td_from_json(json::parse(read_file(decomp)));
    auto r = cdnf_to_cnf_via_td(q, td);
    write_file(out, emit(r.q));
    j["width_in"] = td.width();
    j["width_out"] = r.td.width();
    j["decomposition"] = td_to_json(r.td);
  } else if (mode == "fold") {
    write_file(out, emit(fold_1dnf_into_clause(q)));
  } else {
    throw PreconditionError("unknown saw mode " + mode);
  }
  if (out.empty() || out == "-") std::cerr << j.dump() << '\n';
  else std::cout << j.dump() << '\n';
  return 0;
}

int cmd_verify(const Global& g, const std::string& which, int count, bool minimize) {
  auto checks = all_checks();
  std::vector<const Check*> run;
  if (which == "all") {
    for (const auto& c : checks) run.push_back(&c);
  } else {
    const Check* c = find_check(checks, which);
    if (!c) {
      std::string names;
      for (const auto& x : checks) names += " " + x.name;
      throw PreconditionError("unknown check " + which + "; available:" + names);
    }
    run.push_back(c);
  }
  json results = json::array();
  int status = 0;
  for (const Check* c : run) {
    auto rep = run_check(*c, g.seed, count, g.threads, minimize);
    json r{{"check", c->name}, {"passed", rep.passed}, {"skipped", rep.skipped}, {"total", rep.total}};
    if (!g.json)
      std::cout << c->name << ": " << rep.passed << "/" << rep.total << " equivalent"
                << (rep.skipped ? ", " + std::to_string(rep.skipped) + " outside domain" : "") << '\n';
    if (rep.failed_index) {
      status = 2;
      r["failed_index"] = *rep.failed_index;
      r["message"] = rep.message;
      std::string repro;
      try {
        repro = emit(rep.reproducer->q);
      } catch (const std::exception& e) {
        repro = std::string("(unencodable: ") + e.what() + ")";
      }
      r["reproducer"] = repro;
      r["witness"] = rep.reproducer->witness;
      if (!g.json)
        std::cout << "  MISMATCH at instance " << *rep.failed_index << ": " << rep.message
                  << "\n  minimized reproducer:\n"
                  << repro;
      results.push_back(r);
      break;
    }
    results.push_back(r);
  }
  if (g.json) std::cout << results.dump() << '\n';
  return status;
}

struct GenArgs {
  std::string structure = "random";
  int n = 8, k = 2, c = 2, depth = 3, clauses = 0, index = 0;
  std::string out, witness;
};

int cmd_gen(const Global& g, const GenArgs& a) {
  Rng rng(g.seed, (std::uint64_t)a.index);
  Qbf q;
  json w{{"structure", a.structure}, {"seed", g.seed}, {"index", a.index}};
  if (a.structure == "random") {
    q = random_qbf(rng, {a.n, a.clauses ? a.clauses : 2 * a.n, 0, 3, 0, a.depth, MatrixKind::Cnf});
  } else if (a.structure == "sparse-fvs") {
    auto p = gen_sparse_fvs(rng, a.n, a.k, std::max(1, a.n / 3), 1);
    q = p.q;
    w["s"] = p.witness;
  } else if (a.structure == "fes") {
    auto p = gen_fes(rng, a.n, a.k);
    q = p.q;
    w["fes_endpoints"] = p.witness;
  } else if (a.structure == "c-deletion") {
    auto p = gen_c_deletion(rng, a.n, a.k, a.c);
    q = p.q;
    w["d"] = p.witness;
    w["c"] = a.c;
  } else if (a.structure == "single-del") {
    auto p = gen_single_del(rng, std::max(1, a.n / std::max(1, a.c)), a.c);
    q = p.q;
    w["e"] = p.witness[0];
  } else if (a.structure == "e1a") {
    auto t = gen_e1a(rng, a.k, 2, a.c, 5);
    q = t.q;
    w["d"] = t.d;
    w["c"] = t.c;
  } else if (a.structure == "uni-complete") {
    auto t = gen_uni_complete(rng, a.k, 2, a.c);
    q = t.q;
    w["d"] = t.d;
    w["c"] = t.c;
    w["min_copies"] = 1 << a.k;
  } else if (a.structure == "alpha-td") {
    auto p = gen_alpha_td(rng, a.k, 2, std::max(1, a.c), 2, a.n);
    q = p.q;
    w["decomposition"] = alpha_to_json(p.alpha_td);
  } else {
    throw PreconditionError("unknown structure " + a.structure);
  }
  write_file(a.out, emit(q));
  if (!a.witness.empty()) write_file(a.witness, w.dump(2) + "\n");
  else if (g.json) std::cerr << w.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure-aware QBF toolkit"};
  app.require_subcommand(1);
  Global g;
  if (const char* env = std::getenv("QBFSTRUCT_VAR_BUDGET")) g.var_budget = std::strtoul(env, nullptr, 10);
  app.add_option("--format", g.format, "input format")->check(CLI::IsMember({"auto", "qdimacs", "qcdnf"}));
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for generators and verify");
  app.add_option("--threads", g.threads, "worker threads for verify")->check(CLI::PositiveNumber);
  app.add_option("--var-budget", g.var_budget, "largest variable count the brute-force oracle accepts");

  std::string input, out, graph = "primal", strategy = "auto", dset, trace, s_list, decomp, check = "all", mode;
  int c = 0, max_k = 6, count = 100;
  bool compat = false, normalize = false, no_shrink = false;
  GenArgs ga;

  auto* stats = app.add_subcommand("stats", "formula and graph statistics");
  stats->add_option("input", input)->required();

  auto* params = app.add_subcommand("params", "structural parameters by bounded search");
  params->add_option("input", input)->required();
  params->add_option("--max-k", max_k, "largest set size searched");
  params->add_option("--c", c, "component bound for c-deletion sets");

  auto* solve = app.add_subcommand("solve", "decide a formula");
  solve->add_option("input", input)->required();
  solve->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "brute", "vc-cache", "dedup", "e1a", "uni-complete", "single-del"}));
  solve->add_option("--deletion-set", dset, "comma-separated variable ids");
  solve->add_option("--c", c, "component size bound");
  solve->add_option("--max-k", max_k, "largest deletion set searched when none is given");

  auto* kern = app.add_subcommand("kernelize", "apply the feedback-edge-set reduction rules");
  kern->add_option("input", input)->required();
  kern->add_option("--graph", graph)->check(CLI::IsMember({"primal", "incidence"}));
  kern->add_option("-o,--output", out, "kernel file (default stdout)");
  kern->add_option("--trace", trace, "write the JSON trace here");

  auto* saw = app.add_subcommand("saw", "structure-aware reductions");
  saw->add_option("mode", mode)->required()->check(CLI::IsMember({"fvs", "td", "td-cnf", "fold"}));
  saw->add_option("input", input)->required();
  saw->add_option("-o,--output", out, "output formula (default stdout)");
  saw->add_option("--s", s_list, "sparse feedback vertex set (fvs mode)");
  saw->add_flag("--compat", compat, "two-index compatibility layout (fvs mode)");
  saw->add_flag("--normalize", normalize, "split terms to width 3 (fvs mode)");
  saw->add_option("--decomposition", decomp, "JSON decomposition (td, td-cnf)");
  saw->add_option("--max-k", max_k, "largest set searched when --s is absent");

  auto* verify = app.add_subcommand("verify", "oracle-equivalence harness");
  verify->add_option("check", check, "check name or 'all'");
  verify->add_option("--count", count, "instances per check");
  verify->add_flag("--no-shrink", no_shrink, "report failures without minimizing");

  auto* gen = app.add_subcommand("gen", "random instance with planted structure");
  gen->add_option("--structure", ga.structure)
      ->check(CLI::IsMember(
          {"random", "sparse-fvs", "fes", "c-deletion", "single-del", "e1a", "uni-complete", "alpha-td"}));
  gen->add_option("--n", ga.n);
  gen->add_option("--k", ga.k);
  gen->add_option("--c", ga.c);
  gen->add_option("--depth", ga.depth);
  gen->add_option("--clauses", ga.clauses);
  gen->add_option("--index", ga.index, "instance index within the seed's stream");
  gen->add_option("-o,--output", ga.out);
  gen->add_option("--witness", ga.witness, "write the planted witness as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*stats) return cmd_stats(g, input);
    if (*params) return cmd_params(g, input, max_k, c);
    if (*solve) return cmd_solve(g, input, strategy, dset, c, max_k);
    if (*kern) return cmd_kernelize(g, input, graph, out, trace);
    if (*saw) return cmd_saw(g, mode, input, out, s_list, compat, normalize, decomp, max_k);
    if (*verify) return cmd_verify(g, check, count, !no_shrink);
    if (*gen) return cmd_gen(g, ga);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 10;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
