// Feedback-edge-set kernelization for CNF QBFs (primal and incidence graphs).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "graph.hpp"

namespace qbfs {

struct TraceEntry {
  std::string rule;
  std::vector<int> vars;
  std::vector<int> values;  // assigned values, or substitution target literal
  std::string note;
};

struct KernelStep {
  Qbf q;
  std::optional<bool> verdict;
  TraceEntry entry;
};

struct KernelStats {
  int k = 0;  // FES size of the input graph
  int input_vars = 0, input_clauses = 0;
  int kernel_vars = 0, kernel_clauses = 0;
};

struct KernelResult {
  Qbf kernel;
  std::optional<bool> verdict;
  std::vector<TraceEntry> trace;
  KernelStats stats;
};

// Size bound on kernel variables; the constant kernels have no variables.
inline long long kernel_var_bound(int k, GraphKind kind) {
  long long b = kind == GraphKind::Primal ? 12LL * k - 8 : 24LL * k - 17;
  return std::max(0LL, b);
}

inline Qbf constant_qbf(bool value) {
  Qbf q;
  if (!value) q.clauses.push_back({});
  return q;
}

// Variables that occur in the matrix, in prefix order.
inline int count_used_vars(const Qbf& q) { return (int)matrix_vars(q).size(); }

namespace kdetail {

inline void require_cnf(const Qbf& q) {
  if (q.kind != MatrixKind::Cnf) throw PreconditionError("kernelization needs a CNF matrix");
}

// Drop tautologies, merge repeated literals, deduplicate clauses (first
// occurrence wins) and unquantify variables that no longer occur.
inline Qbf tidy(const Qbf& q) {
  Qbf r = q;
  r.clauses.clear();
  std::set<Clause> seen;
  for (const auto& c : q.clauses) {
    Clause out;
    std::set<Lit> lits;
    bool taut = false;
    for (Lit l : c) {
      if (lits.count(-l)) taut = true;
      if (lits.insert(l).second) out.push_back(l);
    }
    if (taut) continue;
    if (seen.insert(sorted_lits(out)).second) r.clauses.push_back(std::move(out));
  }
  auto used = matrix_vars(r);
  r.prefix.clear();
  for (auto p : q.prefix)
    if (used.count(p.second)) r.prefix.push_back(p);
  return r;
}

inline std::optional<bool> constant_value(const Qbf& q) {
  for (const auto& c : q.clauses)
    if (c.empty()) return false;
  if (q.clauses.empty()) return true;
  return std::nullopt;
}

inline KernelStep assign_step(const Qbf& q, int v, bool b, std::string rule, std::string note = {}) {
  KernelStep s;
  s.q = tidy(restrict(q, {{v, b}}));
  s.entry = {std::move(rule), {v}, {b ? 1 : 0}, std::move(note)};
  return s;
}

inline KernelStep false_step(std::string rule, std::vector<int> vars, std::string note) {
  KernelStep s;
  s.q = constant_qbf(false);
  s.verdict = false;
  s.entry = {std::move(rule), std::move(vars), {}, std::move(note)};
  return s;
}

// Indices of clauses that contain both variables.
inline std::vector<int> shared_clauses(const Qbf& q, int u, int v) {
  std::vector<int> out;
  for (int i = 0; i < (int)q.clauses.size(); ++i) {
    bool hu = false, hv = false;
    for (Lit l : q.clauses[i]) {
      hu |= var_of(l) == u;
      hv |= var_of(l) == v;
    }
    if (hu && hv) out.push_back(i);
  }
  return out;
}

// Assignments (bit0 = u, bit1 = v) satisfying every listed 2-clause on {u,v}.
inline std::vector<int> pair_models(const Qbf& q, const std::vector<int>& idx, int u, int v) {
  std::vector<int> out;
  for (int m = 0; m < 4; ++m) {
    bool ok = true;
    for (int i : idx) {
      bool sat = false;
      for (Lit l : q.clauses[i]) sat |= lit_value(l, var_of(l) == u ? (m & 1) : var_of(l) == v ? ((m >> 1) & 1) : 0);
      ok &= sat;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

struct GraphView {
  FormulaGraph fg;
  std::vector<Edge> fes;
  CleanStructure cs;
};

inline GraphView view(const Qbf& q, GraphKind kind) {
  GraphView gv;
  gv.fg = build_graph(q, kind);
  gv.fes = min_fes(gv.fg.g);
  gv.cs = clean_structure(gv.fg.g, gv.fes);
  return gv;
}

inline bool is_clean_edge(const GraphView& gv, int u, int v) {
  Edge e{std::min(u, v), std::max(u, v)};
  return std::find(gv.cs.clean_edges.begin(), gv.cs.clean_edges.end(), e) != gv.cs.clean_edges.end();
}

}  // namespace kdetail

// ---------------------------------------------------------------------------
// Individual rules. Each returns the first applicable step, or nothing.

inline std::optional<KernelStep> rule_unit_and_pure(const Qbf& q0) {
  kdetail::require_cnf(q0);
  Qbf q = kdetail::tidy(q0);
  auto quant = q.quant_table();
  for (const auto& c : q.clauses) {
    if (c.empty()) return kdetail::false_step("unit", {}, "empty clause");
  }
  for (const auto& c : q.clauses) {
    if (c.size() != 1) continue;
    int v = var_of(c[0]);
    if (quant[v] == Quant::Forall) return kdetail::false_step("unit", {v}, "universal unit");
    return kdetail::assign_step(q, v, c[0] > 0, "unit");
  }
  std::map<int, int> pol;  // bit0 positive, bit1 negative
  for (const auto& c : q.clauses)
    for (Lit l : c) pol[var_of(l)] |= l > 0 ? 1 : 2;
  for (auto [v, p] : pol) {
    if (p == 3) continue;
    bool positive = p == 1;
    bool ex = quant[v] != Quant::Forall;
    return kdetail::assign_step(q, v, ex ? positive : !positive, "pure", ex ? "existential" : "universal");
  }
  return std::nullopt;
}

// {u,v} clean and shared by 3 or 4 clauses.
inline KernelStep rule_clean_multiplicity(const Qbf& q0, int u, int v) {
  kdetail::require_cnf(q0);
  Qbf q = kdetail::tidy(q0);
  auto gv = kdetail::view(q, GraphKind::Primal);
  if (!kdetail::is_clean_edge(gv, u - 1, v - 1)) throw PreconditionError("edge is not clean");
  auto idx = kdetail::shared_clauses(q, u, v);
  if (idx.size() != 3 && idx.size() != 4) throw PreconditionError("edge is not shared by 3 or 4 clauses");
  if (idx.size() == 4) return kdetail::false_step("multiplicity", {u, v}, "four clauses on one clean edge");
  auto models = kdetail::pair_models(q, idx, u, v);
  if (models.size() != 1) throw PreconditionError("clauses on the edge are not pairwise distinct");
  auto quant = q.quant_table();
  if (quant[u] == Quant::Forall || quant[v] == Quant::Forall)
    return kdetail::false_step("multiplicity", {u, v}, "unique model on a universal variable");
  int m = models[0];
  KernelStep s;
  s.q = kdetail::tidy(restrict(q, {{u, (m & 1) != 0}, {v, (m & 2) != 0}}));
  s.entry = {"multiplicity", {u, v}, {m & 1, (m >> 1) & 1}, "three clauses on one clean edge"};
  return s;
}

// Literal substitution: every occurrence of variable `from` becomes `to`
// (negated occurrences become -to); `from` leaves the prefix.
inline Qbf substitute(const Qbf& q, int from, Lit to) {
  Qbf r = q;
  for (auto& c : r.clauses)
    for (Lit& l : c)
      if (var_of(l) == from) l = l > 0 ? to : -to;
  r.prefix.erase(std::remove_if(r.prefix.begin(), r.prefix.end(), [&](auto p) { return p.second == from; }),
                 r.prefix.end());
  return kdetail::tidy(r);
}

// {u,v} clean and shared by exactly 2 clauses.
inline KernelStep rule_substitute_pair(const Qbf& q0, int u, int v) {
  kdetail::require_cnf(q0);
  Qbf q = kdetail::tidy(q0);
  auto gv = kdetail::view(q, GraphKind::Primal);
  if (!kdetail::is_clean_edge(gv, u - 1, v - 1)) throw PreconditionError("edge is not clean");
  auto idx = kdetail::shared_clauses(q, u, v);
  if (idx.size() != 2) throw PreconditionError("edge is not shared by exactly 2 clauses");
  auto models = kdetail::pair_models(q, idx, u, v);
  if (models.size() != 2) throw PreconditionError("clauses on the edge are not distinct");
  auto quant = q.quant_table();
  int m1 = models[0], m2 = models[1];
  for (int bit = 0; bit < 2; ++bit) {
    if (((m1 >> bit) & 1) != ((m2 >> bit) & 1)) continue;
    int w = bit == 0 ? u : v;
    if (quant[w] == Quant::Forall) return kdetail::false_step("substitute", {w}, "universal variable forced");
    return kdetail::assign_step(q, w, ((m1 >> bit) & 1) != 0, "substitute", "forced value");
  }
  auto pos = q.position_table();
  int inner = pos[u] > pos[v] ? u : v;
  int outer = inner == u ? v : u;
  bool equal = (m1 & 1) == ((m1 >> 1) & 1);
  if (quant[inner] == Quant::Forall) return kdetail::false_step("substitute", {inner, outer}, "universal copy of an outer variable");
  Lit target = equal ? outer : -outer;
  KernelStep s;
  s.q = substitute(q, inner, target);
  s.entry = {"substitute", {inner}, {target}, equal ? "equal" : "complementary"};
  return s;
}

// Leaf l of H outside V(D), sharing its single clause with its parent.
inline KernelStep rule_leaf(const Qbf& q0, int l) {
  kdetail::require_cnf(q0);
  Qbf q = kdetail::tidy(q0);
  auto gv = kdetail::view(q, GraphKind::Primal);
  int x = l - 1;
  if (x < 0 || x >= gv.fg.g.n || gv.cs.h.degree(x) != 1) throw PreconditionError("variable is not a leaf of the forest");
  if (gv.cs.in_vd[x]) throw PreconditionError("leaf is an endpoint of a feedback edge");
  int p = gv.cs.h.adj[x][0] + 1;
  std::vector<int> occ;
  for (int i = 0; i < (int)q.clauses.size(); ++i)
    for (Lit lit : q.clauses[i])
      if (var_of(lit) == l) occ.push_back(i);
  if (occ.size() != 1 || q.clauses[occ[0]].size() != 2) throw PreconditionError("leaf does not occur in exactly one clause with its parent");
  const Clause& c = q.clauses[occ[0]];
  Lit ll = var_of(c[0]) == l ? c[0] : c[1];
  if (var_of(c[0]) != p && var_of(c[1]) != p) throw PreconditionError("leaf clause does not contain the parent");
  bool b = ll > 0;
  bool ex = q.quant_table()[l] != Quant::Forall;
  return kdetail::assign_step(q, l, ex ? b : !b, "leaf");
}

namespace kdetail {

// Checks that v sits in exactly two binary clauses, one with u and one with
// w, with complementary signs. Returns (index of C_u, index of C_w).
inline std::optional<std::pair<int, int>> path_clauses(const Qbf& q, int v, int u, int w) {
  std::vector<int> occ;
  for (int i = 0; i < (int)q.clauses.size(); ++i)
    for (Lit l : q.clauses[i])
      if (var_of(l) == v) occ.push_back(i);
  if (occ.size() != 2) return std::nullopt;
  int cu = -1, cw = -1;
  Lit lu = 0, lw = 0;
  for (int i : occ) {
    const Clause& c = q.clauses[i];
    if (c.size() != 2) return std::nullopt;
    Lit other = var_of(c[0]) == v ? c[1] : c[0];
    Lit mine = var_of(c[0]) == v ? c[0] : c[1];
    if (var_of(other) == u && cu == -1) {
      cu = i;
      lu = mine;
    } else if (var_of(other) == w && cw == -1) {
      cw = i;
      lw = mine;
    } else {
      return std::nullopt;
    }
  }
  if (cu == -1 || cw == -1 || lu != -lw) return std::nullopt;
  return std::make_pair(cu, cw);
}

inline KernelStep contract(const Qbf& q, int v, int cu, int cw) {
  auto strip = [&](const Clause& c) {
    Clause out;
    for (Lit l : c)
      if (var_of(l) != v) out.push_back(l);
    return out;
  };
  Clause a = strip(q.clauses[cu]), b = strip(q.clauses[cw]);
  bool ex = q.quant_table()[v] != Quant::Forall;
  Qbf r = q;
  r.clauses.clear();
  for (int i = 0; i < (int)q.clauses.size(); ++i)
    if (i != cu && i != cw) r.clauses.push_back(q.clauses[i]);
  if (ex) {
    Clause res = a;
    res.insert(res.end(), b.begin(), b.end());
    r.clauses.push_back(res);
  } else {
    r.clauses.push_back(a);
    r.clauses.push_back(b);
  }
  KernelStep s;
  s.q = tidy(r);
  s.entry = {"path", {v}, {}, ex ? "resolved" : "split into units"};
  return s;
}

}  // namespace kdetail

// Clean path (variable ids, endpoints included) with at least two inner
// vertices; the innermost inner variable is eliminated.
inline KernelStep rule_contract_path(const Qbf& q0, const std::vector<int>& path) {
  kdetail::require_cnf(q0);
  Qbf q = kdetail::tidy(q0);
  if (path.size() < 4) throw PreconditionError("path needs at least two inner vertices");
  auto gv = kdetail::view(q, GraphKind::Primal);
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!gv.cs.h.has_edge(path[i] - 1, path[i + 1] - 1)) throw PreconditionError("not a path of the forest");
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    int x = path[i] - 1;
    if (gv.cs.h.degree(x) != 2 || gv.cs.in_vd[x]) throw PreconditionError("path is not clean");
  }
  auto pos = q.position_table();
  std::size_t best = 1;
  for (std::size_t i = 2; i + 1 < path.size(); ++i)
    if (pos[path[i]] > pos[path[best]]) best = i;
  int v = path[best];
  auto cl = kdetail::path_clauses(q, v, path[best - 1], path[best + 1]);
  if (!cl) throw PreconditionError("inner variable does not match the binary complementary pattern");
  return kdetail::contract(q, v, cl->first, cl->second);
}

// ---------------------------------------------------------------------------
// Exhaustive kernelization

namespace kdetail {

inline std::optional<KernelStep> next_primal(const Qbf& q) {
  auto gv = view(q, GraphKind::Primal);
  std::vector<std::pair<int, int>> by_count[5];
  for (auto [a, b] : gv.cs.clean_edges) {
    auto n = shared_clauses(q, a + 1, b + 1).size();
    if (n <= 4) by_count[n].push_back({a + 1, b + 1});
  }
  for (int n : {4, 3})
    if (!by_count[n].empty()) return rule_clean_multiplicity(q, by_count[n][0].first, by_count[n][0].second);
  if (!by_count[2].empty()) return rule_substitute_pair(q, by_count[2][0].first, by_count[2][0].second);
  for (int x = 0; x < gv.fg.g.n; ++x) {
    if (gv.cs.h.degree(x) != 1 || gv.cs.in_vd[x]) continue;
    try {
      return rule_leaf(q, x + 1);
    } catch (const PreconditionError&) {
    }
  }
  auto pos = q.position_table();
  for (const auto& p : gv.cs.paths) {
    if (p.vertices.size() < 4) continue;
    std::vector<int> vars;
    for (int x : p.vertices) vars.push_back(x + 1);
    try {
      return rule_contract_path(q, vars);
    } catch (const PreconditionError&) {
    }
  }
  return std::nullopt;
}

// Incidence forest: a variable vertex with clause neighbours on both sides
// that are themselves inner vertices of the clean path. The variable must
// follow one of its two partners in the prefix.
inline std::optional<KernelStep> next_incidence(const Qbf& q) {
  auto gv = view(q, GraphKind::Incidence);
  const auto& fg = gv.fg;
  auto pos = q.position_table();
  auto other_var = [&](int clause_vertex, int v) {
    int ci = clause_vertex - fg.num_vars;
    for (Lit l : q.clauses[ci])
      if (var_of(l) != v) return var_of(l);
    return 0;
  };
  for (const auto& p : gv.cs.paths) {
    const auto& vs = p.vertices;
    int best = -1;
    std::pair<int, int> best_cl;
    for (std::size_t i = 2; i + 2 < vs.size(); ++i) {
      if (!fg.is_var_vertex(vs[i])) continue;
      int v = fg.var_of_vertex(vs[i]);
      int u = other_var(vs[i - 1], v), w = other_var(vs[i + 1], v);
      if (!u || !w || u == w) continue;
      if (pos[v] < pos[u] && pos[v] < pos[w]) continue;
      auto cl = path_clauses(q, v, u, w);
      if (!cl) continue;
      if (best == -1 || pos[v] > pos[best]) {
        best = v;
        best_cl = *cl;
      }
    }
    if (best != -1) return contract(q, best, best_cl.first, best_cl.second);
  }
  return std::nullopt;
}

}  // namespace kdetail

inline KernelResult kernelize(const Qbf& input, GraphKind kind) {
  kdetail::require_cnf(input);
  validate(input);
  KernelResult res;
  res.stats.k = (int)min_fes(build_graph(input, kind).g).size();
  res.stats.input_vars = count_used_vars(input);
  res.stats.input_clauses = (int)input.clauses.size();
  Qbf q = kdetail::tidy(input);
  if (q.clauses.size() != input.clauses.size())
    res.trace.push_back({"dedup", {}, {}, std::to_string(input.clauses.size() - q.clauses.size()) + " clauses removed"});
  while (true) {
    if (auto v = kdetail::constant_value(q)) {
      res.verdict = *v;
      q = constant_qbf(*v);
      break;
    }
    std::optional<KernelStep> step = rule_unit_and_pure(q);
    if (!step) step = kind == GraphKind::Primal ? kdetail::next_primal(q) : kdetail::next_incidence(q);
    if (!step) break;
    res.trace.push_back(step->entry);
    q = step->q;
    if (step->verdict) {
      res.verdict = step->verdict;
      break;
    }
  }
  res.kernel = q;
  res.stats.kernel_vars = count_used_vars(q);
  res.stats.kernel_clauses = (int)q.clauses.size();
  return res;
}

// Post-state checks used by tests and the acceptance run. Returns an empty
// string when the kernel is fully reduced, else the first violation.
inline std::string kernel_residual_violation(const Qbf& q, GraphKind kind) {
  if (kdetail::constant_value(q)) return {};
  std::map<int, int> pol;
  for (const auto& c : q.clauses) {
    if (c.size() <= 1) return "unit or empty clause";
    for (Lit l : c) pol[var_of(l)] |= l > 0 ? 1 : 2;
  }
  for (auto [v, p] : pol)
    if (p != 3) return "pure literal on variable " + std::to_string(v);
  auto gv = kdetail::view(q, kind);
  std::size_t limit = kind == GraphKind::Primal ? 2 : 5;
  for (const auto& p : gv.cs.paths)
    if (p.inner().size() > limit) return "clean path with " + std::to_string(p.inner().size()) + " inner vertices";
  if (kind == GraphKind::Primal)
    for (auto [a, b] : gv.cs.clean_edges)
      if (kdetail::shared_clauses(q, a + 1, b + 1).size() != 1) return "clean edge in more than one clause";
  return {};
}

}  // namespace qbfs
