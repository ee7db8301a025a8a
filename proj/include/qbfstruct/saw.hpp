// Structure-aware reductions: the index/value encoding of a sparse feedback
// vertex set, its treedepth variant, CDNF-to-CNF through a tree
// decomposition, and folding a singleton side into one clause or term.
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

inline int ceil_log2(int n) {
  int b = 0;
  while ((1LL << b) < n) ++b;
  return b;
}

struct SawOptions {
  // Use |S| indices with S-variable of rank r always at position r, as in the
  // two-index worked example. Requires |S| <= 3.
  bool two_index_compat = false;
};

struct SawPlan {
  std::vector<int> s;  // sorted by variable id; rank = position here
  int bits = 0;
  int indices = 3;
  bool compat = false;
  std::vector<std::vector<int>> idx;  // idx[j][m]
  std::vector<int> val;               // val[j]
  int sat = 0;
  std::vector<int> sat_clause;        // sat_i per clause

  // treedepth variant
  std::vector<std::vector<int>> paths;  // P_r as variable ids, top-down
  std::vector<int> path_anchor;         // r per path (variable id)
  int path_bits = 0;
  std::vector<std::vector<int>> idx_p;
  std::vector<int> val_p;
  std::vector<int> sel;

  std::vector<int> split_aux;
  std::vector<int> s_prime;  // Idx ∪ Val ∪ {sat} (∪ Idx^P ∪ Val^P)
  std::map<int, std::string> names;

  int rank(int x) const {
    auto it = std::find(s.begin(), s.end(), x);
    return it == s.end() ? -1 : (int)(it - s.begin());
  }
  int code(int x, int j) const {
    int r = rank(x);
    if (!compat) return r;
    int n = (int)s.size();
    return ((r - j) % n + n) % n;
  }
  // Literal combination over idx[j][*] addressing x.
  Clause bval(int x, int j) const {
    Clause out;
    int c = code(x, j);
    for (int m = 0; m < bits; ++m) out.push_back((c >> m) & 1 ? idx[j][m] : -idx[j][m]);
    return out;
  }
  Clause bval_path(int r, int x, int j) const {
    const auto& p = paths[r];
    int c = (int)(std::find(p.begin(), p.end(), x) - p.begin());
    Clause out;
    for (int m = 0; m < path_bits; ++m) out.push_back((c >> m) & 1 ? idx_p[j][m] : -idx_p[j][m]);
    return out;
  }
  std::vector<int> aux_vars() const {
    std::vector<int> out;
    for (const auto& row : idx) out.insert(out.end(), row.begin(), row.end());
    out.insert(out.end(), val.begin(), val.end());
    out.push_back(sat);
    out.insert(out.end(), sat_clause.begin(), sat_clause.end());
    for (const auto& row : idx_p) out.insert(out.end(), row.begin(), row.end());
    out.insert(out.end(), val_p.begin(), val_p.end());
    out.insert(out.end(), sel.begin(), sel.end());
    out.insert(out.end(), split_aux.begin(), split_aux.end());
    return out;
  }
};

struct SawResult {
  Qbf q;
  std::vector<int> s_prime;  // variable ids
  SawPlan plan;
  bool negated = false;      // input had innermost ∀ and was reduced through its negation
};

namespace sdetail {

inline void require_31_cdnf(const Qbf& q) {
  if (q.kind != MatrixKind::CnfAndDnf && q.kind != MatrixKind::Cnf)
    throw PreconditionError("input must be a CNF ∧ 1-DNF matrix");
  for (const auto& c : q.clauses)
    if (c.size() > 3) throw PreconditionError("clause wider than 3");
  for (const auto& t : q.terms)
    if (t.size() > 1) throw PreconditionError("term wider than 1");
  if (q.innermost() == Quant::Forall) throw PreconditionError("innermost quantifier must be existential");
}

// 3-DNF ∨ 1-CNF under an innermost ∀: the negation is a 3,1-CDNF.
inline bool is_dual_31(const Qbf& q) {
  return !q.prefix.empty() && q.innermost() == Quant::Forall &&
         (q.kind == MatrixKind::DnfOrCnf || q.kind == MatrixKind::Dnf);
}

// The DNF side; a plain CNF behaves as C ∧ {∅}.
inline std::vector<Clause> dnf_side(const Qbf& q) {
  if (q.kind == MatrixKind::Cnf) return {Clause{}};
  return q.terms;
}

// Assigns clause literals to positions 0..2 (or 0..|S|-1 in compat mode).
// Returns (literal, position) pairs.
inline std::vector<std::pair<Lit, int>> positions(const Clause& c, const SawPlan& plan) {
  Clause lits = sorted_lits(c);
  std::vector<std::pair<Lit, int>> out;
  if (!plan.compat) {
    for (int j = 0; j < (int)lits.size(); ++j) out.push_back({lits[j], j});
    return out;
  }
  std::vector<char> taken(3, 0);
  for (Lit l : lits) {
    int r = plan.rank(var_of(l));
    if (r >= 0) {
      out.push_back({l, r});
      taken[r] = 1;
    }
  }
  int next = 0;
  for (Lit l : lits) {
    if (plan.rank(var_of(l)) >= 0) continue;
    while (taken[next]) ++next;
    out.push_back({l, next});
    taken[next] = 1;
  }
  return out;
}

struct Allocator {
  int next;
  std::map<int, std::string>* names;
  int operator()(const std::string& name) {
    (*names)[next] = name;
    return next++;
  }
};

inline void allocate_base(SawPlan& plan, const Qbf& q, Allocator& fresh) {
  plan.indices = plan.compat ? (int)plan.s.size() : 3;
  plan.idx.assign(plan.indices, {});
  for (int j = 0; j < plan.indices; ++j)
    for (int m = 0; m < plan.bits; ++m)
      plan.idx[j].push_back(fresh("idx" + std::to_string(j + 1) + "_" + std::to_string(m + 1)));
  for (int j = 0; j < plan.indices; ++j) plan.val.push_back(fresh("val" + std::to_string(j + 1)));
  plan.sat = fresh("sat");
  for (std::size_t i = 0; i < q.clauses.size(); ++i) plan.sat_clause.push_back(fresh("sat" + std::to_string(i + 1)));
}

// Guess terms, clause terms over S, and the D terms shared by both variants.
inline void emit_base(const Qbf& q, const SawPlan& plan, const std::set<int>& excluded, std::vector<Clause>& terms) {
  const auto& s = plan.s;
  auto guess = [&](int x, int j, bool negative) {
    Clause t{negative ? -x : x};
    for (Lit b : plan.bval(x, j)) t.push_back(b);
    t.push_back(negative ? plan.val[j] : -plan.val[j]);
    terms.push_back(t);
  };
  for (bool negative : {false, true})
    for (int x : s)
      for (int j = 0; j < plan.indices; ++j)
        if (!plan.compat || j == plan.rank(x)) guess(x, j, negative);
  std::vector<std::vector<std::pair<Lit, int>>> pos;
  for (const auto& c : q.clauses) pos.push_back(positions(c, plan));
  for (std::size_t i = 0; i < q.clauses.size(); ++i)
    for (auto [l, j] : pos[i])
      if (!excluded.count(var_of(l))) terms.push_back({plan.sat_clause[i], l});
  for (std::size_t i = 0; i < q.clauses.size(); ++i)
    for (auto [l, j] : pos[i])
      if (plan.rank(var_of(l)) >= 0)
        for (Lit b : plan.bval(var_of(l), j)) terms.push_back({plan.sat_clause[i], -b});
  for (bool negative : {false, true})
    for (std::size_t i = 0; i < q.clauses.size(); ++i)
      for (auto [l, j] : pos[i])
        if (plan.rank(var_of(l)) >= 0 && (l < 0) == negative)
          terms.push_back({plan.sat_clause[i], negative ? -plan.val[j] : plan.val[j]});
}

inline void emit_d(const Qbf& q, const SawPlan& plan, std::vector<Clause>& terms, std::vector<Clause>& clauses) {
  for (const auto& d : dnf_side(q)) {
    Clause t{plan.sat};
    t.insert(t.end(), d.begin(), d.end());
    terms.push_back(t);
  }
  for (int v : plan.sat_clause) clauses.push_back({-v});
  clauses.push_back({-plan.sat});
}

}  // namespace sdetail

// Index/value reduction on a sparse feedback vertex set S (variable ids).
inline SawResult saw_reduce_fvs(const Qbf& q, std::vector<int> s, const SawOptions& opt = {}) {
  validate(q);
  if (sdetail::is_dual_31(q)) {
    // reduce the complement problem and negate back; the graph is unchanged
    SawResult r = saw_reduce_fvs(negate(q), std::move(s), opt);
    r.q = negate(r.q);
    r.negated = true;
    return r;
  }
  sdetail::require_31_cdnf(q);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int x : s)
    if (x < 1 || x > q.num_vars) throw PreconditionError("S names an unknown variable");
  auto fg = build_graph(q, GraphKind::Primal);
  std::vector<int> sv;
  for (int x : s) sv.push_back(x - 1);
  if (!is_acyclic(fg.g, vertex_mask(fg.g.n, sv))) throw PreconditionError("S is not a feedback vertex set");
  if (!is_sparse_wrt(q, s)) throw PreconditionError("S is not sparse");
  if (opt.two_index_compat && s.size() > 3) throw PreconditionError("two-index compatibility needs |S| <= 3");

  SawResult res;
  SawPlan& plan = res.plan;
  plan.s = s;
  plan.compat = opt.two_index_compat && !s.empty();
  plan.bits = ceil_log2(std::max<int>((int)s.size(), 1));
  sdetail::Allocator fresh{q.num_vars + 1, &plan.names};
  sdetail::allocate_base(plan, q, fresh);

  Qbf& out = res.q;
  out.num_vars = fresh.next - 1;
  out.prefix = q.prefix;
  for (int v = q.num_vars + 1; v < fresh.next; ++v) out.prefix.emplace_back(Quant::Forall, v);
  out.kind = MatrixKind::DnfOrCnf;
  std::set<int> excluded(s.begin(), s.end());
  sdetail::emit_base(q, plan, excluded, out.terms);
  sdetail::emit_d(q, plan, out.terms, out.clauses);

  for (const auto& row : plan.idx) plan.s_prime.insert(plan.s_prime.end(), row.begin(), row.end());
  plan.s_prime.insert(plan.s_prime.end(), plan.val.begin(), plan.val.end());
  plan.s_prime.push_back(plan.sat);
  res.s_prime = plan.s_prime;
  return res;
}

// Splits every term wider than 3 into a chain of 3-literal terms linked by
// fresh universal variables appended innermost. Plan literals (S') come
// first, so the remaining literal ends up in the last link with a single
// auxiliary. Sound since ∀v[(A∧v) ∨ (B∧¬v) ∨ R] ≡ (A∧B) ∨ R.
inline Qbf normalize_3dnf(const Qbf& q, SawPlan& plan) {
  if (q.kind == MatrixKind::CnfAndDnf && !q.prefix.empty() && q.innermost() == Quant::Exists)
    return negate(normalize_3dnf(negate(q), plan));  // output of a negated reduction
  if (q.kind != MatrixKind::DnfOrCnf && q.kind != MatrixKind::Dnf)
    throw PreconditionError("normalization expects a reduced D ∨ C matrix");
  std::set<int> sp(plan.s_prime.begin(), plan.s_prime.end());
  Qbf r = q;
  r.terms.clear();
  for (const auto& t : q.terms) {
    if (t.size() <= 3) {
      r.terms.push_back(t);
      continue;
    }
    Clause lits;
    for (Lit l : t)
      if (sp.count(var_of(l))) lits.push_back(l);
    for (Lit l : t)
      if (!sp.count(var_of(l))) lits.push_back(l);
    int links = (int)lits.size() - 3;
    std::vector<int> aux;
    for (int i = 0; i < links; ++i) {
      int v = ++r.num_vars;
      aux.push_back(v);
      plan.split_aux.push_back(v);
      plan.names[v] = "split" + std::to_string(plan.split_aux.size());
      r.prefix.emplace_back(Quant::Forall, v);
    }
    r.terms.push_back({lits[0], lits[1], aux[0]});
    for (int i = 1; i < links; ++i) r.terms.push_back({-aux[i - 1], lits[i + 1], aux[i]});
    r.terms.push_back({-aux[links - 1], lits[lits.size() - 2], lits[lits.size() - 1]});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Treedepth variant

struct TdSawResult {
  Qbf q;
  TreedepthDecomposition td;  // over vertices of the primal graph of q
  SawPlan plan;
  int height_bound = 0;       // |S'| + alpha + 2, from the construction
  bool negated = false;
};

inline TdSawResult saw_reduce_treedepth(const Qbf& q, const AlphaTdDecomposition& t) {
  validate(q);
  if (sdetail::is_dual_31(q)) {
    TdSawResult r = saw_reduce_treedepth(negate(q), t);
    r.q = negate(r.q);
    r.negated = true;
    return r;
  }
  sdetail::require_31_cdnf(q);
  auto fg = build_graph(q, GraphKind::Primal);
  auto rep = validate_alpha_td(fg.g, t);
  if (!rep.valid) throw PreconditionError("invalid alpha-treedepth decomposition: " + rep.violation);

  TdSawResult res;
  SawPlan& plan = res.plan;
  for (int v : t.main_path) plan.s.push_back(v + 1);
  std::vector<int> main_order = plan.s;
  std::sort(plan.s.begin(), plan.s.end());
  std::map<int, int> path_of;  // variable -> path index
  for (const auto& [r, p] : t.paths) {
    plan.path_anchor.push_back(r + 1);
    std::vector<int> vars;
    for (int x : p) {
      vars.push_back(x + 1);
      path_of[x + 1] = (int)plan.paths.size();
    }
    plan.paths.push_back(vars);
  }
  std::vector<int> touched(q.clauses.size(), -1);
  for (std::size_t i = 0; i < q.clauses.size(); ++i)
    for (Lit l : q.clauses[i]) {
      auto it = path_of.find(var_of(l));
      if (it == path_of.end()) continue;
      if (touched[i] != -1 && touched[i] != it->second) throw PreconditionError("clause meets two hanging paths");
      touched[i] = it->second;
    }

  plan.bits = ceil_log2(std::max<int>((int)plan.s.size(), 1));
  std::size_t longest = 0;
  for (const auto& p : plan.paths) longest = std::max(longest, p.size());
  plan.path_bits = ceil_log2(std::max<int>((int)longest, 1));
  sdetail::Allocator fresh{q.num_vars + 1, &plan.names};
  sdetail::allocate_base(plan, q, fresh);
  plan.idx_p.assign(3, {});
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < plan.path_bits; ++m)
      plan.idx_p[j].push_back(fresh("pidx" + std::to_string(j + 1) + "_" + std::to_string(m + 1)));
  for (int j = 0; j < 3; ++j) plan.val_p.push_back(fresh("pval" + std::to_string(j + 1)));
  for (std::size_t r = 0; r < plan.paths.size(); ++r) plan.sel.push_back(fresh("sel" + std::to_string(r + 1)));

  Qbf& out = res.q;
  out.num_vars = fresh.next - 1;
  out.prefix = q.prefix;
  for (int v = q.num_vars + 1; v < fresh.next; ++v) out.prefix.emplace_back(Quant::Forall, v);
  out.kind = MatrixKind::DnfOrCnf;
  std::set<int> excluded(plan.s.begin(), plan.s.end());
  for (auto [v, r] : path_of) excluded.insert(v);
  sdetail::emit_base(q, plan, excluded, out.terms);

  for (bool negative : {false, true})
    for (std::size_t r = 0; r < plan.paths.size(); ++r)
      for (int x : plan.paths[r])
        for (int j = 0; j < 3; ++j) {
          Clause term{plan.sel[r], negative ? -x : x};
          for (Lit b : plan.bval_path((int)r, x, j)) term.push_back(b);
          term.push_back(negative ? plan.val_p[j] : -plan.val_p[j]);
          out.terms.push_back(term);
        }
  for (std::size_t i = 0; i < q.clauses.size(); ++i) {
    for (auto [l, j] : sdetail::positions(q.clauses[i], plan)) {
      auto it = path_of.find(var_of(l));
      if (it == path_of.end()) continue;
      for (Lit b : plan.bval_path(it->second, var_of(l), j)) out.terms.push_back({plan.sat_clause[i], -b});
      out.terms.push_back({plan.sat_clause[i], l > 0 ? plan.val_p[j] : -plan.val_p[j]});
    }
    if (touched[i] != -1) out.terms.push_back({plan.sat_clause[i], -plan.sel[touched[i]]});
  }
  sdetail::emit_d(q, plan, out.terms, out.clauses);

  for (const auto& row : plan.idx) plan.s_prime.insert(plan.s_prime.end(), row.begin(), row.end());
  plan.s_prime.insert(plan.s_prime.end(), plan.val.begin(), plan.val.end());
  plan.s_prime.push_back(plan.sat);
  for (const auto& row : plan.idx_p) plan.s_prime.insert(plan.s_prime.end(), row.begin(), row.end());
  plan.s_prime.insert(plan.s_prime.end(), plan.val_p.begin(), plan.val_p.end());

  // decomposition of the output
  auto& par = res.td.parent;
  par.assign(out.num_vars, -1);
  auto vx = [](int var) { return var - 1; };
  const auto& sp = plan.s_prime;
  for (std::size_t i = 1; i < sp.size(); ++i) par[vx(sp[i])] = vx(sp[i - 1]);
  int last = vx(sp.back());
  for (int x : main_order) par[vx(x)] = last;
  std::set<int> mains(main_order.begin(), main_order.end());
  for (auto [v, p] : t.tree_parent) par[v] = (p == -1 || mains.count(p + 1)) ? last : p;
  for (std::size_t r = 0; r < plan.paths.size(); ++r) {
    par[vx(plan.sel[r])] = vx(plan.path_anchor[r]);
    for (int x : plan.paths[r]) par[vx(x)] = vx(plan.sel[r]);
  }
  auto tree_depth = [&](int var) {
    int d = 0;
    for (int x = var - 1; x != -1;) {
      ++d;
      auto it = t.tree_parent.find(x);
      x = it == t.tree_parent.end() ? -1 : it->second;
    }
    return d;
  };
  for (std::size_t i = 0; i < q.clauses.size(); ++i) {
    int sv = vx(plan.sat_clause[i]);
    if (touched[i] != -1) {
      par[sv] = vx(plan.sel[touched[i]]);
      continue;
    }
    int deepest = -1;
    for (Lit l : q.clauses[i])
      if (!mains.count(var_of(l)) && (deepest == -1 || tree_depth(var_of(l)) > tree_depth(deepest))) deepest = var_of(l);
    par[sv] = deepest == -1 ? last : vx(deepest);
  }
  res.height_bound = (int)sp.size() + t.alpha + 2;
  res.plan.s_prime = plan.s_prime;
  return res;
}

// ---------------------------------------------------------------------------
// CDNF to CNF through a tree decomposition

// Children lists with at most two children per node; extra nodes copy the
// parent's bag.
inline TreeDecomposition binarize(const TreeDecomposition& td) {
  TreeDecomposition out = td;
  int m = (int)td.bags.size();
  std::vector<std::vector<int>> kids(m);
  for (int t = 0; t < m; ++t)
    if (td.parent[t] != -1) kids[td.parent[t]].push_back(t);
  for (int t = 0; t < m; ++t) {
    if (kids[t].size() <= 2) continue;
    int anchor = t;
    for (std::size_t i = 1; i < kids[t].size(); ++i) {
      if (i + 1 == kids[t].size()) {
        out.parent[kids[t][i]] = anchor;
        break;
      }
      int copy = (int)out.bags.size();
      out.bags.push_back(td.bags[t]);
      out.parent.push_back(anchor);
      out.parent[kids[t][i]] = copy;
      anchor = copy;
    }
  }
  return out;
}

struct CnfViaTdResult {
  Qbf q;
  TreeDecomposition td;  // over the primal graph of q
  std::vector<int> sat_node;  // satisfaction variable per node
};

inline CnfViaTdResult cdnf_to_cnf_via_td(const Qbf& q, const TreeDecomposition& td0) {
  validate(q);
  if (q.kind != MatrixKind::CnfAndDnf && q.kind != MatrixKind::Cnf)
    throw PreconditionError("expects a C ∧ D matrix");
  if (q.innermost() == Quant::Forall) throw PreconditionError("innermost quantifier must be existential");
  auto fg = build_graph(q, GraphKind::Primal);
  auto rep = validate_tree_decomposition(fg.g, td0);
  if (!rep.valid) throw PreconditionError("invalid tree decomposition: " + rep.violation);
  TreeDecomposition td = binarize(td0);
  int m = (int)td.bags.size();
  int root = -1;
  std::vector<std::vector<int>> kids(m);
  for (int t = 0; t < m; ++t) {
    if (td.parent[t] == -1) root = t;
    else kids[td.parent[t]].push_back(t);
  }

  CnfViaTdResult res;
  Qbf& out = res.q;
  out = q;
  out.kind = MatrixKind::Cnf;
  out.terms.clear();
  for (int t = 0; t < m; ++t) {
    res.sat_node.push_back(++out.num_vars);
    out.prefix.emplace_back(Quant::Exists, out.num_vars);
  }
  auto dnf = sdetail::dnf_side(q);
  for (int t = 0; t < m; ++t) {
    std::set<int> bag;
    for (int v : td.bags[t]) bag.insert(v + 1);
    Clause base{-res.sat_node[t]};
    for (int c : kids[t]) base.push_back(res.sat_node[c]);
    std::vector<const Clause*> local;
    bool trivially_true = false;
    for (const auto& d : dnf) {
      bool inside = std::all_of(d.begin(), d.end(), [&](Lit l) { return bag.count(var_of(l)); });
      if (!inside) continue;
      if (d.empty()) trivially_true = true;
      local.push_back(&d);
    }
    if (trivially_true) continue;
    // distribute: one literal from each local term
    std::vector<Clause> acc{base};
    for (const Clause* d : local) {
      std::vector<Clause> next;
      for (const auto& c : acc)
        for (Lit l : *d) {
          if (std::find(c.begin(), c.end(), -l) != c.end()) continue;
          Clause e = c;
          if (std::find(e.begin(), e.end(), l) == e.end()) e.push_back(l);
          next.push_back(e);
        }
      acc = canonical_set(next);
    }
    for (auto& c : acc) out.clauses.push_back(c);
  }
  if (root != -1) out.clauses.push_back({res.sat_node[root]});

  res.td = td;
  for (int t = 0; t < m; ++t) {
    res.td.bags[t].push_back(res.sat_node[t] - 1);
    for (int c : kids[t]) res.td.bags[t].push_back(res.sat_node[c] - 1);
  }
  if (m == 0) {
    // no nodes: the D side alone decides
    bool d_true = std::any_of(dnf.begin(), dnf.end(), [](const Clause& d) { return d.empty(); });
    if (!d_true) out.clauses.push_back({});
  }
  return res;
}

// ---------------------------------------------------------------------------
// Folding a singleton side into one long clause (or term)

inline Qbf fold_1dnf_into_clause(const Qbf& q) {
  validate(q);
  if (q.kind == MatrixKind::Cnf || q.kind == MatrixKind::Dnf) return q;
  bool conj = q.kind == MatrixKind::CnfAndDnf;
  const auto& side = conj ? q.terms : q.clauses;
  Qbf r = q;
  r.kind = conj ? MatrixKind::Cnf : MatrixKind::Dnf;
  r.terms = conj ? std::vector<Clause>{} : q.terms;
  r.clauses = conj ? q.clauses : std::vector<Clause>{};
  for (const auto& x : side)
    if (x.size() > 1) throw PreconditionError(std::string("the ") + (conj ? "DNF" : "CNF") + " side is not singleton-only");
  // an empty term makes D true (an empty clause makes C false): nothing to add
  if (std::any_of(side.begin(), side.end(), [](const Clause& x) { return x.empty(); })) return r;
  Clause f;
  std::set<Lit> seen;
  bool taut = false;
  for (const auto& x : side) {
    if (seen.count(-x[0])) taut = true;
    if (seen.insert(x[0]).second) f.push_back(x[0]);
  }
  if (!taut) (conj ? r.clauses : r.terms).push_back(f);
  return r;
}

}  // namespace qbfs
