// Structure-driven solvers: caching DPLL, clause dedup, universal expansion
// of deletion sets, component types, the ∃≤1∀ pruning solver, the
// universally-complete solver and the single-deletion game algorithm.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "graph.hpp"

namespace qbfs {

// ---------------------------------------------------------------------------
// DPLL with formula caching

struct CacheOptions {
  bool caching = true;
  std::size_t max_entries = std::size_t(1) << 20;
};

struct CacheStats {
  std::size_t nodes = 0;
  std::size_t hits = 0;
  std::size_t entries = 0;
};

namespace cdetail {

struct Residual {
  std::vector<Clause> clauses, terms;
};

inline void assign_side(std::vector<Clause>& cs, Lit l, bool is_term) {
  std::vector<Clause> out;
  out.reserve(cs.size());
  for (auto& c : cs) {
    bool hit = false, drop = false;
    for (Lit x : c) {
      if (x == l) hit = true;
      if (x == -l) drop = true;
    }
    // clause: true literal satisfies it, false literal shrinks it
    // term: false literal kills it, true literal shrinks it
    if (!is_term) {
      if (hit) continue;
      if (drop) c.erase(std::remove(c.begin(), c.end(), -l), c.end());
    } else {
      if (drop) continue;
      if (hit) c.erase(std::remove(c.begin(), c.end(), l), c.end());
    }
    out.push_back(std::move(c));
  }
  cs = std::move(out);
}

inline int status(MatrixKind kind, const Residual& r) {
  bool c_false = std::any_of(r.clauses.begin(), r.clauses.end(), [](const Clause& c) { return c.empty(); });
  int c = c_false ? 0 : (r.clauses.empty() ? 1 : -1);
  bool d_true = std::any_of(r.terms.begin(), r.terms.end(), [](const Clause& t) { return t.empty(); });
  int d = d_true ? 1 : (r.terms.empty() ? 0 : -1);
  switch (kind) {
    case MatrixKind::Cnf: return c;
    case MatrixKind::Dnf: return d;
    case MatrixKind::CnfAndDnf:
      if (c == 0 || d == 0) return 0;
      return (c == 1 && d == 1) ? 1 : -1;
    case MatrixKind::DnfOrCnf:
      if (c == 1 || d == 1) return 1;
      return (c == 0 && d == 0) ? 0 : -1;
  }
  return -1;
}

inline std::string key_of(const Residual& r) {
  std::string s;
  for (const auto& c : canonical_set(r.clauses)) {
    for (Lit l : c) s += std::to_string(l) + ' ';
    s += '|';
  }
  s += '#';
  for (const auto& t : canonical_set(r.terms)) {
    for (Lit l : t) s += std::to_string(l) + ' ';
    s += '|';
  }
  return s;
}

}  // namespace cdetail

// Backtracking in prefix order over variables that still occur. The cache is
// keyed by the canonical residual matrix: every remaining variable is later
// than the current position, so the residual alone fixes the value.
inline bool solve_vc_cache(const Qbf& q, const CacheOptions& opt = {}, CacheStats* stats = nullptr) {
  validate(q);
  CacheStats local;
  CacheStats& st = stats ? *stats : local;
  std::unordered_map<std::string, bool> cache;
  const auto& prefix = q.prefix;
  std::function<bool(cdetail::Residual&, std::size_t)> go = [&](cdetail::Residual& r, std::size_t pos) -> bool {
    ++st.nodes;
    int s = cdetail::status(q.kind, r);
    if (s != -1) return s == 1;
    std::set<int> occ;
    for (const auto& c : r.clauses)
      for (Lit l : c) occ.insert(var_of(l));
    for (const auto& t : r.terms)
      for (Lit l : t) occ.insert(var_of(l));
    while (pos < prefix.size() && !occ.count(prefix[pos].second)) ++pos;
    if (pos == prefix.size()) throw PreconditionError("matrix variable missing from prefix");
    std::string key;
    if (opt.caching) {
      key = cdetail::key_of(r);
      auto it = cache.find(key);
      if (it != cache.end()) {
        ++st.hits;
        return it->second;
      }
    }
    auto [quant, v] = prefix[pos];
    bool ex = quant == Quant::Exists;
    bool result = !ex;
    for (bool b : {false, true}) {
      cdetail::Residual child = r;
      Lit l = b ? v : -v;
      cdetail::assign_side(child.clauses, l, false);
      cdetail::assign_side(child.terms, l, true);
      bool val = go(child, pos + 1);
      if (val == ex) {
        result = ex;
        break;
      }
    }
    if (opt.caching) {
      if (cache.size() >= opt.max_entries)
        throw BudgetExceeded("formula cache exceeded " + std::to_string(opt.max_entries) + " entries");
      cache.emplace(std::move(key), result);
      st.entries = cache.size();
    }
    return result;
  };
  cdetail::Residual root{q.clauses, q.terms};
  return go(root, 0);
}

// ---------------------------------------------------------------------------
// Clause deduplication

struct DedupResult {
  bool value = false;
  std::size_t input_clauses = 0;
  std::size_t distinct_clauses = 0;
};

inline DedupResult solve_clause_dedup(const Qbf& q, const CacheOptions& opt = {}) {
  if (q.kind != MatrixKind::Cnf) throw PreconditionError("clause dedup needs a CNF matrix");
  Qbf d = q;
  d.clauses = canonical_set(q.clauses);
  DedupResult r;
  r.input_clauses = q.clauses.size();
  r.distinct_clauses = d.clauses.size();
  r.value = solve_vc_cache(d, opt);
  return r;
}

// ---------------------------------------------------------------------------
// Components relative to a deletion set

// Q|_A: prefix restricted to A, clauses (and terms) entirely inside A.
inline Qbf restrict_to(const Qbf& q, const std::set<int>& a) {
  Qbf r;
  r.num_vars = q.num_vars;
  r.kind = q.kind;
  for (auto p : q.prefix)
    if (a.count(p.second)) r.prefix.push_back(p);
  auto inside = [&](const Clause& c) {
    return std::all_of(c.begin(), c.end(), [&](Lit l) { return a.count(var_of(l)) > 0; });
  };
  for (const auto& c : q.clauses)
    if (inside(c)) r.clauses.push_back(c);
  for (const auto& t : q.terms)
    if (inside(t)) r.terms.push_back(t);
  return r;
}

// Components of G_q − D over prefix variables (variable ids, prefix order).
inline std::vector<std::vector<int>> deletion_components(const Qbf& q, const std::vector<int>& d) {
  auto fg = build_graph(q, GraphKind::Primal);
  std::vector<char> removed(q.num_vars, 1);
  for (auto [qq, v] : q.prefix) removed[v - 1] = 0;
  for (int v : d) removed[v - 1] = 1;
  auto pos = q.position_table();
  std::vector<std::vector<int>> out;
  for (auto& comp : components(fg.g, removed)) {
    std::vector<int> vars;
    for (int x : comp) vars.push_back(x + 1);
    std::sort(vars.begin(), vars.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    out.push_back(std::move(vars));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return pos[a[0]] < pos[b[0]]; });
  return out;
}

inline int largest_component(const Qbf& q, const std::vector<int>& d) {
  int c = 0;
  for (const auto& comp : deletion_components(q, d)) c = std::max(c, (int)comp.size());
  return c;
}

inline void check_deletion_vars(const Qbf& q, const std::vector<int>& d) {
  auto quant = q.quant_table();
  std::set<int> seen;
  for (int v : d) {
    if (v < 1 || v > q.num_vars || !quant[v])
      throw PreconditionError("deletion-set variable not in prefix: " + std::to_string(v));
    if (!seen.insert(v).second) throw PreconditionError("deletion-set variable repeated: " + std::to_string(v));
  }
}

struct ComponentType {
  std::string signature;
  std::vector<std::vector<int>> components;  // each in prefix order; list in type order
};

inline std::string component_signature(const Qbf& q, const std::vector<int>& comp, const std::set<int>& d) {
  auto pos = q.position_table();
  auto quant = q.quant_table();
  std::map<int, int> rank;
  for (int i = 0; i < (int)comp.size(); ++i) rank[comp[i]] = i + 1;
  std::string s;
  for (int v : comp) {
    int before = 0;
    for (int x : d)
      if (pos[x] < pos[v]) ++before;
    s += quant_char(*quant[v]) + std::to_string(before) + ' ';
  }
  s += ':';
  std::vector<std::string> cls;
  for (const auto& c : q.clauses) {
    bool touches = std::any_of(c.begin(), c.end(), [&](Lit l) { return rank.count(var_of(l)) > 0; });
    if (!touches) continue;
    std::vector<std::string> lits;
    for (Lit l : c) {
      int v = var_of(l);
      std::string t = rank.count(v) ? "c" + std::to_string(rank[v]) : "d" + std::to_string(v);
      lits.push_back((l < 0 ? "-" : "+") + t);
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::string one;
    for (const auto& t : lits) one += t + ',';
    cls.push_back(one);
  }
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  for (const auto& c : cls) s += c + ';';
  return s;
}

// Designated position of a component: its unique existential, else its first variable.
inline int designated_position(const Qbf& q, const std::vector<int>& comp) {
  auto pos = q.position_table();
  auto quant = q.quant_table();
  std::vector<int> ex;
  for (int v : comp)
    if (*quant[v] == Quant::Exists) ex.push_back(v);
  return ex.size() == 1 ? pos[ex[0]] : pos[comp[0]];
}

inline std::vector<ComponentType> component_types(const Qbf& q, const std::vector<int>& d) {
  if (q.kind != MatrixKind::Cnf) throw PreconditionError("component types need a CNF matrix");
  check_deletion_vars(q, d);
  std::set<int> ds(d.begin(), d.end());
  std::vector<ComponentType> out;
  std::map<std::string, std::size_t> index;
  for (auto& comp : deletion_components(q, d)) {
    auto sig = component_signature(q, comp, ds);
    auto it = index.find(sig);
    if (it == index.end()) {
      index.emplace(sig, out.size());
      out.push_back({sig, {comp}});
    } else {
      out[it->second].components.push_back(comp);
    }
  }
  for (auto& t : out)
    std::stable_sort(t.components.begin(), t.components.end(), [&](const auto& a, const auto& b) {
      return designated_position(q, a) < designated_position(q, b);
    });
  return out;
}

// ---------------------------------------------------------------------------
// Universal expansion of deletion-set variables

struct ExpansionResult {
  Qbf q;
  std::vector<int> d;
  int universals = 0;   // u
  int c_in = 0;         // c for the input set
  int c_bound = 0;      // 2^u · c
  bool validated = false;
};

inline ExpansionResult expand_universal_deletions(const Qbf& input, const std::vector<int>& d, int c = 0) {
  if (input.kind != MatrixKind::Cnf) throw PreconditionError("expansion needs a CNF matrix");
  validate(input);
  check_deletion_vars(input, d);
  int c_real = largest_component(input, d);
  if (c == 0) c = c_real;
  if (c_real > c) throw PreconditionError("not a " + std::to_string(c) + "-deletion set");
  ExpansionResult res;
  res.c_in = c;
  Qbf q = input;
  std::vector<int> dd = d;
  auto quant = q.quant_table();
  for (int v : d)
    if (*quant[v] == Quant::Forall) ++res.universals;
  while (true) {
    auto pos = q.position_table();
    auto qt = q.quant_table();
    int v = 0;
    for (int x : dd)
      if (*qt[x] == Quant::Forall && (v == 0 || pos[x] > pos[v])) v = x;
    if (v == 0) break;
    auto occ = matrix_vars(q);
    std::map<int, int> copy;
    Qbf r;
    r.kind = MatrixKind::Cnf;
    r.num_vars = q.num_vars;
    for (int i = 0; i < (int)q.prefix.size(); ++i) {
      auto [qq, w] = q.prefix[i];
      if (i < pos[v]) {
        r.prefix.push_back(q.prefix[i]);
      } else if (i > pos[v]) {
        r.prefix.push_back(q.prefix[i]);
        if (occ.count(w)) {
          copy[w] = ++r.num_vars;
          r.prefix.emplace_back(qq, copy[w]);
        }
      }
    }
    Qbf zero = restrict(q, {{v, false}});
    Qbf one = restrict(q, {{v, true}});
    std::vector<Clause> cs = zero.clauses;
    for (auto c1 : one.clauses) {
      for (Lit& l : c1)
        if (copy.count(var_of(l))) l = l > 0 ? copy[var_of(l)] : -copy[var_of(l)];
      cs.push_back(std::move(c1));
    }
    // identical clauses from both halves carry no information twice
    std::set<Clause> seen;
    for (auto& c1 : cs)
      if (seen.insert(sorted_lits(c1)).second) r.clauses.push_back(std::move(c1));
    std::vector<int> nd;
    for (int x : dd) {
      if (x == v) continue;
      nd.push_back(x);
      if (copy.count(x)) nd.push_back(copy[x]);
    }
    dd = std::move(nd);
    q = std::move(r);
  }
  res.q = std::move(q);
  res.d = std::move(dd);
  res.c_bound = (1 << res.universals) * c;
  res.validated = largest_component(res.q, res.d) <= res.c_bound &&
                  res.d.size() <= (std::size_t(1) << res.universals) * d.size();
  if (!res.validated) throw Error("expansion produced an invalid deletion set");
  return res;
}

// ---------------------------------------------------------------------------
// Components of shape ∃≤1∀

inline bool is_e1a_component(const Qbf& q, const std::vector<int>& comp) {
  auto quant = q.quant_table();
  auto pos = q.position_table();
  int ex = 0, ex_pos = -1, first_uni = -1;
  for (int v : comp) {
    if (*quant[v] == Quant::Exists) {
      ++ex;
      ex_pos = pos[v];
    } else if (first_uni == -1 || pos[v] < first_uni) {
      first_uni = pos[v];
    }
  }
  if (ex > 1) return false;
  return ex == 0 || first_uni == -1 || ex_pos < first_uni;
}

inline Qbf remove_components(const Qbf& q, const std::vector<std::vector<int>>& comps) {
  std::set<int> gone;
  for (const auto& c : comps) gone.insert(c.begin(), c.end());
  Qbf r = q;
  r.prefix.clear();
  for (auto p : q.prefix)
    if (!gone.count(p.second)) r.prefix.push_back(p);
  r.clauses.clear();
  for (const auto& c : q.clauses)
    if (std::none_of(c.begin(), c.end(), [&](Lit l) { return gone.count(var_of(l)) > 0; })) r.clauses.push_back(c);
  return r;
}

inline std::size_t e1a_keep_count(std::size_t r, int c) {
  std::size_t cap = c >= 62 ? r : (std::size_t(1) << c) - 1;
  return std::min(r, cap);
}

inline Qbf prune_e1a_components(const Qbf& q, const std::vector<int>& d, const ComponentType& t, int c = 0) {
  if (c == 0) c = largest_component(q, d);
  for (const auto& comp : t.components)
    if (!is_e1a_component(q, comp)) throw PreconditionError("component type is not of the form ∃≤1∀");
  std::size_t keep = e1a_keep_count(t.components.size(), c);
  std::vector<std::vector<int>> drop(t.components.begin() + keep, t.components.end());
  return remove_components(q, drop);
}

inline bool solve_e1a(const Qbf& q, const std::vector<int>& d, int c = 0, std::size_t budget = kDefaultVarBudget,
                      Qbf* pruned = nullptr) {
  validate(q);
  if (c == 0) c = largest_component(q, d);
  else if (largest_component(q, d) > c) throw PreconditionError("not a " + std::to_string(c) + "-deletion set");
  auto types = component_types(q, d);
  for (const auto& t : types)
    for (const auto& comp : t.components)
      if (!is_e1a_component(q, comp)) throw PreconditionError("component not of the form ∃≤1∀");
  std::vector<std::vector<int>> drop;
  for (const auto& t : types)
    for (std::size_t i = e1a_keep_count(t.components.size(), c); i < t.components.size(); ++i)
      drop.push_back(t.components[i]);
  Qbf r = remove_components(q, drop);
  if (pruned) *pruned = r;
  return evaluate(r, budget);
}

// ---------------------------------------------------------------------------
// Forcing assignments and universally complete deletion sets

inline bool forces_assignment(const Qbf& q_local, const Assignment& beta) {
  auto quant = q_local.quant_table();
  for (auto [v, b] : beta)
    if (v < 1 || v > q_local.num_vars || !quant[v] || *quant[v] != Quant::Exists)
      throw PreconditionError("assignment variable is not an existential of the formula: " + std::to_string(v));
  return evaluate(restrict(q_local, beta));
}

inline Assignment assignment_from_bits(const std::vector<int>& d, unsigned long long bits) {
  Assignment a;
  for (std::size_t i = 0; i < d.size(); ++i) a[d[i]] = (bits >> i) & 1;
  return a;
}

struct UniCompleteResult {
  bool value = false;
  std::vector<std::string> types;
  std::vector<std::set<unsigned long long>> allowed;  // A(t), bit i = value of d[i]
  std::optional<unsigned long long> witness;
};

inline UniCompleteResult solve_universally_complete(const Qbf& q, const std::vector<int>& d) {
  validate(q);
  check_deletion_vars(q, d);
  auto quant = q.quant_table();
  for (int v : d)
    if (*quant[v] != Quant::Exists)
      throw PreconditionError("deletion set must be existential; expand universal variables first");
  if (d.size() > 20) throw BudgetExceeded("deletion set too large to enumerate");
  auto types = component_types(q, d);
  std::size_t need = std::size_t(1) << d.size();
  std::string deficient;
  for (const auto& t : types)
    if (t.components.size() < need)
      deficient += " [" + t.signature + "] has " + std::to_string(t.components.size());
  if (!deficient.empty())
    throw PreconditionError("not universally complete, need " + std::to_string(need) + " per type:" + deficient);
  UniCompleteResult res;
  std::set<int> dset(d.begin(), d.end());
  std::vector<Qbf> locals;
  for (const auto& t : types) {
    std::set<int> a = dset;
    a.insert(t.components[0].begin(), t.components[0].end());
    locals.push_back(restrict_to(q, a));
    res.types.push_back(t.signature);
  }
  if (types.empty()) {
    locals.push_back(restrict_to(q, dset));
    res.types.push_back("");
  }
  for (const auto& local : locals) {
    std::set<unsigned long long> a;
    for (unsigned long long b = 0; b < need; ++b)
      if (forces_assignment(local, assignment_from_bits(d, b))) a.insert(b);
    res.allowed.push_back(std::move(a));
  }
  for (unsigned long long b = 0; b < need && !res.witness; ++b)
    if (std::all_of(res.allowed.begin(), res.allowed.end(), [&](const auto& a) { return a.count(b) > 0; }))
      res.witness = b;
  res.value = res.witness.has_value();
  return res;
}

// ---------------------------------------------------------------------------
// Game layer for a single deletion variable e (innermost existential).
// Index i means the first i prefix variables other than e.

enum class Player { Existential, Universal };
enum class QueryMode { Forbids, Permits, EmpowersAt, LeavesChoiceAt };

struct StrategyQuery {
  Player player = Player::Universal;
  QueryMode mode = QueryMode::Forbids;
  int index = 0;
  bool target_pos = true;   // σ = e
  bool target_neg = false;  // σ = ¬e
};

namespace gdetail {

inline void require_game(const Qbf& f, int e) {
  if (f.kind != MatrixKind::Cnf) throw PreconditionError("game queries need a CNF component");
  if (f.prefix.empty() || f.prefix.back() != std::make_pair(Quant::Exists, e))
    throw PreconditionError("deletion variable must be the innermost existential");
}

// Value of the QBF over the remaining prefix with e fixed to σ.
inline bool val(const Qbf& f, int e, bool sigma) { return evaluate(restrict(f, {{e, sigma}})); }

inline bool leaf(const Qbf& f, int e, Player p, QueryMode m) {
  bool v1 = val(f, e, true), v0 = val(f, e, false);
  if (p == Player::Universal) return m == QueryMode::EmpowersAt ? (!v1 || !v0) : (!v1 && !v0);
  return m == QueryMode::EmpowersAt ? (v1 || v0) : (v1 && v0);
}

inline bool minimax(const Qbf& f, int e, const std::vector<std::pair<Quant, int>>& order, std::size_t k, Player p,
                    QueryMode m) {
  if (k == order.size()) return leaf(f, e, p, m);
  auto [quant, v] = order[k];
  // the player's own variables are chosen (OR), the opponent's are adversarial (AND)
  bool own = (quant == Quant::Forall) == (p == Player::Universal);
  for (bool b : {false, true}) {
    bool r = minimax(restrict(f, {{v, b}}), e, order, k + 1, p, m);
    if (r == own) return own;
  }
  return !own;
}

}  // namespace gdetail

inline int game_length(const Qbf& f) { return (int)f.prefix.size() - 1; }

inline bool strategy_query(const Qbf& f, int e, const StrategyQuery& query) {
  gdetail::require_game(f, e);
  switch (query.mode) {
    case QueryMode::Forbids:
    case QueryMode::Permits: {
      if ((query.mode == QueryMode::Forbids) != (query.player == Player::Universal))
        throw PreconditionError("forbids is a universal query and permits an existential one");
      if (!query.target_pos && !query.target_neg) throw PreconditionError("empty target set");
      bool forbid = query.mode == QueryMode::Forbids;
      if (query.target_pos && query.target_neg) {
        if (forbid) return !evaluate(f);
        Qbf both = f;
        both.prefix.pop_back();
        both.clauses = restrict(f, {{e, false}}).clauses;
        auto one = restrict(f, {{e, true}}).clauses;
        both.clauses.insert(both.clauses.end(), one.begin(), one.end());
        return evaluate(both);
      }
      bool v = gdetail::val(f, e, query.target_pos);
      return forbid ? !v : v;
    }
    case QueryMode::EmpowersAt:
    case QueryMode::LeavesChoiceAt: {
      if (query.index < 0 || query.index > game_length(f)) throw PreconditionError("index out of range");
      auto occ = matrix_vars(f);
      std::vector<std::pair<Quant, int>> order;
      for (int i = 0; i < query.index; ++i)
        if (occ.count(f.prefix[i].second)) order.push_back(f.prefix[i]);
      return gdetail::minimax(f, e, order, 0, query.player, query.mode);
    }
  }
  return false;
}

struct GameIndexReport {
  std::optional<int> lc, ee;
  bool forbids_pos = false, forbids_neg = false, forbids_both = false;
  bool permits_pos = false, permits_neg = false, permits_both = false;
  std::vector<char> leaves_choice, empowers;  // universal, per index 0..ℓ
};

inline GameIndexReport lc_ee(const Qbf& f, int e) {
  gdetail::require_game(f, e);
  GameIndexReport r;
  auto q = [&](Player p, QueryMode m, bool pos, bool neg) { return strategy_query(f, e, {p, m, 0, pos, neg}); };
  r.forbids_pos = q(Player::Universal, QueryMode::Forbids, true, false);
  r.forbids_neg = q(Player::Universal, QueryMode::Forbids, false, true);
  r.forbids_both = q(Player::Universal, QueryMode::Forbids, true, true);
  r.permits_pos = q(Player::Existential, QueryMode::Permits, true, false);
  r.permits_neg = q(Player::Existential, QueryMode::Permits, false, true);
  r.permits_both = q(Player::Existential, QueryMode::Permits, true, true);
  int len = game_length(f);
  auto occ = matrix_vars(f);
  r.leaves_choice.assign(len + 1, 0);
  r.empowers.assign(len + 1, 0);
  for (int i = 0; i <= len; ++i) {
    // the answer only changes when a variable of F enters V_i
    if (i > 0 && !occ.count(f.prefix[i - 1].second)) {
      r.leaves_choice[i] = r.leaves_choice[i - 1];
      r.empowers[i] = r.empowers[i - 1];
      continue;
    }
    r.leaves_choice[i] = strategy_query(f, e, {Player::Universal, QueryMode::LeavesChoiceAt, i});
    r.empowers[i] = strategy_query(f, e, {Player::Universal, QueryMode::EmpowersAt, i});
  }
  for (int i = 0; i <= len; ++i) {
    if (r.leaves_choice[i]) r.lc = i;
    if (r.empowers[i] && !r.ee) r.ee = i;
  }
  return r;
}

struct SingleDeletionResult {
  bool value = false;
  std::string step;  // which step of the algorithm decided
  std::optional<int> lc, ee_min;
  std::vector<GameIndexReport> reports;
};

inline SingleDeletionResult solve_single_deletion(const Qbf& input, int e, int c = 0) {
  if (input.kind != MatrixKind::Cnf) throw PreconditionError("single-deletion solver needs a CNF matrix");
  validate(input);
  check_deletion_vars(input, {e});
  if (c > 0 && largest_component(input, {e}) > c)
    throw PreconditionError("{" + std::to_string(e) + "} is not a " + std::to_string(c) + "-deletion set");
  SingleDeletionResult res;
  if (*input.quant_table()[e] == Quant::Forall) {
    auto ex = expand_universal_deletions(input, {e}, c);
    res.value = true;
    res.step = "universal-expansion";
    for (const auto& comp : deletion_components(ex.q, {})) {
      if (!evaluate(restrict_to(ex.q, std::set<int>(comp.begin(), comp.end())))) {
        res.value = false;
        break;
      }
    }
    // clauses over no variable at all
    for (const auto& cl : ex.q.clauses)
      if (cl.empty()) res.value = false;
    return res;
  }
  Qbf q = input;
  while (q.prefix.back().second != e) q = eliminate_innermost(q, q.prefix.back().second);
  auto comps = deletion_components(q, {e});
  std::vector<int> comp_of(q.num_vars + 1, -1);
  for (int i = 0; i < (int)comps.size(); ++i)
    for (int v : comps[i]) comp_of[v] = i;
  std::vector<std::vector<Clause>> groups(comps.size() + 1);  // last: clauses over e alone
  for (const auto& cl : q.clauses) {
    int g = (int)comps.size();
    for (Lit l : cl)
      if (var_of(l) != e) g = comp_of[var_of(l)];
    groups[g].push_back(cl);
  }
  std::vector<Qbf> parts;
  for (auto& g : groups) {
    if (g.empty()) continue;
    Qbf f = q;
    f.clauses = std::move(g);
    parts.push_back(std::move(f));
  }
  for (const auto& f : parts) res.reports.push_back(lc_ee(f, e));
  const auto& rep = res.reports;
  for (const auto& r : rep)
    if (r.forbids_both) {
      res.step = "component-false";
      return res;
    }
  std::vector<int> live;
  for (int i = 0; i < (int)rep.size(); ++i)
    if (!rep[i].permits_both) live.push_back(i);
  if (live.size() <= 1) {
    res.value = true;
    res.step = "at-most-one-left";
    return res;
  }
  std::vector<int> fpos, fneg;
  for (int i : live) {
    if (rep[i].forbids_pos) fpos.push_back(i);
    if (rep[i].forbids_neg) fneg.push_back(i);
  }
  if (fpos.empty() || fneg.empty()) {
    res.value = true;
    res.step = "one-side-free";
    return res;
  }
  for (int i : fpos)
    for (int j : fneg)
      if (i != j) {
        res.step = "distinct-forbidders";
        return res;
      }
  int i = fpos[0];
  res.lc = rep[i].lc;
  for (int j : live)
    if (j != i && rep[j].ee && (!res.ee_min || *rep[j].ee < *res.ee_min)) res.ee_min = rep[j].ee;
  res.step = "index-comparison";
  res.value = !(res.ee_min && res.lc && *res.ee_min <= *res.lc);
  return res;
}

}  // namespace qbfs
