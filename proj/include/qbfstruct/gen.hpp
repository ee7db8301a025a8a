// Seeded random instances, with planted structure for each solver's
// precondition. One mt19937_64 per instance; per-instance seeds come from
// SplitMix64 over (seed, index), so batches are reproducible and can be
// generated in any order.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "core.hpp"
#include "graph.hpp"

namespace qbfs {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t index) : eng_(stream_seed(seed, index)) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    // explicit Fisher-Yates: std::shuffle is not specified across standard libraries
    for (int i = (int)v.size() - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
  }
  Lit lit(int v) { return coin() ? v : -v; }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Random prefix over variables 1..n with about `depth` alternating blocks,
// in a shuffled order so positions and ids differ.
inline std::vector<std::pair<Quant, int>> random_prefix(Rng& rng, int n, int depth, bool innermost_exists = false) {
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  rng.shuffle(vars);
  depth = std::max(1, std::min(depth, n));
  std::vector<int> cuts;
  for (int i = 1; i < n; ++i) cuts.push_back(i);
  rng.shuffle(cuts);
  cuts.resize(depth - 1);
  std::sort(cuts.begin(), cuts.end());
  Quant q = rng.coin() ? Quant::Exists : Quant::Forall;
  if (innermost_exists && depth % 2 == 0) q = Quant::Forall;
  if (innermost_exists && depth % 2 == 1) q = Quant::Exists;
  std::vector<std::pair<Quant, int>> p;
  std::size_t c = 0;
  for (int i = 0; i < n; ++i) {
    if (c < cuts.size() && cuts[c] == i) {
      q = flip(q);
      ++c;
    }
    p.emplace_back(q, vars[i]);
  }
  return p;
}

inline Clause random_clause(Rng& rng, const std::vector<int>& pool, int width) {
  std::vector<int> vs = pool;
  rng.shuffle(vs);
  vs.resize(std::min<std::size_t>(vs.size(), width));
  Clause c;
  for (int v : vs) c.push_back(rng.lit(v));
  return c;
}

struct RandomSpec {
  int n = 6;
  int clauses = 6;
  int terms = 0;
  int width = 3;
  int term_width = 2;
  int depth = 3;
  MatrixKind kind = MatrixKind::Cnf;
};

// Any CDNF; orientation follows the kind when it has both sides.
inline Qbf random_qbf(Rng& rng, const RandomSpec& s) {
  Qbf q;
  q.num_vars = s.n;
  q.kind = s.kind;
  q.prefix = random_prefix(rng, s.n, s.depth);
  if (s.kind == MatrixKind::CnfAndDnf && q.prefix.back().first == Quant::Forall)
    for (auto& p : q.prefix) p.first = flip(p.first);
  if (s.kind == MatrixKind::DnfOrCnf && q.prefix.back().first == Quant::Exists)
    for (auto& p : q.prefix) p.first = flip(p.first);
  std::vector<int> all(s.n);
  std::iota(all.begin(), all.end(), 1);
  if (has_cnf(s.kind))
    for (int i = 0; i < s.clauses; ++i) q.clauses.push_back(random_clause(rng, all, rng.uniform(1, s.width)));
  if (has_dnf(s.kind))
    for (int i = 0; i < s.terms; ++i) q.terms.push_back(random_clause(rng, all, rng.uniform(1, s.term_width)));
  return q;
}

// A prefix-closed matrix: keeps only the variables that occur, renumbered by
// prefix order. Useful after generation so instances have no dead variables.
inline Qbf compact(const Qbf& q) {
  auto occ = matrix_vars(q);
  std::vector<int> map(q.num_vars + 1, 0);
  Qbf r;
  r.kind = q.kind;
  for (auto [qq, v] : q.prefix)
    if (occ.count(v)) {
      map[v] = ++r.num_vars;
      r.prefix.emplace_back(qq, map[v]);
    }
  auto ren = [&](const std::vector<Clause>& cs) {
    std::vector<Clause> out;
    for (auto c : cs) {
      for (Lit& l : c) l = l > 0 ? map[l] : -map[-l];
      out.push_back(std::move(c));
    }
    return out;
  };
  r.clauses = ren(q.clauses);
  r.terms = ren(q.terms);
  return r;
}

// ---------------------------------------------------------------------------
// Planted structures. Witness sets are variable ids.

struct Planted {
  Qbf q;
  std::vector<int> witness;
  AlphaTdDecomposition alpha_td;  // only for planted alpha-treedepth
};

// Sparse FVS: non-S variables form a forest, each forest edge used by exactly
// one clause. Matrix is 3-CNF ∧ 1-DNF with an innermost existential.
inline Planted gen_sparse_fvs(Rng& rng, int n, int k, int extra = 3, int unit_terms = 1) {
  Planted p;
  Qbf& q = p.q;
  q.num_vars = n;
  q.prefix = random_prefix(rng, n, rng.uniform(1, 4), true);
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  rng.shuffle(vars);
  k = std::min(k, n);
  std::vector<int> s(vars.begin(), vars.begin() + k), rest(vars.begin() + k, vars.end());
  std::sort(s.begin(), s.end());
  p.witness = s;
  auto s_lits = [&](int most) {
    Clause c;
    std::vector<int> pool = s;
    rng.shuffle(pool);
    int t = std::min<int>(most, (int)pool.size());
    t = rng.uniform(0, t);
    for (int i = 0; i < t; ++i) c.push_back(rng.lit(pool[i]));
    return c;
  };
  for (std::size_t i = 1; i < rest.size(); ++i) {
    if (rng.coin(0.2)) continue;  // forest, not always a tree
    int parent = rest[rng.uniform(0, (int)i - 1)];
    Clause c{rng.lit(rest[i]), rng.lit(parent)};
    for (Lit l : s_lits(1)) c.push_back(l);
    q.clauses.push_back(c);
  }
  for (int i = 0; i < extra; ++i) {
    Clause c;
    if (!rest.empty() && rng.coin(0.7)) c.push_back(rng.lit(rest[rng.uniform(0, (int)rest.size() - 1)]));
    for (Lit l : s_lits(3 - (int)c.size())) c.push_back(l);
    if (!c.empty()) q.clauses.push_back(c);
  }
  if (unit_terms > 0) {
    q.kind = MatrixKind::CnfAndDnf;
    for (int i = 0; i < unit_terms; ++i) q.terms.push_back({rng.lit(vars[rng.uniform(0, n - 1)])});
  }
  return p;
}

// Primal graph = random forest plus k extra edges (some from 3-clauses).
// Parallel clauses on one edge are added to exercise multiplicities.
inline Planted gen_fes(Rng& rng, int n, int k) {
  Planted p;
  Qbf& q = p.q;
  q.num_vars = n;
  q.prefix = random_prefix(rng, n, rng.uniform(1, 4));
  Graph g(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(order);
  for (int i = 1; i < n; ++i) {
    int a = order[i], b = order[rng.uniform(0, i - 1)];
    g.add_edge(a - 1, b - 1);
    q.clauses.push_back({rng.lit(a), rng.lit(b)});
    if (rng.coin(0.25)) q.clauses.push_back({rng.lit(a), rng.lit(b)});
  }
  int added = 0;
  for (int tries = 0; added < k && tries < 50 * (k + 1); ++tries) {
    int a = rng.uniform(1, n), b = rng.uniform(1, n);
    if (a == b || g.has_edge(a - 1, b - 1)) continue;
    // a 3-clause over a, b and a common neighbour adds just the edge ab
    int mid = 0;
    for (int w : g.adj[a - 1])
      if (g.has_edge(w, b - 1)) mid = w + 1;
    g.add_edge(a - 1, b - 1);
    if (mid && rng.coin()) q.clauses.push_back({rng.lit(a), rng.lit(b), rng.lit(mid)});
    else q.clauses.push_back({rng.lit(a), rng.lit(b)});
    ++added;
  }
  for (int i = 0; i < n / 3; ++i) {
    int v = rng.uniform(1, n);
    if (rng.coin(0.3)) q.clauses.push_back({rng.lit(v)});
  }
  auto fes = min_fes(g);
  for (auto [a, b] : fes) p.witness.push_back(a + 1), p.witness.push_back(b + 1);
  return p;
}

// Prefix built from slots between deletion variables: each non-D variable
// carries (slot, quantifier); slot j means "after the j-th D variable".
struct SlotVar {
  int id;
  int slot;
  Quant q;
};

inline std::vector<std::pair<Quant, int>> slotted_prefix(Rng& rng, const std::vector<std::pair<Quant, int>>& d,
                                                        std::vector<std::vector<SlotVar>> groups) {
  // groups keep their internal order; different groups interleave at random
  std::vector<std::pair<Quant, int>> p;
  for (int slot = 0; slot <= (int)d.size(); ++slot) {
    std::vector<std::vector<SlotVar>> runs;
    for (auto& g : groups) {
      std::vector<SlotVar> run;
      for (auto& sv : g)
        if (sv.slot == slot) run.push_back(sv);
      if (!run.empty()) runs.push_back(run);
    }
    std::vector<std::size_t> at(runs.size(), 0);
    std::vector<int> tickets;
    for (std::size_t i = 0; i < runs.size(); ++i)
      for (std::size_t j = 0; j < runs[i].size(); ++j) tickets.push_back((int)i);
    rng.shuffle(tickets);
    for (int t : tickets) {
      auto& sv = runs[t][at[t]++];
      p.emplace_back(sv.q, sv.id);
    }
    if (slot < (int)d.size()) p.push_back(d[slot]);
  }
  return p;
}

// c-deletion set D of size k over random CNF components of at most c variables.
inline Planted gen_c_deletion(Rng& rng, int n, int k, int c, bool existential_d = false) {
  Planted p;
  Qbf& q = p.q;
  q.num_vars = n;
  k = std::min(k, n);
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  rng.shuffle(vars);
  std::vector<int> d(vars.begin(), vars.begin() + k);
  q.prefix = random_prefix(rng, n, rng.uniform(1, 4));
  if (existential_d) {
    std::set<int> ds(d.begin(), d.end());
    for (auto& pp : q.prefix)
      if (ds.count(pp.second)) pp.first = Quant::Exists;
  }
  std::vector<int> rest(vars.begin() + k, vars.end());
  for (std::size_t i = 0; i < rest.size();) {
    int sz = std::min<int>(rng.uniform(1, std::max(1, c)), (int)(rest.size() - i));
    std::vector<int> comp(rest.begin() + i, rest.begin() + i + sz);
    i += sz;
    int m = rng.uniform(1, sz + 1);
    for (int j = 0; j < m; ++j) {
      Clause cl = random_clause(rng, comp, rng.uniform(1, std::min(3, sz)));
      if (!d.empty() && rng.coin(0.7)) {
        int dv = d[rng.uniform(0, k - 1)];
        cl.push_back(rng.lit(dv));
      }
      q.clauses.push_back(cl);
    }
  }
  if (k > 0 && rng.coin(0.3)) q.clauses.push_back(random_clause(rng, d, rng.uniform(1, std::min(2, k))));
  std::sort(d.begin(), d.end());
  p.witness = d;
  return p;
}

// Star of components around one deletion variable e. e is usually the
// innermost existential; sometimes it sits elsewhere or is universal.
inline Planted gen_single_del(Rng& rng, int comps, int max_size) {
  Planted p;
  Qbf& q = p.q;
  std::vector<std::vector<int>> cs;
  int next = 1;
  for (int i = 0; i < comps; ++i) {
    std::vector<int> c;
    int sz = rng.uniform(1, max_size);
    for (int j = 0; j < sz; ++j) c.push_back(next++);
    cs.push_back(c);
  }
  int e = next;
  q.num_vars = e;
  std::vector<int> vars(e - 1);
  std::iota(vars.begin(), vars.end(), 1);
  rng.shuffle(vars);
  for (int v : vars) q.prefix.emplace_back(rng.coin() ? Quant::Exists : Quant::Forall, v);
  int shape = rng.uniform(0, 9);
  if (shape < 7) {
    q.prefix.emplace_back(Quant::Exists, e);
  } else {
    int at = rng.uniform(0, (int)q.prefix.size());
    q.prefix.insert(q.prefix.begin() + at, {shape == 9 ? Quant::Forall : Quant::Exists, e});
  }
  for (const auto& c : cs) {
    int m = rng.uniform(1, (int)c.size() + 1);
    for (int j = 0; j < m; ++j) {
      Clause cl = random_clause(rng, c, rng.uniform(1, std::min<int>(3, (int)c.size())));
      if (rng.coin(0.75)) cl.push_back(rng.lit(e));
      q.clauses.push_back(cl);
    }
  }
  p.witness = {e};
  return p;
}

// Components of shape ∃≤1∀ around D, generated from a few templates that are
// replicated so pruning has something to remove.
struct TemplateComponent {
  std::vector<SlotVar> vars;  // ids 1..size, local
  std::vector<Clause> clauses;  // local ids; D literals encoded as ±(1000 + index)
};

inline TemplateComponent random_e1a_template(Rng& rng, int kd, int max_size) {
  TemplateComponent t;
  int sz = rng.uniform(1, max_size);
  bool has_ex = rng.coin(0.8);
  int slot = rng.uniform(0, kd);
  for (int i = 1; i <= sz; ++i) {
    bool ex = has_ex && i == 1;
    // universals never move before the existential; slots are non-decreasing
    slot = std::min(kd, slot + (rng.coin(0.3) ? 1 : 0));
    t.vars.push_back({i, slot, ex ? Quant::Exists : Quant::Forall});
  }
  std::vector<int> local(sz);
  std::iota(local.begin(), local.end(), 1);
  int m = rng.uniform(1, sz + 1);
  for (int j = 0; j < m; ++j) {
    Clause cl = random_clause(rng, local, rng.uniform(1, std::min(3, sz)));
    if (kd > 0 && rng.coin(0.7)) {
      int di = rng.uniform(0, kd - 1);
      cl.push_back(rng.coin() ? 1000 + di : -(1000 + di));
    }
    t.clauses.push_back(cl);
  }
  return t;
}

struct TemplateInstance {
  Qbf q;
  std::vector<int> d;
  int c = 0;
};

inline TemplateInstance instantiate(Rng& rng, const std::vector<std::pair<Quant, int>>& d_quant,
                                    const std::vector<std::pair<TemplateComponent, int>>& copies) {
  TemplateInstance out;
  int next = (int)d_quant.size();
  std::vector<std::pair<Quant, int>> dpre;
  for (auto [qq, i] : d_quant) dpre.emplace_back(qq, i);
  std::vector<std::vector<SlotVar>> groups;
  std::vector<Clause> clauses;
  for (const auto& [t, r] : copies) {
    out.c = std::max(out.c, (int)t.vars.size());
    for (int i = 0; i < r; ++i) {
      std::vector<int> ids;
      std::vector<SlotVar> g;
      for (auto sv : t.vars) {
        ids.push_back(++next);
        g.push_back({next, sv.slot, sv.q});
      }
      groups.push_back(g);
      for (auto cl : t.clauses) {
        for (Lit& l : cl) {
          int a = var_of(l);
          int v = a >= 1000 ? d_quant[a - 1000].second : ids[a - 1];
          l = l > 0 ? v : -v;
        }
        clauses.push_back(cl);
      }
    }
  }
  out.q.num_vars = next;
  out.q.prefix = slotted_prefix(rng, dpre, groups);
  out.q.clauses = clauses;
  for (auto [qq, v] : d_quant) out.d.push_back(v);
  return out;
}

inline TemplateInstance gen_e1a(Rng& rng, int kd, int templates, int max_size, int max_copies) {
  std::vector<std::pair<Quant, int>> dq;
  for (int i = 1; i <= kd; ++i) dq.emplace_back(rng.coin() ? Quant::Exists : Quant::Forall, i);
  std::vector<std::pair<TemplateComponent, int>> copies;
  for (int t = 0; t < templates; ++t)
    copies.emplace_back(random_e1a_template(rng, kd, max_size), rng.uniform(1, max_copies));
  auto inst = instantiate(rng, dq, copies);
  if (kd > 0 && rng.coin(0.3)) {
    Clause cl;
    for (int i = 1; i <= kd; ++i)
      if (rng.coin()) cl.push_back(rng.lit(i));
    if (!cl.empty()) inst.q.clauses.push_back(cl);
  }
  return inst;
}

// Existential D; every template replicated at least 2^|D| times.
inline TemplateInstance gen_uni_complete(Rng& rng, int kd, int templates, int max_size) {
  std::vector<std::pair<Quant, int>> dq;
  for (int i = 1; i <= kd; ++i) dq.emplace_back(Quant::Exists, i);
  std::vector<std::pair<TemplateComponent, int>> copies;
  int need = 1 << kd;
  for (int t = 0; t < templates; ++t) {
    TemplateComponent tc;
    int sz = rng.uniform(1, max_size);
    int slot = rng.uniform(0, kd);
    for (int i = 1; i <= sz; ++i) {
      slot = std::min(kd, slot + (rng.coin(0.3) ? 1 : 0));
      tc.vars.push_back({i, slot, rng.coin() ? Quant::Exists : Quant::Forall});
    }
    std::vector<int> local(sz);
    std::iota(local.begin(), local.end(), 1);
    // a chain keeps the template connected
    for (int i = 1; i < sz; ++i) {
      Clause cl{rng.lit(i), rng.lit(i + 1)};
      if (kd > 0 && rng.coin(0.6)) cl.push_back(rng.coin() ? 1000 + rng.uniform(0, kd - 1) : -(1000 + rng.uniform(0, kd - 1)));
      tc.clauses.push_back(cl);
    }
    int m = rng.uniform(1, 2);
    for (int j = 0; j < m; ++j) {
      Clause cl = random_clause(rng, local, rng.uniform(1, std::min(2, sz)));
      if (kd > 0) {
        int di = rng.uniform(0, kd - 1);
        cl.push_back(rng.coin() ? 1000 + di : -(1000 + di));
      }
      tc.clauses.push_back(cl);
    }
    copies.emplace_back(tc, need + rng.uniform(0, 1));
  }
  return instantiate(rng, dq, copies);
}

// Planted alpha-treedepth structure: a main path, trees of height <= alpha
// hung from it and a path under some tree leaves. Clauses follow
// root-to-node chains, so no clause meets two hanging paths.
inline Planted gen_alpha_td(Rng& rng, int main_len, int trees, int alpha, int path_len, int clauses) {
  Planted p;
  AlphaTdDecomposition& a = p.alpha_td;
  a.alpha = alpha;
  std::vector<int> parent;  // vertex ids 0-based
  int next = 0;
  for (int i = 0; i < main_len; ++i) {
    a.main_path.push_back(next);
    parent.push_back(i == 0 ? -1 : next - 1);
    ++next;
  }
  std::vector<int> leaves;
  for (int t = 0; t < trees; ++t) {
    int anchor = main_len > 0 && rng.coin(0.85) ? a.main_path[rng.uniform(0, main_len - 1)] : -1;
    int h = rng.uniform(1, std::max(1, alpha));
    int up = anchor;
    for (int d = 0; d < h; ++d) {
      int v = next++;
      a.tree_parent[v] = up;
      parent.push_back(up);
      up = v;
    }
    leaves.push_back(up);
  }
  for (int leaf : leaves) {
    if (!rng.coin(0.6)) continue;
    int len = rng.uniform(1, std::max(1, std::min(path_len, main_len)));
    std::vector<int> path;
    int up = leaf;
    for (int d = 0; d < len; ++d) {
      int v = next++;
      path.push_back(v);
      parent.push_back(up);
      up = v;
    }
    a.paths.emplace_back(leaf, path);
  }
  int n = next;
  Qbf& q = p.q;
  q.num_vars = n;
  q.prefix = random_prefix(rng, n, rng.uniform(1, 4), true);
  for (int i = 0; i < clauses; ++i) {
    int x = rng.uniform(0, n - 1);
    std::vector<int> chain;
    for (int y = x; y != -1; y = parent[y]) chain.push_back(y + 1);
    std::vector<int> others(chain.begin() + 1, chain.end());
    rng.shuffle(others);
    Clause cl{rng.lit(chain[0])};
    int extra = rng.uniform(0, std::min<int>(2, (int)others.size()));
    for (int j = 0; j < extra; ++j) cl.push_back(rng.lit(others[j]));
    q.clauses.push_back(cl);
  }
  if (rng.coin(0.7)) {
    q.kind = MatrixKind::CnfAndDnf;
    int t = rng.uniform(1, 2);
    for (int i = 0; i < t; ++i) q.terms.push_back({rng.lit(rng.uniform(1, n))});
  }
  for (int v : a.main_path) p.witness.push_back(v + 1);
  return p;
}

}  // namespace qbfs
