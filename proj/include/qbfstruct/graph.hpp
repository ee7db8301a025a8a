// Primal and incidence graphs, deletion sets, feedback edge sets and
// decomposition validators.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace qbfs {

using Edge = std::pair<int, int>;  // (u, v) with u < v

// Undirected simple graph on vertices 0..n-1. Adjacency lists follow edge
// insertion order, which keeps BFS-based constructions reproducible.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;

  explicit Graph(int n_ = 0) : n(n_), adj(n_) {}

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto& a = adj[u].size() < adj[v].size() ? adj[u] : adj[v];
    int other = adj[u].size() < adj[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
  }
  bool add_edge(int u, int v) {
    if (u == v || has_edge(u, v)) return false;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    adj[u].push_back(v);
    adj[v].push_back(u);
    return true;
  }
  int degree(int v) const { return (int)adj[v].size(); }
};

enum class GraphKind { Primal, Incidence };

// Vertex layout: variable v is vertex v-1. Incidence graphs append clause
// vertices (in clause order) followed by term vertices.
struct FormulaGraph {
  Graph g;
  GraphKind kind = GraphKind::Primal;
  int num_vars = 0;
  int num_clauses = 0;
  int num_terms = 0;

  bool is_var_vertex(int x) const { return x < num_vars; }
  int var_of_vertex(int x) const { return x + 1; }
  int clause_vertex(int i) const { return num_vars + i; }
  int term_vertex(int i) const { return num_vars + num_clauses + i; }
};

inline FormulaGraph build_graph(const Qbf& q, GraphKind kind) {
  FormulaGraph fg;
  fg.kind = kind;
  fg.num_vars = q.num_vars;
  fg.num_clauses = (int)q.clauses.size();
  fg.num_terms = (int)q.terms.size();
  if (kind == GraphKind::Primal) {
    fg.g = Graph(q.num_vars);
    auto add_all = [&](const std::vector<Clause>& cs) {
      for (const auto& c : cs)
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = i + 1; j < c.size(); ++j) fg.g.add_edge(var_of(c[i]) - 1, var_of(c[j]) - 1);
    };
    add_all(q.clauses);
    add_all(q.terms);
  } else {
    fg.g = Graph(q.num_vars + fg.num_clauses + fg.num_terms);
    for (int i = 0; i < fg.num_clauses; ++i)
      for (Lit l : q.clauses[i]) fg.g.add_edge(fg.clause_vertex(i), var_of(l) - 1);
    for (int i = 0; i < fg.num_terms; ++i)
      for (Lit l : q.terms[i]) fg.g.add_edge(fg.term_vertex(i), var_of(l) - 1);
  }
  return fg;
}

// ---------------------------------------------------------------------------
// Components and acyclicity

// Components of g minus `removed`, each listed in BFS order from its lowest vertex.
inline std::vector<std::vector<int>> components(const Graph& g, const std::vector<char>& removed = {}) {
  auto gone = [&](int v) { return !removed.empty() && removed[v]; };
  std::vector<char> seen(g.n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (seen[s] || gone(s)) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.adj[comp[i]])
        if (!seen[w] && !gone(w)) {
          seen[w] = 1;
          comp.push_back(w);
        }
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<char> vertex_mask(int n, const std::vector<int>& vs) {
  std::vector<char> m(n, 0);
  for (int v : vs) m[v] = 1;
  return m;
}

inline bool is_acyclic(const Graph& g, const std::vector<char>& removed = {}) {
  auto gone = [&](int v) { return !removed.empty() && removed[v]; };
  long long e = 0, v = 0;
  for (int x = 0; x < g.n; ++x)
    if (!gone(x)) ++v;
  for (auto [a, b] : g.edges)
    if (!gone(a) && !gone(b)) ++e;
  return e == v - (long long)components(g, removed).size();
}

// ---------------------------------------------------------------------------
// Feedback edge sets

// Complement of the BFS spanning forest (roots by lowest id, neighbours in
// edge order). Non-tree edges are returned in edge order.
inline std::vector<Edge> min_fes(const Graph& g) {
  std::set<Edge> tree;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::queue<int> bfs;
    bfs.push(s);
    seen[s] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : g.adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          tree.insert({std::min(u, w), std::max(u, w)});
          bfs.push(w);
        }
    }
  }
  std::vector<Edge> out;
  for (auto e : g.edges)
    if (!tree.count(e)) out.push_back(e);
  return out;
}

inline Graph remove_edges(const Graph& g, const std::vector<Edge>& drop) {
  std::set<Edge> d;
  for (auto [a, b] : drop) d.insert({std::min(a, b), std::max(a, b)});
  Graph h(g.n);
  for (auto e : g.edges)
    if (!d.count(e)) h.add_edge(e.first, e.second);
  return h;
}

inline bool is_fes(const Graph& g, const std::vector<Edge>& fes) {
  for (auto [a, b] : fes)
    if (!g.has_edge(a, b)) return false;
  return is_acyclic(remove_edges(g, fes));
}

// ---------------------------------------------------------------------------
// Deletion sets

enum class DeletionKind { Fvs, SparseFvs, CDeletion, VertexCover };

inline std::string to_string(DeletionKind k) {
  switch (k) {
    case DeletionKind::Fvs: return "fvs";
    case DeletionKind::SparseFvs: return "sparse-fvs";
    case DeletionKind::CDeletion: return "c-deletion";
    case DeletionKind::VertexCover: return "vertex-cover";
  }
  return "?";
}

inline bool is_vertex_cover(const Graph& g, const std::vector<int>& s) {
  auto m = vertex_mask(g.n, s);
  return std::all_of(g.edges.begin(), g.edges.end(), [&](Edge e) { return m[e.first] || m[e.second]; });
}

inline bool is_c_deletion_set(const Graph& g, const std::vector<int>& s, int c) {
  for (const auto& comp : components(g, vertex_mask(g.n, s)))
    if ((int)comp.size() > c) return false;
  return true;
}

// Any two variables outside s share at most one clause or term. Works on
// variable ids (1-based), independent of graph kind.
inline bool is_sparse_wrt(const Qbf& q, const std::vector<int>& s_vars) {
  std::set<int> s(s_vars.begin(), s_vars.end());
  std::map<std::pair<int, int>, int> count;
  auto scan = [&](const std::vector<Clause>& cs) {
    for (const auto& c : cs) {
      std::vector<int> vs;
      for (Lit l : c)
        if (!s.count(var_of(l))) vs.push_back(var_of(l));
      std::sort(vs.begin(), vs.end());
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (++count[{vs[i], vs[j]}] > 1) return false;
    }
    return true;
  };
  return scan(q.clauses) && scan(q.terms);
}

// Vertex ids of fg -> variable ids; non-variable vertices are rejected.
inline std::optional<std::vector<int>> vertices_to_vars(const FormulaGraph& fg, const std::vector<int>& s) {
  std::vector<int> out;
  for (int x : s) {
    if (!fg.is_var_vertex(x)) return std::nullopt;
    out.push_back(fg.var_of_vertex(x));
  }
  return out;
}

// Validator for every deletion-set kind. Sparse checks need the formula.
inline bool validate_deletion_set(const Graph& g, const std::vector<int>& s, DeletionKind kind, int c = 1,
                                  const Qbf* q = nullptr, const FormulaGraph* fg = nullptr) {
  for (int v : s)
    if (v < 0 || v >= g.n) return false;
  switch (kind) {
    case DeletionKind::Fvs: return is_acyclic(g, vertex_mask(g.n, s));
    case DeletionKind::VertexCover: return is_vertex_cover(g, s);
    case DeletionKind::CDeletion: return is_c_deletion_set(g, s, c);
    case DeletionKind::SparseFvs: {
      if (!q || !is_acyclic(g, vertex_mask(g.n, s))) return false;
      std::vector<int> vars;
      if (fg) {
        auto vv = vertices_to_vars(*fg, s);
        if (!vv) return false;
        vars = *vv;
      } else {
        for (int x : s) vars.push_back(x + 1);
      }
      return is_sparse_wrt(*q, vars);
    }
  }
  return false;
}

namespace detail {

// Calls f on every k-subset of `pool` in lexicographic order; stops when f returns true.
inline bool for_each_subset(const std::vector<int>& pool, int k, const std::function<bool(const std::vector<int>&)>& f) {
  int n = (int)pool.size();
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> cur(k);
  while (true) {
    for (int i = 0; i < k; ++i) cur[i] = pool[idx[i]];
    if (f(cur)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Smallest vertex cover of size <= k by branching on an uncovered edge.
inline bool vc_branch(const Graph& g, std::vector<char>& in, int k, std::vector<int>& out) {
  for (auto [a, b] : g.edges) {
    if (in[a] || in[b]) continue;
    if (k == 0) return false;
    for (int v : {a, b}) {
      in[v] = 1;
      out.push_back(v);
      if (vc_branch(g, in, k - 1, out)) return true;
      out.pop_back();
      in[v] = 0;
    }
    return false;
  }
  return true;
}

}  // namespace detail

// Smallest deletion set of the requested kind with at most k vertices. Ties
// resolve to the lexicographically first set (vertex covers: first found by
// branching on the first uncovered edge). `candidates` restricts the pool.
inline std::optional<std::vector<int>> min_deletion_set(const Graph& g, DeletionKind kind, int k, int c = 1,
                                                        const Qbf* q = nullptr, const FormulaGraph* fg = nullptr,
                                                        std::optional<std::vector<int>> candidates = std::nullopt) {
  std::vector<int> pool;
  if (candidates) {
    pool = *candidates;
    std::sort(pool.begin(), pool.end());
  } else {
    for (int v = 0; v < g.n; ++v)
      if (kind != DeletionKind::SparseFvs || !fg || fg->is_var_vertex(v)) pool.push_back(v);
  }
  if (kind == DeletionKind::VertexCover && !candidates) {
    for (int size = 0; size <= k; ++size) {
      std::vector<char> in(g.n, 0);
      std::vector<int> out;
      if (detail::vc_branch(g, in, size, out)) {
        std::sort(out.begin(), out.end());
        if (!is_vertex_cover(g, out)) throw Error("internal: vertex cover failed validation");
        return out;
      }
    }
    return std::nullopt;
  }
  std::optional<std::vector<int>> found;
  for (int size = 0; size <= k && !found; ++size) {
    detail::for_each_subset(pool, size, [&](const std::vector<int>& s) {
      if (validate_deletion_set(g, s, kind, c, q, fg)) {
        found = s;
        return true;
      }
      return false;
    });
  }
  return found;
}

// All inclusion-minimal c-deletion sets with at most k vertices, by size then
// lexicographically.
inline std::vector<std::vector<int>> enumerate_c_deletion_sets(const Graph& g, int c, int k) {
  std::vector<int> pool(g.n);
  for (int v = 0; v < g.n; ++v) pool[v] = v;
  std::vector<std::vector<int>> out;
  for (int size = 0; size <= k; ++size) {
    detail::for_each_subset(pool, size, [&](const std::vector<int>& s) {
      if (!is_c_deletion_set(g, s, c)) return false;
      // validity is monotone, so single-vertex removals decide minimality
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> t = s;
        t.erase(t.begin() + (long)i);
        if (is_c_deletion_set(g, t, c)) return false;
      }
      out.push_back(s);
      return false;
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Clean edges and clean paths relative to a feedback edge set

struct CleanPath {
  std::vector<int> vertices;  // endpoint, inner..., endpoint
  std::vector<int> inner() const {
    if (vertices.size() < 2) return {};
    return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
  }
};

struct CleanStructure {
  Graph h;                       // G minus the feedback edges
  std::vector<Edge> clean_edges;  // edges of H in no triangle of G
  std::vector<CleanPath> paths;   // maximal clean paths with at least one inner vertex
  std::vector<char> in_vd;        // endpoints of feedback edges
};

inline bool in_triangle(const Graph& g, int u, int v) {
  for (int w : g.adj[u])
    if (w != v && g.has_edge(w, v)) return true;
  return false;
}

inline CleanStructure clean_structure(const Graph& g, const std::vector<Edge>& fes) {
  if (!is_fes(g, fes)) throw PreconditionError("not a feedback edge set of the graph");
  CleanStructure cs;
  cs.h = remove_edges(g, fes);
  cs.in_vd.assign(g.n, 0);
  for (auto [a, b] : fes) cs.in_vd[a] = cs.in_vd[b] = 1;
  for (auto [a, b] : cs.h.edges)
    if (!in_triangle(g, a, b)) cs.clean_edges.emplace_back(a, b);
  auto eligible = [&](int v) { return cs.h.degree(v) == 2 && !cs.in_vd[v]; };
  std::vector<char> used(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (!eligible(v) || used[v]) continue;
    // grow the maximal run of eligible vertices through v in both directions
    std::vector<int> left, right;
    auto walk = [&](int from, int start, std::vector<int>& acc) {
      int prev = from, cur = start;
      while (true) {
        acc.push_back(cur);
        if (!eligible(cur) || used[cur]) break;
        used[cur] = 1;
        int nxt = cs.h.adj[cur][0] == prev ? cs.h.adj[cur][1] : cs.h.adj[cur][0];
        prev = cur;
        cur = nxt;
      }
    };
    used[v] = 1;
    walk(v, cs.h.adj[v][0], left);
    walk(v, cs.h.adj[v][1], right);
    CleanPath p;
    for (auto it = left.rbegin(); it != left.rend(); ++it) p.vertices.push_back(*it);
    p.vertices.push_back(v);
    for (int x : right) p.vertices.push_back(x);
    cs.paths.push_back(std::move(p));
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Decompositions

struct DecompositionReport {
  bool valid = true;
  int measure = 0;  // width for tree decompositions, height for treedepth ones
  std::string violation;
};

struct TreeDecomposition {
  std::vector<int> parent;              // -1 for the root
  std::vector<std::vector<int>> bags;   // graph vertex ids

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, (int)b.size() - 1);
    return w;
  }
};

struct TreedepthDecomposition {
  std::vector<int> parent;  // per graph vertex, -1 for roots

  int depth_of(int v) const {
    int d = 0;
    for (int x = v; x != -1; x = parent[x]) ++d;
    return d;
  }
  int height() const {
    int h = 0;
    for (int v = 0; v < (int)parent.size(); ++v) h = std::max(h, depth_of(v));
    return h;
  }
};

// Main path (top-down), trees hung from path vertices, and a path P_r below
// each tree leaf r. `tree_parent` maps a tree vertex to its parent (a path
// vertex, another tree vertex, or -1 for a tree without a path anchor).
struct AlphaTdDecomposition {
  std::vector<int> main_path;
  std::map<int, int> tree_parent;
  std::vector<std::pair<int, std::vector<int>>> paths;  // (r, P_r top-down)
  int alpha = 0;

  TreedepthDecomposition as_treedepth(int n) const {
    TreedepthDecomposition t;
    t.parent.assign(n, -1);
    for (std::size_t i = 1; i < main_path.size(); ++i) t.parent[main_path[i]] = main_path[i - 1];
    for (auto [v, p] : tree_parent) t.parent[v] = p;
    for (const auto& [r, p] : paths)
      for (std::size_t i = 0; i < p.size(); ++i) t.parent[p[i]] = i == 0 ? r : p[i - 1];
    return t;
  }
};

inline DecompositionReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  DecompositionReport r;
  auto fail = [&](std::string why) {
    r.valid = false;
    r.violation = std::move(why);
    return r;
  };
  int m = (int)td.bags.size();
  if ((int)td.parent.size() != m) return fail("parent/bag count mismatch");
  r.measure = td.width();
  int roots = 0;
  for (int t = 0; t < m; ++t) {
    if (td.parent[t] == -1) ++roots;
    else if (td.parent[t] < 0 || td.parent[t] >= m) return fail("node " + std::to_string(t) + " has invalid parent");
    int steps = 0;
    for (int x = t; x != -1; x = td.parent[x])
      if (++steps > m) return fail("parent links contain a cycle at node " + std::to_string(t));
  }
  if (m > 0 && roots != 1) return fail("decomposition tree must have exactly one root");
  std::vector<std::vector<int>> where(g.n);
  for (int t = 0; t < m; ++t)
    for (int v : td.bags[t]) {
      if (v < 0 || v >= g.n) return fail("bag " + std::to_string(t) + " names unknown vertex " + std::to_string(v));
      where[v].push_back(t);
    }
  for (int v = 0; v < g.n; ++v)
    if (where[v].empty() && (g.degree(v) > 0 || m > 0))
      return fail("vertex " + std::to_string(v) + " is in no bag");
  for (auto [a, b] : g.edges) {
    bool ok = false;
    for (int t : where[a])
      if (std::find(td.bags[t].begin(), td.bags[t].end(), b) != td.bags[t].end()) ok = true;
    if (!ok) return fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " is in no bag");
  }
  // occurrences of each vertex must induce a connected subtree: exactly one
  // occurrence node has its parent outside the occurrence set
  for (int v = 0; v < g.n; ++v) {
    std::set<int> occ(where[v].begin(), where[v].end());
    int tops = 0;
    for (int t : occ)
      if (td.parent[t] == -1 || !occ.count(td.parent[t])) ++tops;
    if (tops > 1) return fail("bags containing vertex " + std::to_string(v) + " are not connected");
  }
  return r;
}

inline DecompositionReport validate_treedepth(const Graph& g, const TreedepthDecomposition& t) {
  DecompositionReport r;
  auto fail = [&](std::string why) {
    r.valid = false;
    r.violation = std::move(why);
    return r;
  };
  if ((int)t.parent.size() != g.n) return fail("forest must cover every vertex exactly once");
  for (int v = 0; v < g.n; ++v) {
    int p = t.parent[v];
    if (p < -1 || p >= g.n || p == v) return fail("vertex " + std::to_string(v) + " has invalid parent");
    int steps = 0;
    for (int x = v; x != -1; x = t.parent[x])
      if (++steps > g.n) return fail("parent links contain a cycle at vertex " + std::to_string(v));
  }
  auto ancestor = [&](int a, int d) {
    for (int x = t.parent[d]; x != -1; x = t.parent[x])
      if (x == a) return true;
    return false;
  };
  for (auto [a, b] : g.edges)
    if (!ancestor(a, b) && !ancestor(b, a))
      return fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " joins unrelated vertices");
  r.measure = t.height();
  return r;
}

inline DecompositionReport validate_alpha_td(const Graph& g, const AlphaTdDecomposition& a) {
  DecompositionReport r;
  auto fail = [&](std::string why) {
    r.valid = false;
    r.violation = std::move(why);
    return r;
  };
  std::vector<int> role(g.n, 0);  // 1 path, 2 tree, 3 hanging path
  auto claim = [&](int v, int what) {
    if (v < 0 || v >= g.n) return false;
    if (role[v]) return false;
    role[v] = what;
    return true;
  };
  for (int v : a.main_path)
    if (!claim(v, 1)) return fail("main path vertex " + std::to_string(v) + " invalid or repeated");
  for (auto [v, p] : a.tree_parent)
    if (!claim(v, 2)) return fail("tree vertex " + std::to_string(v) + " invalid or repeated");
  for (const auto& [rr, p] : a.paths)
    for (int v : p)
      if (!claim(v, 3)) return fail("hanging path vertex " + std::to_string(v) + " invalid or repeated");
  for (int v = 0; v < g.n; ++v)
    if (!role[v]) return fail("vertex " + std::to_string(v) + " not covered");
  // tree heights measured from the path anchor
  for (auto [v, p] : a.tree_parent) {
    int h = 0, x = v, steps = 0;
    while (x != -1 && role[x] == 2) {
      ++h;
      auto it = a.tree_parent.find(x);
      x = it->second;
      if (++steps > g.n) return fail("tree parent links contain a cycle");
    }
    if (x != -1 && role[x] != 1) return fail("tree vertex " + std::to_string(v) + " not anchored at the main path");
    if (h > a.alpha) return fail("tree below vertex " + std::to_string(v) + " exceeds height " + std::to_string(a.alpha));
  }
  std::set<int> anchors;
  for (const auto& [rr, p] : a.paths) {
    if (rr < 0 || rr >= g.n || role[rr] != 2) return fail("path anchor " + std::to_string(rr) + " is not a tree vertex");
    for (auto [v, par] : a.tree_parent)
      if (par == rr) return fail("path anchor " + std::to_string(rr) + " is not a tree leaf");
    if (!anchors.insert(rr).second) return fail("two paths hang from leaf " + std::to_string(rr));
    if (p.size() > a.main_path.size()) return fail("path below " + std::to_string(rr) + " longer than the main path");
  }
  auto td = validate_treedepth(g, a.as_treedepth(g.n));
  if (!td.valid) return td;
  r.measure = td.measure;
  return r;
}

// Tree decomposition from a greedy min-degree elimination order. Not optimal;
// callers validate and report the width they get.
inline TreeDecomposition td_min_degree(const Graph& g) {
  TreeDecomposition td;
  if (g.n == 0) return td;
  std::vector<std::set<int>> nb(g.n);
  for (auto [a, b] : g.edges) {
    nb[a].insert(b);
    nb[b].insert(a);
  }
  std::vector<char> done(g.n, 0);
  std::vector<int> order, rank(g.n);
  std::vector<std::set<int>> later(g.n);
  for (int step = 0; step < g.n; ++step) {
    int v = -1;
    for (int x = 0; x < g.n; ++x)
      if (!done[x] && (v == -1 || nb[x].size() < nb[v].size())) v = x;
    done[v] = 1;
    rank[v] = step;
    order.push_back(v);
    later[v] = nb[v];
    for (int a : nb[v])
      for (int b : nb[v])
        if (a != b) nb[a].insert(b);
    for (int a : nb[v]) nb[a].erase(v);
  }
  td.bags.resize(g.n);
  td.parent.assign(g.n, -1);
  for (int i = 0; i < g.n; ++i) {
    int v = order[i];
    td.bags[i].push_back(v);
    int up = -1;
    for (int a : later[v]) {
      td.bags[i].push_back(a);
      if (up == -1 || rank[a] < rank[up]) up = a;
    }
    std::sort(td.bags[i].begin(), td.bags[i].end());
    // disconnected pieces hang below the last node
    td.parent[i] = up != -1 ? rank[up] : (i + 1 == g.n ? -1 : g.n - 1);
  }
  return td;
}

// ---------------------------------------------------------------------------
// Export

inline std::string to_dot(const Graph& g, const std::function<std::string(int)>& label) {
  std::string s = "graph G {\n";
  for (int v = 0; v < g.n; ++v) s += "  " + std::to_string(v) + " [label=\"" + label(v) + "\"];\n";
  for (auto [a, b] : g.edges) s += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
  return s + "}\n";
}

inline std::string forest_text(const std::vector<int>& parent, const std::function<std::string(int)>& label) {
  int n = (int)parent.size();
  std::vector<std::vector<int>> kids(n);
  std::vector<int> roots;
  for (int v = 0; v < n; ++v) (parent[v] == -1 ? roots : kids[parent[v]]).push_back(v);
  std::string s;
  std::function<void(int, int)> rec = [&](int v, int d) {
    s += std::string(2 * d, ' ') + label(v) + "\n";
    for (int w : kids[v]) rec(w, d + 1);
  };
  for (int r0 : roots) rec(r0, 0);
  return s;
}

}  // namespace qbfs
