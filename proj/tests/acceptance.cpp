// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

using namespace qbfs;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  int failures = 0;

  void fail(const std::string& what) {
    if (failures++ < 3) detail << " [" << what << "]";
    ok = false;
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

void report(int n, const std::string& title, Outcome& o, double seconds) {
  std::printf("%s criterion %d: %s (%.1fs)%s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), seconds,
              o.detail.str().c_str());
  std::fflush(stdout);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Qbf load(const char* name, Format fmt = Format::Qcdnf) {
  return parse(oracle::read_file(std::string(QBFSTRUCT_DATA_DIR) + "/" + name), fmt);
}

int input_vars(const Case& c) { return (int)c.q.prefix.size(); }

// ---------------------------------------------------------------------------
// 1. every transformation and solver against exhaustive evaluation

void criterion1(Outcome& o) {
  const int want = 1000;
  std::ostringstream counts;
  for (const auto& check : all_checks()) {
    int small = 0, total = 0;
    for (int i = 0; small < want && i < 50000; ++i) {
      Rng rng(1001, (std::uint64_t)i);
      Case c = check.generate(rng);
      ++total;
      if (input_vars(c) <= 12) ++small;
      if (auto m = run_guarded(check, c)) o.fail(check.name + " #" + std::to_string(i) + ": " + *m);
      // the suites compare against the library's evaluator; tie it to the naive recursion
      if (input_vars(c) <= 16 && evaluate(c.q, kWideBudget) != oracle::eval(c.q))
        o.fail(check.name + " #" + std::to_string(i) + ": evaluator disagrees with naive recursion");
    }
    if (small < want) o.fail(check.name + ": only " + std::to_string(small) + " instances with <= 12 variables");
    counts << ' ' << check.name << '=' << small << '/' << total;
  }
  if (o.ok) o.detail << counts.str();
}

// ---------------------------------------------------------------------------
// 2. exact structural bounds

void criterion2(Outcome& o) {
  int saw_runs = 0, td_runs = 0, kernel_runs = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(2001, i);
    auto p = gen_sparse_fvs(rng, rng.uniform(2, 10), rng.uniform(0, 6), rng.uniform(1, 4), rng.uniform(0, 2));
    auto r = saw_reduce_fvs(p.q, p.witness);
    int s = (int)p.witness.size();
    int b = 0;
    while ((1 << b) < std::max(s, 1)) ++b;  // ⌈log₂ max(|S|,1)⌉
    o.require((int)r.s_prime.size() == 3 * b + 4, "|S'| = " + std::to_string(r.s_prime.size()) + " for |S| = " +
                                                     std::to_string(s));
    auto fg = build_graph(r.q, GraphKind::Primal);
    std::vector<char> removed(fg.g.n, 0);
    for (int v : r.s_prime) removed[v - 1] = 1;
    // acyclicity by edge/vertex/component counting on the remaining graph
    int vertices = 0, edges = 0;
    for (int v = 0; v < fg.g.n; ++v) vertices += !removed[v];
    for (auto [a, c] : fg.g.edges) edges += !removed[a] && !removed[c];
    int comps = (int)components(fg.g, removed).size();
    o.require(edges == vertices - comps, "G - S' has a cycle");
    // sparse: two variables outside S' share at most one clause or term
    std::map<std::pair<int, int>, int> shared;
    auto count = [&](const std::vector<Clause>& cs) {
      for (const auto& c : cs) {
        std::set<int> out;
        for (Lit l : c)
          if (!removed[var_of(l) - 1]) out.insert(var_of(l));
        for (int x : out)
          for (int y : out)
            if (x < y) ++shared[{x, y}];
      }
    };
    count(r.q.clauses);
    count(r.q.terms);
    for (auto [e, n] : shared) o.require(n <= 1, "S' not sparse");
    ++saw_runs;
  }
  for (int i = 0; i < 200; ++i) {
    Rng rng(2002, i);
    int n = rng.uniform(2, 10);
    RandomSpec s{n, rng.uniform(n / 2, 2 * n), rng.uniform(1, 3), 3, 2, rng.uniform(1, 3), MatrixKind::CnfAndDnf};
    Qbf q = random_qbf(rng, s);
    auto td = td_min_degree(build_graph(q, GraphKind::Primal).g);
    auto r = cdnf_to_cnf_via_td(q, td);
    auto rep = validate_tree_decomposition(build_graph(r.q, GraphKind::Primal).g, r.td);
    o.require(rep.valid, "td' invalid: " + rep.violation);
    o.require(r.td.width() <= td.width() + 3, "width grew by more than 3");
    ++td_runs;
  }
  for (GraphKind kind : {GraphKind::Primal, GraphKind::Incidence}) {
    for (int i = 0; i < 150; ++i) {
      Rng rng(2003, i);
      auto p = gen_fes(rng, rng.uniform(4, 12), rng.uniform(1, 4));
      auto r = kernelize(p.q, kind);
      std::string v = kernel_residual_violation(r.kernel, kind);
      o.require(v.empty(), "kernel residual: " + v);
      long long k = r.stats.k;
      long long bound = kind == GraphKind::Primal ? 12 * k - 8 : 24 * k - 17;
      o.require(r.stats.kernel_vars <= std::max(0LL, bound),
                "kernel has " + std::to_string(r.stats.kernel_vars) + " variables at k = " + std::to_string(k));
      o.require((int)matrix_vars(r.kernel).size() == r.stats.kernel_vars, "kernel variable count misreported");
      // the kernel's own FES is no larger than the input's
      if (!r.verdict) o.require((int)min_fes(build_graph(r.kernel, kind).g).size() <= k, "kernel FES grew");
      bool truth = r.verdict ? *r.verdict : oracle::eval(r.kernel);
      o.require(truth == oracle::eval(p.q), "kernel changed the value");
      ++kernel_runs;
    }
  }
  if (o.ok)
    o.detail << " saw-fvs runs=" << saw_runs << " td-cnf runs=" << td_runs << " kernel runs=" << kernel_runs;
}

// ---------------------------------------------------------------------------
// 3. worked examples

void criterion3(Outcome& o) {
  Qbf ex1 = load("example1.qcdnf");
  o.require(oracle::eval(ex1), "example 1 is not true under the naive recursion");
  o.require(evaluate(ex1), "brute");
  o.require(solve_vc_cache(ex1), "vc-cache");
  o.require(solve_vc_cache(ex1, {false}), "vc-cache without caching");
  o.require(solve_clause_dedup(ex1).value, "dedup");
  o.require(solve_e1a(ex1, {1, 2, 3}), "e1a");
  o.require(solve_single_deletion(ex1, 3).value, "single-del");
  auto ex = expand_universal_deletions(ex1, {1, 2});
  o.require(solve_universally_complete(ex.q, ex.d).value, "uni-complete");
  auto k = kernelize(ex1, GraphKind::Primal);
  o.require(k.verdict ? *k.verdict : oracle::eval(k.kernel), "kernelize");

  auto g1 = build_graph(ex1, GraphKind::Primal);
  std::set<std::pair<int, int>> want{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3}}, got;
  for (auto [a, b] : g1.g.edges) got.insert({std::min(a, b), std::max(a, b)});
  o.require(got == want, "primal graph of example 1");
  Qbf ex3 = load("example3.qcdnf");
  std::set<std::pair<int, int>> got3;
  for (auto [a, b] : build_graph(ex3, GraphKind::Primal).g.edges) got3.insert({std::min(a, b), std::max(a, b)});
  o.require(got3 == want, "the DNF side added a primal edge");
  auto td = validate_treedepth(g1.g, {{-1, 2, 0, 2}});  // a → c → {b, d}
  o.require(td.valid && td.measure == 3, "treedepth forest");

  auto r = saw_reduce_fvs(ex3, {1, 3});
  o.require(r.s_prime.size() == 7, "standard mode uses " + std::to_string(r.s_prime.size()) + " variables");
  o.require(oracle::eval(r.q) == oracle::eval(ex3), "standard reduction changes the value");
  auto c = saw_reduce_fvs(ex3, {1, 3}, {true});
  const auto& p = c.plan;
  int i1 = p.idx[0][0], i2 = p.idx[1][0], v1 = p.val[0], v2 = p.val[1], sat = p.sat;
  int s1 = p.sat_clause[0], s2 = p.sat_clause[1], s3 = p.sat_clause[2], s4 = p.sat_clause[3];
  std::vector<Clause> listing = {
      {1, -i1, -v1}, {3, -i2, -v2}, {-1, -i1, v1}, {-3, -i2, v2}, {s1, -2},   {s2, 2},    {s3, 4},
      {s4, -4},      {s1, i1},      {s2, i1},      {s3, i1},      {s4, i1},   {s1, i2},   {s2, i2},
      {s3, i2},      {s4, i2},      {s2, v1},      {s4, v1},      {s1, v2},   {s2, v2},   {s1, -v1},
      {s3, -v1},     {s3, -v2},     {s4, -v2},     {sat, 2},      {sat, -4}};
  auto multiset = [](std::vector<Clause> cs) {
    for (auto& x : cs) std::sort(x.begin(), x.end());
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  o.require(multiset(c.q.terms) == multiset(listing), "compatibility-mode term multiset");
  o.require(multiset(c.q.clauses) == multiset({{-s1}, {-s2}, {-s3}, {-s4}, {-sat}}), "compatibility-mode clauses");
  o.require(oracle::eval(c.q) == oracle::eval(ex3), "compatibility reduction changes the value");
}

// ---------------------------------------------------------------------------
// 4. game layer

// Partial strategies of `player` on the first i non-e prefix variables, by
// enumeration. Empowers: every play reaches a formula where the player
// forbids (∀) or permits (∃) some value of e. Leaves choice: both values.
bool partial_strategy_exists(const Qbf& f, int e, int i, Player player, bool both) {
  Qbf head = f, tail = f;
  head.prefix.assign(f.prefix.begin(), f.prefix.begin() + i);
  tail.prefix.assign(f.prefix.begin() + i, f.prefix.end() - 1);
  Quant mine = player == Player::Universal ? Quant::Forall : Quant::Exists;
  auto s = oracle::shape_of(head, mine);
  for (unsigned long long bits = 0; bits < (1ULL << s.table_bits); ++bits) {
    bool ok = oracle::all_plays(head, mine, s, bits, [&](const std::vector<int>& v0) {
      std::vector<int> val = v0;
      bool good[2];
      for (int sigma : {0, 1}) {
        val[e] = sigma;
        bool value = oracle::eval_rec(tail, 0, val);
        good[sigma] = player == Player::Universal ? !value : value;
      }
      return both ? (good[0] && good[1]) : (good[0] || good[1]);
    });
    if (ok) return true;
  }
  return false;
}

Qbf random_game(Rng& rng, int e) {
  RandomSpec s{e - 1, rng.uniform(1, 5), 0, 3, 0, rng.uniform(1, 3), MatrixKind::Cnf};
  Qbf f = random_qbf(rng, s);
  f.num_vars = e;
  f.prefix.emplace_back(Quant::Exists, e);
  for (auto& c : f.clauses)
    if (rng.coin(0.7)) c.push_back(rng.lit(e));
  return f;
}

void criterion4(Outcome& o) {
  int games = 0, pairs = 0, stars = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(4001, i);
    int e = rng.uniform(2, 5);
    Qbf f = random_game(rng, e);
    // forcing and forbidding are complementary
    for (bool sigma : {false, true}) {
      bool force = oracle::exists_forcing_strategy(f, {{e, sigma}});
      bool forbid = oracle::exists_forbidding_strategy(f, {{e, sigma}});
      o.require(force != forbid, "forces/forbids duality");
      o.require(strategy_query(f, e, {Player::Universal, QueryMode::Forbids, 0, sigma, !sigma}) == forbid,
                "forbids query");
      o.require(strategy_query(f, e, {Player::Existential, QueryMode::Permits, 0, sigma, !sigma}) == force,
                "permits query");
    }
    auto rep = lc_ee(f, e);
    for (int k = 0; k <= game_length(f); ++k) {
      bool u_emp = partial_strategy_exists(f, e, k, Player::Universal, false);
      bool u_lc = partial_strategy_exists(f, e, k, Player::Universal, true);
      bool x_emp = partial_strategy_exists(f, e, k, Player::Existential, false);
      bool x_lc = partial_strategy_exists(f, e, k, Player::Existential, true);
      o.require(u_emp == !x_lc && x_emp == !u_lc, "empowers/leaves-choice duality at index " + std::to_string(k));
      o.require((bool)rep.empowers[k] == u_emp, "empowers query at index " + std::to_string(k));
      o.require((bool)rep.leaves_choice[k] == u_lc, "leaves-choice query at index " + std::to_string(k));
    }
    ++games;
  }
  for (int i = 0; pairs < 500 && i < 5000; ++i) {
    Rng rng(4002, i);
    int n1 = rng.uniform(1, 2), n2 = rng.uniform(1, 2), e = n1 + n2 + 1;
    Qbf a = random_game(rng, n1 + 1), b = random_game(rng, n2 + 1);
    Qbf f;
    f.num_vars = e;
    std::vector<std::pair<Quant, int>> pa(a.prefix.begin(), a.prefix.end() - 1), pb;
    for (auto it = b.prefix.begin(); it + 1 != b.prefix.end(); ++it) pb.emplace_back(it->first, it->second + n1);
    std::size_t x = 0, y = 0;
    while (x < pa.size() || y < pb.size())
      f.prefix.push_back((y == pb.size() || (x < pa.size() && rng.coin())) ? pa[x++] : pb[y++]);
    f.prefix.emplace_back(Quant::Exists, e);
    Qbf fa = f, fb = f;
    auto move = [&](const Qbf& src, int base, int old_e, Qbf& part) {
      for (auto c : src.clauses) {
        for (Lit& l : c) l = var_of(l) == old_e ? (l > 0 ? e : -e) : (l > 0 ? l + base : l - base);
        part.clauses.push_back(c);
        f.clauses.push_back(c);
      }
    };
    move(a, 0, n1 + 1, fa);
    move(b, n1, n2 + 1, fb);
    auto first = [&](const Qbf& g) -> std::optional<int> {
      for (int k = 0; k <= game_length(g); ++k)
        if (partial_strategy_exists(g, e, k, Player::Universal, false)) return k;
      return std::nullopt;
    };
    auto ea = first(fa), eb = first(fb);
    if (!ea || !eb) continue;
    auto ef = first(f);
    o.require(ef && *ef == std::min(*ea, *eb), "EE of a conjunction is not the minimum");
    auto lib = lc_ee(f, e).ee;
    o.require(lib == ef, "library EE differs from enumeration");
    ++pairs;
  }
  o.require(pairs >= 200, "only " + std::to_string(pairs) + " conjunction pairs");
  for (int i = 0; i < 1000; ++i) {
    Rng rng(4003, i);
    auto p = gen_single_del(rng, rng.uniform(1, 4), 3);
    auto r = solve_single_deletion(p.q, p.witness[0]);
    o.require(r.value == oracle::eval(p.q), "single-deletion verdict, step " + r.step);
    ++stars;
  }
  if (o.ok) o.detail << " components=" << games << " pairs=" << pairs << " stars=" << stars;
}

// ---------------------------------------------------------------------------
// 5. deletion-set pipeline

void criterion5(Outcome& o) {
  int expansions = 0, e1a = 0, complete = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(5001, i);
    int k = rng.uniform(1, 2);
    auto p = gen_c_deletion(rng, rng.uniform(k + 1, 10), k, rng.uniform(1, 3));
    int c = 0;
    for (const auto& comp : oracle::flood_components(p.q, p.witness)) c = std::max(c, (int)comp.size());
    auto r = expand_universal_deletions(p.q, p.witness);
    int u = 0;
    auto quant = p.q.quant_table();
    for (int v : p.witness) u += *quant[v] == Quant::Forall;
    o.require(r.validated && r.universals == u, "expansion not validated");
    o.require(r.d.size() <= (std::size_t(1) << u) * p.witness.size(), "|D'| too large");
    int c2 = 0;
    for (const auto& comp : oracle::flood_components(r.q, r.d)) c2 = std::max(c2, (int)comp.size());
    o.require(c2 <= (1 << u) * std::max(c, 1), "expanded components too large");
    auto rq = r.q.quant_table();
    for (int v : r.d) o.require(*rq[v] == Quant::Exists, "universal left in D'");
    bool got = r.q.prefix.size() <= 20 ? oracle::eval(r.q) : evaluate(r.q, kWideBudget);
    o.require(got == oracle::eval(p.q), "expansion changed the value");
    ++expansions;
  }
  for (int i = 0; i < 200; ++i) {
    Rng rng(5002, i);
    auto t = gen_e1a(rng, rng.uniform(0, 2), rng.uniform(1, 2), 2, 4);
    if (t.q.prefix.size() > 20) continue;
    bool want = oracle::eval(t.q);
    for (const auto& ty : component_types(t.q, t.d))
      o.require(oracle::eval(prune_e1a_components(t.q, t.d, ty)) == want, "pruning one type changed the value");
    o.require(solve_e1a(t.q, t.d) == want, "e1a solver");
    ++e1a;
  }
  for (int i = 0; i < 150; ++i) {
    Rng rng(5003, i);
    auto t = gen_uni_complete(rng, rng.uniform(1, 2), rng.uniform(1, 2), 2);
    if (t.q.prefix.size() > 20) continue;
    auto r = solve_universally_complete(t.q, t.d);
    bool want = oracle::eval(t.q);
    o.require(r.value == want, "universally complete verdict");
    // A(t) membership against strategy enumeration on the local formula
    auto types = component_types(t.q, t.d);
    std::set<int> ds(t.d.begin(), t.d.end());
    for (std::size_t j = 0; j < types.size(); ++j) {
      std::set<int> a = ds;
      a.insert(types[j].components[0].begin(), types[j].components[0].end());
      Qbf local = restrict_to(t.q, a);
      for (unsigned long long b = 0; b < (1ULL << t.d.size()); ++b) {
        std::map<int, bool> beta;
        for (std::size_t x = 0; x < t.d.size(); ++x) beta[t.d[x]] = (b >> x) & 1;
        o.require(r.allowed[j].count(b) == (std::size_t)oracle::exists_forcing_strategy(local, beta),
                  "A(t) membership");
      }
    }
    // the intersection criterion against the direct value
    bool any = false;
    for (unsigned long long b = 0; b < (1ULL << t.d.size()); ++b) {
      bool all = true;
      for (const auto& al : r.allowed) all = all && al.count(b);
      any = any || all;
    }
    o.require(any == want, "intersection of A(t) disagrees with the value");
    ++complete;
  }
  o.require(expansions >= 150 && e1a >= 100 && complete >= 100,
            "too few instances: " + std::to_string(expansions) + "/" + std::to_string(e1a) + "/" +
                std::to_string(complete));
  if (o.ok) o.detail << " expansions=" << expansions << " e1a=" << e1a << " complete=" << complete;
}

// ---------------------------------------------------------------------------
// 6. distinct clauses versus an incidence vertex cover

void criterion6(Outcome& o) {
  int runs = 0;
  for (int i = 0; i < 150; ++i) {
    Rng rng(6001, i);
    int n = rng.uniform(2, 7);
    RandomSpec s{n, rng.uniform(1, 6), 0, 3, 0, 2, MatrixKind::Cnf};
    Qbf q = random_qbf(rng, s);
    int reps = rng.uniform(1, 8);
    for (int r = 0; r < reps; ++r) {
      Clause c = q.clauses[rng.uniform(0, (int)q.clauses.size() - 1)];
      rng.shuffle(c);
      q.clauses.push_back(c);
    }
    auto fg = build_graph(q, GraphKind::Incidence);
    std::optional<std::vector<int>> cover;
    for (int k = 0; !cover; ++k) cover = min_deletion_set(fg.g, DeletionKind::VertexCover, k);
    // independent check that it is a cover
    std::set<int> in(cover->begin(), cover->end());
    for (auto [a, b] : fg.g.edges) o.require(in.count(a) || in.count(b), "not a vertex cover");
    int k1 = 0, k2 = 0;
    for (int x : *cover) (fg.is_var_vertex(x) ? k1 : k2)++;
    std::size_t distinct = oracle::sorted_set(q.clauses).size();
    long long bound = k2;
    long long p3 = 1;
    for (int j = 0; j < k1; ++j) p3 *= 3;
    bound += p3;
    o.require((long long)distinct <= bound, std::to_string(distinct) + " distinct clauses, bound " +
                                                std::to_string(bound));
    o.require(solve_clause_dedup(q).distinct_clauses == distinct, "dedup count");
    ++runs;
  }
  if (o.ok) o.detail << " instances=" << runs;
}

// ---------------------------------------------------------------------------
// 7. 2-CNF plus 1-DNF satisfiability

void criterion7(Outcome& o) {
  int sat = 0, runs = 0;
  for (int i = 0; i < 2000; ++i) {
    Rng rng(7001, i);
    int n = rng.uniform(1, 12);
    std::vector<Clause> cnf, dnf;
    int m = rng.uniform(0, 2 * n);
    for (int j = 0; j < m; ++j) {
      Clause c{rng.lit(rng.uniform(1, n))};
      if (rng.coin(0.8)) {
        int v = rng.uniform(1, n);
        if (v != var_of(c[0])) c.push_back(rng.lit(v));
      }
      cnf.push_back(c);
    }
    int t = rng.uniform(0, 3);
    for (int j = 0; j < t; ++j) dnf.push_back(rng.coin(0.1) ? Clause{} : Clause{rng.lit(rng.uniform(1, n))});
    auto got = matrix_sat_2cnf_plus_1dnf(cnf, dnf);
    bool want = oracle::matrix_sat(n, cnf, dnf);
    o.require(got.has_value() == want, "checker disagrees with exhaustive search");
    if (got) {
      Qbf q;
      q.num_vars = n;
      q.kind = MatrixKind::CnfAndDnf;
      q.clauses = cnf;
      q.terms = dnf;
      std::vector<int> val(n + 1, 0);
      for (auto [v, b] : *got) val[v] = b;
      o.require(oracle::matrix(q, val), "returned model does not satisfy the matrix");
      ++sat;
    }
    ++runs;
  }
  if (o.ok) o.detail << " matrices=" << runs << " satisfiable=" << sat;
}

}  // namespace

int main() {
  struct Item {
    const char* title;
    void (*run)(Outcome&);
  };
  const Item items[] = {
      {"oracle-equivalence suites", criterion1},
      {"structural bounds of reductions and kernels", criterion2},
      {"worked examples", criterion3},
      {"game-layer strategy properties", criterion4},
      {"deletion-set pipeline", criterion5},
      {"distinct clauses under an incidence vertex cover", criterion6},
      {"2-CNF plus 1-DNF satisfiability", criterion7},
  };
  auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (int i = 0; i < 7; ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      items[i].run(o);
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    report(i + 1, items[i].title, o, since(t0));
    all = all && o.ok;
  }
  std::printf("total %.1fs\n", since(start));
  return all ? 0 : 1;
}
