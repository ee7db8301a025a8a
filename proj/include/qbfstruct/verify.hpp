// Oracle-equivalence checks for every transformation and solver, driven by
// the seeded generators, plus greedy shrinking of failing cases.
#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "core.hpp"
#include "gen.hpp"
#include "graph.hpp"
#include "kernel.hpp"
#include "saw.hpp"
#include "solvers.hpp"

namespace qbfs {

struct Case {
  Qbf q;
  std::vector<int> witness;
  AlphaTdDecomposition alpha_td;
  int c = 0;
};

// A check returns a mismatch description, or nothing when the case passes.
// PreconditionError from a check means the case is outside its domain.
struct Check {
  std::string name;
  std::function<Case(Rng&)> generate;
  std::function<std::optional<std::string>(const Case&)> run;
};

// Reduction outputs carry many auxiliary variables, mostly in one innermost
// block, which the evaluator handles far below its worst case.
inline constexpr std::size_t kWideBudget = 64;

namespace vdetail {

inline std::string yes(bool b) { return b ? "true" : "false"; }

inline std::optional<std::string> differ(const std::string& what, bool got, bool want) {
  if (got == want) return std::nullopt;
  return what + ": got " + yes(got) + ", oracle " + yes(want);
}

inline Assignment random_partial(Rng& rng, const Qbf& q) {
  Assignment a;
  for (auto [qq, v] : q.prefix)
    if (rng.coin(0.3)) a[v] = rng.coin();
  return a;
}

}  // namespace vdetail

inline std::vector<Check> all_checks() {
  using vdetail::differ;
  std::vector<Check> out;

  out.push_back({"restrict",
                 [](Rng& rng) {
                   int n = rng.uniform(1, 9);
                   RandomSpec s{n, rng.uniform(n / 2, 2 * n), rng.uniform(0, n), 3, 3, rng.uniform(1, 4),
                                static_cast<MatrixKind>(rng.uniform(0, 3))};
                   Case c{random_qbf(rng, s), {}, {}, 0};
                   // the witness carries a partial assignment as signed literals
                   for (auto [v, b] : vdetail::random_partial(rng, c.q)) c.witness.push_back(b ? v : -v);
                   return c;
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   Assignment a;
                   for (Lit l : c.witness) a[var_of(l)] = l > 0;
                   Qbf r = restrict(c.q, a);
                   int n = c.q.num_vars;
                   for (int m = 0; m < (1 << n); ++m) {
                     std::vector<char> val(n + 1, 0);
                     for (int v = 1; v <= n; ++v) val[v] = (m >> (v - 1)) & 1;
                     bool skip = false;
                     for (auto [v, b] : a)
                       if (val[v] != b) skip = true;
                     if (skip) continue;
                     if (eval_matrix(r, val) != eval_matrix(c.q, val)) return "restricted matrix differs";
                   }
                   if (!c.q.prefix.empty()) {
                     auto [qq, v] = c.q.prefix.front();
                     bool f0 = evaluate(restrict(c.q, {{v, false}})), f1 = evaluate(restrict(c.q, {{v, true}}));
                     bool want = qq == Quant::Exists ? (f0 || f1) : (f0 && f1);
                     if (auto m = differ("outermost split", want, evaluate(c.q))) return m;
                   }
                   return std::nullopt;
                 }});

  out.push_back({"negate",
                 [](Rng& rng) {
                   int n = rng.uniform(1, 10);
                   RandomSpec s{n, rng.uniform(n / 2, 2 * n), rng.uniform(0, n), 3, 3, rng.uniform(1, 4),
                                static_cast<MatrixKind>(rng.uniform(0, 3))};
                   return Case{random_qbf(rng, s), {}, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   if (negate(negate(c.q)) != c.q) return "double negation is not the identity";
                   return differ("negation", evaluate(negate(c.q)), !evaluate(c.q));
                 }});

  out.push_back({"eliminate",
                 [](Rng& rng) {
                   int n = rng.uniform(1, 10);
                   RandomSpec s{n, rng.uniform(n / 2, 2 * n), 0, 3, 0, rng.uniform(1, 4), MatrixKind::Cnf};
                   return Case{random_qbf(rng, s), {}, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   if (c.q.prefix.empty()) return std::nullopt;
                   Qbf r = eliminate_innermost(c.q, c.q.prefix.back().second);
                   return differ("innermost elimination", evaluate(r), evaluate(c.q));
                 }});

  for (GraphKind kind : {GraphKind::Primal, GraphKind::Incidence}) {
    std::string nm = kind == GraphKind::Primal ? "kernel-primal" : "kernel-incidence";
    out.push_back({nm,
                   [](Rng& rng) {
                     auto p = gen_fes(rng, rng.uniform(2, 12), rng.uniform(0, 3));
                     return Case{p.q, {}, {}, 0};
                   },
                   [kind](const Case& c) -> std::optional<std::string> {
                     auto r = kernelize(c.q, kind);
                     bool want = evaluate(c.q);
                     bool got = r.verdict ? *r.verdict : evaluate(r.kernel);
                     if (auto m = differ("kernel verdict", got, want)) return m;
                     auto res = kernel_residual_violation(r.kernel, kind);
                     if (!res.empty()) return "kernel not reduced: " + res;
                     long long bound = kernel_var_bound(r.stats.k, kind);
                     if (r.stats.kernel_vars > bound)
                       return "kernel has " + std::to_string(r.stats.kernel_vars) + " variables, bound " +
                              std::to_string(bound);
                     return std::nullopt;
                   }});
  }

  out.push_back({"saw-fvs",
                 [](Rng& rng) {
                   auto p = gen_sparse_fvs(rng, rng.uniform(2, 8), rng.uniform(0, 4), rng.uniform(1, 4),
                                           rng.uniform(0, 2));
                   // some inputs come as 3-DNF ∨ 1-CNF under an innermost ∀
                   return Case{rng.coin(0.2) ? negate(p.q) : p.q, p.witness, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   auto r = saw_reduce_fvs(c.q, c.witness);
                   int b = ceil_log2(std::max<int>((int)c.witness.size(), 1));
                   if ((int)r.s_prime.size() != 3 * b + 4) return "|S'| = " + std::to_string(r.s_prime.size());
                   auto fg = build_graph(r.q, GraphKind::Primal);
                   std::vector<int> sv;
                   for (int x : r.s_prime) sv.push_back(x - 1);
                   if (!is_acyclic(fg.g, vertex_mask(fg.g.n, sv))) return "G - S' has a cycle";
                   if (!is_sparse_wrt(r.q, r.s_prime)) return "S' is not sparse";
                   bool want = evaluate(c.q);
                   if (auto m = differ("reduction", evaluate(r.q, kWideBudget), want)) return m;
                   Qbf norm = normalize_3dnf(r.q, r.plan);
                   for (const auto& t : norm.terms)
                     if (t.size() > 3) return "normalized term wider than 3";
                   for (const auto& t : norm.clauses)
                     if (t.size() > 3) return "normalized clause wider than 3";
                   if (auto m = differ("3-DNF normalization", evaluate(norm, kWideBudget), want)) return m;
                   return std::nullopt;
                 }});

  out.push_back({"saw-td",
                 [](Rng& rng) {
                   auto p = gen_alpha_td(rng, rng.uniform(1, 3), rng.uniform(1, 3), rng.uniform(1, 2), 2,
                                         rng.uniform(3, 8));
                   return Case{p.q, p.witness, p.alpha_td, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   auto r = saw_reduce_treedepth(c.q, c.alpha_td);
                   auto fg = build_graph(r.q, GraphKind::Primal);
                   auto rep = validate_treedepth(fg.g, r.td);
                   if (!rep.valid) return "output decomposition invalid: " + rep.violation;
                   if (rep.measure > r.height_bound) return "output height exceeds bound";
                   return differ("treedepth reduction", evaluate(r.q, kWideBudget), evaluate(c.q));
                 }});

  out.push_back({"td-cnf",
                 [](Rng& rng) {
                   int n = rng.uniform(2, 8);
                   RandomSpec s{n, rng.uniform(n / 2, 2 * n), rng.uniform(1, 3), 3, 2, rng.uniform(1, 3),
                                MatrixKind::CnfAndDnf};
                   return Case{random_qbf(rng, s), {}, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   auto fg = build_graph(c.q, GraphKind::Primal);
                   auto td = td_min_degree(fg.g);
                   auto r = cdnf_to_cnf_via_td(c.q, td);
                   auto out_g = build_graph(r.q, GraphKind::Primal);
                   auto rep = validate_tree_decomposition(out_g.g, r.td);
                   if (!rep.valid) return "output decomposition invalid: " + rep.violation;
                   if (r.td.width() > td.width() + 3) return "width grew by more than 3";
                   return differ("CNF conversion", evaluate(r.q, kWideBudget), evaluate(c.q));
                 }});

  out.push_back({"fold",
                 [](Rng& rng) {
                   bool conj = rng.coin();
                   int n = rng.uniform(1, 9);
                   RandomSpec s{n, rng.uniform(n / 2, 2 * n), rng.uniform(0, 4), 3, 3, rng.uniform(1, 4),
                                conj ? MatrixKind::CnfAndDnf : MatrixKind::DnfOrCnf};
                   Qbf q = random_qbf(rng, s);
                   auto& side = conj ? q.terms : q.clauses;
                   for (auto& x : side) x.resize(std::min<std::size_t>(x.size(), 1));
                   return Case{q, {}, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   return differ("fold", evaluate(fold_1dnf_into_clause(c.q)), evaluate(c.q));
                 }});

  out.push_back({"expand",
                 [](Rng& rng) {
                   auto p = gen_c_deletion(rng, rng.uniform(4, 10), rng.uniform(1, 2), rng.uniform(1, 3));
                   return Case{p.q, p.witness, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   auto r = expand_universal_deletions(c.q, c.witness);
                   if (!r.validated) return "expanded deletion set not validated";
                   if (r.d.size() > (std::size_t(1) << r.universals) * c.witness.size()) return "|D'| too large";
                   auto quant = r.q.quant_table();
                   for (int v : r.d)
                     if (*quant[v] != Quant::Exists) return "universal variable left in D'";
                   return differ("expansion", evaluate(r.q), evaluate(c.q));
                 }});

  out.push_back({"vc-cache",
                 [](Rng& rng) {
                   int n = rng.uniform(2, 12);
                   RandomSpec s{n, rng.uniform(n / 2, 2 * n), rng.uniform(0, n), 3, 3, rng.uniform(1, 5),
                                static_cast<MatrixKind>(rng.uniform(0, 3))};
                   return Case{random_qbf(rng, s), {}, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   bool want = evaluate(c.q);
                   if (auto m = differ("cached DPLL", solve_vc_cache(c.q), want)) return m;
                   return differ("uncached DPLL", solve_vc_cache(c.q, {false}), want);
                 }});

  out.push_back({"dedup",
                 [](Rng& rng) {
                   int n = rng.uniform(1, 10);
                   RandomSpec s{n, rng.uniform(n / 2, 2 * n), 0, 3, 0, rng.uniform(1, 4), MatrixKind::Cnf};
                   Qbf q = random_qbf(rng, s);
                   int reps = rng.uniform(0, 6);
                   for (int i = 0; i < reps && !q.clauses.empty(); ++i) {
                     Clause cl = q.clauses[rng.uniform(0, (int)q.clauses.size() - 1)];
                     rng.shuffle(cl);
                     q.clauses.push_back(cl);
                   }
                   return Case{q, {}, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   auto r = solve_clause_dedup(c.q);
                   if (r.distinct_clauses != canonical_set(c.q.clauses).size()) return "distinct count wrong";
                   return differ("dedup", r.value, evaluate(c.q));
                 }});

  out.push_back({"e1a",
                 [](Rng& rng) {
                   auto t = gen_e1a(rng, rng.uniform(0, 2), rng.uniform(1, 2), 2, 5);
                   return Case{t.q, t.d, {}, t.c};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   return differ("e1a solver", solve_e1a(c.q, c.witness), evaluate(c.q));
                 }});

  out.push_back({"uni-complete",
                 [](Rng& rng) {
                   auto t = gen_uni_complete(rng, rng.uniform(0, 2), rng.uniform(1, 2), 2);
                   return Case{t.q, t.d, {}, t.c};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   return differ("universally complete solver", solve_universally_complete(c.q, c.witness).value,
                                 evaluate(c.q));
                 }});

  out.push_back({"single-del",
                 [](Rng& rng) {
                   auto p = gen_single_del(rng, rng.uniform(1, 4), 3);
                   return Case{p.q, p.witness, {}, 0};
                 },
                 [](const Case& c) -> std::optional<std::string> {
                   return differ("single-deletion solver", solve_single_deletion(c.q, c.witness[0]).value,
                                 evaluate(c.q));
                 }});
  return out;
}

inline const Check* find_check(const std::vector<Check>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

// Runs the check; precondition failures count as "no mismatch".
inline std::optional<std::string> run_guarded(const Check& check, const Case& c) {
  try {
    return check.run(c);
  } catch (const PreconditionError&) {
    return std::nullopt;
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

// Greedy delta debugging: drop clauses, terms, then variables while the
// check keeps failing.
inline Case shrink(const Check& check, Case c) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto* side : {&c.q.clauses, &c.q.terms})
      for (std::size_t i = 0; i < side->size();) {
        Case t = c;
        auto& ts = side == &c.q.clauses ? t.q.clauses : t.q.terms;
        ts.erase(ts.begin() + i);
        if (run_guarded(check, t)) {
          c = std::move(t);
          progress = true;
        } else {
          ++i;
        }
      }
    for (std::size_t i = 0; i < c.q.prefix.size();) {
      int v = c.q.prefix[i].second;
      Case t = c;
      t.q.prefix.erase(t.q.prefix.begin() + i);
      for (auto* side : {&t.q.clauses, &t.q.terms})
        for (auto& cl : *side) cl.erase(std::remove_if(cl.begin(), cl.end(), [&](Lit l) { return var_of(l) == v; }), cl.end());
      t.witness.erase(std::remove_if(t.witness.begin(), t.witness.end(), [&](int x) { return var_of(x) == v; }),
                      t.witness.end());
      if (run_guarded(check, t)) {
        c = std::move(t);
        progress = true;
      } else {
        ++i;
      }
    }
  }
  return c;
}

struct VerifyReport {
  int passed = 0;
  int skipped = 0;  // generated outside the check's domain
  int total = 0;
  std::optional<int> failed_index;
  std::string message;
  std::optional<Case> reproducer;
};

// Instances are independent: instance i uses the stream (seed, i).
inline VerifyReport run_check(const Check& check, std::uint64_t seed, int count, int threads = 1,
                              bool minimize = true) {
  VerifyReport rep;
  rep.total = count;
  std::vector<int> status(count, 0);  // 1 pass, 2 skip, 3 fail
  std::vector<std::string> msgs(count);
  std::vector<Case> cases(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next++) < count;) {
      Rng rng(seed, (std::uint64_t)i);
      cases[i] = check.generate(rng);
      try {
        auto m = check.run(cases[i]);
        status[i] = m ? 3 : 1;
        if (m) msgs[i] = *m;
      } catch (const PreconditionError&) {
        status[i] = 2;
      } catch (const std::exception& e) {
        status[i] = 3;
        msgs[i] = std::string("exception: ") + e.what();
      }
    }
  };
  threads = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (int i = 0; i < count; ++i) {
    if (status[i] == 1) ++rep.passed;
    if (status[i] == 2) ++rep.skipped;
    if (status[i] == 3 && !rep.failed_index) {
      rep.failed_index = i;
      rep.message = msgs[i];
      rep.reproducer = minimize ? shrink(check, cases[i]) : cases[i];
    }
  }
  return rep;
}

}  // namespace qbfs
