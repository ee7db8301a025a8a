// QBF data model, qdimacs/qcdnf I/O, restriction, negation, the brute-force
// evaluator and a few matrix-level utilities.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbfs {

using Lit = int;
using Clause = std::vector<Lit>;  // also used for terms
using Assignment = std::map<int, bool>;

inline int var_of(Lit l) { return l < 0 ? -l : l; }
inline bool lit_value(Lit l, bool var_value) { return (l > 0) == var_value; }

enum class Quant : std::uint8_t { Exists, Forall };
inline Quant flip(Quant q) { return q == Quant::Exists ? Quant::Forall : Quant::Exists; }
inline char quant_char(Quant q) { return q == Quant::Exists ? 'e' : 'a'; }

// CnfAndDnf is C ∧ D (innermost ∃), DnfOrCnf is D ∨ C (innermost ∀).
enum class MatrixKind : std::uint8_t { Cnf, Dnf, CnfAndDnf, DnfOrCnf };

inline bool has_cnf(MatrixKind k) { return k != MatrixKind::Dnf; }
inline bool has_dnf(MatrixKind k) { return k != MatrixKind::Cnf; }

enum class Format : std::uint8_t { Qdimacs, Qcdnf };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
// Input violates the documented precondition of an operation.
struct PreconditionError : Error {
  using Error::Error;
};
struct BudgetExceeded : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct Qbf {
  int num_vars = 0;
  std::vector<std::pair<Quant, int>> prefix;  // atomic, outermost first
  MatrixKind kind = MatrixKind::Cnf;
  std::vector<Clause> clauses;  // CNF part
  std::vector<Clause> terms;    // DNF part

  bool operator==(const Qbf&) const = default;

  std::optional<Quant> innermost() const {
    if (prefix.empty()) return std::nullopt;
    return prefix.back().first;
  }
  // Quantifier per variable id; variables outside the prefix map to nullopt.
  std::vector<std::optional<Quant>> quant_table() const {
    std::vector<std::optional<Quant>> t(num_vars + 1);
    for (auto [q, v] : prefix) t[v] = q;
    return t;
  }
  // 0-based prefix position per variable id, -1 when absent.
  std::vector<int> position_table() const {
    std::vector<int> t(num_vars + 1, -1);
    for (int i = 0; i < (int)prefix.size(); ++i) t[prefix[i].second] = i;
    return t;
  }
  int depth() const {
    int d = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (i == 0 || prefix[i].first != prefix[i - 1].first) ++d;
    return d;
  }
};

inline std::set<int> matrix_vars(const Qbf& q) {
  std::set<int> s;
  for (const auto& c : q.clauses)
    for (Lit l : c) s.insert(var_of(l));
  for (const auto& t : q.terms)
    for (Lit l : t) s.insert(var_of(l));
  return s;
}

// Structural checks. Orientation is only checked when `orientation` is set:
// restriction may remove the innermost block and keeps the stored kind.
inline void validate(const Qbf& q, bool orientation = false) {
  if (q.kind == MatrixKind::Cnf && !q.terms.empty())
    throw PreconditionError("CNF matrix carries terms");
  if (q.kind == MatrixKind::Dnf && !q.clauses.empty())
    throw PreconditionError("DNF matrix carries clauses");
  std::vector<char> seen(q.num_vars + 1, 0);
  for (auto [qq, v] : q.prefix) {
    if (v < 1 || v > q.num_vars) throw PreconditionError("prefix variable out of range: " + std::to_string(v));
    if (seen[v]) throw PreconditionError("variable quantified twice: " + std::to_string(v));
    seen[v] = 1;
  }
  auto check = [&](const Clause& c) {
    std::set<int> vs;
    for (Lit l : c) {
      int v = var_of(l);
      if (l == 0 || v > q.num_vars) throw PreconditionError("literal out of range: " + std::to_string(l));
      if (!seen[v]) throw PreconditionError("variable not in prefix: " + std::to_string(v));
      if (!vs.insert(v).second) throw PreconditionError("variable repeated in clause/term: " + std::to_string(v));
    }
  };
  for (const auto& c : q.clauses) check(c);
  for (const auto& t : q.terms) check(t);
  if (orientation) {
    auto in = q.innermost();
    if (q.kind == MatrixKind::CnfAndDnf && in == Quant::Forall)
      throw PreconditionError("C∧D orientation requires an innermost existential");
    if (q.kind == MatrixKind::DnfOrCnf && in != Quant::Forall)
      throw PreconditionError("D∨C orientation requires an innermost universal");
  }
}

// ---------------------------------------------------------------------------
// Parsing and serialization

struct ParseOptions {
  bool simplify_tautologies = false;  // drop x∨¬x clauses instead of failing
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long to_int(std::string_view tok, int line) {
  long long v = 0;
  bool neg = false;
  std::size_t i = 0;
  if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
    neg = tok[0] == '-';
    i = 1;
  }
  if (i == tok.size()) throw ParseError("line " + std::to_string(line) + ": expected integer, got '" + std::string(tok) + "'");
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9')
      throw ParseError("line " + std::to_string(line) + ": expected integer, got '" + std::string(tok) + "'");
    v = v * 10 + (tok[i] - '0');
    if (v > (1LL << 31)) throw ParseError("line " + std::to_string(line) + ": integer too large");
  }
  return neg ? -v : v;
}

}  // namespace detail

inline Qbf parse(std::string_view text, Format fmt, const ParseOptions& opt = {}) {
  Qbf q;
  long long nc = -1, nt = 0;
  bool header = false, body_started = false;
  std::vector<char> quantified;
  Clause cur;
  bool cur_is_term = false, cur_open = false;
  int cur_line = 0;
  int line_no = 0;

  auto fail = [&](int line, const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line) + ": " + msg);
  };
  long long read_clauses = 0, read_terms = 0;
  auto finish = [&](int line) {
    ++(cur_is_term ? read_terms : read_clauses);
    std::set<int> pos, neg;
    Clause c;
    bool taut = false;
    for (Lit l : cur) {
      int v = var_of(l);
      if ((l > 0 ? neg : pos).count(v)) {
        taut = true;
        continue;
      }
      if ((l > 0 ? pos : neg).insert(v).second) c.push_back(l);
    }
    if (taut) {
      if (!opt.simplify_tautologies)
        throw fail(line, std::string("complementary literals in one ") + (cur_is_term ? "term" : "clause"));
    } else {
      (cur_is_term ? q.terms : q.clauses).push_back(std::move(c));
    }
    cur.clear();
    cur_open = false;
  };

  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (!header) {
      if (toks[0] != "p") throw fail(line_no, "expected problem line 'p ...'");
      if (fmt == Format::Qdimacs) {
        if (toks.size() != 4 || toks[1] != "cnf") throw fail(line_no, "malformed header, expected 'p cnf <nv> <nc>'");
      } else {
        if (toks.size() != 5 || toks[1] != "qcdnf")
          throw fail(line_no, "malformed header, expected 'p qcdnf <nv> <nc> <nt>'");
        nt = detail::to_int(toks[4], line_no);
      }
      long long nv = detail::to_int(toks[2], line_no);
      nc = detail::to_int(toks[3], line_no);
      if (nv < 0 || nc < 0 || nt < 0) throw fail(line_no, "malformed header, negative count");
      q.num_vars = static_cast<int>(nv);
      quantified.assign(q.num_vars + 1, 0);
      header = true;
      continue;
    }
    if (toks[0] == "p") throw fail(line_no, "duplicate problem line");
    if (toks[0] == "e" || toks[0] == "a") {
      if (body_started || cur_open) throw fail(line_no, "quantifier line after clauses");
      Quant qq = toks[0] == "e" ? Quant::Exists : Quant::Forall;
      bool closed = false;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        long long v = detail::to_int(toks[i], line_no);
        if (closed) throw fail(line_no, "tokens after terminating 0");
        if (v == 0) {
          closed = true;
          continue;
        }
        if (v < 0 || v > q.num_vars) throw fail(line_no, "variable out of range: " + std::to_string(v));
        if (quantified[v]) throw fail(line_no, "duplicate quantification of variable " + std::to_string(v));
        quantified[v] = 1;
        q.prefix.emplace_back(qq, static_cast<int>(v));
      }
      if (!closed) throw fail(line_no, "quantifier line not terminated by 0");
      continue;
    }
    std::size_t i = 0;
    if (toks[0] == "t") {
      if (fmt != Format::Qcdnf) throw fail(line_no, "term line in qdimacs input");
      if (cur_open) throw fail(line_no, "term line inside an unterminated clause");
      cur_is_term = true;
      cur_open = true;
      cur_line = line_no;
      i = 1;
    } else if (!cur_open) {
      if (!q.terms.empty()) throw fail(line_no, "clause line after term lines");
      cur_is_term = false;
      cur_open = true;
      cur_line = line_no;
    }
    body_started = true;
    for (; i < toks.size(); ++i) {
      if (toks[i] == "t") throw fail(line_no, "term must start its own line");
      long long l = detail::to_int(toks[i], line_no);
      if (l == 0) {
        finish(cur_line);
        if (i + 1 < toks.size()) {
          if (cur_is_term) throw fail(line_no, "tokens after terminated term");
          cur_open = true;
          cur_line = line_no;
        }
        continue;
      }
      if (-l > q.num_vars || l > q.num_vars) throw fail(line_no, "variable out of range: " + std::to_string(l));
      cur.push_back(static_cast<Lit>(l));
    }
  }
  if (!header) throw ParseError("line " + std::to_string(line_no) + ": missing problem line");
  if (cur_open) throw fail(cur_line, "clause not terminated by 0");
  if (read_clauses != nc)
    throw fail(line_no, "expected " + std::to_string(nc) + " clauses, found " + std::to_string(read_clauses));
  if (read_terms != nt)
    throw fail(line_no, "expected " + std::to_string(nt) + " terms, found " + std::to_string(read_terms));

  // Free matrix variables are existential in an outermost block.
  std::vector<std::pair<Quant, int>> free;
  for (int v : matrix_vars(q))
    if (!quantified[v]) free.emplace_back(Quant::Exists, v);
  q.prefix.insert(q.prefix.begin(), free.begin(), free.end());

  if (fmt == Format::Qdimacs || nt == 0) {
    q.kind = MatrixKind::Cnf;
  } else if (nc == 0) {
    q.kind = MatrixKind::Dnf;
  } else {
    q.kind = q.innermost() == Quant::Forall ? MatrixKind::DnfOrCnf : MatrixKind::CnfAndDnf;
  }
  return q;
}

inline std::string serialize(const Qbf& q, Format fmt) {
  validate(q);
  std::ostringstream os;
  if (fmt == Format::Qdimacs) {
    if (q.kind != MatrixKind::Cnf) throw PreconditionError("qdimacs can only hold a CNF matrix");
    os << "p cnf " << q.num_vars << ' ' << q.clauses.size() << '\n';
  } else {
    bool ok = true;
    switch (q.kind) {
      case MatrixKind::Cnf: break;
      case MatrixKind::Dnf: ok = !q.terms.empty(); break;
      case MatrixKind::CnfAndDnf: ok = !q.clauses.empty() && !q.terms.empty() && q.innermost() != Quant::Forall; break;
      case MatrixKind::DnfOrCnf: ok = !q.clauses.empty() && !q.terms.empty() && q.innermost() == Quant::Forall; break;
    }
    if (!ok) throw PreconditionError("matrix has no qcdnf encoding (empty side or orientation mismatch)");
    os << "p qcdnf " << q.num_vars << ' ' << q.clauses.size() << ' ' << q.terms.size() << '\n';
  }
  for (std::size_t i = 0; i < q.prefix.size();) {
    std::size_t j = i;
    os << quant_char(q.prefix[i].first);
    while (j < q.prefix.size() && q.prefix[j].first == q.prefix[i].first) os << ' ' << q.prefix[j++].second;
    os << " 0\n";
    i = j;
  }
  for (const auto& c : q.clauses) {
    for (Lit l : c) os << l << ' ';
    os << "0\n";
  }
  for (const auto& t : q.terms) {
    os << 't';
    for (Lit l : t) os << ' ' << l;
    os << " 0\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Restriction and negation

inline Qbf restrict(const Qbf& q, const Assignment& a) {
  Qbf r;
  r.num_vars = q.num_vars;
  r.kind = q.kind;
  for (auto p : q.prefix)
    if (!a.count(p.second)) r.prefix.push_back(p);
  auto value = [&](Lit l) -> int {
    auto it = a.find(var_of(l));
    if (it == a.end()) return -1;
    return lit_value(l, it->second) ? 1 : 0;
  };
  for (const auto& c : q.clauses) {
    Clause out;
    bool sat = false;
    for (Lit l : c) {
      int v = value(l);
      if (v == 1) {
        sat = true;
        break;
      }
      if (v == -1) out.push_back(l);
    }
    if (!sat) r.clauses.push_back(std::move(out));
  }
  for (const auto& t : q.terms) {
    Clause out;
    bool falsified = false;
    for (Lit l : t) {
      int v = value(l);
      if (v == 0) {
        falsified = true;
        break;
      }
      if (v == -1) out.push_back(l);
    }
    if (!falsified) r.terms.push_back(std::move(out));
  }
  return r;
}

inline Qbf negate(const Qbf& q) {
  Qbf r;
  r.num_vars = q.num_vars;
  for (auto [qq, v] : q.prefix) r.prefix.emplace_back(flip(qq), v);
  auto neg = [](const std::vector<Clause>& cs) {
    std::vector<Clause> out = cs;
    for (auto& c : out)
      for (Lit& l : c) l = -l;
    return out;
  };
  r.terms = neg(q.clauses);
  r.clauses = neg(q.terms);
  switch (q.kind) {
    case MatrixKind::Cnf: r.kind = MatrixKind::Dnf; break;
    case MatrixKind::Dnf: r.kind = MatrixKind::Cnf; break;
    case MatrixKind::CnfAndDnf: r.kind = MatrixKind::DnfOrCnf; break;
    case MatrixKind::DnfOrCnf: r.kind = MatrixKind::CnfAndDnf; break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Evaluation

inline constexpr std::size_t kDefaultVarBudget = 26;

// Truth value of the matrix under a total assignment (index = variable id).
inline bool eval_matrix(const Qbf& q, const std::vector<char>& val) {
  auto lv = [&](Lit l) { return lit_value(l, val[var_of(l)] != 0); };
  bool cnf = std::all_of(q.clauses.begin(), q.clauses.end(),
                         [&](const Clause& c) { return std::any_of(c.begin(), c.end(), lv); });
  bool dnf = std::any_of(q.terms.begin(), q.terms.end(),
                         [&](const Clause& t) { return std::all_of(t.begin(), t.end(), lv); });
  switch (q.kind) {
    case MatrixKind::Cnf: return cnf;
    case MatrixKind::Dnf: return dnf;
    case MatrixKind::CnfAndDnf: return cnf && dnf;
    case MatrixKind::DnfOrCnf: return dnf || cnf;
  }
  return false;
}

namespace detail {

// Three-valued matrix status maintained incrementally under assignment.
class MatrixTracker {
 public:
  explicit MatrixTracker(const Qbf& q) : kind_(q.kind), occ_(q.num_vars + 1) {
    nc_ = (int)q.clauses.size();
    nt_ = (int)q.terms.size();
    size_.reserve(nc_ + nt_);
    for (int i = 0; i < nc_; ++i) {
      size_.push_back((int)q.clauses[i].size());
      for (Lit l : q.clauses[i]) occ_[var_of(l)].push_back({i, l > 0});
      if (q.clauses[i].empty()) ++cnf_falsified_;
    }
    for (int i = 0; i < nt_; ++i) {
      size_.push_back((int)q.terms[i].size());
      for (Lit l : q.terms[i]) occ_[var_of(l)].push_back({nc_ + i, l > 0});
      if (q.terms[i].empty()) ++dnf_true_;
    }
    ntrue_.assign(nc_ + nt_, 0);
    nfalse_.assign(nc_ + nt_, 0);
  }

  void assign(int v, bool b, int delta) {
    for (auto [idx, pos] : occ_[v]) {
      bool t = pos == b;
      if (idx < nc_) {
        if (t) {
          if (delta > 0 && ntrue_[idx]++ == 0) {
            ++cnf_sat_;
            if (nfalse_[idx] == size_[idx]) --cnf_falsified_;
          } else if (delta < 0 && --ntrue_[idx] == 0) {
            --cnf_sat_;
            if (nfalse_[idx] == size_[idx]) ++cnf_falsified_;
          }
        } else {
          if (delta > 0) {
            if (++nfalse_[idx] == size_[idx] && ntrue_[idx] == 0) ++cnf_falsified_;
          } else {
            if (nfalse_[idx]-- == size_[idx] && ntrue_[idx] == 0) --cnf_falsified_;
          }
        }
      } else {
        if (t) {
          if (delta > 0) {
            if (++ntrue_[idx] == size_[idx]) ++dnf_true_;
          } else {
            if (ntrue_[idx]-- == size_[idx]) --dnf_true_;
          }
        } else {
          if (delta > 0 && nfalse_[idx]++ == 0) ++dnf_false_;
          else if (delta < 0 && --nfalse_[idx] == 0) --dnf_false_;
        }
      }
    }
  }

  // -1 unknown, 0 false, 1 true
  int status() const {
    int c = cnf_falsified_ > 0 ? 0 : (cnf_sat_ == nc_ ? 1 : -1);
    int d = dnf_true_ > 0 ? 1 : (dnf_false_ == nt_ ? 0 : -1);
    switch (kind_) {
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

 private:
  struct Occ {
    int idx;
    bool pos;
  };
  MatrixKind kind_;
  int nc_ = 0, nt_ = 0;
  std::vector<std::vector<Occ>> occ_;
  std::vector<int> size_, ntrue_, nfalse_;
  int cnf_sat_ = 0, cnf_falsified_ = 0, dnf_true_ = 0, dnf_false_ = 0;
};

}  // namespace detail

// Exhaustive game-tree evaluation with early cut-offs. Variables that do not
// occur in the matrix are skipped. Iterative, so deep prefixes are safe.
inline bool evaluate(const Qbf& q, std::size_t budget = kDefaultVarBudget) {
  auto occurring = matrix_vars(q);
  std::vector<std::pair<Quant, int>> order;
  for (auto p : q.prefix)
    if (occurring.count(p.second)) order.push_back(p);
  if (order.size() != occurring.size()) throw PreconditionError("matrix variable missing from prefix");
  if (order.size() > budget)
    throw BudgetExceeded("evaluation needs " + std::to_string(order.size()) + " variables, budget is " +
                         std::to_string(budget));
  detail::MatrixTracker m(q);
  const int n = (int)order.size();
  struct Frame {
    int pos;
    int tried;
  };
  std::vector<Frame> st;
  st.reserve(n + 1);
  st.push_back({0, 0});
  bool ret = false, returned = false;
  while (!st.empty()) {
    Frame& f = st.back();
    if (returned) {
      returned = false;
      m.assign(order[f.pos].second, f.tried == 2, -1);
      bool ex = order[f.pos].first == Quant::Exists;
      if (ex == ret || f.tried == 2) {
        st.pop_back();
        returned = true;
        continue;
      }
    } else {
      int s = m.status();
      if (s != -1 || f.pos == n) {
        ret = s == 1;
        st.pop_back();
        returned = true;
        continue;
      }
    }
    int pos = f.pos;
    bool b = f.tried == 1;
    ++f.tried;
    m.assign(order[pos].second, b, +1);
    st.push_back({pos + 1, 0});
  }
  return ret;
}

// ---------------------------------------------------------------------------
// 2-CNF ∧ 1-DNF satisfiability

namespace detail {

// Tarjan SCC on the implication graph; nodes 2v (v true) and 2v+1 (v false).
inline std::optional<std::vector<char>> two_sat(int n, const std::vector<Clause>& cs) {
  auto node = [](Lit l) { return 2 * var_of(l) + (l < 0 ? 1 : 0); };
  int N = 2 * (n + 1);
  std::vector<std::vector<int>> g(N);
  for (const auto& c : cs) {
    if (c.empty()) return std::nullopt;
    if (c.size() == 1) {
      g[node(-c[0])].push_back(node(c[0]));
    } else {
      g[node(-c[0])].push_back(node(c[1]));
      g[node(-c[1])].push_back(node(c[0]));
    }
  }
  std::vector<int> idx(N, -1), low(N, 0), comp(N, -1), stk;
  std::vector<char> on(N, 0);
  int counter = 0, ncomp = 0;
  std::vector<std::pair<int, std::size_t>> call;
  for (int s = 0; s < N; ++s) {
    if (idx[s] != -1) continue;
    call.push_back({s, 0});
    idx[s] = low[s] = counter++;
    stk.push_back(s);
    on[s] = 1;
    while (!call.empty()) {
      auto& [u, it] = call.back();
      if (it < g[u].size()) {
        int w = g[u][it++];
        if (idx[w] == -1) {
          idx[w] = low[w] = counter++;
          stk.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[u] = std::min(low[u], idx[w]);
        }
      } else {
        int uu = u;
        if (low[uu] == idx[uu]) {
          int w;
          do {
            w = stk.back();
            stk.pop_back();
            on[w] = 0;
            comp[w] = ncomp;
          } while (w != uu);
          ++ncomp;
        }
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[uu]);
      }
    }
  }
  std::vector<char> val(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
    val[v] = comp[2 * v] < comp[2 * v + 1];
  }
  return val;
}

}  // namespace detail

// Tries each term of the 1-DNF as a unit on top of the 2-CNF.
inline std::optional<Assignment> matrix_sat_2cnf_plus_1dnf(const std::vector<Clause>& cnf,
                                                           const std::vector<Clause>& dnf) {
  int n = 0;
  for (const auto& c : cnf) {
    if (c.size() > 2) throw PreconditionError("clause wider than 2");
    for (Lit l : c) n = std::max(n, var_of(l));
  }
  for (const auto& t : dnf) {
    if (t.size() > 1) throw PreconditionError("term wider than 1");
    for (Lit l : t) n = std::max(n, var_of(l));
  }
  std::set<int> vars;
  for (const auto& c : cnf)
    for (Lit l : c) vars.insert(var_of(l));
  for (const auto& t : dnf)
    for (Lit l : t) vars.insert(var_of(l));
  for (const auto& t : dnf) {
    std::vector<Clause> cs = cnf;
    if (!t.empty()) cs.push_back({t[0]});
    if (auto val = detail::two_sat(n, cs)) {
      Assignment a;
      for (int v : vars) a[v] = (*val)[v] != 0;
      return a;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Innermost-variable elimination (universal reduction / DP resolution)

inline Qbf eliminate_innermost(const Qbf& q, int v) {
  if (q.kind != MatrixKind::Cnf) throw PreconditionError("elimination needs a CNF matrix");
  if (q.prefix.empty() || q.prefix.back().second != v)
    throw PreconditionError("variable " + std::to_string(v) + " is not innermost");
  Qbf r = q;
  r.prefix.pop_back();
  r.clauses.clear();
  if (q.prefix.back().first == Quant::Forall) {
    for (const auto& c : q.clauses) {
      Clause out;
      for (Lit l : c)
        if (var_of(l) != v) out.push_back(l);
      r.clauses.push_back(std::move(out));
    }
    return r;
  }
  std::vector<const Clause*> pos, neg;
  for (const auto& c : q.clauses) {
    bool p = std::find(c.begin(), c.end(), v) != c.end();
    bool n = std::find(c.begin(), c.end(), -v) != c.end();
    if (p) pos.push_back(&c);
    else if (n) neg.push_back(&c);
    else r.clauses.push_back(c);
  }
  for (const Clause* a : pos)
    for (const Clause* b : neg) {
      Clause res;
      std::set<Lit> seen;
      bool taut = false;
      for (const Clause* c : {a, b})
        for (Lit l : *c) {
          if (var_of(l) == v) continue;
          if (seen.count(-l)) taut = true;
          if (seen.insert(l).second) res.push_back(l);
        }
      if (!taut) r.clauses.push_back(std::move(res));
    }
  return r;
}

// Sorted literal order (by variable, then sign) and sorted clause order.
inline Clause sorted_lits(Clause c) {
  std::sort(c.begin(), c.end(), [](Lit a, Lit b) {
    return var_of(a) != var_of(b) ? var_of(a) < var_of(b) : a < b;
  });
  return c;
}

inline std::vector<Clause> canonical_set(std::vector<Clause> cs) {
  for (auto& c : cs) c = sorted_lits(std::move(c));
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

inline std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::Cnf: return "cnf";
    case MatrixKind::Dnf: return "dnf";
    case MatrixKind::CnfAndDnf: return "cnf-and-dnf";
    case MatrixKind::DnfOrCnf: return "dnf-or-cnf";
  }
  return "?";
}

}  // namespace qbfs
