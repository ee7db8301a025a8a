#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qbfs;

namespace {

Qbf example1() { return parse(oracle::read_file(QBFSTRUCT_DATA_DIR "/example1.qcdnf"), Format::Qcdnf); }

Qbf random_any(Rng& rng, int max_n) {
  int n = rng.uniform(1, max_n);
  RandomSpec s{n, rng.uniform(0, 2 * n), rng.uniform(0, n), 3, 3, rng.uniform(1, 4),
               static_cast<MatrixKind>(rng.uniform(0, 3))};
  return random_qbf(rng, s);
}

}  // namespace

TEST(Parse, QdimacsBasic) {
  Qbf q = parse("p cnf 2 1\ne 1 2 0\n1 -2 0\n", Format::Qdimacs);
  EXPECT_EQ(q.num_vars, 2);
  ASSERT_EQ(q.prefix.size(), 2u);
  EXPECT_EQ(q.prefix[0], std::make_pair(Quant::Exists, 1));
  EXPECT_EQ(q.prefix[1], std::make_pair(Quant::Exists, 2));
  EXPECT_EQ(q.clauses, (std::vector<Clause>{{1, -2}}));
  EXPECT_EQ(q.kind, MatrixKind::Cnf);
}

TEST(Parse, RunningExampleAsQcdnf) {
  Qbf q = example1();
  EXPECT_EQ(q.num_vars, 4);
  EXPECT_EQ(q.clauses.size(), 4u);
  EXPECT_TRUE(q.terms.empty());
  EXPECT_EQ(q.depth(), 2);
}

TEST(Parse, TermsAndOrientation) {
  Qbf q = parse("p qcdnf 2 1 1\ne 1 2 0\n1 2 0\nt -1 0\n", Format::Qcdnf);
  EXPECT_EQ(q.kind, MatrixKind::CnfAndDnf);
  EXPECT_EQ(q.terms, (std::vector<Clause>{{-1}}));
  Qbf r = parse("p qcdnf 2 1 1\ne 1 0\na 2 0\n1 2 0\nt -1 0\n", Format::Qcdnf);
  EXPECT_EQ(r.kind, MatrixKind::DnfOrCnf);
  Qbf d = parse("p qcdnf 2 0 2\na 1 2 0\nt 1 0\nt -2 1 0\n", Format::Qcdnf);
  EXPECT_EQ(d.kind, MatrixKind::Dnf);
}

TEST(Parse, FreeVariablesBecomeOutermostExistentials) {
  Qbf q = parse("p cnf 3 1\na 2 0\n1 2 3 0\n", Format::Qdimacs);
  ASSERT_EQ(q.prefix.size(), 3u);
  EXPECT_EQ(q.prefix[0], std::make_pair(Quant::Exists, 1));
  EXPECT_EQ(q.prefix[1], std::make_pair(Quant::Exists, 3));
  EXPECT_EQ(q.prefix[2], std::make_pair(Quant::Forall, 2));
}

TEST(Parse, Errors) {
  auto fails = [](const std::string& text, const std::string& needle, Format f = Format::Qdimacs) {
    try {
      parse(text, f);
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
      return;
    }
    ADD_FAILURE() << "no error for: " << text;
  };
  fails("p cnf 2 1\ne 1 2 0\n1 -1 0\n", "line 3: complementary");
  fails("p cnf 2\n", "malformed header");
  fails("p cnf 2 1\ne 1 3 0\n1 0\n", "out of range");
  fails("p cnf 2 1\ne 1 0\na 1 0\n1 0\n", "duplicate quantification");
  fails("p cnf 2 2\ne 1 2 0\n1 2 0\n", "expected 2 clauses");
  fails("p cnf 2 1\n1 2\n", "not terminated");
  fails("p qcdnf 2 0 1\ne 1 2 0\nt 1 -1 0\n", "complementary literals in one term", Format::Qcdnf);
  fails("p cnf 2 1\ne 1 2 0\nt 1 0\n", "term line");
}

TEST(Parse, SimplifyTautologiesDropsClause) {
  ParseOptions opt;
  opt.simplify_tautologies = true;
  Qbf q = parse("p cnf 2 2\ne 1 2 0\n1 -1 2 0\n2 0\n", Format::Qdimacs, opt);
  EXPECT_EQ(q.clauses, (std::vector<Clause>{{2}}));
}

TEST(Serialize, RoundTripRunningExample) {
  Qbf q = example1();
  std::string text = serialize(q, Format::Qcdnf);
  EXPECT_EQ(parse(text, Format::Qcdnf), q);
  EXPECT_EQ(parse(serialize(q, Format::Qdimacs), Format::Qdimacs), q);
}

TEST(Serialize, OneTermGivesOneTLine) {
  Qbf q = parse("p qcdnf 2 1 1\ne 1 2 0\n1 2 0\nt 1 0\n", Format::Qcdnf);
  std::string text = serialize(q, Format::Qcdnf);
  int tlines = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) tlines += !line.empty() && line[0] == 't';
  EXPECT_EQ(tlines, 1);
}

TEST(Serialize, RejectsCdnfAsQdimacs) {
  Qbf q = parse("p qcdnf 2 1 1\ne 1 2 0\n1 2 0\nt 1 0\n", Format::Qcdnf);
  EXPECT_THROW(serialize(q, Format::Qdimacs), PreconditionError);
}

TEST(Serialize, RandomRoundTrips) {
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    Rng rng(11, i);
    Qbf q = random_any(rng, 10);
    std::string text;
    try {
      text = serialize(q, Format::Qcdnf);
    } catch (const PreconditionError&) {
      continue;  // an empty side has no encoding
    }
    EXPECT_EQ(parse(text, Format::Qcdnf), q) << text;
    if (q.kind == MatrixKind::Cnf) {
      EXPECT_EQ(parse(serialize(q, Format::Qdimacs), Format::Qdimacs), q);
    }
    ++checked;
  }
  EXPECT_GE(checked, 300);
}

TEST(Restrict, RunningExamplePartialAssignment) {
  Qbf r = restrict(example1(), {{1, false}, {2, true}});
  EXPECT_EQ(r.clauses, (std::vector<Clause>{{-3, -4}}));
  ASSERT_EQ(r.prefix.size(), 2u);
  EXPECT_EQ(r.prefix[0].second, 3);
}

TEST(Restrict, EmptyAssignmentIsIdentity) {
  Qbf q = example1();
  EXPECT_EQ(restrict(q, {}), q);
}

TEST(Restrict, DnfKeepsEmptyTerm) {
  Qbf q = parse("p qcdnf 4 0 2\ne 2 4 0\nt 2 0\nt -4 0\n", Format::Qcdnf);
  Qbf r = restrict(q, {{2, true}});
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_TRUE(r.terms[0].empty());
  EXPECT_TRUE(oracle::eval(r));
}

TEST(Restrict, Composition) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(12, i);
    Qbf q = random_any(rng, 8);
    Assignment a, b, ab;
    for (auto [qq, v] : q.prefix) {
      int pick = rng.uniform(0, 2);
      bool val = rng.coin();
      if (pick == 1) a[v] = val;
      if (pick == 2) b[v] = val;
      if (pick) ab[v] = val;
    }
    EXPECT_EQ(restrict(restrict(q, a), b), restrict(q, ab));
  }
}

TEST(Negate, RunningExampleFlips) {
  Qbf n = negate(example1());
  EXPECT_EQ(n.kind, MatrixKind::Dnf);
  EXPECT_EQ(n.prefix[0].first, Quant::Exists);
  EXPECT_EQ(n.prefix[3].first, Quant::Forall);
  for (const auto& t : n.terms) EXPECT_EQ(t.size(), 3u);
  EXPECT_FALSE(evaluate(n));
}

TEST(Negate, InvolutionAndComplement) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(13, i);
    Qbf q = random_any(rng, 10);
    EXPECT_EQ(negate(negate(q)), q);
    EXPECT_EQ(evaluate(negate(q)), !oracle::eval(q));
  }
}

TEST(Evaluate, SmallCases) {
  EXPECT_TRUE(evaluate(example1()));
  EXPECT_FALSE(evaluate(parse("p cnf 1 2\ne 1 0\n1 0\n-1 0\n", Format::Qdimacs)));
  Qbf empty;
  EXPECT_TRUE(evaluate(empty));
  empty.kind = MatrixKind::Dnf;
  EXPECT_FALSE(evaluate(empty));
}

TEST(Evaluate, AgreesWithNaiveRecursion) {
  for (int i = 0; i < 400; ++i) {
    Rng rng(14, i);
    Qbf q = random_any(rng, 12);
    EXPECT_EQ(evaluate(q), oracle::eval(q)) << serialize(q, Format::Qcdnf);
  }
}

TEST(Evaluate, BudgetGuard) {
  Rng rng(1);
  RandomSpec s{30, 40, 0, 3, 0, 3, MatrixKind::Cnf};
  Qbf q = random_qbf(rng, s);
  EXPECT_THROW(evaluate(q, 10), BudgetExceeded);
}

TEST(Validate, OrientationMismatchRejected) {
  Qbf q = parse("p qcdnf 2 1 1\ne 1 2 0\n1 2 0\nt 1 0\n", Format::Qcdnf);
  q.kind = MatrixKind::DnfOrCnf;
  EXPECT_THROW(validate(q, true), PreconditionError);
}

TEST(MatrixSat, SmallCases) {
  EXPECT_FALSE(matrix_sat_2cnf_plus_1dnf({{1, 2}, {-1, 2}}, {{-2}}));
  auto a = matrix_sat_2cnf_plus_1dnf({}, {{1}});
  ASSERT_TRUE(a);
  EXPECT_TRUE(a->at(1));
  EXPECT_THROW(matrix_sat_2cnf_plus_1dnf({{1, 2, 3}}, {{1}}), PreconditionError);
}

TEST(MatrixSat, AgreesWithExhaustiveSearch) {
  for (int i = 0; i < 500; ++i) {
    Rng rng(15, i);
    int n = rng.uniform(1, 12);
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<Clause> cnf, dnf;
    int m = rng.uniform(0, 3 * n);
    for (int j = 0; j < m; ++j) cnf.push_back(random_clause(rng, pool, rng.uniform(1, 2)));
    int t = rng.uniform(0, 3);
    for (int j = 0; j < t; ++j) dnf.push_back(random_clause(rng, pool, 1));
    auto got = matrix_sat_2cnf_plus_1dnf(cnf, dnf);
    bool want = oracle::matrix_sat(n, cnf, dnf);
    ASSERT_EQ(got.has_value(), want);
    if (got) {
      std::vector<int> val(n + 1, 0);
      for (auto [v, b] : *got) val[v] = b;
      Qbf q;
      q.num_vars = n;
      q.kind = MatrixKind::CnfAndDnf;
      q.clauses = cnf;
      q.terms = dnf;
      EXPECT_TRUE(oracle::matrix(q, val));
    }
  }
}

TEST(Eliminate, UniversalReduction) {
  Qbf q = parse("p cnf 2 1\ne 1 0\na 2 0\n1 2 0\n", Format::Qdimacs);
  Qbf r = eliminate_innermost(q, 2);
  EXPECT_EQ(r.clauses, (std::vector<Clause>{{1}}));
  EXPECT_EQ(r.prefix.size(), 1u);
}

TEST(Eliminate, ExistentialResolution) {
  Qbf q = parse("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-2 0\n", Format::Qdimacs);
  Qbf r = eliminate_innermost(q, 2);
  EXPECT_EQ(r.clauses, (std::vector<Clause>{{1}}));
  EXPECT_FALSE(evaluate(r));
  EXPECT_FALSE(oracle::eval(q));
}

TEST(Eliminate, Preconditions) {
  Qbf q = example1();
  EXPECT_THROW(eliminate_innermost(q, 3), PreconditionError);
  EXPECT_THROW(eliminate_innermost(negate(q), 4), PreconditionError);
}

TEST(Eliminate, PreservesTruth) {
  for (int i = 0; i < 300; ++i) {
    Rng rng(16, i);
    int n = rng.uniform(1, 10);
    RandomSpec s{n, rng.uniform(0, 2 * n), 0, 3, 0, rng.uniform(1, 4), MatrixKind::Cnf};
    Qbf q = random_qbf(rng, s);
    EXPECT_EQ(oracle::eval(eliminate_innermost(q, q.prefix.back().second)), oracle::eval(q));
  }
}
