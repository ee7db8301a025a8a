#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qbfs;

TEST(Rng, SplitMixReferenceValues) {
  // first outputs of the reference SplitMix64 stream seeded with 0
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(Rng, StreamsAreIndependentOfOrder) {
  Rng a(9, 3), b(9, 3), c(9, 4);
  int same = 0, diff = 0;
  for (int i = 0; i < 64; ++i) {
    int x = a.uniform(0, 1 << 30), y = b.uniform(0, 1 << 30), z = c.uniform(0, 1 << 30);
    same += x == y;
    diff += x != z;
  }
  EXPECT_EQ(same, 64);
  EXPECT_GT(diff, 60);
}

TEST(Generators, Deterministic) {
  for (int i = 0; i < 20; ++i) {
    Rng r1(77, i), r2(77, i);
    EXPECT_EQ(serialize(gen_fes(r1, 8, 2).q, Format::Qdimacs), serialize(gen_fes(r2, 8, 2).q, Format::Qdimacs));
    EXPECT_EQ(serialize(gen_sparse_fvs(r1, 6, 2).q, Format::Qcdnf), serialize(gen_sparse_fvs(r2, 6, 2).q, Format::Qcdnf));
    EXPECT_EQ(gen_e1a(r1, 2, 2, 3, 3).q, gen_e1a(r2, 2, 2, 3, 3).q);
    EXPECT_EQ(gen_alpha_td(r1, 2, 2, 1, 2, 5).q, gen_alpha_td(r2, 2, 2, 1, 2, 5).q);
  }
}

TEST(Generators, RandomQbfRespectsSpec) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(70, i);
    int n = rng.uniform(1, 10);
    RandomSpec s{n, rng.uniform(0, 10), rng.uniform(1, 4), 3, 2, rng.uniform(1, 4), MatrixKind::CnfAndDnf};
    Qbf q = random_qbf(rng, s);
    EXPECT_NO_THROW(validate(q));
    EXPECT_EQ((int)q.prefix.size(), n);
    for (const auto& c : q.clauses) EXPECT_LE((int)c.size(), 3);
    for (const auto& t : q.terms) EXPECT_LE((int)t.size(), 2);
  }
}

TEST(Generators, PlantedFesWitness) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(71, i);
    int k = rng.uniform(0, 3);
    auto p = gen_fes(rng, rng.uniform(3, 12), k);
    auto fg = build_graph(p.q, GraphKind::Primal);
    ASSERT_EQ(p.witness.size() % 2, 0u);
    EXPECT_LE((int)p.witness.size() / 2, k);
    std::vector<Edge> drop;
    for (std::size_t j = 0; j < p.witness.size(); j += 2) drop.push_back({p.witness[j] - 1, p.witness[j + 1] - 1});
    EXPECT_TRUE(is_acyclic(remove_edges(fg.g, drop)));
  }
}

TEST(Generators, PlantedSparseFvsWitness) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(72, i);
    auto p = gen_sparse_fvs(rng, rng.uniform(2, 10), rng.uniform(0, 4));
    auto fg = build_graph(p.q, GraphKind::Primal);
    std::vector<int> sv;
    for (int x : p.witness) sv.push_back(x - 1);
    EXPECT_TRUE(is_acyclic(fg.g, vertex_mask(fg.g.n, sv)));
    EXPECT_TRUE(is_sparse_wrt(p.q, p.witness));
    EXPECT_NO_THROW(sdetail::require_31_cdnf(p.q));
  }
}

TEST(Generators, PlantedDeletionSets) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(73, i);
    int c = rng.uniform(1, 3);
    auto p = gen_c_deletion(rng, rng.uniform(2, 12), rng.uniform(0, 2), c);
    EXPECT_LE(largest_component(p.q, p.witness), c);
    auto flood = oracle::flood_components(p.q, p.witness);
    for (const auto& comp : flood) EXPECT_LE((int)comp.size(), c);
  }
}

TEST(Generators, UniversallyCompleteHasEnoughCopies) {
  for (int i = 0; i < 100; ++i) {
    Rng rng(74, i);
    int kd = rng.uniform(1, 2);
    auto p = gen_uni_complete(rng, kd, rng.uniform(1, 3), 3);
    for (const auto& t : component_types(p.q, p.d)) EXPECT_GE(t.components.size(), std::size_t(1) << kd);
  }
}

TEST(Generators, E1aComponentsHaveTheShape) {
  for (int i = 0; i < 100; ++i) {
    Rng rng(75, i);
    auto p = gen_e1a(rng, rng.uniform(0, 2), rng.uniform(1, 3), 4, 3);
    for (const auto& comp : deletion_components(p.q, p.d)) EXPECT_TRUE(is_e1a_component(p.q, comp));
  }
}

TEST(Generators, PlantedAlphaTreedepthValidates) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(76, i);
    auto p = gen_alpha_td(rng, rng.uniform(1, 3), rng.uniform(1, 3), rng.uniform(1, 2), 2, rng.uniform(3, 8));
    auto fg = build_graph(p.q, GraphKind::Primal);
    auto rep = validate_alpha_td(fg.g, p.alpha_td);
    EXPECT_TRUE(rep.valid) << rep.violation;
  }
}

TEST(Generators, SingleDeletionStar) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(77, i);
    int comps = rng.uniform(1, 4);
    auto p = gen_single_del(rng, comps, 3);
    ASSERT_EQ(p.witness.size(), 1u);
    EXPECT_LE(largest_component(p.q, p.witness), 3);
  }
}
