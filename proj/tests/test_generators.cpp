#include <gtest/gtest.h>

#include "hrcap/errors.hpp"
#include "hrcap/oracle.hpp"
#include "hrcap/stability.hpp"
#include "support.hpp"

using namespace hrcap;
using namespace hrcap::testing;

namespace {

RandomParams params(int na, int np, int len, std::vector<std::int64_t> costs, bool master,
                    std::uint64_t seed) {
  RandomParams p;
  p.n_agents = na;
  p.n_programs = np;
  p.max_list = len;
  p.cost_set = std::move(costs);
  p.master_list = master;
  p.seed = seed;
  return p;
}

// Every pair of items appearing in two lists is ordered the same way in both.
template <typename Lists>
bool consistent_order(const Lists& lists) {
  std::map<std::pair<int, int>, bool> seen;
  for (const auto& list : lists) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const int x = list[i], y = list[j];
        if (seen.count({y, x})) return false;
        seen[{x, y}] = true;
      }
    }
  }
  return true;
}

bool master_list_holds(const Instance& inst) {
  std::vector<std::vector<int>> agent_lists, program_lists;
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    auto l = inst.agent_prefs(a);
    agent_lists.emplace_back(l.begin(), l.end());
  }
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    auto l = inst.program_prefs(p);
    program_lists.emplace_back(l.begin(), l.end());
  }
  return consistent_order(agent_lists) && consistent_order(program_lists);
}

int brute_min_cover(int n, const std::vector<std::vector<int>>& sets) {
  const int m = static_cast<int>(sets.size());
  int best = m + 1;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<bool> covered(n, false);
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1) {
        for (int e : sets[j]) covered[e] = true;
      }
    }
    if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
      best = std::min(best, __builtin_popcount(mask));
    }
  }
  return best;
}

}  // namespace

TEST(Random, Deterministic) {
  const auto p = params(3, 3, 3, {0, 1}, false, 1);
  EXPECT_EQ(serialize_instance(random_instance(p)), serialize_instance(random_instance(p)));
  auto q = p;
  q.seed = 2;
  EXPECT_NE(serialize_instance(random_instance(p)), serialize_instance(random_instance(q)));
}

TEST(Random, GoldenBytes) {
  // guards the sampling sequence against accidental changes
  auto p = params(5, 3, 2, {0, 1, 2}, false, 3);
  p.quota_hi = 2;
  EXPECT_EQ(serialize_instance(random_instance(p)),
            "agent a1 : p2 p3\n"
            "agent a2 : p3 p2\n"
            "agent a3 : p1 p2\n"
            "agent a4 : p1 p2\n"
            "agent a5 : p1\n"
            "program p1 q=0 c=0 : a3 a5 a4\n"
            "program p2 q=1 c=2 : a1 a4 a3 a2\n"
            "program p3 q=0 c=2 : a2 a1\n");
}

TEST(Random, SingleEdge) {
  const auto inst = random_instance(params(1, 1, 1, {5}, false, 7));
  EXPECT_EQ(inst.num_edges(), 1);
  EXPECT_EQ(inst.cost(0), 5);
  EXPECT_EQ(inst.quota(0), 0);
}

TEST(Random, MasterLists) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_instance(params(7, 5, 4, {0, 1}, true, seed));
    ASSERT_TRUE(master_list_holds(inst)) << seed;
  }
}

TEST(Random, ListsAreNonEmptyAndBounded) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto p = params(6, 4, 3, {0, 2, 9}, false, seed);
    p.quota_lo = 1;
    p.quota_hi = 3;
    const auto inst = random_instance(p);
    for (AgentId a = 0; a < inst.num_agents(); ++a) {
      ASSERT_GE(inst.agent_prefs(a).size(), 1u);
      ASSERT_LE(inst.agent_prefs(a).size(), 3u);
    }
    for (ProgramId q = 0; q < inst.num_programs(); ++q) {
      ASSERT_GE(inst.quota(q), 1);
      ASSERT_LE(inst.quota(q), 3);
      ASSERT_TRUE(inst.cost(q) == 0 || inst.cost(q) == 2 || inst.cost(q) == 9);
    }
  }
}

TEST(Random, InvalidParams) {
  EXPECT_THROW(random_instance(params(0, 1, 1, {0}, false, 1)), InvalidParams);
  EXPECT_THROW(random_instance(params(1, 1, 1, {}, false, 1)), InvalidParams);
  auto p = params(1, 1, 1, {0}, false, 1);
  p.quota_lo = 2;
  p.quota_hi = 1;
  EXPECT_THROW(random_instance(p), InvalidParams);
}

TEST(SetCover, SingleElement) {
  const auto art = from_set_cover({1, {{0}}, 1});
  EXPECT_EQ(art.instance.num_agents(), 2);
  EXPECT_EQ(art.instance.num_programs(), 2);
  EXPECT_EQ(art.budget, 2);
  EXPECT_EQ(brute_force_minsum(art.instance).total_cost, 2);
}

TEST(SetCover, TwoDisjointSets) {
  const auto art = from_set_cover({2, {{0}, {1}}, 2});
  EXPECT_EQ(art.instance.num_agents(), 6);
  EXPECT_EQ(art.instance.num_programs(), 6);
  EXPECT_EQ(art.budget, 6);
  const auto& inst = art.instance;
  EXPECT_EQ(serialize_instance(inst),
            "agent a1 : c1\n"
            "agent a2 : c2\n"
            "agent u1_1 : c1 w1_1\n"
            "agent u1_2 : c1 w1_2\n"
            "agent u2_1 : c2 w2_1\n"
            "agent u2_2 : c2 w2_2\n"
            "program c1 q=0 c=1 : u1_1 u1_2 a1\n"
            "program c2 q=0 c=1 : u2_1 u2_2 a2\n"
            "program w1_1 q=0 c=0 : u1_1\n"
            "program w1_2 q=0 c=0 : u1_2\n"
            "program w2_1 q=0 c=0 : u2_1\n"
            "program w2_2 q=0 c=0 : u2_2\n");
}

TEST(SetCover, Guards) {
  EXPECT_THROW(from_set_cover({1, {{0}}, 0}), InvalidParams);
  EXPECT_THROW(from_set_cover({2, {{0}}, 1}), UncoverableElement);
}

TEST(SetCover, MasterListAndWitness) {
  const auto art = from_set_cover({4, {{0, 1}, {1, 2, 3}, {0, 3}}, 2});
  EXPECT_TRUE(master_list_holds(art.instance));
  const auto witness = cover_witness(art, {0, 1});
  EXPECT_TRUE(witness.is_a_perfect());
  EXPECT_TRUE(is_envy_free(art.instance, witness));
  EXPECT_TRUE(is_stable_augmented(art.instance, witness).stable);
  EXPECT_LE(naive_cost(art.instance, witness.assignment()).total, art.budget);
  EXPECT_THROW(cover_witness(art, {0}), InvalidParams);
}

TEST(SetCover, CoverExistsIffOracleWithinBudget) {
  const std::vector<std::vector<std::vector<int>>> families{
      {{0}, {1}},
      {{0, 1}, {1}, {0}},
      {{0, 1, 2}, {0}, {1}, {2}},
      {{0, 1}, {1, 2}},
  };
  for (const auto& sets : families) {
    int n = 0;
    for (const auto& s : sets) {
      for (int e : s) n = std::max(n, e + 1);
    }
    const int kstar = brute_min_cover(n, sets);
    const auto opt = brute_force_minsum(from_set_cover({n, sets, 1}).instance).total_cost;
    EXPECT_EQ(opt, static_cast<std::int64_t>(kstar + 1) * n);
    for (int k = 1; k <= static_cast<int>(sets.size()); ++k) {
      const auto art = from_set_cover({n, sets, k});
      EXPECT_EQ(kstar <= k, opt <= art.budget) << k;
    }
  }
}

TEST(VertexCover, Triangle) {
  const Graph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  const auto art = from_vertex_cover(k3, 2, {1, 2});
  EXPECT_EQ(art.meta.n_elements, 3);
  EXPECT_EQ(art.meta.dummies, 6);
  EXPECT_EQ(art.budget, 15);
  for (AgentId a = 0; a < art.meta.n_elements; ++a) {
    EXPECT_EQ(art.instance.agent_prefs(a).size(), 2u);
  }
  EXPECT_EQ(metrics(art.instance).max_agent_list, 2);
  EXPECT_TRUE(master_list_holds(art.instance));
}

TEST(VertexCover, SingleEdge) {
  const Graph g{2, {{0, 1}}};
  const auto art = from_vertex_cover(g, 1, {1, 2});
  EXPECT_EQ(art.meta.dummies, 2);
  EXPECT_EQ(art.budget, 3);
  const auto witness = cover_witness(art, {0});
  EXPECT_LE(naive_cost(art.instance, witness.assignment()).total, 3);
  EXPECT_LE(brute_force_minsum(art.instance).total_cost, 3);
}

TEST(VertexCover, EpsilonRange) {
  const Graph g{2, {{0, 1}}};
  EXPECT_THROW(from_vertex_cover(g, 1, parse_rational("0.6")), InvalidParams);
  EXPECT_THROW(from_vertex_cover(g, 1, parse_rational("0")), InvalidParams);
  EXPECT_NO_THROW(from_vertex_cover(g, 1, parse_rational("0.5")));
  // 1/3: f = ⌈2·1·(2/3)/(1/3)⌉ = 4 exactly, no rounding drift
  EXPECT_EQ(from_vertex_cover(g, 1, parse_rational("1/3")).meta.dummies, 4);
  EXPECT_EQ(from_vertex_cover(g, 1, parse_rational("0.3")).meta.dummies, 5);
  EXPECT_THROW(from_vertex_cover({2, {{0, 1}, {1, 0}}}, 1, {1, 2}), InvalidParams);
  EXPECT_THROW(from_vertex_cover({2, {{0, 0}}}, 1, {1, 2}), InvalidParams);
}

TEST(Rational, Parsing) {
  auto r = parse_rational("0.25");
  EXPECT_EQ(r.num, 1);
  EXPECT_EQ(r.den, 4);
  r = parse_rational("2/4");
  EXPECT_EQ(r.num, 1);
  EXPECT_EQ(r.den, 2);
  EXPECT_THROW(parse_rational("x"), InvalidParams);
  EXPECT_THROW(parse_rational("1/0"), InvalidParams);
}

TEST(Files, SetCoverAndGraph) {
  const auto sc = parse_set_cover("3 2\n1 2\n2 3\n# comment\n3\n");
  EXPECT_EQ(sc.n, 3);
  EXPECT_EQ(sc.k, 2);
  EXPECT_EQ(sc.sets, (std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2}}));
  EXPECT_THROW(parse_set_cover("2 1\n1 5\n"), ParseError);
  const auto g = parse_graph("3\n1 2\n2 3\n");
  EXPECT_EQ(g.n_vertices, 3);
  EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_THROW(parse_graph("2\n1\n"), ParseError);
}
