#include <gtest/gtest.h>

#include <random>

#include "hrcap/errors.hpp"
#include "hrcap/stability.hpp"
#include "support.hpp"

using namespace hrcap;
using namespace hrcap::testing;

namespace {

std::set<std::pair<AgentId, ProgramId>> as_set(const BlockingReport& r) {
  std::set<std::pair<AgentId, ProgramId>> out;
  for (const auto& bp : r.pairs) out.emplace(bp.agent, bp.program);
  return out;
}

// Random envy-free matching: agents in random order take a random acceptable
// program when doing so creates no envy in either direction.
Matching random_envy_free(const Instance& inst, std::mt19937_64& rng,
                          const std::vector<std::int64_t>& capacity) {
  Matching m(inst);
  std::vector<AgentId> order(inst.num_agents());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (AgentId a : order) {
    if (rng() % 4 == 0) continue;
    auto prefs = inst.agent_prefs(a);
    const ProgramId p = prefs[rng() % prefs.size()];
    if (m.roster_size(p) >= capacity[p]) continue;
    auto trial = m.assignment();
    trial[a] = p;
    if (naive_envy_free(inst, trial)) m.assign(a, p);
  }
  return m;
}

}  // namespace

TEST(GaleShapley, SingleEdge) {
  const auto inst = parse_instance("agent a1 : p1\nprogram p1 q=1 c=0 : a1");
  const auto m = gale_shapley(inst, inst.quotas());
  EXPECT_EQ(m.program_of(0), 0);
}

TEST(GaleShapley, F3OriginalQuotas) {
  const auto inst = f3();
  const auto m = gale_shapley(inst, inst.quotas());
  EXPECT_EQ(m, matching_of(inst, {{"a1", "p1"}}));
  EXPECT_TRUE(blocking_pairs(inst, inst.quotas(), m).empty());
}

TEST(GaleShapley, ZeroQuotasAdmitNobody) {
  for (const auto& inst : {appendix(), challenges()}) {
    EXPECT_EQ(gale_shapley(inst, inst.quotas()).num_matched(), 0);
    EXPECT_EQ(gale_shapley(inst, inst.quotas(), ProposingSide::kPrograms).num_matched(), 0);
  }
}

TEST(BlockingPairs, F3Examples) {
  const auto inst = f3();
  const auto p1 = *inst.find_program("p1");
  const auto a1 = *inst.find_agent("a1");
  const auto a2 = *inst.find_agent("a2");

  const auto swapped = matching_of(inst, {{"a1", "p2"}, {"a2", "p1"}});
  std::vector<std::int64_t> roomy{1, 1};
  const auto report = blocking_pairs(inst, roomy, swapped);
  ASSERT_EQ(report.pairs.size(), 1u);
  EXPECT_EQ(report.pairs[0], (BlockingPair{a1, p1, BlockingKind::kEnvy}));
  EXPECT_EQ(report.envy_pairs, (std::vector<EnvyPair>{{a1, a2, p1}}));

  const auto empty = blocking_pairs(inst, inst.quotas(), Matching(inst));
  EXPECT_NE(std::find(empty.pairs.begin(), empty.pairs.end(),
                      BlockingPair{a1, p1, BlockingKind::kUnderSubscription}),
            empty.pairs.end());
  EXPECT_NE(std::find(empty.pairs.begin(), empty.pairs.end(),
                      BlockingPair{a2, p1, BlockingKind::kUnderSubscription}),
            empty.pairs.end());
}

TEST(BlockingPairs, RejectsInvalidMatchings) {
  const auto inst = f3();
  Matching overfull(inst);
  overfull.assign(0, 0);
  overfull.assign(1, 0);
  EXPECT_THROW(blocking_pairs(inst, inst.quotas(), overfull), InvalidMatching);
  Matching off_edge(inst);
  off_edge.assign(1, 1);  // a2 never listed p2
  const std::vector<std::int64_t> roomy{5, 5};
  EXPECT_THROW(blocking_pairs(inst, roomy, off_edge), InvalidMatching);
  EXPECT_THROW(Matching::from_assignment(inst, {kNone, 1}), InvalidMatching);
}

TEST(StableAugmented, Fixtures) {
  const auto ch = challenges();
  EXPECT_TRUE(is_stable_augmented(ch, matching_of(ch, {{"a1", "p0"}, {"a2", "p0"}, {"a3", "p0"},
                                                       {"a4", "p2"}, {"a5", "p2"}}))
                  .stable);
  const auto ap = appendix();
  EXPECT_TRUE(
      is_stable_augmented(ap, matching_of(ap, {{"a1", "p1"}, {"a2", "p0"}, {"a3", "p1"}})).stable);
  const auto f = f3();
  EXPECT_FALSE(is_stable_augmented(f, matching_of(f, {{"a1", "p2"}, {"a2", "p1"}})).stable);
}

TEST(EnvyFreeToStable, StableInputUnchanged) {
  const auto inst = f3();
  const auto m = gale_shapley(inst, inst.quotas());
  std::vector<Promotion> log;
  EXPECT_EQ(envy_free_to_stable(inst, inst.quotas(), m, &log), m);
  EXPECT_TRUE(log.empty());
}

TEST(EnvyFreeToStable, F3FromEmpty) {
  const auto inst = f3();
  const std::vector<std::int64_t> quotas{1, 1};
  const auto out = envy_free_to_stable(inst, quotas, Matching(inst));
  EXPECT_EQ(out, matching_of(inst, {{"a1", "p1"}}));
  EXPECT_TRUE(blocking_pairs(inst, quotas, out).empty());
}

TEST(EnvyFreeToStable, RejectsEnvy) {
  const auto inst = f3();
  const std::vector<std::int64_t> quotas{1, 1};
  EXPECT_THROW(envy_free_to_stable(inst, quotas, matching_of(inst, {{"a1", "p2"}, {"a2", "p1"}})),
               NotEnvyFree);
}

TEST(EnvyFreeToStable, ReducedSetCoverWitnessUnchanged) {
  const auto art = from_set_cover({3, {{0, 1}, {1, 2}, {2}}, 2});
  const auto witness = cover_witness(art, {0, 1});
  const auto& inst = art.instance;
  ASSERT_TRUE(is_envy_free(inst, witness));
  EXPECT_EQ(envy_free_to_stable(inst, inst.quotas(), witness), witness);
}

TEST(Properties, GaleShapleyIsStableBothSides) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = small_random(seed);
    for (auto side : {ProposingSide::kAgents, ProposingSide::kPrograms}) {
      const auto m = gale_shapley(inst, inst.quotas(), side);
      ASSERT_TRUE(blocking_pairs(inst, inst.quotas(), m).empty()) << seed;
      ASSERT_TRUE(naive_blocking(inst, inst.quotas(), m.assignment()).empty()) << seed;
    }
  }
}

TEST(Properties, RuralHospitals) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = small_random(seed);
    const auto ma = gale_shapley(inst, inst.quotas(), ProposingSide::kAgents);
    const auto mp = gale_shapley(inst, inst.quotas(), ProposingSide::kPrograms);
    for (AgentId a = 0; a < inst.num_agents(); ++a) {
      ASSERT_EQ(ma.is_matched(a), mp.is_matched(a)) << seed;
    }
    for (ProgramId p = 0; p < inst.num_programs(); ++p) {
      if (ma.roster_size(p) < inst.quota(p)) {
        ASSERT_EQ(ma.roster_size(p), mp.roster_size(p)) << seed;
      }
    }
  }
}

TEST(Properties, BlockingPairsMatchDefinition) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = small_random(seed);
    // arbitrary matching within capacity
    Matching m(inst);
    for (AgentId a = 0; a < inst.num_agents(); ++a) {
      auto prefs = inst.agent_prefs(a);
      const std::size_t pick = rng() % (prefs.size() + 1);
      if (pick < prefs.size()) m.assign(a, prefs[pick]);
    }
    std::vector<std::int64_t> capacity(inst.num_programs());
    for (ProgramId p = 0; p < inst.num_programs(); ++p) {
      capacity[p] = std::max<std::int64_t>(inst.quota(p), m.roster_size(p)) +
                    static_cast<std::int64_t>(rng() % 2);
    }
    const auto report = blocking_pairs(inst, capacity, m);
    ASSERT_EQ(as_set(report), naive_blocking(inst, capacity, m.assignment())) << seed;
    for (const auto& bp : report.pairs) {
      const bool free_seat = m.roster_size(bp.program) < capacity[bp.program];
      ASSERT_EQ(bp.kind == BlockingKind::kUnderSubscription, free_seat);
    }
    ASSERT_EQ(report.envy_pairs.empty(), naive_envy_free(inst, m.assignment())) << seed;
    ASSERT_EQ(is_stable_augmented(inst, m).stable,
              naive_stable_augmented(inst, m.assignment()))
        << seed;
  }
}

TEST(Properties, EnvyFreeMatchingsOnlyHaveUnderSubscriptionBlocks) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = small_random(seed);
    const auto m = random_envy_free(inst, rng, inst.quotas());
    ASSERT_TRUE(is_envy_free(inst, m));
    for (const auto& bp : blocking_pairs(inst, inst.quotas(), m).pairs) {
      ASSERT_EQ(bp.kind, BlockingKind::kUnderSubscription) << seed;
    }
  }
}

TEST(Properties, EnvyFreeToStable) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = small_random(seed);
    const auto m = random_envy_free(inst, rng, inst.quotas());
    std::vector<Promotion> log;
    const auto out = envy_free_to_stable(inst, inst.quotas(), m, &log);
    ASSERT_TRUE(blocking_pairs(inst, inst.quotas(), out).empty()) << seed;
    ASSERT_LE(static_cast<int>(log.size()), inst.num_edges()) << seed;
    for (AgentId a = 0; a < inst.num_agents(); ++a) {
      if (m.is_matched(a)) ASSERT_TRUE(out.is_matched(a)) << seed;
    }
    // replay: each step is a promotion and keeps envy-freeness
    Matching replay = m;
    for (const auto& step : log) {
      ASSERT_EQ(replay.program_of(step.agent), step.from);
      ASSERT_TRUE(naive_agent_prefers(inst, step.agent, step.to, step.from));
      replay.assign(step.agent, step.to);
      ASSERT_TRUE(naive_envy_free(inst, replay.assignment())) << seed;
    }
    ASSERT_EQ(replay, out);
  }
}
