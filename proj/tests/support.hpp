#pragma once

// Fixtures and small independent checkers shared by the test binaries. The
// checkers are written straight from the definitions and deliberately share
// no code with the library beyond Instance accessors.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hrcap/generators.hpp"
#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap::testing {

inline const char* kAppendix =
    "agent a1 : p1 p2 p0\n"
    "agent a2 : p2 p3 p0\n"
    "agent a3 : p1 p2 p3\n"
    "program p0 q=0 c=0 : a1 a2\n"
    "program p1 q=0 c=1 : a1 a3\n"
    "program p2 q=0 c=1 : a1 a2 a3\n"
    "program p3 q=0 c=1 : a2 a3\n";

inline const char* kChallenges =
    "agent a1 : p1 p0\n"
    "agent a2 : p1 p0\n"
    "agent a3 : p1 p0\n"
    "agent a4 : p1 p2 p0\n"
    "agent a5 : p2 p3\n"
    "program p0 q=0 c=0 : a1 a2 a3 a4\n"
    "program p1 q=0 c=1 : a1 a2 a3 a4\n"
    "program p2 q=0 c=6 : a4 a5\n"
    "program p3 q=0 c=11 : a5\n";

inline const char* kF3 =
    "agent a1 : p1 p2\n"
    "agent a2 : p1\n"
    "program p1 q=1 c=3 : a1 a2\n"
    "program p2 q=0 c=1 : a1\n";

inline Instance appendix() { return parse_instance(kAppendix); }
inline Instance challenges() { return parse_instance(kChallenges); }
inline Instance f3() { return parse_instance(kF3); }

// Builds a matching from (agent name, program name) pairs.
inline Matching matching_of(const Instance& inst,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<ProgramId> assignment(inst.num_agents(), kNone);
  for (const auto& [a, p] : pairs) {
    assignment[*inst.find_agent(a)] = *inst.find_program(p);
  }
  return Matching::from_assignment(inst, assignment);
}

inline int rank_in(std::span<const std::int32_t> list, std::int32_t x) {
  auto it = std::find(list.begin(), list.end(), x);
  return it == list.end() ? 1 << 30 : static_cast<int>(it - list.begin());
}

// p ≻_a q with ⊥ last, from the raw list.
inline bool naive_agent_prefers(const Instance& inst, AgentId a, ProgramId p, ProgramId q) {
  if (p == kNone) return false;
  if (q == kNone) return true;
  return rank_in(inst.agent_prefs(a), p) < rank_in(inst.agent_prefs(a), q);
}

inline std::vector<int> occupancy(const Instance& inst,
                                  const std::vector<ProgramId>& assignment) {
  std::vector<int> count(inst.num_programs(), 0);
  for (ProgramId p : assignment) {
    if (p != kNone) ++count[p];
  }
  return count;
}

// (agent, program) pairs blocking `assignment` under `capacity`.
inline std::set<std::pair<AgentId, ProgramId>> naive_blocking(
    const Instance& inst, const std::vector<std::int64_t>& capacity,
    const std::vector<ProgramId>& assignment) {
  std::set<std::pair<AgentId, ProgramId>> out;
  const auto count = occupancy(inst, assignment);
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    for (ProgramId p : inst.agent_prefs(a)) {
      if (!naive_agent_prefers(inst, a, p, assignment[a])) continue;
      bool blocks = count[p] < capacity[p];
      for (AgentId b = 0; b < inst.num_agents() && !blocks; ++b) {
        if (assignment[b] == p &&
            rank_in(inst.program_prefs(p), a) < rank_in(inst.program_prefs(p), b)) {
          blocks = true;
        }
      }
      if (blocks) out.emplace(a, p);
    }
  }
  return out;
}

inline bool naive_envy_free(const Instance& inst, const std::vector<ProgramId>& assignment) {
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    for (AgentId b = 0; b < inst.num_agents(); ++b) {
      const ProgramId p = assignment[b];
      if (p == kNone || a == b) continue;
      if (rank_in(inst.program_prefs(p), a) == 1 << 30) continue;
      if (naive_agent_prefers(inst, a, p, assignment[a]) &&
          rank_in(inst.program_prefs(p), a) < rank_in(inst.program_prefs(p), b)) {
        return false;
      }
    }
  }
  return true;
}

// Stable with every program augmented to exactly its occupancy.
inline bool naive_stable_augmented(const Instance& inst,
                                   const std::vector<ProgramId>& assignment) {
  const auto count = occupancy(inst, assignment);
  std::vector<std::int64_t> capacity(inst.num_programs());
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    capacity[p] = std::max<std::int64_t>(inst.quota(p), count[p]);
  }
  return naive_blocking(inst, capacity, assignment).empty();
}

struct NaiveCost {
  std::int64_t total = 0;
  std::int64_t max = 0;
};

inline NaiveCost naive_cost(const Instance& inst, const std::vector<ProgramId>& assignment) {
  const auto count = occupancy(inst, assignment);
  NaiveCost c;
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    const std::int64_t extra = std::max<std::int64_t>(0, count[p] - inst.quota(p));
    c.total += extra * inst.cost(p);
    c.max = std::max(c.max, extra * inst.cost(p));
  }
  return c;
}

// Plain odometer over all A-perfect assignments with no pruning at all; the
// reference optimum for small instances.
struct NaiveOptimum {
  bool found = false;
  std::int64_t minsum = 0;
  std::int64_t minmax = 0;
};

inline NaiveOptimum naive_optimum(const Instance& inst) {
  NaiveOptimum out;
  const int n = inst.num_agents();
  std::vector<int> digit(n, 0);
  std::vector<ProgramId> assignment(n);
  for (;;) {
    for (AgentId a = 0; a < n; ++a) assignment[a] = inst.agent_prefs(a)[digit[a]];
    if (naive_stable_augmented(inst, assignment)) {
      const auto c = naive_cost(inst, assignment);
      if (!out.found) {
        out = {true, c.total, c.max};
      } else {
        out.minsum = std::min(out.minsum, c.total);
        out.minmax = std::min(out.minmax, c.max);
      }
    }
    int a = n - 1;
    while (a >= 0 && ++digit[a] == static_cast<int>(inst.agent_prefs(a).size())) {
      digit[a] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return out;
}

// Small random instance in the desk-scale range used across the suites.
inline Instance small_random(std::uint64_t seed, int max_agents = 6, int max_programs = 5,
                             int max_list = 4, std::int64_t quota_hi = 2,
                             std::vector<std::int64_t> costs = {0, 1, 2, 5},
                             bool master = false) {
  RandomParams rp;
  rp.n_agents = 1 + static_cast<int>(seed % max_agents);
  rp.n_programs = 1 + static_cast<int>((seed / 7) % max_programs);
  rp.max_list = max_list;
  rp.quota_lo = 0;
  rp.quota_hi = quota_hi;
  rp.cost_set = std::move(costs);
  rp.master_list = master;
  rp.seed = seed;
  return random_instance(rp);
}

}  // namespace hrcap::testing
