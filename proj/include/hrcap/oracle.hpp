#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hrcap/instance.hpp"
#include "hrcap/solution.hpp"

namespace hrcap {

struct OracleLimits {
  // Upper bound on Π_a |N(a)|, the number of A-perfect assignments.
  std::int64_t max_search_space = 10'000'000;
  // Worker threads; the result does not depend on this.
  int workers = 1;
  // Prune partial assignments on envy and on the incumbent objective. The
  // unpruned search filters complete assignments with is_stable_augmented.
  bool prune = true;
};

// Π_a |N(a)|, saturating at INT64_MAX.
std::int64_t search_space(const Instance& inst);

// Exhaustive MinSum optimum over A-perfect assignments that are stable with
// trimmed augmentation. Ties go to the lexicographically smallest assignment
// (agents in input order, each digit the agent's preference rank).
// Throws InstanceTooLarge or UnmatchableAgent.
AugmentedSolution brute_force_minsum(const Instance& inst,
                                     const OracleLimits& limits = {});

// Same search with objective max_p q̃(p)·c(p).
AugmentedSolution brute_force_minmax(const Instance& inst,
                                     const OracleLimits& limits = {});

// Calls visit for every A-perfect assignment in lexicographic order, without
// any filtering. Throws InstanceTooLarge.
void for_each_a_perfect_assignment(
    const Instance& inst, const OracleLimits& limits,
    const std::function<void(const std::vector<ProgramId>&)>& visit);

}  // namespace hrcap
