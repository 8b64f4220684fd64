#pragma once

#include <cstdint>
#include <vector>

#include "hrcap/instance.hpp"
#include "hrcap/solution.hpp"

namespace hrcap {

// Every value the optimal max per-program spend can take: 0 and c(p)·k for
// c(p) > 0, 1 ≤ k ≤ |N(p)| − q(p). Sorted and deduplicated, at most m+1 long.
struct CandidateGrid {
  std::vector<std::int64_t> values;
};

CandidateGrid candidate_costs(const Instance& inst);

// Quotas of the budget-t instance: q(p) + ⌊t/c(p)⌋, capped at |N(p)|.
// Zero-cost programs always get |N(p)| seats.
std::vector<std::int64_t> budget_quotas(const Instance& inst, std::int64_t t);

// Whether agent-proposing deferred acceptance under budget_quotas(t) matches
// every agent. Throws UnmatchableAgent for empty agent lists.
bool feasible_at(const Instance& inst, std::int64_t t);

// Smallest grid value t with feasible_at(t), found by binary search.
std::int64_t minmax_threshold(const Instance& inst);

// Exact MinMax: the deferred-acceptance matching at the optimal budget with
// its augmentation trimmed to actual occupancy.
AugmentedSolution solve_minmax(const Instance& inst);

}  // namespace hrcap
