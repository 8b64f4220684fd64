#pragma once

#include <cstdint>
#include <vector>

#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap {

// A matching together with the quota augmentation q̃ that admits it.
struct AugmentedSolution {
  Matching matching;
  std::vector<std::int64_t> aug;  // q̃(p), one entry per program
  std::int64_t total_cost = 0;    // Σ q̃(p)·c(p)
  std::int64_t max_cost = 0;      // max_p q̃(p)·c(p)
  bool a_perfect = false;
  bool stable = false;
};

struct CostSummary {
  std::vector<std::int64_t> aug;
  std::int64_t total_cost = 0;
  std::int64_t max_cost = 0;
};

// Minimal augmentation for m: q̃(p) = max(0, |M(p)| − q(p)).
CostSummary solution_cost(const Instance& inst, const Matching& m);

// Costs of an arbitrary augmentation vector.
CostSummary augmentation_cost(const Instance& inst,
                              const std::vector<std::int64_t>& aug);

// Trims the augmentation to m's occupancy and recomputes every derived field
// (costs, A-perfectness, stability) from scratch.
AugmentedSolution make_solution(const Instance& inst, Matching m);

}  // namespace hrcap
