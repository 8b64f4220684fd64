#include "hrcap/solution.hpp"

#include <algorithm>

#include "hrcap/stability.hpp"

namespace hrcap {

CostSummary augmentation_cost(const Instance& inst,
                              const std::vector<std::int64_t>& aug) {
  CostSummary out;
  out.aug = aug;
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    const std::int64_t spend = aug[p] * inst.cost(p);
    out.total_cost += spend;
    out.max_cost = std::max(out.max_cost, spend);
  }
  return out;
}

CostSummary solution_cost(const Instance& inst, const Matching& m) {
  std::vector<std::int64_t> aug(inst.num_programs(), 0);
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    aug[p] = std::max<std::int64_t>(0, m.roster_size(p) - inst.quota(p));
  }
  return augmentation_cost(inst, aug);
}

AugmentedSolution make_solution(const Instance& inst, Matching m) {
  AugmentedSolution s;
  auto costs = solution_cost(inst, m);
  s.aug = std::move(costs.aug);
  s.total_cost = costs.total_cost;
  s.max_cost = costs.max_cost;
  s.a_perfect = m.is_a_perfect();
  s.stable = is_stable_augmented(inst, m).stable;
  s.matching = std::move(m);
  return s;
}

}  // namespace hrcap
