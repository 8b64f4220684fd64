#include "hrcap/minmax.hpp"

#include <algorithm>

#include "hrcap/errors.hpp"
#include "hrcap/stability.hpp"

namespace hrcap {

namespace {

std::int64_t headroom(const Instance& inst, ProgramId p) {
  return std::max<std::int64_t>(
      0, static_cast<std::int64_t>(inst.program_prefs(p).size()) -
             inst.quota(p));
}

}  // namespace

CandidateGrid candidate_costs(const Instance& inst) {
  CandidateGrid grid;
  grid.values.push_back(0);
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    const std::int64_t c = inst.cost(p);
    if (c == 0) continue;
    for (std::int64_t k = 1; k <= headroom(inst, p); ++k) {
      grid.values.push_back(c * k);
    }
  }
  std::sort(grid.values.begin(), grid.values.end());
  grid.values.erase(std::unique(grid.values.begin(), grid.values.end()),
                    grid.values.end());
  return grid;
}

std::vector<std::int64_t> budget_quotas(const Instance& inst, std::int64_t t) {
  if (t < 0) throw InvalidParams("budget must be non-negative");
  std::vector<std::int64_t> quotas(inst.num_programs());
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    const std::int64_t c = inst.cost(p);
    const std::int64_t room = headroom(inst, p);
    quotas[p] = inst.quota(p) + (c == 0 ? room : std::min(t / c, room));
  }
  return quotas;
}

bool feasible_at(const Instance& inst, std::int64_t t) {
  require_nonempty_lists(inst);
  const auto quotas = budget_quotas(inst, t);
  return gale_shapley(inst, quotas, ProposingSide::kAgents).is_a_perfect();
}

std::int64_t minmax_threshold(const Instance& inst) {
  require_nonempty_lists(inst);
  const auto grid = candidate_costs(inst).values;
  // The last grid value gives every program |N(p)| seats, so it is feasible
  // whenever no agent list is empty.
  std::size_t lo = 0;
  std::size_t hi = grid.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible_at(inst, grid[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return grid[lo];
}

AugmentedSolution solve_minmax(const Instance& inst) {
  const std::int64_t t = minmax_threshold(inst);
  const auto quotas = budget_quotas(inst, t);
  return make_solution(inst,
                       gale_shapley(inst, quotas, ProposingSide::kAgents));
}

}  // namespace hrcap
