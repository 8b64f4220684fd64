#include "hrcap/minsum_approx.hpp"

#include <algorithm>

#include "hrcap/errors.hpp"
#include "hrcap/minmax.hpp"

namespace hrcap {

AugmentedSolution solve_p_approx(const Instance& inst) {
  return solve_minmax(inst);
}

const char* to_string(ProgramClass c) {
  switch (c) {
    case ProgramClass::kP1:
      return "P1";
    case ProgramClass::kP2:
      return "P2";
    case ProgramClass::kP3:
      return "P3";
    case ProgramClass::kP4:
      return "P4";
  }
  return "?";
}

ProgramClassification classify_programs(const Instance& inst,
                                        const Matching& initial) {
  const int np = inst.num_programs();
  ProgramClassification out;
  out.empty.assign(np, false);
  out.least_cost.assign(np, false);
  out.classes.assign(np, ProgramClass::kP1);
  for (ProgramId p = 0; p < np; ++p) out.empty[p] = initial.roster_size(p) == 0;
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    if (!initial.is_matched(a) && !inst.agent_prefs(a).empty()) {
      out.least_cost[least_cost_program(inst, a)] = true;
    }
  }
  for (ProgramId p = 0; p < np; ++p) {
    if (out.empty[p]) {
      out.classes[p] = out.least_cost[p] ? ProgramClass::kP3 : ProgramClass::kP4;
    } else {
      out.classes[p] = out.least_cost[p] ? ProgramClass::kP2 : ProgramClass::kP1;
    }
  }
  return out;
}

AugmentedSolution solve_lp_approx(const Instance& inst, LpApproxTrace* trace) {
  require_nonempty_lists(inst);
  const auto& quotas = inst.quotas();
  Matching m = gale_shapley(inst, quotas, ProposingSide::kAgents);
  if (trace != nullptr) {
    trace->initial = m;
    trace->initial_a_perfect = m.is_a_perfect();
  }
  if (m.is_a_perfect()) {
    auto sol = make_solution(inst, m);
    if (trace != nullptr) trace->cost_before_repair = sol.total_cost;
    return sol;
  }

  const auto classes = classify_programs(inst, m);
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    if (!m.is_matched(a)) m.assign(a, least_cost_program(inst, a));
  }

  int step = 0;
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    auto prefs = inst.program_prefs(p);
    for (auto it = prefs.rbegin(); it != prefs.rend(); ++it) {
      const AgentId a = *it;
      const ProgramId from = m.program_of(a);
      if (!inst.agent_prefers(a, p, from)) continue;
      const int rank = inst.program_rank(p, a);
      const auto roster = m.roster(p);
      const bool envies = std::any_of(roster.begin(), roster.end(),
                                      [&](AgentId other) {
                                        return inst.program_rank(p, other) > rank;
                                      });
      if (!envies) continue;
      m.assign(a, p);
      if (trace != nullptr) {
        trace->promotions.push_back({++step, a, from, p, classes.classes[p]});
      }
    }
  }

  if (trace != nullptr) {
    trace->classification = classes;
    trace->cost_before_repair = solution_cost(inst, m).total_cost;
    std::int64_t bound = 0;
    for (ProgramId p = 0; p < inst.num_programs(); ++p) {
      if (classes.classes[p] == ProgramClass::kP2 ||
          classes.classes[p] == ProgramClass::kP3) {
        bound += static_cast<std::int64_t>(inst.program_prefs(p).size()) *
                 inst.cost(p);
      }
    }
    trace->promotion_cost_bound = bound;
  }

  m = envy_free_to_stable(inst, quotas, m,
                          trace != nullptr ? &trace->repairs : nullptr);
  return make_solution(inst, std::move(m));
}

}  // namespace hrcap
