#pragma once

#include <cstdint>
#include <vector>

#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"
#include "hrcap/solution.hpp"
#include "hrcap/stability.hpp"

namespace hrcap {

// |P|-approximation for MinSum: the exact MinMax solution, judged by its
// total cost.
AugmentedSolution solve_p_approx(const Instance& inst);

enum class ProgramClass { kP1, kP2, kP3, kP4 };

const char* to_string(ProgramClass c);

// Partition of the programs relative to an initial stable matching M_I:
// P_empty holds programs with no agent in M_I, P_LC the least-cost programs
// of agents M_I leaves unmatched.
//   P1 = ¬empty ∧ ¬LC,  P2 = ¬empty ∧ LC,  P3 = empty ∧ LC,  P4 = empty ∧ ¬LC
struct ProgramClassification {
  std::vector<bool> empty;
  std::vector<bool> least_cost;
  std::vector<ProgramClass> classes;
};

ProgramClassification classify_programs(const Instance& inst,
                                        const Matching& initial);

struct LpPromotion {
  int step = 0;
  AgentId agent = kNone;
  ProgramId from = kNone;
  ProgramId to = kNone;
  ProgramClass target_class = ProgramClass::kP1;
};

// Instrumentation of one run of the ℓ_p algorithm.
struct LpApproxTrace {
  bool initial_a_perfect = false;
  Matching initial;  // M_I
  ProgramClassification classification;
  std::vector<LpPromotion> promotions;
  std::int64_t cost_before_repair = 0;
  // Σ_{p ∈ P2 ∪ P3} len(p)·c(p)
  std::int64_t promotion_cost_bound = 0;
  // Moves made by the final stabilization pass; empty for zero quotas.
  std::vector<Promotion> repairs;
};

// ℓ_p-approximation for MinSum:
//   1. M_I = agent-proposing deferred acceptance under the original quotas;
//      returned as is when A-perfect.
//   2. Every agent M_I leaves unmatched takes its least-cost program.
//   3. For each program in input order, its agents are visited from least to
//      most preferred and promoted there when they envy someone seated there.
//   4. Remaining under-subscription blocking pairs are resolved with
//      envy_free_to_stable under the original quotas. This only moves agents
//      into unpaid seats, so it never raises the cost.
AugmentedSolution solve_lp_approx(const Instance& inst,
                                  LpApproxTrace* trace = nullptr);

}  // namespace hrcap
