#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"
#include "hrcap/solution.hpp"

namespace hrcap {

// A valid triplet (a', p, a): both (a',p) and (a,p) are edges and a' ≻_p a.
// It indexes the envy constraint "if a sits at p then a' sits at p or
// better" and its dual variable z.
struct Triplet {
  AgentId preferred;  // a'
  ProgramId program;  // p
  AgentId other;      // a
  friend auto operator<=>(const Triplet&, const Triplet&) = default;
};

// Dual solution of the MinSumC relaxation.
//   maximize Σ_a y_a  subject to, for every edge (a,p):
//   y_a + Σ_{p' ⪯_a p} Σ_{a' ≺_{p'} a} z(a,p',a') − Σ_{a' ≻_p a} z(a',p,a) ≤ c(p)
// z is sparse; absent triplets are zero.
struct DualState {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::vector<std::int64_t> y;
  std::map<Triplet, std::int64_t> z;

  // y_a = c1 for every agent, z = 0.
  static DualState initial(const Instance& inst, std::int64_t c1,
                           std::int64_t c2);

  std::int64_t z_at(const Triplet& t) const {
    auto it = z.find(t);
    return it == z.end() ? 0 : it->second;
  }
  std::int64_t objective() const;
};

bool is_valid_triplet(const Instance& inst, const Triplet& t);

// Left-hand side of the dual constraint of (a,p), summed directly from the
// constraint's definition. Throws NotAnEdge.
std::int64_t edge_lhs(const Instance& inst, const DualState& dual, AgentId a,
                      ProgramId p);
std::int64_t edge_slack(const Instance& inst, const DualState& dual, AgentId a,
                        ProgramId p);

// lhs of every edge, indexed by Instance::edge_id.
std::vector<std::int64_t> edge_lhs_table(const Instance& inst,
                                         const DualState& dual);

struct DualViolation {
  enum class Kind { kEdge, kNegativeZ, kInvalidTriplet };
  Kind kind = Kind::kEdge;
  AgentId agent = kNone;
  ProgramId program = kNone;
  std::int64_t value = 0;     // lhs for kEdge, z otherwise
  std::int64_t capacity = 0;  // c(p) for kEdge
};

struct DualCheck {
  bool feasible = true;
  std::int64_t objective = 0;
  std::vector<DualViolation> violations;
};

DualCheck check_dual_feasible(const Instance& inst, const DualState& dual);

// thresh[p]: the agent p ranks highest among those preferring p to their
// current seat, or kNone.
struct ThresholdIndex {
  std::vector<AgentId> thresh;
};

ThresholdIndex compute_thresholds(const Instance& inst, const Matching& m);

// Repeatedly matches a matchable edge (tight, not in m, and a = thresh(p)):
// agents are scanned in input order and the first one with a matchable edge
// moves along its most-preferred one; thresholds are recomputed after each
// move. m must be envy-free.
Matching free_promotions(const Instance& inst, const DualState& dual,
                         Matching m);

enum class TwoCostEventKind {
  kInit,             // greedy cost-c1 matching
  kDualBump,         // y_a raised by c2 − c1
  kMatchEdge,        // a matched along its most-preferred matchable edge
  kCandidateSet,     // P(a) computed
  kDualZ,            // z(a',p,a) raised
  kPromoteThreshold, // a' moved along its most-preferred matchable edge
  kFreePromotion,    // move made by the free-promotions routine
  kDone,
};

const char* to_string(TwoCostEventKind kind);

using EdgeList = std::vector<std::pair<AgentId, ProgramId>>;

// One state transition of the two-cost solver. "Tight edges" of an agent are
// the tight edges to programs it strictly prefers to its current seat.
struct TwoCostEvent {
  TwoCostEventKind kind = TwoCostEventKind::kInit;
  AgentId agent = kNone;    // the agent whose seat or dual changes
  AgentId other = kNone;    // kDualZ: the unmatched agent a
  ProgramId program = kNone;
  std::int64_t value = 0;   // new y or z
  std::vector<ProgramId> programs;  // kCandidateSet
  EdgeList matching;                // after the event
  EdgeList tight_edges;             // tight edges of `agent` before the event
  EdgeList other_tight_edges;       // kPromoteThreshold: tight edges of a after
  std::vector<std::pair<ProgramId, AgentId>> thresholds;  // after; non-⊥ only
};

struct TwoCostOptions {
  // Checks envy-freeness, dual feasibility, the agent-type invariant, the
  // per-agent z budget and no-demotion after every step.
  bool check_invariants = false;
  std::vector<TwoCostEvent>* trace = nullptr;
};

struct TwoCostResult {
  AugmentedSolution solution;
  DualState dual;
};

// Primal-dual ℓ_a-approximation for MinSumC with two distinct costs c1 < c2.
// Requires every quota to be zero and at most two distinct costs; with a
// single cost every agent simply takes its first choice. The result is
// A-perfect and envy-free, every matched edge is tight and
// total_cost ≤ ℓ_a · Σ y_a. Throws PreconditionViolated or UnmatchableAgent.
TwoCostResult solve_two_cost(const Instance& inst,
                             const TwoCostOptions& options = {});

}  // namespace hrcap
