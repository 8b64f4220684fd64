#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap {

enum class ProposingSide { kAgents, kPrograms };

enum class BlockingKind { kUnderSubscription, kEnvy };

struct BlockingPair {
  AgentId agent;
  ProgramId program;
  BlockingKind kind;
  friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

// `envious` prefers `program` to its own seat and `program` prefers it to
// `envied`, who holds a seat there.
struct EnvyPair {
  AgentId envious;
  AgentId envied;
  ProgramId program;
  friend bool operator==(const EnvyPair&, const EnvyPair&) = default;
};

struct BlockingReport {
  std::vector<BlockingPair> pairs;
  std::vector<EnvyPair> envy_pairs;
  bool empty() const { return pairs.empty(); }
};

// Deferred acceptance under the given quotas. Proposers start in input order;
// a displaced proposer goes to the front of the queue.
Matching gale_shapley(const Instance& inst,
                      std::span<const std::int64_t> quotas,
                      ProposingSide side = ProposingSide::kAgents);

// Every blocking pair and every envy pair of m. A pair is reported as
// under-subscription when the program has a free seat, as envy otherwise.
// Throws InvalidMatching when m is not an edge subset or overfills a program.
BlockingReport blocking_pairs(const Instance& inst,
                              std::span<const std::int64_t> quotas,
                              const Matching& m);

std::vector<EnvyPair> envy_pairs(const Instance& inst, const Matching& m);
bool is_envy_free(const Instance& inst, const Matching& m);

struct StabilityVerdict {
  bool stable = false;
  BlockingReport report;
};

// Stability when every program is augmented exactly to its occupancy, i.e.
// effective quota max(q(p), |M(p)|).
StabilityVerdict is_stable_augmented(const Instance& inst, const Matching& m);

struct Promotion {
  AgentId agent;
  ProgramId from;  // kNone if the agent was unmatched
  ProgramId to;
};

// Promotes agents along under-subscription blocking pairs until none remain.
// Programs are scanned in input order; at the first program with a blocking
// pair, the agent it ranks highest among those preferring it to their seat is
// moved there. Programs filled beyond their quota are never under-subscribed.
// Throws NotEnvyFree if m has an envy pair. Each promotion is appended to log
// when it is non-null.
Matching envy_free_to_stable(const Instance& inst,
                             std::span<const std::int64_t> quotas,
                             const Matching& m,
                             std::vector<Promotion>* log = nullptr);

}  // namespace hrcap
