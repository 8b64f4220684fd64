#include "hrcap/stability.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <utility>

#include "hrcap/errors.hpp"

namespace hrcap {

namespace {

Matching agent_proposing(const Instance& inst,
                         std::span<const std::int64_t> quotas) {
  const int na = inst.num_agents();
  const int np = inst.num_programs();
  Matching m(inst);
  std::vector<int> next(na, 0);
  // Max-heap on program rank: top() is the worst agent a program holds.
  std::vector<std::priority_queue<std::pair<int, AgentId>>> held(np);
  std::deque<AgentId> queue;
  for (AgentId a = 0; a < na; ++a) queue.push_back(a);

  while (!queue.empty()) {
    const AgentId a = queue.front();
    queue.pop_front();
    auto prefs = inst.agent_prefs(a);
    if (next[a] >= static_cast<int>(prefs.size())) continue;
    const ProgramId p = prefs[next[a]++];
    const int rank = inst.program_rank(p, a);
    auto& pool = held[p];
    if (static_cast<std::int64_t>(pool.size()) < quotas[p]) {
      pool.emplace(rank, a);
      m.assign(a, p);
      continue;
    }
    if (!pool.empty() && pool.top().first > rank) {
      const AgentId evicted = pool.top().second;
      pool.pop();
      m.unassign(evicted);
      pool.emplace(rank, a);
      m.assign(a, p);
      queue.push_front(evicted);
      continue;
    }
    queue.push_front(a);
  }
  return m;
}

Matching program_proposing(const Instance& inst,
                           std::span<const std::int64_t> quotas) {
  const int np = inst.num_programs();
  Matching m(inst);
  std::vector<int> next(np, 0);
  std::vector<bool> queued(np, true);
  std::deque<ProgramId> queue;
  for (ProgramId p = 0; p < np; ++p) queue.push_back(p);

  while (!queue.empty()) {
    const ProgramId p = queue.front();
    queue.pop_front();
    queued[p] = false;
    auto prefs = inst.program_prefs(p);
    while (m.roster_size(p) < quotas[p] &&
           next[p] < static_cast<int>(prefs.size())) {
      const AgentId a = prefs[next[p]++];
      const ProgramId current = m.program_of(a);
      if (!inst.agent_prefers(a, p, current)) continue;
      m.assign(a, p);
      if (current != kNone && !queued[current]) {
        queued[current] = true;
        queue.push_front(current);
      }
    }
  }
  return m;
}

void validate_edges(const Instance& inst, const Matching& m) {
  if (m.num_agents() != inst.num_agents() ||
      m.num_programs() != inst.num_programs()) {
    throw InvalidMatching("matching dimensions do not fit the instance");
  }
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const ProgramId p = m.program_of(a);
    if (p != kNone && !inst.has_edge(a, p)) {
      throw InvalidMatching("agent " + inst.agent_name(a) +
                            " is matched along a non-edge");
    }
  }
}

// Worst program-rank currently seated at each program, kNone when empty.
std::vector<int> worst_seated_rank(const Instance& inst, const Matching& m) {
  std::vector<int> worst(inst.num_programs(), kNone);
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    for (AgentId a : m.roster(p)) {
      worst[p] = std::max(worst[p], inst.program_rank(p, a));
    }
  }
  return worst;
}

}  // namespace

Matching gale_shapley(const Instance& inst,
                      std::span<const std::int64_t> quotas,
                      ProposingSide side) {
  if (static_cast<int>(quotas.size()) != inst.num_programs()) {
    throw InvalidParams("quota vector does not match the program count");
  }
  return side == ProposingSide::kAgents ? agent_proposing(inst, quotas)
                                        : program_proposing(inst, quotas);
}

BlockingReport blocking_pairs(const Instance& inst,
                              std::span<const std::int64_t> quotas,
                              const Matching& m) {
  validate_edges(inst, m);
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    if (m.roster_size(p) > quotas[p]) {
      throw InvalidMatching("program " + inst.program_name(p) +
                            " holds more agents than its quota");
    }
  }
  const auto worst = worst_seated_rank(inst, m);
  BlockingReport report;
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const ProgramId current = m.program_of(a);
    for (ProgramId p : inst.agent_prefs(a)) {
      if (p == current) break;
      if (m.roster_size(p) < quotas[p]) {
        report.pairs.push_back({a, p, BlockingKind::kUnderSubscription});
      } else if (worst[p] > inst.program_rank(p, a)) {
        report.pairs.push_back({a, p, BlockingKind::kEnvy});
      }
    }
  }
  report.envy_pairs = envy_pairs(inst, m);
  return report;
}

std::vector<EnvyPair> envy_pairs(const Instance& inst, const Matching& m) {
  validate_edges(inst, m);
  std::vector<EnvyPair> out;
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const ProgramId current = m.program_of(a);
    for (ProgramId p : inst.agent_prefs(a)) {
      if (p == current) break;
      const int rank = inst.program_rank(p, a);
      for (AgentId other : m.roster(p)) {
        if (inst.program_rank(p, other) > rank) out.push_back({a, other, p});
      }
    }
  }
  return out;
}

bool is_envy_free(const Instance& inst, const Matching& m) {
  validate_edges(inst, m);
  const auto worst = worst_seated_rank(inst, m);
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const ProgramId current = m.program_of(a);
    for (ProgramId p : inst.agent_prefs(a)) {
      if (p == current) break;
      if (worst[p] > inst.program_rank(p, a)) return false;
    }
  }
  return true;
}

StabilityVerdict is_stable_augmented(const Instance& inst, const Matching& m) {
  validate_edges(inst, m);
  std::vector<std::int64_t> effective(inst.num_programs());
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    effective[p] = std::max<std::int64_t>(inst.quota(p), m.roster_size(p));
  }
  StabilityVerdict verdict;
  verdict.report = blocking_pairs(inst, effective, m);
  verdict.stable = verdict.report.empty();
  return verdict;
}

Matching envy_free_to_stable(const Instance& inst,
                             std::span<const std::int64_t> quotas,
                             const Matching& m, std::vector<Promotion>* log) {
  if (static_cast<int>(quotas.size()) != inst.num_programs()) {
    throw InvalidParams("quota vector does not match the program count");
  }
  if (!is_envy_free(inst, m)) {
    throw NotEnvyFree("input matching has an envy pair");
  }
  Matching out = m;
  // Highest-ranked agent preferring p to its seat, if p has a free seat.
  auto candidate = [&](ProgramId p) -> AgentId {
    if (out.roster_size(p) >= quotas[p]) return kNone;
    for (AgentId a : inst.program_prefs(p)) {
      if (inst.agent_prefers(a, p, out.program_of(a))) return a;
    }
    return kNone;
  };

  // Only the program an agent leaves can acquire a new blocking pair, so the
  // scan resumes from there instead of restarting at program 0.
  ProgramId p = 0;
  while (p < inst.num_programs()) {
    const AgentId a = candidate(p);
    if (a == kNone) {
      ++p;
      continue;
    }
    const ProgramId from = out.program_of(a);
    out.assign(a, p);
    if (log != nullptr) log->push_back({a, from, p});
    if (from != kNone && from < p) p = from;
  }
  return out;
}

}  // namespace hrcap
