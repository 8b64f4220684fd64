#include "hrcap/matching.hpp"

#include <algorithm>

#include "hrcap/errors.hpp"

namespace hrcap {

Matching Matching::from_assignment(const Instance& inst,
                                   const std::vector<ProgramId>& assignment) {
  if (static_cast<int>(assignment.size()) != inst.num_agents()) {
    throw InvalidMatching("assignment size does not match the agent count");
  }
  Matching m(inst);
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const ProgramId p = assignment[a];
    if (p == kNone) continue;
    if (p < 0 || p >= inst.num_programs() || !inst.has_edge(a, p)) {
      throw InvalidMatching("agent " + inst.agent_name(a) +
                            " is assigned along a non-edge");
    }
    m.assign(a, p);
  }
  return m;
}

int Matching::num_matched() const {
  return static_cast<int>(std::count_if(assignment_.begin(), assignment_.end(),
                                        [](ProgramId p) { return p != kNone; }));
}

void Matching::assign(AgentId a, ProgramId p) {
  const ProgramId old = assignment_[a];
  if (old == p) return;
  if (old != kNone) {
    auto& r = roster_[old];
    r.erase(std::find(r.begin(), r.end(), a));
  }
  assignment_[a] = p;
  if (p != kNone) roster_[p].push_back(a);
}

}  // namespace hrcap
