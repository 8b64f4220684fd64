#pragma once

#include <span>
#include <vector>

#include "hrcap/instance.hpp"

namespace hrcap {

// Partial many-to-one assignment of agents to programs. The roster view is
// kept consistent with the assignment by every mutator.
class Matching {
 public:
  Matching() = default;
  Matching(int num_agents, int num_programs)
      : assignment_(num_agents, kNone), roster_(num_programs) {}
  explicit Matching(const Instance& inst)
      : Matching(inst.num_agents(), inst.num_programs()) {}

  // Builds a matching from agent → program (kNone for unmatched). Throws
  // InvalidMatching if a pair is not an edge of inst.
  static Matching from_assignment(const Instance& inst,
                                  const std::vector<ProgramId>& assignment);

  int num_agents() const { return static_cast<int>(assignment_.size()); }
  int num_programs() const { return static_cast<int>(roster_.size()); }

  ProgramId program_of(AgentId a) const { return assignment_[a]; }
  bool is_matched(AgentId a) const { return assignment_[a] != kNone; }
  std::span<const AgentId> roster(ProgramId p) const { return roster_[p]; }
  int roster_size(ProgramId p) const {
    return static_cast<int>(roster_[p].size());
  }
  const std::vector<ProgramId>& assignment() const { return assignment_; }

  int num_matched() const;
  bool is_a_perfect() const { return num_matched() == num_agents(); }

  // Moves a to p, releasing its previous seat. p == kNone unassigns.
  void assign(AgentId a, ProgramId p);
  void unassign(AgentId a) { assign(a, kNone); }

  friend bool operator==(const Matching& lhs, const Matching& rhs) {
    return lhs.assignment_ == rhs.assignment_ &&
           lhs.roster_.size() == rhs.roster_.size();
  }

 private:
  std::vector<ProgramId> assignment_;
  std::vector<std::vector<AgentId>> roster_;
};

}  // namespace hrcap
