#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hrcap {

using AgentId = std::int32_t;
using ProgramId = std::int32_t;

// Sentinel for "no agent" / "no program" (the unmatched state ⊥).
inline constexpr std::int32_t kNone = -1;

// A Hospital/Residents instance with per-program quota and augmentation cost.
//
// Agents and programs are dense indices in declaration order; that order is
// the canonical tie-break everywhere in the library. Instances are validated
// on construction and immutable afterwards.
class Instance {
 public:
  Instance() = default;

  // Throws ValidationError on out-of-range ids, duplicates, negative quota or
  // cost, or a non-mutual acceptability relation.
  Instance(std::vector<std::string> agent_names,
           std::vector<std::string> program_names,
           std::vector<std::vector<ProgramId>> agent_prefs,
           std::vector<std::vector<AgentId>> program_prefs,
           std::vector<std::int64_t> quota, std::vector<std::int64_t> cost);

  int num_agents() const { return static_cast<int>(agent_names_.size()); }
  int num_programs() const { return static_cast<int>(program_names_.size()); }
  int num_edges() const { return static_cast<int>(edge_program_.size()); }

  std::span<const ProgramId> agent_prefs(AgentId a) const {
    return agent_prefs_[a];
  }
  std::span<const AgentId> program_prefs(ProgramId p) const {
    return program_prefs_[p];
  }

  std::int64_t quota(ProgramId p) const { return quota_[p]; }
  std::int64_t cost(ProgramId p) const { return cost_[p]; }
  const std::vector<std::int64_t>& quotas() const { return quota_; }
  const std::vector<std::int64_t>& costs() const { return cost_; }

  const std::string& agent_name(AgentId a) const { return agent_names_[a]; }
  const std::string& program_name(ProgramId p) const {
    return program_names_[p];
  }
  std::optional<AgentId> find_agent(std::string_view name) const;
  std::optional<ProgramId> find_program(std::string_view name) const;

  // Position of p in a's list (0 = most preferred), or kNone if (a,p) ∉ E.
  int agent_rank(AgentId a, ProgramId p) const;
  // Position of a in p's list, or kNone if (a,p) ∉ E.
  int program_rank(ProgramId p, AgentId a) const;

  bool has_edge(AgentId a, ProgramId p) const {
    return agent_rank(a, p) != kNone;
  }

  // p1 ≻_a p2. Either side may be kNone, which ranks below every program.
  bool agent_prefers(AgentId a, ProgramId p1, ProgramId p2) const;
  // a1 ≻_p a2, with kNone ranked last.
  bool program_prefers(ProgramId p, AgentId a1, AgentId a2) const;

  // Edges are numbered agent-major: agent a's k-th choice is edge
  // edge_offset(a) + k.
  int edge_offset(AgentId a) const { return agent_edge_offset_[a]; }
  int edge_id(AgentId a, ProgramId p) const;
  ProgramId edge_program(int edge) const { return edge_program_[edge]; }

  friend bool operator==(const Instance& lhs, const Instance& rhs) {
    return lhs.agent_names_ == rhs.agent_names_ &&
           lhs.program_names_ == rhs.program_names_ &&
           lhs.agent_prefs_ == rhs.agent_prefs_ &&
           lhs.program_prefs_ == rhs.program_prefs_ &&
           lhs.quota_ == rhs.quota_ && lhs.cost_ == rhs.cost_;
  }

 private:
  // (other side id, rank) sorted by id for O(log ℓ) rank lookup.
  using RankTable = std::vector<std::pair<std::int32_t, int>>;
  static int lookup(const RankTable& table, std::int32_t id);

  std::vector<std::string> agent_names_;
  std::vector<std::string> program_names_;
  std::vector<std::vector<ProgramId>> agent_prefs_;
  std::vector<std::vector<AgentId>> program_prefs_;
  std::vector<std::int64_t> quota_;
  std::vector<std::int64_t> cost_;
  std::vector<RankTable> agent_rank_;
  std::vector<RankTable> program_rank_;
  std::vector<int> agent_edge_offset_;
  std::vector<ProgramId> edge_program_;
};

// Builds an Instance from identifiers. Forward references are allowed: names
// are resolved in build().
class InstanceBuilder {
 public:
  void add_agent(std::string name, std::vector<std::string> prefs);
  void add_program(std::string name, std::int64_t quota, std::int64_t cost,
                   std::vector<std::string> prefs);
  Instance build() const;

 private:
  struct ProgramDecl {
    std::string name;
    std::int64_t quota;
    std::int64_t cost;
    std::vector<std::string> prefs;
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> agents_;
  std::vector<ProgramDecl> programs_;
};

bool is_valid_identifier(std::string_view name);

// Line-oriented text format:
//   # comment
//   agent <name> : <prog> <prog> ...
//   program <name> q=<int> c=<int> : <agent> <agent> ...
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

struct Metrics {
  int edges = 0;
  int max_agent_list = 0;    // ℓ_a
  int max_program_list = 0;  // ℓ_p
};
Metrics metrics(const Instance& inst);

// Cheapest program on a's list; ties go to the one a prefers most.
ProgramId least_cost_program(const Instance& inst, AgentId a);

// Throws UnmatchableAgent when some agent has an empty list.
void require_nonempty_lists(const Instance& inst);

}  // namespace hrcap
