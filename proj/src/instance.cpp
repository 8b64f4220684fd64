#include "hrcap/instance.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hrcap/errors.hpp"

namespace hrcap {

namespace {

template <typename Id>
void check_list(const std::vector<Id>& list, int limit, const std::string& owner) {
  std::set<Id> seen;
  for (Id id : list) {
    if (id < 0 || id >= limit) {
      throw ValidationError("preference list of " + owner +
                            " references an unknown identifier");
    }
    if (!seen.insert(id).second) {
      throw ValidationError("preference list of " + owner +
                            " contains a duplicate");
    }
  }
}

template <typename Names>
void check_names(const Names& names, const char* kind) {
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    if (!is_valid_identifier(name)) {
      throw ValidationError(std::string("invalid ") + kind + " identifier '" +
                            name + "'");
    }
    if (!seen.insert(name).second) {
      throw ValidationError(std::string("duplicate ") + kind + " '" + name +
                            "'");
    }
  }
}

}  // namespace

Instance::Instance(std::vector<std::string> agent_names,
                   std::vector<std::string> program_names,
                   std::vector<std::vector<ProgramId>> agent_prefs,
                   std::vector<std::vector<AgentId>> program_prefs,
                   std::vector<std::int64_t> quota,
                   std::vector<std::int64_t> cost)
    : agent_names_(std::move(agent_names)),
      program_names_(std::move(program_names)),
      agent_prefs_(std::move(agent_prefs)),
      program_prefs_(std::move(program_prefs)),
      quota_(std::move(quota)),
      cost_(std::move(cost)) {
  const int na = num_agents();
  const int np = num_programs();
  if (static_cast<int>(agent_prefs_.size()) != na ||
      static_cast<int>(program_prefs_.size()) != np ||
      static_cast<int>(quota_.size()) != np ||
      static_cast<int>(cost_.size()) != np) {
    throw ValidationError("inconsistent instance dimensions");
  }
  check_names(agent_names_, "agent");
  check_names(program_names_, "program");
  for (ProgramId p = 0; p < np; ++p) {
    if (quota_[p] < 0 || cost_[p] < 0) {
      throw ValidationError("program " + program_names_[p] +
                            " has a negative quota or cost");
    }
    check_list(program_prefs_[p], na, program_names_[p]);
  }
  for (AgentId a = 0; a < na; ++a) {
    check_list(agent_prefs_[a], np, agent_names_[a]);
  }

  auto make_table = [](const auto& list) {
    RankTable table;
    table.reserve(list.size());
    for (int r = 0; r < static_cast<int>(list.size()); ++r) {
      table.emplace_back(list[r], r);
    }
    std::sort(table.begin(), table.end());
    return table;
  };
  agent_rank_.reserve(na);
  agent_edge_offset_.reserve(na + 1);
  for (AgentId a = 0; a < na; ++a) {
    agent_rank_.push_back(make_table(agent_prefs_[a]));
    agent_edge_offset_.push_back(static_cast<int>(edge_program_.size()));
    edge_program_.insert(edge_program_.end(), agent_prefs_[a].begin(),
                         agent_prefs_[a].end());
  }
  agent_edge_offset_.push_back(static_cast<int>(edge_program_.size()));
  program_rank_.reserve(np);
  std::size_t program_side_edges = 0;
  for (ProgramId p = 0; p < np; ++p) {
    program_rank_.push_back(make_table(program_prefs_[p]));
    program_side_edges += program_prefs_[p].size();
  }

  // Mutual acceptability: both sides must describe the same edge set.
  for (AgentId a = 0; a < na; ++a) {
    for (ProgramId p : agent_prefs_[a]) {
      if (program_rank(p, a) == kNone) {
        throw ValidationError("agent " + agent_names_[a] + " lists program " +
                              program_names_[p] +
                              " but the program does not list the agent");
      }
    }
  }
  if (program_side_edges != edge_program_.size()) {
    throw ValidationError("preference lists are not mutual");
  }
}

int Instance::lookup(const RankTable& table, std::int32_t id) {
  auto it = std::lower_bound(
      table.begin(), table.end(), id,
      [](const std::pair<std::int32_t, int>& e, std::int32_t v) {
        return e.first < v;
      });
  if (it == table.end() || it->first != id) return kNone;
  return it->second;
}

int Instance::agent_rank(AgentId a, ProgramId p) const {
  if (p < 0) return kNone;
  return lookup(agent_rank_[a], p);
}

int Instance::program_rank(ProgramId p, AgentId a) const {
  if (a < 0) return kNone;
  return lookup(program_rank_[p], a);
}

bool Instance::agent_prefers(AgentId a, ProgramId p1, ProgramId p2) const {
  if (p1 == kNone) return false;
  if (p2 == kNone) return true;
  return agent_rank(a, p1) < agent_rank(a, p2);
}

bool Instance::program_prefers(ProgramId p, AgentId a1, AgentId a2) const {
  if (a1 == kNone) return false;
  if (a2 == kNone) return true;
  return program_rank(p, a1) < program_rank(p, a2);
}

int Instance::edge_id(AgentId a, ProgramId p) const {
  const int r = agent_rank(a, p);
  return r == kNone ? kNone : agent_edge_offset_[a] + r;
}

std::optional<AgentId> Instance::find_agent(std::string_view name) const {
  auto it = std::find(agent_names_.begin(), agent_names_.end(), name);
  if (it == agent_names_.end()) return std::nullopt;
  return static_cast<AgentId>(it - agent_names_.begin());
}

std::optional<ProgramId> Instance::find_program(std::string_view name) const {
  auto it = std::find(program_names_.begin(), program_names_.end(), name);
  if (it == program_names_.end()) return std::nullopt;
  return static_cast<ProgramId>(it - program_names_.begin());
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9') || ch == '_';
  });
}

void InstanceBuilder::add_agent(std::string name,
                                std::vector<std::string> prefs) {
  agents_.emplace_back(std::move(name), std::move(prefs));
}

void InstanceBuilder::add_program(std::string name, std::int64_t quota,
                                  std::int64_t cost,
                                  std::vector<std::string> prefs) {
  programs_.push_back({std::move(name), quota, cost, std::move(prefs)});
}

Instance InstanceBuilder::build() const {
  std::unordered_map<std::string, AgentId> agent_index;
  std::unordered_map<std::string, ProgramId> program_index;
  std::vector<std::string> agent_names;
  std::vector<std::string> program_names;
  for (const auto& [name, prefs] : agents_) {
    if (!agent_index.emplace(name, static_cast<AgentId>(agent_names.size()))
             .second) {
      throw ValidationError("duplicate agent '" + name + "'");
    }
    agent_names.push_back(name);
  }
  for (const auto& decl : programs_) {
    if (!program_index
             .emplace(decl.name, static_cast<ProgramId>(program_names.size()))
             .second) {
      throw ValidationError("duplicate program '" + decl.name + "'");
    }
    program_names.push_back(decl.name);
  }

  std::vector<std::vector<ProgramId>> agent_prefs;
  for (const auto& [name, prefs] : agents_) {
    auto& list = agent_prefs.emplace_back();
    for (const auto& pname : prefs) {
      auto it = program_index.find(pname);
      if (it == program_index.end()) {
        throw ValidationError("agent " + name + " lists unknown program '" +
                              pname + "'");
      }
      list.push_back(it->second);
    }
  }
  std::vector<std::vector<AgentId>> program_prefs;
  std::vector<std::int64_t> quota;
  std::vector<std::int64_t> cost;
  for (const auto& decl : programs_) {
    auto& list = program_prefs.emplace_back();
    for (const auto& aname : decl.prefs) {
      auto it = agent_index.find(aname);
      if (it == agent_index.end()) {
        throw ValidationError("program " + decl.name +
                              " lists unknown agent '" + aname + "'");
      }
      list.push_back(it->second);
    }
    quota.push_back(decl.quota);
    cost.push_back(decl.cost);
  }
  return Instance(std::move(agent_names), std::move(program_names),
                  std::move(agent_prefs), std::move(program_prefs),
                  std::move(quota), std::move(cost));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_field(std::string_view token, std::string_view key,
                         int line) {
  if (token.substr(0, key.size()) != key) {
    throw ParseError(line, "expected '" + std::string(key) + "<int>'");
  }
  std::string_view digits = token.substr(key.size());
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size()) {
    throw ParseError(line, "malformed integer in '" + std::string(token) + "'");
  }
  if (value < 0) {
    throw ValidationError("line " + std::to_string(line) +
                          ": negative number in '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string> parse_list(const std::vector<std::string_view>& tokens,
                                    std::size_t from, int line) {
  std::vector<std::string> out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    if (!is_valid_identifier(tokens[i])) {
      throw ParseError(line, "invalid identifier '" + std::string(tokens[i]) +
                                 "'");
    }
    out.emplace_back(tokens[i]);
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  InstanceBuilder builder;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens[0] == "agent") {
      if (tokens.size() < 3 || tokens[2] != ":") {
        throw ParseError(line_no, "expected 'agent <name> : <programs>'");
      }
      if (!is_valid_identifier(tokens[1])) {
        throw ParseError(line_no, "invalid identifier '" +
                                      std::string(tokens[1]) + "'");
      }
      if (tokens.size() == 3) {
        throw ParseError(line_no, "agent " + std::string(tokens[1]) +
                                      " has an empty preference list");
      }
      builder.add_agent(std::string(tokens[1]), parse_list(tokens, 3, line_no));
    } else if (tokens[0] == "program") {
      if (tokens.size() < 5 || tokens[4] != ":") {
        throw ParseError(line_no,
                         "expected 'program <name> q=<int> c=<int> : <agents>'");
      }
      if (!is_valid_identifier(tokens[1])) {
        throw ParseError(line_no, "invalid identifier '" +
                                      std::string(tokens[1]) + "'");
      }
      const std::int64_t q = parse_field(tokens[2], "q=", line_no);
      const std::int64_t c = parse_field(tokens[3], "c=", line_no);
      builder.add_program(std::string(tokens[1]), q, c,
                          parse_list(tokens, 5, line_no));
    } else {
      throw ParseError(line_no,
                       "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  return builder.build();
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    out << "agent " << inst.agent_name(a) << " :";
    for (ProgramId p : inst.agent_prefs(a)) out << ' ' << inst.program_name(p);
    out << '\n';
  }
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    out << "program " << inst.program_name(p) << " q=" << inst.quota(p)
        << " c=" << inst.cost(p) << " :";
    for (AgentId a : inst.program_prefs(p)) out << ' ' << inst.agent_name(a);
    out << '\n';
  }
  return out.str();
}

Metrics metrics(const Instance& inst) {
  Metrics m;
  m.edges = inst.num_edges();
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    m.max_agent_list = std::max(m.max_agent_list,
                                static_cast<int>(inst.agent_prefs(a).size()));
  }
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    m.max_program_list = std::max(
        m.max_program_list, static_cast<int>(inst.program_prefs(p).size()));
  }
  return m;
}

ProgramId least_cost_program(const Instance& inst, AgentId a) {
  auto prefs = inst.agent_prefs(a);
  if (prefs.empty()) {
    throw EmptyPreferenceList("agent " + inst.agent_name(a) +
                              " has an empty preference list");
  }
  ProgramId best = prefs.front();
  for (ProgramId p : prefs) {
    if (inst.cost(p) < inst.cost(best)) best = p;
  }
  return best;
}

void require_nonempty_lists(const Instance& inst) {
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    if (inst.agent_prefs(a).empty()) {
      throw UnmatchableAgent("agent " + inst.agent_name(a) +
                             " has an empty preference list");
    }
  }
}

}  // namespace hrcap
