#include "hrcap/io.hpp"

#include "hrcap/errors.hpp"

namespace hrcap {

namespace {

Json edge_list(const Instance& inst, const EdgeList& edges) {
  Json out = Json::array();
  for (auto [a, p] : edges) {
    out.push_back(Json::array({inst.agent_name(a), inst.program_name(p)}));
  }
  return out;
}

Json program_or_null(const Instance& inst, ProgramId p) {
  return p == kNone ? Json(nullptr) : Json(inst.program_name(p));
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Json solution_to_json(const Instance& inst, const AugmentedSolution& sol,
                      std::string_view algorithm,
                      std::optional<std::int64_t> dual_objective) {
  Json doc;
  doc["algorithm"] = algorithm;
  Json matching = Json::object();
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    if (sol.matching.is_matched(a)) {
      matching[inst.agent_name(a)] = inst.program_name(sol.matching.program_of(a));
    }
  }
  doc["matching"] = std::move(matching);
  Json aug = Json::object();
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    if (sol.aug[p] != 0) aug[inst.program_name(p)] = sol.aug[p];
  }
  doc["augmentation"] = std::move(aug);
  doc["total_cost"] = sol.total_cost;
  doc["max_cost"] = sol.max_cost;
  doc["a_perfect"] = sol.a_perfect;
  doc["stable"] = sol.stable;
  if (dual_objective) doc["dual_objective"] = *dual_objective;
  return doc;
}

std::string json_to_text(const Json& doc) {
  std::string out;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      out += key + ":";
      for (const auto& [k, v] : value.items()) out += " " + k + "=" + scalar_text(v);
      out += "\n";
    } else if (value.is_array()) {
      for (const auto& item : value) out += key + ": " + scalar_text(item) + "\n";
    } else {
      out += key + ": " + scalar_text(value) + "\n";
    }
  }
  return out;
}

Json two_cost_event_to_json(const Instance& inst, const TwoCostEvent& event,
                            int step) {
  Json j;
  j["step"] = step;
  j["event"] = to_string(event.kind);
  if (event.agent != kNone) j["agent"] = inst.agent_name(event.agent);
  if (event.other != kNone) j["other"] = inst.agent_name(event.other);
  if (event.program != kNone) j["program"] = inst.program_name(event.program);
  switch (event.kind) {
    case TwoCostEventKind::kDualBump:
    case TwoCostEventKind::kDualZ:
      j["value"] = event.value;
      break;
    case TwoCostEventKind::kCandidateSet: {
      Json progs = Json::array();
      for (ProgramId p : event.programs) progs.push_back(inst.program_name(p));
      j["programs"] = std::move(progs);
      break;
    }
    default:
      break;
  }
  j["matching"] = edge_list(inst, event.matching);
  j["tight_edges"] = edge_list(inst, event.tight_edges);
  if (event.kind == TwoCostEventKind::kPromoteThreshold) {
    j["other_tight_edges"] = edge_list(inst, event.other_tight_edges);
  }
  Json thresholds = Json::object();
  for (auto [p, a] : event.thresholds) {
    thresholds[inst.program_name(p)] = inst.agent_name(a);
  }
  j["thresholds"] = std::move(thresholds);
  return j;
}

Json lp_promotion_to_json(const Instance& inst, const LpPromotion& promotion) {
  Json j;
  j["step"] = promotion.step;
  j["agent"] = inst.agent_name(promotion.agent);
  j["from"] = program_or_null(inst, promotion.from);
  j["to"] = inst.program_name(promotion.to);
  j["program_class"] = to_string(promotion.target_class);
  return j;
}

Json blocking_report_to_json(const Instance& inst, const BlockingReport& report) {
  Json out = Json::array();
  for (const auto& bp : report.pairs) {
    Json j;
    j["agent"] = inst.agent_name(bp.agent);
    j["program"] = inst.program_name(bp.program);
    j["kind"] = bp.kind == BlockingKind::kUnderSubscription ? "under_subscription"
                                                            : "envy";
    out.push_back(std::move(j));
  }
  return out;
}

ClaimedSolution parse_solution(const Instance& inst, std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("solution: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "solution: expected an object");

  ClaimedSolution out{Matching(inst), std::vector<std::int64_t>(inst.num_programs(), 0),
                      {}, {}, {}, {}};
  auto program = [&](const std::string& name) {
    auto p = inst.find_program(name);
    if (!p) throw ParseError(0, "solution: unknown program '" + name + "'");
    return *p;
  };
  try {
    if (!doc.contains("matching") || !doc["matching"].is_object()) {
      throw ParseError(0, "solution: missing object 'matching'");
    }
    for (const auto& [name, value] : doc["matching"].items()) {
      auto a = inst.find_agent(name);
      if (!a) throw ParseError(0, "solution: unknown agent '" + name + "'");
      if (value.is_null()) continue;
      out.matching.assign(*a, program(value.get<std::string>()));
    }
    if (doc.contains("augmentation")) {
      if (!doc["augmentation"].is_object()) {
        throw ParseError(0, "solution: 'augmentation' must be an object");
      }
      for (const auto& [name, value] : doc["augmentation"].items()) {
        out.aug[program(name)] = value.get<std::int64_t>();
      }
    }
    if (doc.contains("total_cost")) out.total_cost = doc["total_cost"].get<std::int64_t>();
    if (doc.contains("max_cost")) out.max_cost = doc["max_cost"].get<std::int64_t>();
    if (doc.contains("a_perfect")) out.a_perfect = doc["a_perfect"].get<bool>();
    if (doc.contains("stable")) out.stable = doc["stable"].get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("solution: ") + e.what());
  }
  return out;
}

VerifyReport verify_solution(const Instance& inst, const ClaimedSolution& claim) {
  VerifyReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  const auto& m = claim.matching;

  bool edges_ok = true;
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const ProgramId p = m.program_of(a);
    if (p != kNone && !inst.has_edge(a, p)) {
      fail("not an edge: " + inst.agent_name(a) + " " + inst.program_name(p));
      edges_ok = false;
    }
  }

  std::vector<std::int64_t> capacity(inst.num_programs());
  bool capacity_ok = true;
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    if (claim.aug[p] < 0) {
      fail("negative augmentation at " + inst.program_name(p));
    }
    capacity[p] = inst.quota(p) + std::max<std::int64_t>(0, claim.aug[p]);
    if (m.roster_size(p) > capacity[p]) {
      fail("capacity exceeded at " + inst.program_name(p) + ": " +
           std::to_string(m.roster_size(p)) + " seated, " +
           std::to_string(capacity[p]) + " seats");
      capacity_ok = false;
    }
  }

  const bool a_perfect = m.is_a_perfect();
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    if (!m.is_matched(a)) fail("unmatched agent " + inst.agent_name(a));
  }

  std::optional<bool> stable;
  if (edges_ok && capacity_ok) {
    report.blocking = blocking_pairs(inst, capacity, m);
    stable = report.blocking.empty();
    for (const auto& bp : report.blocking.pairs) {
      fail("blocking pair " + inst.agent_name(bp.agent) + " " +
           inst.program_name(bp.program));
    }
  }

  if (claim.a_perfect && *claim.a_perfect != a_perfect) {
    fail("a_perfect flag does not match the matching");
  }
  if (claim.stable && stable && *claim.stable != *stable) {
    fail("stable flag does not match the matching");
  }
  const auto cost = augmentation_cost(inst, claim.aug);
  if (claim.total_cost && *claim.total_cost != cost.total_cost) {
    fail("total_cost " + std::to_string(*claim.total_cost) + " but augmentation costs " +
         std::to_string(cost.total_cost));
  }
  if (claim.max_cost && *claim.max_cost != cost.max_cost) {
    fail("max_cost " + std::to_string(*claim.max_cost) + " but augmentation gives " +
         std::to_string(cost.max_cost));
  }
  return report;
}

Json verify_report_to_json(const Instance& inst, const VerifyReport& report) {
  Json doc;
  doc["ok"] = report.ok;
  doc["violations"] = report.violations;
  doc["blocking_pairs"] = blocking_report_to_json(inst, report.blocking);
  return doc;
}

}  // namespace hrcap
