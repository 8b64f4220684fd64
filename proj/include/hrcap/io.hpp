#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"
#include "hrcap/minsum_approx.hpp"
#include "hrcap/solution.hpp"
#include "hrcap/stability.hpp"
#include "hrcap/two_cost.hpp"

namespace hrcap {

using Json = nlohmann::ordered_json;

// {"algorithm", "matching": {agent: program}, "augmentation": {program: q̃}
// (zeros omitted), "total_cost", "max_cost", "a_perfect", "stable"} plus
// "dual_objective" when given. Unmatched agents are left out of "matching".
Json solution_to_json(const Instance& inst, const AugmentedSolution& sol,
                      std::string_view algorithm,
                      std::optional<std::int64_t> dual_objective = {});

// One "key: value" line per top-level field; arrays give one line per item.
std::string json_to_text(const Json& doc);

Json two_cost_event_to_json(const Instance& inst, const TwoCostEvent& event,
                            int step);
Json lp_promotion_to_json(const Instance& inst, const LpPromotion& promotion);
Json blocking_report_to_json(const Instance& inst, const BlockingReport& report);

// A solution as read back from a document; nothing in it is trusted.
struct ClaimedSolution {
  Matching matching;
  std::vector<std::int64_t> aug;
  std::optional<std::int64_t> total_cost;
  std::optional<std::int64_t> max_cost;
  std::optional<bool> a_perfect;
  std::optional<bool> stable;
};

// Throws ParseError on malformed JSON, unknown names or wrong field types.
// Non-edges are kept so that verification can report them.
ClaimedSolution parse_solution(const Instance& inst, std::string_view text);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;
  BlockingReport blocking;  // under quotas q + claimed augmentation
};

// Checks edge membership, capacity q + q̃, A-perfectness, stability under
// q + q̃, and every flag or cost the document states.
VerifyReport verify_solution(const Instance& inst, const ClaimedSolution& claim);

Json verify_report_to_json(const Instance& inst, const VerifyReport& report);

}  // namespace hrcap
