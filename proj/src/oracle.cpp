#include "hrcap/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <thread>

#include "hrcap/errors.hpp"
#include "hrcap/stability.hpp"

namespace hrcap {

namespace {

enum class Objective { kSum, kMax };

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

struct Candidate {
  std::int64_t objective = kInfinity;
  std::vector<int> digits;  // preference rank chosen by each agent
};

bool better(const Candidate& lhs, const Candidate& rhs) {
  if (lhs.objective != rhs.objective) return lhs.objective < rhs.objective;
  return lhs.digits < rhs.digits;
}

// Depth-first search over agents in input order. Digits are tried in
// increasing order, so the first assignment reaching an objective value is the
// lexicographically smallest one with that value.
class Search {
 public:
  Search(const Instance& inst, Objective objective, bool prune)
      : inst_(inst),
        objective_(objective),
        prune_(prune),
        assignment_(inst.num_agents(), kNone),
        digits_(inst.num_agents(), 0),
        count_(inst.num_programs(), 0),
        worst_(inst.num_programs()) {
    bool zero_quotas = true;
    for (ProgramId p = 0; p < inst.num_programs(); ++p) {
      zero_quotas = zero_quotas && inst.quota(p) == 0;
    }
    zero_quotas_ = zero_quotas;
  }

  // Explores the subtree where agent 0 takes its `first`-th choice.
  Candidate run_subtree(int first) {
    best_ = Candidate{};
    if (inst_.num_agents() == 0) {
      leaf(0);
      return best_;
    }
    place_and_recurse(0, first, 0);
    return best_;
  }

 private:
  std::int64_t extend(std::int64_t value, ProgramId p) const {
    // Seat number count_[p]+1 is paid for when it exceeds the quota.
    const std::int64_t paid =
        std::max<std::int64_t>(0, count_[p] + 1 - inst_.quota(p));
    if (objective_ == Objective::kSum) {
      return paid > 0 ? value + inst_.cost(p) : value;
    }
    return std::max(value, paid * inst_.cost(p));
  }

  // Envy created by seating a at p, given agents 0..a-1 are placed.
  bool creates_envy(AgentId a, ProgramId p) const {
    const int my_rank = inst_.agent_rank(a, p);
    auto prefs = inst_.agent_prefs(a);
    for (int r = 0; r < my_rank; ++r) {
      const ProgramId better = prefs[r];
      const auto& held = worst_[better];
      if (!held.empty() && held.back() > inst_.program_rank(better, a)) {
        return true;
      }
    }
    for (AgentId b : inst_.program_prefs(p)) {
      if (b == a) break;
      if (b < a && inst_.agent_prefers(b, p, assignment_[b])) return true;
    }
    return false;
  }

  void place_and_recurse(AgentId a, int digit, std::int64_t value) {
    const ProgramId p = inst_.agent_prefs(a)[digit];
    const std::int64_t next = extend(value, p);
    if (prune_) {
      if (best_.objective != kInfinity && next >= best_.objective) return;
      if (creates_envy(a, p)) return;
    }
    assignment_[a] = p;
    digits_[a] = digit;
    ++count_[p];
    auto& held = worst_[p];
    const int rank = inst_.program_rank(p, a);
    held.push_back(std::max(rank, held.empty() ? rank : held.back()));

    if (a + 1 == inst_.num_agents()) {
      leaf(next);
    } else {
      const int len = static_cast<int>(inst_.agent_prefs(a + 1).size());
      for (int d = 0; d < len; ++d) place_and_recurse(a + 1, d, next);
    }

    held.pop_back();
    --count_[p];
    assignment_[a] = kNone;
  }

  void leaf(std::int64_t value) {
    if (best_.objective != kInfinity && value >= best_.objective) return;
    if (prune_) {
      // Envy was excluded on the way down; only free seats can still block.
      if (!zero_quotas_ && has_free_seat_block()) return;
    } else {
      const auto m = Matching::from_assignment(inst_, assignment_);
      if (!is_stable_augmented(inst_, m).stable) return;
    }
    best_.objective = value;
    best_.digits = digits_;
  }

  bool has_free_seat_block() const {
    for (AgentId a = 0; a < inst_.num_agents(); ++a) {
      for (ProgramId p : inst_.agent_prefs(a)) {
        if (p == assignment_[a]) break;
        if (count_[p] < inst_.quota(p)) return true;
      }
    }
    return false;
  }

  const Instance& inst_;
  Objective objective_;
  bool prune_;
  bool zero_quotas_ = true;
  std::vector<ProgramId> assignment_;
  std::vector<int> digits_;
  std::vector<std::int64_t> count_;
  // Per program, a stack of running maxima of seated program ranks.
  std::vector<std::vector<int>> worst_;
  Candidate best_;
};

void check_limits(const Instance& inst, const OracleLimits& limits) {
  require_nonempty_lists(inst);
  if (search_space(inst) > limits.max_search_space) {
    throw InstanceTooLarge("search space " +
                           std::to_string(search_space(inst)) +
                           " exceeds the limit " +
                           std::to_string(limits.max_search_space));
  }
}

AugmentedSolution solve(const Instance& inst, Objective objective,
                        const OracleLimits& limits) {
  check_limits(inst, limits);
  const int tasks =
      inst.num_agents() == 0 ? 1
                             : static_cast<int>(inst.agent_prefs(0).size());
  std::vector<Candidate> results(tasks);
  const int workers = std::clamp(limits.workers, 1, tasks);
  std::atomic<int> next{0};
  auto work = [&] {
    Search search(inst, objective, limits.prune);
    for (int t = next++; t < tasks; t = next++) {
      results[t] = search.run_subtree(t);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::optional<Candidate> best;
  for (const auto& r : results) {
    if (r.objective == kInfinity) continue;
    if (!best || better(r, *best)) best = r;
  }
  if (!best) {
    throw InvariantViolation("no A-perfect stable matching was found");
  }
  std::vector<ProgramId> assignment(inst.num_agents());
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    assignment[a] = inst.agent_prefs(a)[best->digits[a]];
  }
  return make_solution(inst, Matching::from_assignment(inst, assignment));
}

}  // namespace

std::int64_t search_space(const Instance& inst) {
  std::int64_t product = 1;
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const auto len = static_cast<std::int64_t>(inst.agent_prefs(a).size());
    if (len == 0) return 0;
    if (product > std::numeric_limits<std::int64_t>::max() / len) {
      return std::numeric_limits<std::int64_t>::max();
    }
    product *= len;
  }
  return product;
}

AugmentedSolution brute_force_minsum(const Instance& inst,
                                     const OracleLimits& limits) {
  return solve(inst, Objective::kSum, limits);
}

AugmentedSolution brute_force_minmax(const Instance& inst,
                                     const OracleLimits& limits) {
  return solve(inst, Objective::kMax, limits);
}

void for_each_a_perfect_assignment(
    const Instance& inst, const OracleLimits& limits,
    const std::function<void(const std::vector<ProgramId>&)>& visit) {
  if (search_space(inst) > limits.max_search_space) {
    throw InstanceTooLarge("search space exceeds the limit");
  }
  const int n = inst.num_agents();
  for (AgentId a = 0; a < n; ++a) {
    if (inst.agent_prefs(a).empty()) return;
  }
  std::vector<int> digits(n, 0);
  std::vector<ProgramId> assignment(n);
  for (;;) {
    for (AgentId a = 0; a < n; ++a) assignment[a] = inst.agent_prefs(a)[digits[a]];
    visit(assignment);
    // Mixed-radix increment, last agent least significant.
    int a = n - 1;
    while (a >= 0 && ++digits[a] == static_cast<int>(inst.agent_prefs(a).size())) {
      digits[a] = 0;
      --a;
    }
    if (a < 0) return;
  }
}

}  // namespace hrcap
