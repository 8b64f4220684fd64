#include "hrcap/two_cost.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hrcap/errors.hpp"
#include "hrcap/stability.hpp"

namespace hrcap {

DualState DualState::initial(const Instance& inst, std::int64_t c1,
                             std::int64_t c2) {
  DualState d;
  d.c1 = c1;
  d.c2 = c2;
  d.y.assign(inst.num_agents(), c1);
  return d;
}

std::int64_t DualState::objective() const {
  std::int64_t sum = 0;
  for (std::int64_t v : y) sum += v;
  return sum;
}

bool is_valid_triplet(const Instance& inst, const Triplet& t) {
  if (t.preferred < 0 || t.preferred >= inst.num_agents() || t.other < 0 ||
      t.other >= inst.num_agents() || t.program < 0 ||
      t.program >= inst.num_programs()) {
    return false;
  }
  const int hi = inst.program_rank(t.program, t.preferred);
  const int lo = inst.program_rank(t.program, t.other);
  return hi != kNone && lo != kNone && hi < lo;
}

std::int64_t edge_lhs(const Instance& inst, const DualState& dual, AgentId a,
                      ProgramId p) {
  const int rank = inst.agent_rank(a, p);
  if (rank == kNone) {
    throw NotAnEdge("(" + inst.agent_name(a) + ", " + inst.program_name(p) +
                    ") is not an edge");
  }
  std::int64_t lhs = dual.y[a];
  for (const auto& [t, v] : dual.z) {
    // z(a, p', a') with p' = p or p' ≺_a p
    if (t.preferred == a) {
      const int r = inst.agent_rank(a, t.program);
      if (r != kNone && r >= rank) lhs += v;
    }
    // z(a', p, a) with a' ≻_p a
    if (t.program == p && t.other == a) lhs -= v;
  }
  return lhs;
}

std::int64_t edge_slack(const Instance& inst, const DualState& dual, AgentId a,
                        ProgramId p) {
  return inst.cost(p) - edge_lhs(inst, dual, a, p);
}

std::vector<std::int64_t> edge_lhs_table(const Instance& inst,
                                         const DualState& dual) {
  std::vector<std::int64_t> lhs(inst.num_edges());
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const int base = inst.edge_offset(a);
    const int len = static_cast<int>(inst.agent_prefs(a).size());
    for (int r = 0; r < len; ++r) lhs[base + r] = dual.y[a];
  }
  for (const auto& [t, v] : dual.z) {
    const int rank = inst.agent_rank(t.preferred, t.program);
    if (rank != kNone) {
      const int base = inst.edge_offset(t.preferred);
      for (int r = 0; r <= rank; ++r) lhs[base + r] += v;
    }
    const int e = inst.edge_id(t.other, t.program);
    if (e != kNone) lhs[e] -= v;
  }
  return lhs;
}

DualCheck check_dual_feasible(const Instance& inst, const DualState& dual) {
  DualCheck out;
  out.objective = dual.objective();
  for (const auto& [t, v] : dual.z) {
    if (!is_valid_triplet(inst, t)) {
      out.violations.push_back({DualViolation::Kind::kInvalidTriplet, t.other,
                                t.program, v, 0});
    } else if (v < 0) {
      out.violations.push_back(
          {DualViolation::Kind::kNegativeZ, t.other, t.program, v, 0});
    }
  }
  const auto lhs = edge_lhs_table(inst, dual);
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const int base = inst.edge_offset(a);
    auto prefs = inst.agent_prefs(a);
    for (int r = 0; r < static_cast<int>(prefs.size()); ++r) {
      const ProgramId p = prefs[r];
      if (lhs[base + r] > inst.cost(p)) {
        out.violations.push_back(
            {DualViolation::Kind::kEdge, a, p, lhs[base + r], inst.cost(p)});
      }
    }
  }
  out.feasible = out.violations.empty();
  return out;
}

ThresholdIndex compute_thresholds(const Instance& inst, const Matching& m) {
  ThresholdIndex out;
  out.thresh.assign(inst.num_programs(), kNone);
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    for (AgentId a : inst.program_prefs(p)) {
      if (inst.agent_prefers(a, p, m.program_of(a))) {
        out.thresh[p] = a;
        break;
      }
    }
  }
  return out;
}

const char* to_string(TwoCostEventKind kind) {
  switch (kind) {
    case TwoCostEventKind::kInit:
      return "init";
    case TwoCostEventKind::kDualBump:
      return "y_update";
    case TwoCostEventKind::kMatchEdge:
      return "match";
    case TwoCostEventKind::kCandidateSet:
      return "candidate_set";
    case TwoCostEventKind::kDualZ:
      return "z_update";
    case TwoCostEventKind::kPromoteThreshold:
      return "promote";
    case TwoCostEventKind::kFreePromotion:
      return "free_promotion";
    case TwoCostEventKind::kDone:
      return "done";
  }
  return "?";
}

namespace {

// Working state shared by the solver and the standalone free-promotions
// routine. lhs_ is maintained incrementally from y/z updates.
class PrimalDual {
 public:
  PrimalDual(const Instance& inst, DualState dual, Matching m,
             const TwoCostOptions& options)
      : inst_(inst),
        dual_(std::move(dual)),
        m_(std::move(m)),
        options_(options),
        lhs_(edge_lhs_table(inst_, dual_)) {
    thresh_ = compute_thresholds(inst_, m_).thresh;
    max_agent_list_ = metrics(inst_).max_agent_list;
    const std::int64_t m_edges = inst_.num_edges() + 1;
    step_budget_ = 8 * m_edges * m_edges * (inst_.num_agents() + 1) + 1000;
  }

  const DualState& dual() const { return dual_; }
  const Matching& matching() const { return m_; }
  Matching take_matching() { return std::move(m_); }

  void run();
  void run_free_promotions();

 private:
  std::int64_t slack_at(AgentId a, int rank) const {
    const ProgramId p = inst_.agent_prefs(a)[rank];
    return inst_.cost(p) - lhs_[inst_.edge_offset(a) + rank];
  }
  bool tight_at(AgentId a, int rank) const { return slack_at(a, rank) == 0; }

  // Rank of the agent's current seat, or list length when unmatched.
  int seat_rank(AgentId a) const {
    const ProgramId p = m_.program_of(a);
    return p == kNone ? static_cast<int>(inst_.agent_prefs(a).size())
                      : inst_.agent_rank(a, p);
  }

  ProgramId most_preferred_matchable(AgentId a) const {
    auto prefs = inst_.agent_prefs(a);
    const int seat = seat_rank(a);
    for (int r = 0; r < seat; ++r) {
      if (thresh_[prefs[r]] == a && tight_at(a, r)) return prefs[r];
    }
    return kNone;
  }

  EdgeList tight_edges(AgentId a) const {
    EdgeList out;
    auto prefs = inst_.agent_prefs(a);
    const int seat = seat_rank(a);
    for (int r = 0; r < seat; ++r) {
      if (tight_at(a, r)) out.emplace_back(a, prefs[r]);
    }
    return out;
  }

  EdgeList matching_snapshot() const {
    EdgeList out;
    for (AgentId a = 0; a < inst_.num_agents(); ++a) {
      if (m_.is_matched(a)) out.emplace_back(a, m_.program_of(a));
    }
    return out;
  }

  std::vector<std::pair<ProgramId, AgentId>> threshold_snapshot() const {
    std::vector<std::pair<ProgramId, AgentId>> out;
    for (ProgramId p = 0; p < inst_.num_programs(); ++p) {
      if (thresh_[p] != kNone) out.emplace_back(p, thresh_[p]);
    }
    return out;
  }

  bool tracing() const { return options_.trace != nullptr; }
  // Every event carries the matching and thresholds as they are after it.
  void emit(TwoCostEvent event) {
    if (options_.trace == nullptr) return;
    event.matching = matching_snapshot();
    event.thresholds = threshold_snapshot();
    options_.trace->push_back(std::move(event));
  }

  void tick() {
    if (++steps_ > step_budget_) {
      throw InvariantViolation("two-cost solver exceeded its step budget");
    }
  }

  void move(AgentId a, ProgramId p);
  void bump_y(AgentId a);
  void raise_z(const Triplet& t);
  std::vector<ProgramId> candidate_set(AgentId a) const;

  void check_dual() const;
  void check_agent_types() const;

  const Instance& inst_;
  DualState dual_;
  Matching m_;
  const TwoCostOptions& options_;
  std::vector<std::int64_t> lhs_;
  std::vector<AgentId> thresh_;
  int max_agent_list_ = 0;
  std::int64_t steps_ = 0;
  std::int64_t step_budget_ = 0;
};

void PrimalDual::move(AgentId a, ProgramId p) {
  tick();
  const ProgramId from = m_.program_of(a);
  if (options_.check_invariants && !inst_.agent_prefers(a, p, from)) {
    throw InvariantViolation("agent " + inst_.agent_name(a) + " was demoted");
  }
  m_.assign(a, p);
  thresh_ = compute_thresholds(inst_, m_).thresh;
  if (options_.check_invariants && !is_envy_free(inst_, m_)) {
    throw InvariantViolation("matching lost envy-freeness after moving " +
                             inst_.agent_name(a));
  }
}

void PrimalDual::bump_y(AgentId a) {
  const std::int64_t delta = dual_.c2 - dual_.c1;
  dual_.y[a] += delta;
  const int base = inst_.edge_offset(a);
  const int len = static_cast<int>(inst_.agent_prefs(a).size());
  for (int r = 0; r < len; ++r) lhs_[base + r] += delta;
  check_dual();
}

void PrimalDual::raise_z(const Triplet& t) {
  const std::int64_t delta = dual_.c2 - dual_.c1;
  dual_.z[t] += delta;
  const int rank = inst_.agent_rank(t.preferred, t.program);
  const int base = inst_.edge_offset(t.preferred);
  for (int r = 0; r <= rank; ++r) lhs_[base + r] += delta;
  lhs_[inst_.edge_id(t.other, t.program)] -= delta;
  check_dual();
}

std::vector<ProgramId> PrimalDual::candidate_set(AgentId a) const {
  std::vector<ProgramId> out;
  auto prefs = inst_.agent_prefs(a);
  const int seat = seat_rank(a);
  for (int r = 0; r < seat; ++r) {
    if (tight_at(a, r) && thresh_[prefs[r]] != a) out.push_back(prefs[r]);
  }
  return out;
}

void PrimalDual::check_dual() const {
  if (!options_.check_invariants) return;
  const auto check = check_dual_feasible(inst_, dual_);
  if (!check.feasible) {
    throw InvariantViolation("dual setting became infeasible");
  }
  if (edge_lhs_table(inst_, dual_) != lhs_) {
    throw InvariantViolation("incremental lhs diverged from the dual state");
  }
}

// Every agent is type-1 (all strictly better edges have slack c2 − c1) or
// type-2 (matched, all strictly better edges tight with a foreign threshold).
void PrimalDual::check_agent_types() const {
  if (!options_.check_invariants) return;
  const std::int64_t gap = dual_.c2 - dual_.c1;
  for (AgentId a = 0; a < inst_.num_agents(); ++a) {
    auto prefs = inst_.agent_prefs(a);
    const int seat = seat_rank(a);
    bool type1 = true;
    bool type2 = m_.is_matched(a);
    for (int r = 0; r < seat; ++r) {
      const std::int64_t s = slack_at(a, r);
      if (s != gap) type1 = false;
      if (s != 0 || thresh_[prefs[r]] == a) type2 = false;
    }
    if (!type1 && !type2) {
      throw InvariantViolation("agent " + inst_.agent_name(a) +
                               " is neither type-1 nor type-2");
    }
  }
}

void PrimalDual::run_free_promotions() {
  for (;;) {
    bool moved = false;
    for (AgentId a = 0; a < inst_.num_agents(); ++a) {
      const ProgramId p = most_preferred_matchable(a);
      if (p == kNone) continue;
      TwoCostEvent event;
      if (tracing()) {
        event.kind = TwoCostEventKind::kFreePromotion;
        event.agent = a;
        event.program = p;
        event.thresholds = threshold_snapshot();
        event.tight_edges = tight_edges(a);
      }
      move(a, p);
      if (tracing()) {
        event.matching = matching_snapshot();
        emit(std::move(event));
      }
      moved = true;
      break;
    }
    if (!moved) return;
  }
}

void PrimalDual::run() {
  const int na = inst_.num_agents();
  // Greedy start: each agent with a cost-c1 neighbor takes its favorite one.
  for (AgentId a = 0; a < na; ++a) {
    for (ProgramId p : inst_.agent_prefs(a)) {
      if (inst_.cost(p) == dual_.c1) {
        m_.assign(a, p);
        break;
      }
    }
  }
  thresh_ = compute_thresholds(inst_, m_).thresh;
  if (options_.check_invariants && !is_envy_free(inst_, m_)) {
    throw InvariantViolation("initial matching is not envy-free");
  }
  if (tracing()) {
    TwoCostEvent event;
    event.kind = TwoCostEventKind::kInit;
    event.matching = matching_snapshot();
    event.thresholds = threshold_snapshot();
    emit(std::move(event));
  }

  for (;;) {
    AgentId a = kNone;
    for (AgentId i = 0; i < na; ++i) {
      if (!m_.is_matched(i)) {
        a = i;
        break;
      }
    }
    if (a == kNone) break;

    while (!m_.is_matched(a)) {
      tick();
      check_agent_types();
      bump_y(a);
      if (tracing()) {
        TwoCostEvent event;
        event.kind = TwoCostEventKind::kDualBump;
        event.agent = a;
        event.value = dual_.y[a];
        event.tight_edges = tight_edges(a);
        event.thresholds = threshold_snapshot();
        emit(std::move(event));
      }

      const ProgramId direct = most_preferred_matchable(a);
      if (direct != kNone) {
        move(a, direct);
        if (tracing()) {
          TwoCostEvent event;
          event.kind = TwoCostEventKind::kMatchEdge;
          event.agent = a;
          event.program = direct;
          event.matching = matching_snapshot();
          emit(std::move(event));
        }
        run_free_promotions();
        continue;
      }

      // Programs selected as p during this round; each may be chosen once.
      std::set<ProgramId> selected;
      auto candidates = candidate_set(a);
      if (tracing()) {
        TwoCostEvent event;
        event.kind = TwoCostEventKind::kCandidateSet;
        event.agent = a;
        event.programs = candidates;
        emit(std::move(event));
      }
      while (!candidates.empty()) {
        tick();
        // a' is the threshold agent of a's favorite program in P(a).
        const AgentId promoted = thresh_[candidates.front()];
        // p: the program in P(a, a') that a' likes least.
        ProgramId target = kNone;
        for (ProgramId p : candidates) {
          if (thresh_[p] != promoted) continue;
          if (target == kNone ||
              inst_.agent_prefers(promoted, target, p)) {
            target = p;
          }
        }
        if (options_.check_invariants) {
          if (!selected.insert(target).second) {
            throw InvariantViolation("program " + inst_.program_name(target) +
                                     " selected twice for agent " +
                                     inst_.agent_name(a));
          }
          if (static_cast<int>(selected.size()) > max_agent_list_) {
            throw InvariantViolation("z budget of agent " +
                                     inst_.agent_name(a) + " exceeded");
          }
        }

        const Triplet t{promoted, target, a};
        raise_z(t);
        if (tracing()) {
          TwoCostEvent event;
          event.kind = TwoCostEventKind::kDualZ;
          event.agent = promoted;
          event.other = a;
          event.program = target;
          event.value = dual_.z_at(t);
          emit(std::move(event));
        }

        const ProgramId seat = most_preferred_matchable(promoted);
        if (seat == kNone) {
          throw InvariantViolation("threshold agent " +
                                   inst_.agent_name(promoted) +
                                   " has no matchable edge after the z update");
        }
        TwoCostEvent event;
        if (tracing()) {
          event.kind = TwoCostEventKind::kPromoteThreshold;
          event.agent = promoted;
          event.other = a;
          event.program = seat;
          event.tight_edges = tight_edges(promoted);
        }
        move(promoted, seat);
        if (tracing()) {
          event.matching = matching_snapshot();
          event.other_tight_edges = tight_edges(a);
          emit(std::move(event));
        }

        run_free_promotions();
        candidates = candidate_set(a);
        if (tracing()) {
          TwoCostEvent set_event;
          set_event.kind = TwoCostEventKind::kCandidateSet;
          set_event.agent = a;
          set_event.programs = candidates;
          emit(std::move(set_event));
        }
      }
    }
  }
  check_agent_types();
}

void require_two_cost(const Instance& inst, std::int64_t& c1,
                      std::int64_t& c2) {
  std::set<std::int64_t> costs;
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    if (inst.quota(p) != 0) {
      throw PreconditionViolated("program " + inst.program_name(p) +
                                 " has a nonzero quota");
    }
    costs.insert(inst.cost(p));
  }
  if (costs.size() > 2) {
    throw PreconditionViolated("instance has " + std::to_string(costs.size()) +
                               " distinct costs; at most two are supported");
  }
  c1 = costs.empty() ? 0 : *costs.begin();
  c2 = costs.empty() ? 0 : *costs.rbegin();
}

}  // namespace

Matching free_promotions(const Instance& inst, const DualState& dual,
                         Matching m) {
  if (!is_envy_free(inst, m)) {
    throw NotEnvyFree("free promotions need an envy-free matching");
  }
  TwoCostOptions options;
  PrimalDual state(inst, dual, std::move(m), options);
  state.run_free_promotions();
  return state.take_matching();
}

namespace {

void fill_final_state(const Instance& inst, const Matching& m, TwoCostEvent& done) {
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    done.matching.emplace_back(a, m.program_of(a));
  }
  const auto th = compute_thresholds(inst, m);
  for (ProgramId p = 0; p < inst.num_programs(); ++p) {
    if (th.thresh[p] != kNone) done.thresholds.emplace_back(p, th.thresh[p]);
  }
}

}  // namespace

TwoCostResult solve_two_cost(const Instance& inst,
                             const TwoCostOptions& options) {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  require_two_cost(inst, c1, c2);
  require_nonempty_lists(inst);

  TwoCostResult result;
  if (c1 == c2) {
    // One cost: every A-perfect matching costs |A|·c1 and first choices are
    // envy-free, so this is optimal. The dual y = c1 certifies it.
    Matching m(inst);
    for (AgentId a = 0; a < inst.num_agents(); ++a) {
      m.assign(a, inst.agent_prefs(a).front());
    }
    result.dual = DualState::initial(inst, c1, c2);
    result.solution = make_solution(inst, std::move(m));
    if (options.trace != nullptr) {
      TwoCostEvent done;
      done.kind = TwoCostEventKind::kDone;
      fill_final_state(inst, result.solution.matching, done);
      options.trace->push_back(std::move(done));
    }
    return result;
  }

  PrimalDual state(inst, DualState::initial(inst, c1, c2), Matching(inst),
                   options);
  state.run();
  result.dual = state.dual();
  result.solution = make_solution(inst, state.take_matching());

  // Terminal guarantees, checked on every run.
  const auto& sol = result.solution;
  if (!sol.a_perfect || !sol.stable) {
    throw InvariantViolation("two-cost result is not A-perfect and stable");
  }
  const auto check = check_dual_feasible(inst, result.dual);
  if (!check.feasible) {
    throw InvariantViolation("final dual setting is infeasible");
  }
  const auto lhs = edge_lhs_table(inst, result.dual);
  for (AgentId a = 0; a < inst.num_agents(); ++a) {
    const ProgramId p = sol.matching.program_of(a);
    if (lhs[inst.edge_id(a, p)] != inst.cost(p)) {
      throw InvariantViolation("matched edge of " + inst.agent_name(a) +
                               " is not tight");
    }
  }
  const std::int64_t ell_a = metrics(inst).max_agent_list;
  if (sol.total_cost > ell_a * check.objective) {
    throw InvariantViolation("cost exceeds ℓ_a times the dual objective");
  }
  if (options.trace != nullptr) {
    TwoCostEvent done;
    done.kind = TwoCostEventKind::kDone;
    fill_final_state(inst, sol.matching, done);
    options.trace->push_back(std::move(done));
  }
  return result;
}

}  // namespace hrcap
