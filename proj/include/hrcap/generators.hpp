#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap {

struct RandomParams {
  int n_agents = 1;
  int n_programs = 1;
  int max_list = 1;
  std::int64_t quota_lo = 0;
  std::int64_t quota_hi = 0;
  std::vector<std::int64_t> cost_set{0};
  bool master_list = false;
  std::uint64_t seed = 0;
};

// Deterministic for a given parameter set on every platform: the generator is
// mt19937_64 and all sampling goes through our own bounded draw. Agents are
// a1..an, programs p1..pm. Throws InvalidParams.
Instance random_instance(const RandomParams& params);

// Exact ε = num/den.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Accepts "1/2", "0.25", "1". Throws InvalidParams.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

struct SetCoverInput {
  int n = 0;                           // elements are 0..n-1
  std::vector<std::vector<int>> sets;  // element indices
  int k = 0;
};

struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints
};

struct ReductionMeta {
  std::string source;      // "setcover" or "vertexcover"
  int n_elements = 0;      // element-agents
  int n_sets = 0;
  int k = 0;
  int dummies = 0;         // dummy agents per set (n, or f for vertex cover)
  std::optional<Rational> eps;
  int n_vertices = 0;      // vertex cover only
  std::vector<std::vector<int>> sets;
};

struct ReductionArtifact {
  Instance instance;
  std::int64_t budget = 0;  // k′
  ReductionMeta meta;
};

// Element-agents a1..an, then u{j}_{l}; subset-programs c1..cm, then w{j}_{l}.
// Subset-programs have cost 1, dummy programs cost 0, all quotas 0.
// Throws InvalidParams (k < 1, bad element index) or UncoverableElement.
ReductionArtifact from_set_cover(const SetCoverInput& input);

// Universe = edges, one set per vertex. f = ⌈2·n·(1−ε)/ε⌉ with n the number
// of edges, k′ = n + k·f. Requires 0 < ε ≤ 1/2 and a simple graph.
ReductionArtifact from_vertex_cover(const Graph& graph, int k, Rational eps);

// Envy-free A-perfect matching built from a cover (set indices): each element
// goes to its most preferred opened set, dummies of opened sets to their
// subset-program, the other dummies to their own dummy program.
Matching cover_witness(const ReductionArtifact& artifact,
                       const std::vector<int>& cover);

// "n k" then one set per line of 1-based element indices.
SetCoverInput parse_set_cover(std::string_view text);
// "n_vertices" then one "u v" line per edge, 1-based.
Graph parse_graph(std::string_view text);

}  // namespace hrcap
