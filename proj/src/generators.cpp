#include "hrcap/generators.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "hrcap/errors.hpp"

namespace hrcap {

namespace {

// Uniform in [0, bound). std::uniform_int_distribution is not portable across
// standard libraries, so golden files would drift.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[draw(rng, i)]);
  }
}

std::vector<int> permutation(std::mt19937_64& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  shuffle(rng, v);
  return v;
}

std::vector<std::string> numbered(const char* prefix, int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Shared construction for both reductions, with `dummies` u/w pairs per set.
ReductionArtifact build_reduction(int n, const std::vector<std::vector<int>>& sets,
                                  int dummies) {
  const int m = static_cast<int>(sets.size());
  std::vector<std::vector<int>> containing(n);
  for (int j = 0; j < m; ++j) {
    for (int e : sets[j]) {
      if (e < 0 || e >= n) {
        throw InvalidParams("set " + std::to_string(j + 1) +
                            " has element out of range");
      }
      containing[e].push_back(j);
    }
  }
  for (int e = 0; e < n; ++e) {
    if (containing[e].empty()) {
      throw UncoverableElement("element " + std::to_string(e + 1) +
                               " is in no set");
    }
    auto& c = containing[e];
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw InvalidParams("element " + std::to_string(e + 1) +
                          " listed twice in one set");
    }
  }

  const int n_agents = n + m * dummies;
  const int n_programs = m + m * dummies;
  auto u = [&](int j, int l) { return n + j * dummies + l; };
  auto w = [&](int j, int l) { return m + j * dummies + l; };

  std::vector<std::string> agent_names = numbered("a", n);
  std::vector<std::string> program_names = numbered("c", m);
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < dummies; ++l) {
      agent_names.push_back("u" + std::to_string(j + 1) + "_" +
                            std::to_string(l + 1));
    }
  }
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < dummies; ++l) {
      program_names.push_back("w" + std::to_string(j + 1) + "_" +
                              std::to_string(l + 1));
    }
  }

  std::vector<std::vector<ProgramId>> agent_prefs(n_agents);
  std::vector<std::vector<AgentId>> program_prefs(n_programs);
  for (int e = 0; e < n; ++e) agent_prefs[e] = containing[e];
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < dummies; ++l) {
      agent_prefs[u(j, l)] = {j, w(j, l)};
      program_prefs[j].push_back(u(j, l));
      program_prefs[w(j, l)] = {u(j, l)};
    }
  }
  for (int e = 0; e < n; ++e) {
    for (int j : containing[e]) program_prefs[j].push_back(e);
  }

  std::vector<std::int64_t> quota(n_programs, 0);
  std::vector<std::int64_t> cost(n_programs, 0);
  std::fill(cost.begin(), cost.begin() + m, 1);

  ReductionArtifact out{
      Instance(std::move(agent_names), std::move(program_names),
               std::move(agent_prefs), std::move(program_prefs),
               std::move(quota), std::move(cost)),
      0,
      {}};
  out.meta.n_elements = n;
  out.meta.n_sets = m;
  out.meta.dummies = dummies;
  out.meta.sets = sets;
  return out;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    out.push_back(line);
  }
  return out;
}

std::vector<long long> ints_of(const std::string& line, int line_no) {
  std::vector<long long> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Instance random_instance(const RandomParams& params) {
  if (params.n_agents < 1 || params.n_programs < 1 || params.max_list < 1) {
    throw InvalidParams("sizes must be positive");
  }
  if (params.quota_lo < 0 || params.quota_hi < params.quota_lo) {
    throw InvalidParams("bad quota range");
  }
  if (params.cost_set.empty()) throw InvalidParams("empty cost set");
  for (auto c : params.cost_set) {
    if (c < 0) throw InvalidParams("negative cost");
  }

  std::mt19937_64 rng(params.seed);
  const int na = params.n_agents;
  const int np = params.n_programs;
  // Position of each program / agent in the master order.
  std::vector<int> program_pos(np), agent_pos(na);
  if (params.master_list) {
    auto po = permutation(rng, np);
    auto ao = permutation(rng, na);
    for (int i = 0; i < np; ++i) program_pos[po[i]] = i;
    for (int i = 0; i < na; ++i) agent_pos[ao[i]] = i;
  }

  const int cap = std::min(params.max_list, np);
  std::vector<std::vector<ProgramId>> agent_prefs(na);
  std::vector<std::vector<AgentId>> program_prefs(np);
  std::vector<int> pool(np);
  for (AgentId a = 0; a < na; ++a) {
    const int len = 1 + static_cast<int>(draw(rng, cap));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < len; ++i) {
      std::swap(pool[i], pool[i + draw(rng, np - i)]);
    }
    agent_prefs[a].assign(pool.begin(), pool.begin() + len);
    if (params.master_list) {
      std::sort(agent_prefs[a].begin(), agent_prefs[a].end(),
                [&](int x, int y) { return program_pos[x] < program_pos[y]; });
    }
    for (ProgramId p : agent_prefs[a]) program_prefs[p].push_back(a);
  }
  for (ProgramId p = 0; p < np; ++p) {
    if (params.master_list) {
      std::sort(program_prefs[p].begin(), program_prefs[p].end(),
                [&](int x, int y) { return agent_pos[x] < agent_pos[y]; });
    } else {
      shuffle(rng, program_prefs[p]);
    }
  }

  std::vector<std::int64_t> quota(np), cost(np);
  const auto span = static_cast<std::uint64_t>(params.quota_hi - params.quota_lo) + 1;
  for (ProgramId p = 0; p < np; ++p) {
    quota[p] = params.quota_lo + static_cast<std::int64_t>(draw(rng, span));
    cost[p] = params.cost_set[draw(rng, params.cost_set.size())];
  }
  return Instance(numbered("a", na), numbered("p", np), std::move(agent_prefs),
                  std::move(program_prefs), std::move(quota), std::move(cost));
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return InvalidParams("not a rational: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw bad();
    }
    return v;
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
    if (r.den == 0) throw bad();
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) throw bad();
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = (whole.empty() ? 0 : parse_int(whole)) * r.den + parse_int(frac);
  } else {
    r.num = parse_int(text);
  }
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

ReductionArtifact from_set_cover(const SetCoverInput& input) {
  if (input.k < 1) throw InvalidParams("k must be at least 1");
  if (input.n < 1) throw InvalidParams("universe must be non-empty");
  auto out = build_reduction(input.n, input.sets, input.n);
  out.budget = static_cast<std::int64_t>(input.k + 1) * input.n;
  out.meta.source = "setcover";
  out.meta.k = input.k;
  return out;
}

ReductionArtifact from_vertex_cover(const Graph& graph, int k, Rational eps) {
  // 0 < num/den ≤ 1/2
  if (eps.den <= 0 || eps.num <= 0 || 2 * eps.num > eps.den) {
    throw InvalidParams("eps must lie in (0, 1/2]");
  }
  if (k < 1) throw InvalidParams("k must be at least 1");
  if (graph.edges.empty()) throw InvalidParams("graph has no edges");
  std::vector<std::pair<int, int>> seen;
  std::vector<std::vector<int>> sets(graph.n_vertices);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    auto [u, v] = graph.edges[e];
    if (u < 0 || v < 0 || u >= graph.n_vertices || v >= graph.n_vertices) {
      throw InvalidParams("edge endpoint out of range");
    }
    if (u == v) throw InvalidParams("self-loop");
    seen.emplace_back(std::min(u, v), std::max(u, v));
    sets[u].push_back(static_cast<int>(e));
    sets[v].push_back(static_cast<int>(e));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidParams("parallel edge");
  }
  const int n = static_cast<int>(graph.edges.size());
  // f = ⌈2n(1−ε)/ε⌉ = ⌈2n(den−num)/num⌉
  const std::int64_t f = ceil_div(2 * static_cast<std::int64_t>(n) * (eps.den - eps.num),
                                  eps.num);
  if (f > std::numeric_limits<int>::max() / std::max(1, graph.n_vertices)) {
    throw InvalidParams("dummy count too large");
  }
  auto out = build_reduction(n, sets, static_cast<int>(f));
  out.budget = n + static_cast<std::int64_t>(k) * f;
  out.meta.source = "vertexcover";
  out.meta.k = k;
  out.meta.eps = eps;
  out.meta.n_vertices = graph.n_vertices;
  return out;
}

Matching cover_witness(const ReductionArtifact& artifact,
                       const std::vector<int>& cover) {
  const auto& meta = artifact.meta;
  const auto& inst = artifact.instance;
  const int n = meta.n_elements;
  const int m = meta.n_sets;
  const int d = meta.dummies;
  std::vector<bool> open(m, false);
  for (int j : cover) {
    if (j < 0 || j >= m) throw InvalidParams("cover names an unknown set");
    open[j] = true;
  }
  Matching out(inst);
  for (AgentId a = 0; a < n; ++a) {
    for (ProgramId p : inst.agent_prefs(a)) {
      if (open[p]) {
        out.assign(a, p);
        break;
      }
    }
    if (!out.is_matched(a)) {
      throw InvalidParams("cover misses element " + std::to_string(a + 1));
    }
  }
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < d; ++l) {
      out.assign(n + j * d + l, open[j] ? j : m + j * d + l);
    }
  }
  return out;
}

SetCoverInput parse_set_cover(std::string_view text) {
  const auto lines = lines_of(text);
  SetCoverInput out;
  bool header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (blank(lines[i])) continue;
    const auto v = ints_of(lines[i], line_no);
    if (!header) {
      if (v.size() != 2 || v[0] < 1) {
        throw ParseError(line_no, "expected header 'n k'");
      }
      out.n = static_cast<int>(v[0]);
      out.k = static_cast<int>(v[1]);
      header = true;
      continue;
    }
    std::vector<int> set;
    for (long long e : v) {
      if (e < 1 || e > out.n) {
        throw ParseError(line_no, "element " + std::to_string(e) + " out of range");
      }
      set.push_back(static_cast<int>(e - 1));
    }
    out.sets.push_back(std::move(set));
  }
  if (!header) throw ParseError(0, "empty set cover file");
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = lines_of(text);
  Graph out;
  bool header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (blank(lines[i])) continue;
    const auto v = ints_of(lines[i], line_no);
    if (!header) {
      if (v.size() != 1 || v[0] < 1) {
        throw ParseError(line_no, "expected header 'n_vertices'");
      }
      out.n_vertices = static_cast<int>(v[0]);
      header = true;
      continue;
    }
    if (v.size() != 2) throw ParseError(line_no, "expected 'u v'");
    for (long long x : v) {
      if (x < 1 || x > out.n_vertices) {
        throw ParseError(line_no, "vertex " + std::to_string(x) + " out of range");
      }
    }
    out.edges.emplace_back(static_cast<int>(v[0] - 1), static_cast<int>(v[1] - 1));
  }
  if (!header) throw ParseError(0, "empty graph file");
  return out;
}

}  // namespace hrcap
