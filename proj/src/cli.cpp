#include "hrcap/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "hrcap/errors.hpp"
#include "hrcap/io.hpp"
#include "hrcap/minmax.hpp"
#include "hrcap/minsum_approx.hpp"
#include "hrcap/oracle.hpp"
#include "hrcap/two_cost.hpp"

namespace hrcap {

namespace {

std::string read_file(const std::string& path) {
  if (path.empty()) throw ValidationError("no input file given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + config.output + "'");
  file << text;
}

std::string render(const RunConfig& config, const Json& doc) {
  if (config.format == "text") return json_to_text(doc);
  return doc.dump(2) + "\n";
}

// Maps library errors onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidParams& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}

Json reduction_header(const ReductionArtifact& r) {
  Json j;
  j["source"] = r.meta.source;
  j["elements"] = r.meta.n_elements;
  j["sets"] = r.meta.n_sets;
  j["k"] = r.meta.k;
  j["dummies"] = r.meta.dummies;
  if (r.meta.eps) j["eps"] = to_string(*r.meta.eps);
  if (r.meta.source == "vertexcover") j["vertices"] = r.meta.n_vertices;
  j["budget"] = r.budget;
  return j;
}

std::string reduction_text(const ReductionArtifact& r) {
  std::string out;
  const Json header = reduction_header(r);
  for (const auto& [key, value] : header.items()) {
    out += "# " + key + " " + (value.is_string() ? value.get<std::string>() : value.dump()) +
           "\n";
  }
  return out + serialize_instance(r.instance);
}

}  // namespace

int run_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(read_file(config.input));
    const auto& alg = config.algorithm;
    AugmentedSolution sol;
    std::optional<std::int64_t> dual_objective;
    Json trace = Json::array();
    if (alg == "minmax") {
      sol = solve_minmax(inst);
    } else if (alg == "psum") {
      sol = solve_p_approx(inst);
    } else if (alg == "lp") {
      LpApproxTrace lp;
      sol = solve_lp_approx(inst, &lp);
      for (const auto& promo : lp.promotions) {
        trace.push_back(lp_promotion_to_json(inst, promo));
      }
    } else if (alg == "twocost") {
      std::vector<TwoCostEvent> events;
      TwoCostOptions options;
      if (config.trace) options.trace = &events;
      auto result = solve_two_cost(inst, options);
      sol = std::move(result.solution);
      dual_objective = result.dual.objective();
      for (std::size_t i = 0; i < events.size(); ++i) {
        trace.push_back(two_cost_event_to_json(inst, events[i], static_cast<int>(i)));
      }
    } else if (alg == "oracle-minsum" || alg == "oracle-minmax") {
      OracleLimits limits;
      limits.max_search_space = config.limit;
      limits.workers = config.workers;
      sol = alg == "oracle-minsum" ? brute_force_minsum(inst, limits)
                                   : brute_force_minmax(inst, limits);
    } else {
      throw InvalidParams("unknown algorithm '" + alg + "'");
    }

    // Never report what the solver claims; recheck.
    sol.a_perfect = sol.matching.is_a_perfect();
    sol.stable = is_stable_augmented(inst, sol.matching).stable;
    Json doc = solution_to_json(inst, sol, alg, dual_objective);
    if (config.trace) doc["trace"] = std::move(trace);
    emit(config, render(config, doc), out);
    return kExitOk;
  });
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(read_file(config.input));
    const auto claim = parse_solution(inst, read_file(config.solution));
    const auto report = verify_solution(inst, claim);
    emit(config, render(config, verify_report_to_json(inst, report)), out);
    for (const auto& v : report.violations) err << "violation: " << v << "\n";
    return report.ok ? kExitOk : kExitViolation;
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.subcommand) {
    case Subcommand::kSolve:
      return run_solve(config, out, err);
    case Subcommand::kVerify:
      return run_verify(config, out, err);
    case Subcommand::kGenRandom:
      return guarded(err, [&] {
        emit(config, serialize_instance(random_instance(config.random)), out);
        return kExitOk;
      });
    case Subcommand::kReduceSetCover:
      return guarded(err, [&] {
        auto input = parse_set_cover(read_file(config.input));
        if (config.k) input.k = *config.k;
        emit(config, reduction_text(from_set_cover(input)), out);
        return kExitOk;
      });
    case Subcommand::kReduceVertexCover:
      return guarded(err, [&] {
        if (!config.k) throw InvalidParams("--k is required");
        const auto graph = parse_graph(read_file(config.input));
        emit(config,
             reduction_text(from_vertex_cover(graph, *config.k, parse_rational(config.eps))),
             out);
        return kExitOk;
      });
  }
  return kExitInput;
}

}  // namespace hrcap
