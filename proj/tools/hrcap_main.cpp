#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hrcap/cli.hpp"

namespace {

std::vector<std::int64_t> parse_costs(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  hrcap::RunConfig config;
  CLI::App app{"Capacity planning for hospital/residents matching"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("--alg", config.algorithm, "algorithm")
      ->check(CLI::IsMember(
          {"minmax", "psum", "lp", "twocost", "oracle-minsum", "oracle-minmax"}));
  solve->add_option("--in", config.input, "instance file")->required();
  solve->add_option("--out", config.output, "output file (default stdout)");
  solve->add_option("--format", config.format)->check(CLI::IsMember({"json", "text"}));
  solve->add_flag("--trace", config.trace, "include the step trace");
  solve->add_option("--limit", config.limit, "oracle search space limit");
  solve->add_option("--workers", config.workers, "oracle worker threads")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("--in", config.input, "instance file")->required();
  verify->add_option("--solution", config.solution, "solution JSON")->required();
  verify->add_option("--out", config.output);
  verify->add_option("--format", config.format)->check(CLI::IsMember({"json", "text"}));

  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  auto* random = gen->add_subcommand("random", "random instance");
  std::string costs = "0,1";
  auto& rp = config.random;
  random->add_option("--agents", rp.n_agents)->required();
  random->add_option("--programs", rp.n_programs)->required();
  random->add_option("--max-list", rp.max_list)->required();
  random->add_option("--quota-lo", rp.quota_lo);
  random->add_option("--quota-hi", rp.quota_hi);
  random->add_option("--costs", costs, "comma-separated cost set");
  random->add_flag("--master", rp.master_list, "derive lists from master orders");
  random->add_option("--seed", rp.seed);
  random->add_option("--out", config.output);

  auto* reduce = app.add_subcommand("reduce", "reduction instances");
  reduce->require_subcommand(1);
  auto* setcover = reduce->add_subcommand("setcover", "from a set cover instance");
  setcover->add_option("--in", config.input)->required();
  setcover->add_option("--k", config.k, "override k from the file");
  setcover->add_option("--out", config.output);
  auto* vertexcover = reduce->add_subcommand("vertexcover", "from a graph");
  vertexcover->add_option("--in", config.input)->required();
  vertexcover->add_option("--k", config.k)->required();
  vertexcover->add_option("--eps", config.eps, "0 < eps <= 1/2, e.g. 1/4 or 0.25");
  vertexcover->add_option("--out", config.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error maps onto the input-error code.
    return app.exit(e) == 0 ? hrcap::kExitOk : hrcap::kExitInput;
  }

  if (solve->parsed()) {
    config.subcommand = hrcap::Subcommand::kSolve;
  } else if (verify->parsed()) {
    config.subcommand = hrcap::Subcommand::kVerify;
  } else if (random->parsed()) {
    config.subcommand = hrcap::Subcommand::kGenRandom;
    try {
      rp.cost_set = parse_costs(costs);
    } catch (const std::exception&) {
      std::cerr << "invalid parameters: bad --costs '" << costs << "'\n";
      return hrcap::kExitInput;
    }
  } else if (setcover->parsed()) {
    config.subcommand = hrcap::Subcommand::kReduceSetCover;
  } else {
    config.subcommand = hrcap::Subcommand::kReduceVertexCover;
  }
  return hrcap::run(config, std::cout, std::cerr);
}
