#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "commands.hpp"

namespace cli = quadnet::cli;

int main(int argc, char** argv) {
  CLI::App app{"Torus-level GIT stability of nets of quadrics in P^4, with discriminants, Segre symbols and limits"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  std::string net, pencil, method = "twelve-type", permutations = "all", ops, direction, mix = "dense,sparse,strata",
                       name;
  bool scan = false, refine = false, verify = false;
  int type = 0;
  std::size_t seeds = 8, count = 1000;
  std::uint64_t seed = 7;
  unsigned threads = 0;

  auto* analyze = app.add_subcommand("analyze", "semi-stability verdict for a net");
  analyze->add_option("--net", net, "net expression or net file")->required();
  analyze->add_option("--method", method, "twelve-type, polytope or both")
      ->check(CLI::IsMember({"twelve-type", "polytope", "both"}));
  analyze->add_option("--permutations", permutations, "all or identity")->check(CLI::IsMember({"all", "identity"}));

  auto* disc = app.add_subcommand("discriminant", "discriminant quintic of a net");
  disc->add_option("--net", net, "net expression or net file")->required();

  auto* segre = app.add_subcommand("segre", "Segre symbol of a pencil");
  segre->add_option("--pencil", pencil, "pencil expression or pencil file")->required();

  auto* limit = app.add_subcommand("limit", "flat limit under a one-parameter subgroup");
  limit->add_option("--net", net, "net expression or net file")->required();
  limit->add_option("--ops", ops, "five comma-separated integer weights summing to zero")->required();
  limit->add_option("--direction", direction, "to-zero or to-infinity")
      ->required()
      ->check(CLI::IsMember({"to-zero", "to-infinity"}));

  auto* flags = app.add_subcommand("flags", "flag instability predicates");
  flags->add_option("--net", net, "net expression or net file")->required();
  flags->add_flag("--scan-permutations", scan, "evaluate all 120 coordinate-permutation flags");

  auto* triples = app.add_subcommand("triples", "initial-weight triples for a numerical type");
  triples->add_option("--type", type, "numerical type 1..12")->required()->check(CLI::Range(1, 12));
  triples->add_flag("--refine", refine, "apply cross-elimination (types 5..12)");
  triples->add_option("--seeds", seeds, "seeds per triple for cross-elimination")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "named nets and pencils");
  catalog->add_flag("--verify", verify, "run the regression checks");
  catalog->add_option("--name", name, "a single entry");

  auto* divisor = app.add_subcommand("divisor-check", "divisor class and log-canonical identities");

  auto* fuzz = app.add_subcommand("fuzz", "compare the two stability criteria on random nets");
  fuzz->add_option("--count", count, "number of nets");
  fuzz->add_option("--seed", seed, "master seed");
  fuzz->add_option("--mix", mix, "comma-separated sample kinds: dense, sparse, strata");
  fuzz->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e, std::cerr, std::cerr);
    std::cerr << app.help();
    return cli::exit_code::usage;
  }

  cli::CommandResult result = cli::run([&]() -> cli::CommandResult {
    if (*analyze) return {0, cli::analyze(net, method, permutations)};
    if (*disc) return {0, cli::discriminant(net)};
    if (*segre) return {0, cli::segre(pencil)};
    if (*limit) return {0, cli::limit(net, ops, direction)};
    if (*flags) return {0, cli::flags(net, scan)};
    if (*triples) return {0, cli::triples(type, refine, seeds)};
    if (*catalog) return cli::catalog_command(verify, name);
    if (*divisor) return {0, cli::divisor_check()};
    return {0, cli::fuzz(count, seed, mix, threads)};
  });

  if (result.output.contains("error") && result.exit_code != 0)
    std::cerr << "error: " << result.output["message"].get<std::string>() << '\n';
  if (pretty)
    std::cout << cli::render_pretty(result.output);
  else
    std::cout << result.output.dump() << '\n';
  return result.exit_code;
}
