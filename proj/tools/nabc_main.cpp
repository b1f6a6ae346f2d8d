#include <iostream>

#include <CLI11.hpp>

#include "nabc/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of non-Archimedean ABC theorems for polynomials"};
  nabc::CommandOptions opts;
  std::string command;
  std::string format = "text";
  app.add_option("command", command, "one of: norm counting radical sqfree hasse wronskian independence verify-basic "
                                     "verify-abc1 verify-abc2 corollaries corpus-run")
      ->required();
  app.add_option("--instance", opts.instance_path, "instance document");
  app.add_option("--rho", opts.rho, "comma-separated rational radii (log_p r)");
  app.add_option("--ell", opts.ell, "truncation level");
  app.add_option("--s", opts.s, "p-power level");
  app.add_option("--k", opts.k, "relative primality level for verify-abc2");
  app.add_option("--gamma", opts.gamma, "comma-separated Hasse multi-index");
  app.add_option("--seed", opts.seed, "corpus seed");
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--max-n", opts.max_n, "corpus: n (instances have n + 1 functions)");
  app.add_option("--oracle-degree-cap", opts.oracle_degree_cap, "largest degree handed to the factor oracle");
  app.add_option("--count", opts.count, "corpus: number of instances");
  app.add_option("--degree", opts.degree, "corpus: degree bound");
  app.add_option("--vars", opts.m, "corpus: number of variables");
  app.add_option("--p", opts.p, "corpus: prime");
  app.add_option("--chars", opts.chars, "corpus: zero, positive or mixed");
  app.add_option("--mode", opts.mode, "corpus: pairwise, k-wise or none");
  app.add_option("--vanishing", opts.vanishing, "corpus: include vanishing subsums");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  opts.machine = format == "machine";
  auto result = nabc::run_command(command, opts);
  (result.exit_code == 1 && result.output.rfind("error:", 0) == 0 ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
