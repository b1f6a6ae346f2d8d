#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nabc/corpus.hpp"

namespace nabc {

struct CommandOptions {
  std::string instance_path;
  std::string rho;  // comma-separated rationals
  std::optional<unsigned> ell;
  std::optional<unsigned> s;
  std::optional<unsigned> k;
  std::string gamma;  // comma-separated exponents for hasse
  std::uint64_t seed = 0;
  bool machine = false;
  unsigned max_n = 6;
  unsigned oracle_degree_cap = 8;
  std::size_t count = 20;
  unsigned degree = 4;
  unsigned m = 2;
  std::uint32_t p = 3;
  std::string chars = "mixed";
  std::string mode = "pairwise";
  bool vanishing = true;
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

const std::vector<std::string>& command_names();
std::string usage_text();

/// Runs one command; errors become exit code 1 with a diagnostic line.
CommandResult run_command(const std::string& cmd, const CommandOptions& opts);

/// Rationals from "0,1/2,3"; throws PARSE_ERROR.
std::vector<Rational> parse_rho_list(const std::string& text);

/// The corpus behind corpus-run for the given options.
CorpusSpec corpus_spec_from(const CommandOptions& opts);

}  // namespace nabc
