#pragma once

// Job descriptions and runners behind the polyred command line.

#include "polyred/coxeter/diagram.hpp"
#include "polyred/groupkit/group.hpp"
#include "polyred/rings/ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyred {

enum ExitCode { kExitOk = 0, kExitOther = 1, kExitParse = 2, kExitBudget = 3, kExitVerify = 4 };

struct JobSpec {
  std::string command;               // reduce, verify, hemi, mobius, atlas
  std::string group;                 // diagram symbol
  std::vector<std::string> moduli;   // one row per modulus
  std::vector<std::string> ideals;   // mobius
  std::string primes;                // atlas range "lo..hi"
  std::string kind = "all";          // atlas filter: all, inert, split, ramified
  std::uint64_t budget = kDefaultBudget;
  bool search_duality = false;       // fall back to an element search
  std::string out;
  std::string format = "jsonl";

  /// Command line equivalent (without the program name).
  std::vector<std::string> to_args() const;
  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Thrown by parse_job for --help; what() is the help text.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse command line arguments (without the program name). Throws
/// Error(Parse) on bad usage.
JobSpec parse_job(const std::vector<std::string>& args);

struct JobResult {
  std::vector<nlohmann::json> rows;
  int exit_code = kExitOk;
};

/// Coefficient ring for a modulus: Z[tau] residues when the text names an
/// element of Z[tau] or the diagram needs tau; GF(p) or Z_m otherwise.
Ring ring_for_modulus(const Diagram& d, std::string_view modulus);

int exit_code_for(const std::exception& e);

nlohmann::json reduce_row(const Diagram& d, const std::string& modulus, std::uint64_t budget,
                          bool search_duality);
JobResult run_job(const JobSpec& job);

/// "jsonl" or "table".
std::string render(const JobResult& result, const std::string& format);

}  // namespace polyred
