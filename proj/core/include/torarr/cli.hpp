#pragma once

#include <torarr/arrangement.hpp>
#include <torarr/ospres.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torarr::cli {

// Parsed input document: ambient rank, atom systems, optional display name.
struct ArrangementFile {
  std::size_t ambient_rank = 0;
  std::vector<arrangement::AtomSpec> atoms;
  std::string name;
};

// Strict JSON reader; throws ParseError with field diagnostics, atom-level
// validation errors carry the atom index.
ArrangementFile parse_input(const std::string& text);

// Canonical serialization; parse(serialize(f)) reproduces f byte for byte.
std::string serialize(const ArrangementFile& file);

enum class Format { json, table };

struct Options {
  Format format = Format::json;
  ospres::JConvention j_convention = ospres::JConvention::min;
  std::optional<std::size_t> degree;  // presentation degree cap
  std::size_t random = 0;             // extra random validate instances
  std::uint64_t seed = 0;
  std::size_t max_rank = 3;
  std::size_t max_atoms = 5;
  long long max_entry = 3;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

// Dispatch by name: poset | betti | e2 | matroid | presentation |
// positive-system | validate | conjecture-check.  Throws Error on unknown
// commands, missing input, or malformed documents (exit code 1 at the shell);
// returns exit code 2 when validate finds failures.
CommandResult run_command(const std::string& command,
                          const std::optional<std::string>& input_text,
                          const Options& opt);

struct CheckResult {
  std::string instance;
  std::string check;
  bool pass = false;
  std::string witness;  // exact mismatch data; empty on pass
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Deterministic divisorial instance within the caps; the seed fixes the draw.
ArrangementFile random_arrangement(std::uint64_t seed, std::size_t max_rank,
                                   std::size_t max_atoms, long long max_entry);

// Cross-module consistency checks on the given file (if any) and
// opt.random generated instances.  Failures are entries, never throws.
ValidationReport validate_suite(const std::optional<ArrangementFile>& file,
                                const Options& opt);

}  // namespace torarr::cli
