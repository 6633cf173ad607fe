#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfw/io.hpp"

namespace qfw {

inline constexpr const char* kToolVersion = "1.0.0";

struct CommandOptions {
  std::uint64_t seed = 0;
  std::size_t depth = 2;  // dual-sequence
};

struct CommandResult {
  Report report;
  /// Extra document produced by the command (the coring for `sweedler`, the
  /// summand table for `decompose`), otherwise null.
  json output;
};

/// Names accepted by run_command.
const std::vector<std::string>& command_names();

/// Runs one subcommand on parsed JSON inputs. Certificates in the resulting
/// report are re-checked by the independent verifier before returning; a
/// failure there raises Internal.
CommandResult run_command(const std::string& name, const std::vector<json>& inputs, const CommandOptions& opt);

/// The serialized report: report fields plus seed, tool version and, when
/// present, the command output under "output".
json result_to_json(const CommandResult& r, std::uint64_t seed);

}  // namespace qfw
