#ifndef LAMINA_CLI_HPP_
#define LAMINA_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lamina/serialize.hpp"

namespace lamina::cli {

enum class Status { ok, violation, error };

std::string to_string(Status status);

struct CommandResult {
  Status status = Status::ok;
  std::vector<Json> payload;
  std::vector<std::string> diagnostics;

  /// 0 ok, 1 violation, 2 error.
  int exit_code() const;
};

/// Environment variable naming the default atlas path.
inline constexpr const char* kAtlasEnv = "LAMINA_ATLAS";
inline constexpr const char* kDefaultAtlasPath = "lamina-atlas.jsonl";

std::filesystem::path default_atlas_path();

CommandResult cmd_orbit(const std::string& theta);
CommandResult cmd_address(const std::string& theta);
CommandResult cmd_portrait(const std::string& theta1, const std::string& theta2);

CommandResult cmd_atlas_build(int max_period, const std::filesystem::path& out);
/// Exactly one of angle / address. The address is a CSV of periods, each
/// optionally suffixed with ":p/q" for a labelled arrow (e.g. "1,3:1/3").
CommandResult cmd_atlas_query(const std::filesystem::path& atlas, const std::optional<std::string>& angle,
                              const std::optional<std::string>& address);
CommandResult cmd_atlas_info(const std::filesystem::path& atlas);

CommandResult cmd_verify(int max_period, std::optional<int> depth);

/// `angles` is "A,B", the characteristic arc of the portrait to draw.
CommandResult cmd_render_portrait(const std::string& angles, const std::filesystem::path& out);
CommandResult cmd_render_wakes(int max_period, const std::filesystem::path& out);

/// Machine-readable: one JSON record per line, payload first, then a status
/// record. Pretty: an indented, human-oriented dump.
void emit(const CommandResult& result, std::ostream& out, bool pretty);

/// Parses argv and runs the command; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lamina::cli

#endif  // LAMINA_CLI_HPP_
