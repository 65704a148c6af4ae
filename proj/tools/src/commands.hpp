#pragma once

#include "output.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <memory>
#include <ostream>

namespace latdyn::cli {

struct Context {
  std::vector<std::string> argv;
  std::vector<std::string> config;  // key=value entries read from --config
  std::ostream& out;
};

using Runner = std::function<void(Context&)>;
using Registry = std::map<const CLI::App*, Runner>;

// Options shared by most subcommands.
struct CommonOptions {
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string summary;  // optional JSON summary path
  unsigned threads = 0;
  std::string config;
};

// args with "--config FILE" replaced by the file's entries as flags
// (right after the subcommand name), skipping keys already given.
struct ConfigExpansion {
  std::vector<std::string> args;
  std::vector<std::string> config;
};
ConfigExpansion expand_config(const std::vector<std::string>& args);

enum : unsigned { kSeed = 1, kSummary = 2, kThreads = 4 };

// Always --out and --config (key=value file, overridden by flags); the
// others as selected by `which`.
void add_common(CLI::App* sub, CommonOptions& o, unsigned which);

RunHeader make_header(const Context& ctx, const std::string& schema, std::optional<std::uint64_t> seed);

void register_walk_commands(CLI::App& app, Registry& reg);
void register_section_commands(CLI::App& app, Registry& reg);
void register_dioph_commands(CLI::App& app, Registry& reg);

}  // namespace latdyn::cli
