#include "latdyn/cli.hpp"

#include "commands.hpp"
#include "latdyn/errors.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <sstream>

namespace latdyn::cli {

void add_common(CLI::App* sub, CommonOptions& o, unsigned which) {
  if (which & kSeed) sub->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  sub->add_option("--out,-o", o.out, "output file ('-' for stdout)")->capture_default_str();
  if (which & kSummary) sub->add_option("--summary", o.summary, "also write a JSON summary to this file");
  if (which & kThreads)
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores); output does not depend on it")
        ->capture_default_str();
  // Expanded by dispatch before parsing; registered here for --help.
  sub->add_option("--config", o.config, "key=value file; flags on the command line win");
}

RunHeader make_header(const Context& ctx, const std::string& schema, std::optional<std::uint64_t> seed) {
  return {schema, ctx.argv, ctx.config, seed};
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

ConfigExpansion expand_config(const std::vector<std::string>& args) {
  ConfigExpansion ex;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw ValidationError("--config needs a file");
      if (!path.empty()) throw ValidationError("--config given twice");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      if (!path.empty()) throw ValidationError("--config given twice");
      path = args[i].substr(9);
    } else {
      ex.args.push_back(args[i]);
    }
  }
  if (path.empty()) return ex;
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open config file '" + path + "'");
  auto given = [&](const std::string& flag) {
    return std::any_of(ex.args.begin(), ex.args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  std::vector<std::string> extra;
  std::string line;
  for (std::size_t lineno = 1; std::getline(f, line); ++lineno) {
    const std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ValidationError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    if (key.empty() || key.find(' ') != std::string::npos)
      throw ValidationError(path + ":" + std::to_string(lineno) + ": bad key '" + key + "'");
    ex.config.push_back(key + "=" + value);
    const std::string flag = "--" + key;
    if (given(flag)) continue;
    extra.push_back(flag);
    // Several values are separated by blanks.
    std::istringstream vs(value);
    for (std::string v; vs >> v;) extra.push_back(v);
  }
  // Config options follow the subcommand name.
  const auto at = ex.args.empty() ? ex.args.end() : ex.args.begin() + 1;
  ex.args.insert(at, extra.begin(), extra.end());
  return ex;
}

namespace {

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random walks and lattice shapes in R^3", "latdyn"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");
  Registry reg;
  register_walk_commands(app, reg);
  register_section_commands(app, reg);
  register_dioph_commands(app, reg);

  ConfigExpansion ex;
  try {
    ex = expand_config(args);
  } catch (const ValidationError& e) {
    err << "latdyn: error: " << one_line(e.what()) << "\n";
    return 1;
  }

  try {
    std::vector<std::string> reversed(ex.args.rbegin(), ex.args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "latdyn: error: " << one_line(e.what()) << "\n";
    return 1;
  }

  try {
    for (const CLI::App* sub : app.get_subcommands()) {
      Context ctx{args, ex.config, out};
      reg.at(sub)(ctx);
    }
  } catch (const ValidationError& e) {
    err << "latdyn: error: " << one_line(e.what()) << "\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    err << "latdyn: error: " << one_line(e.what()) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "latdyn: failure: " << one_line(e.what()) << "\n";
    return 2;
  }
  return 0;
}

}  // namespace latdyn::cli
