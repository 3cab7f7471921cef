#include "cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/output.hpp"
#include "lowlying/errors.hpp"

namespace lowlying::cli {

namespace {

const Command* find_command(const std::string& name) {
  for (const auto& c : commands()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void usage(std::ostream& err) {
  err << "usage: lowlying <subcommand> [options]\n\nsubcommands:\n";
  for (const auto& c : commands()) err << "  " << c.name << std::string(20 - std::min<std::size_t>(19, c.name.size()), ' ') << c.description << "\n";
  err << "\nrun 'lowlying <subcommand> --help' for options\n";
}

/// Pulls "--config PATH" / "--config=PATH" out of args.
std::string take_config_path(std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a path");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return path;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
  if (!f) throw ConfigError("failed writing " + path);
}

Json config_json(const CLI::App& app) {
  Json cfg = Json::object();
  for (const auto* opt : app.get_options()) {
    if (opt->get_name() == "--help") continue;
    std::string key = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
    auto results = opt->results();
    if (results.empty()) {
      cfg[key] = opt->get_default_str();
    } else {
      cfg[key] = results.back();
    }
  }
  return cfg;
}

int execute(const Command& command, std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  cfg.config_file = take_config_path(args);
  std::vector<std::string> merged;
  if (!cfg.config_file.empty()) merged = config_file_arguments(cfg.config_file);
  // Explicit flags come last, so they win under TakeLast.
  merged.insert(merged.end(), args.begin(), args.end());

  CLI::App app{command.description, "lowlying " + command.name};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->always_capture_default();
  app.add_option("--output,-o", cfg.output, "artifact path, '-' for stdout");
  app.add_option("--format", cfg.format, "csv, json (enumerate also: jsonl)")
      ->check(CLI::IsMember({"csv", "json", "jsonl"}));
  app.add_option("--manifest", cfg.manifest, "run manifest path (default: <output>.manifest.json)");
  app.add_option("--seed", cfg.seed, "seed for sampled computations");
  command.add_options(app, cfg);

  std::reverse(merged.begin(), merged.end());
  try {
    app.parse(merged);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lowlying " << command.name << ": " << e.what() << "\n";
    return kConfigError;
  }
  if (cfg.format == "jsonl" && command.name != "enumerate") throw ConfigError("jsonl output is only available for enumerate");

  auto start = std::chrono::steady_clock::now();
  Artifact artifact = command.run(cfg);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string target = cfg.output;
  if (target == "-" && !cfg.emit.empty()) target = cfg.emit;
  if (target == "-") out << artifact.text;
  else write_file(target, artifact.text);

  std::string manifest_path = cfg.manifest;
  if (manifest_path.empty() && target != "-") manifest_path = target + ".manifest.json";
  if (!manifest_path.empty()) {
    Json manifest = Json::object();
    manifest["command"] = command.name;
    manifest["config"] = config_json(app);
    if (!cfg.config_file.empty()) manifest["config_file"] = cfg.config_file;
    manifest["artifact"] = target;
    manifest["summary"] = artifact.summary;
    manifest["versions"] = versions();
    manifest["wall_time_seconds"] = wall;
    write_file(manifest_path, manifest.dump(2) + "\n");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    usage(args.empty() ? err : out);
    return args.empty() ? kConfigError : kOk;
  }
  if (args[0] == "--version") {
    out << "lowlying 0.1.0\n";
    return kOk;
  }
  const Command* command = find_command(args[0]);
  if (!command) {
    err << "lowlying: unknown subcommand '" << args[0] << "'\n";
    usage(err);
    return kUnknownCommand;
  }
  try {
    return execute(*command, {args.begin() + 1, args.end()}, out, err);
  } catch (const ConfigError& e) {
    err << "lowlying " << command->name << ": " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "lowlying " << command->name << ": " << e.what() << "\n";
    return kConfigError;
  } catch (const CapExceeded& e) {
    err << "lowlying " << command->name << ": " << e.what() << "\n";
    return kCapExceeded;
  } catch (const OverflowError& e) {
    err << "lowlying " << command->name << ": " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InvariantViolation& e) {
    err << "lowlying " << command->name << ": internal invariant violated: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    err << "lowlying " << command->name << ": " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "lowlying " << command->name << ": internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace lowlying::cli
