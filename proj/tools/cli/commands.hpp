#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/output.hpp"

namespace CLI {
class App;
}

namespace lowlying::cli {

struct Command {
  std::string name;
  std::string description;
  std::function<void(CLI::App&, ExperimentConfig&)> add_options;
  std::function<Artifact(const ExperimentConfig&)> run;
};

const std::vector<Command>& commands();

}  // namespace lowlying::cli
