#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lowlying::cli {

/// Bad flags, malformed config files or values outside an operation's domain.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings shared by every subcommand, plus the union of per-subcommand
/// options. Each subcommand registers only the fields it reads.
struct ExperimentConfig {
  std::int64_t alphabet = 2;
  double norm = 1e3;
  std::int64_t cutoff = 100;
  int depth = 0;  // 0: deepest admissible
  std::uint64_t seed = 1;
  std::string output = "-";
  std::string format = "csv";
  std::string manifest;
  std::string config_file;

  std::string parity = "even";
  std::uint64_t max_nodes = 400'000'000;

  std::int64_t trace = 37;
  double norm_min = 1e3;
  double norm_max = 1e5;
  int points = 5;
  std::vector<std::int64_t> alphabets;
  double tol = 1e-6;

  std::int64_t modulus = 15;
  std::int64_t prime = 7;
  std::string kind = "charsum";
  std::vector<std::int64_t> vector4;
  int samples = 1000;

  double Y = 1e6;
  double X = 30;
  double Z = 30;
  std::vector<std::int64_t> check_moduli;

  std::string source = "ball";
  std::int64_t z = 3;
  double T = 1e4;
  std::uint64_t threshold = 1;

  std::int64_t disc = 1365;
  std::string word;
  std::string emit;
  double cusp = 2.0;
};

/// Reads key=value lines ('#' starts a comment) and returns them as
/// "--key value" argument pairs, in file order.
std::vector<std::string> config_file_arguments(const std::string& path);

}  // namespace lowlying::cli
