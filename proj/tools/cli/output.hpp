#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lowlying/int128.hpp"
#include "lowlying/rational.hpp"

namespace lowlying::cli {

using Json = nlohmann::ordered_json;

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Tabular artifact rendered as CSV or as a JSON array of row objects.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells);
  std::size_t size() const { return rows_.size(); }

  std::string to_csv() const;
  /// Cells that parse as numbers are emitted as JSON numbers; "num/den"
  /// rationals stay strings.
  Json to_json() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Artifact {
  std::string text;  // exactly what lands in the output file
  Json summary = Json::object();
};

/// Renders a table in the requested format ("csv" or "json").
Artifact render(const Table& table, const std::string& format, Json summary = Json::object());

std::string cell(std::int64_t v);
std::string cell(std::uint64_t v);
std::string cell(int v);
std::string cell(double v);
std::string cell(Int v);
std::string cell(const Rational& v);

/// Library, compiler and dependency versions for run manifests.
Json versions();

}  // namespace lowlying::cli
