#include "cli/output.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <boost/version.hpp>

namespace lowlying::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json json_cell(const std::string& s) {
  if (s.empty()) return nullptr;
  if (s == "true") return true;
  if (s == "false") return false;
  {
    std::int64_t i = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), i);
    if (ec == std::errc() && ptr == s.data() + s.size()) return i;
  }
  {
    double d = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(d)) return d;
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return {buf, ptr};
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::logic_error("row width does not match the header");
  rows_.push_back(std::move(cells));
}

std::string Table::to_csv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(cells[i]);
    }
    out << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out.str();
}

Json Table::to_json() const {
  Json rows = Json::array();
  for (const auto& r : rows_) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < r.size(); ++i) obj[header_[i]] = json_cell(r[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

Artifact render(const Table& table, const std::string& format, Json summary) {
  Artifact out;
  if (format == "csv") {
    out.text = table.to_csv();
  } else if (format == "json") {
    Json doc = Json::object();
    doc["summary"] = summary;
    doc["rows"] = table.to_json();
    out.text = doc.dump(2) + "\n";
  } else {
    throw std::invalid_argument("unsupported format " + format);
  }
  out.summary = std::move(summary);
  return out;
}

std::string cell(std::int64_t v) { return std::to_string(v); }
std::string cell(std::uint64_t v) { return std::to_string(v); }
std::string cell(int v) { return std::to_string(v); }
std::string cell(double v) { return format_double(v); }
std::string cell(Int v) { return to_string(v); }
std::string cell(const Rational& v) { return to_string(v); }

Json versions() {
  Json v = Json::object();
  v["lowlying"] = "0.1.0";
  v["compiler"] = __VERSION__;
  v["cxx_standard"] = static_cast<std::int64_t>(__cplusplus);
  v["boost"] = BOOST_LIB_VERSION;
  v["cli11"] = CLI11_VERSION;
  v["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                       "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  return v;
}

}  // namespace lowlying::cli
