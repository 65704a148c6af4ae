#pragma once

#include "latdyn/scalar.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace latdyn::cli {

using json = nlohmann::ordered_json;

// Identifies a run: schema tag, the argument vector and the seed.
struct RunHeader {
  std::string schema;  // e.g. "walk/1"
  std::vector<std::string> argv;
  std::vector<std::string> config;
  std::optional<std::uint64_t> seed;
};

// %.17g
std::string num(double x);

// Leading "# " comment lines for CSV and text outputs.
std::string comment_header(const RunHeader& h);
json json_header(const RunHeader& h);

// Integers fitting in 64 bits become JSON numbers, larger ones strings.
json integer_json(const Integer& x);

class CsvWriter {
 public:
  CsvWriter(const RunHeader& h, const std::vector<std::string>& columns);
  template <class... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
    os_ << '\n';
  }
  std::string str() const { return os_.str(); }

 private:
  static std::string cell(double x) { return num(x); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  static std::string cell(const Integer& x) { return x.get_str(); }
  template <class I, class = std::enable_if_t<std::is_integral_v<I>>>
  static std::string cell(I x) { return std::to_string(x); }

  std::ostringstream os_;
};

// Writes `content` to `path`, or to `stdout_stream` for "-".
void write_output(const std::string& path, const std::string& content, std::ostream& stdout_stream);

std::string dump(const json& j);

}  // namespace latdyn::cli
