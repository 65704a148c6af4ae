#include "output.hpp"

#include "latdyn/errors.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace latdyn::cli {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string quoted(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t'\";()*?[]$&|<>") == std::string::npos) return a;
  std::string q = "'";
  for (char c : a) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

}  // namespace

std::string comment_header(const RunHeader& h) {
  std::string s = "# latdyn " LATDYN_VERSION " " + h.schema + "\n# argv: latdyn";
  for (const auto& a : h.argv) s += " " + quoted(a);
  s += "\n";
  if (!h.config.empty()) {
    s += "# config:";
    for (const auto& c : h.config) s += " " + quoted(c);
    s += "\n";
  }
  if (h.seed) s += "# seed: " + std::to_string(*h.seed) + "\n";
  return s;
}

json json_header(const RunHeader& h) {
  json j;
  j["tool"] = "latdyn";
  j["version"] = LATDYN_VERSION;
  j["schema"] = h.schema;
  j["argv"] = h.argv;
  if (!h.config.empty()) j["config"] = h.config;
  if (h.seed) j["seed"] = *h.seed;
  return j;
}

json integer_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return json(x.get_si());
  return json(x.get_str());
}

CsvWriter::CsvWriter(const RunHeader& h, const std::vector<std::string>& columns) {
  os_ << comment_header(h);
  for (std::size_t i = 0; i < columns.size(); ++i) os_ << (i ? "," : "") << columns[i];
  os_ << '\n';
}

void write_output(const std::string& path, const std::string& content, std::ostream& stdout_stream) {
  if (path == "-") {
    stdout_stream << content;
    stdout_stream.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ValidationError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw ValidationError("error writing '" + path + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace latdyn::cli
