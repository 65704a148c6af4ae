#include "latdyn/measure_io.hpp"

#include "latdyn/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace latdyn {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (slash == std::string::npos) {
    if (!is_int(text)) throw ValidationError("not a rational number: '" + text + "'");
    return Rational(Integer(strip_plus(text)));
  }
  const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw ValidationError("not a rational number: '" + text + "'");
  const Integer d(den);
  if (d == 0) throw ValidationError("zero denominator in '" + text + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

MeasureSpec parse_measure(std::istream& in, const std::string& source_name) {
  std::string name = source_name;
  std::string case_label;
  bool symmetric = true;
  std::vector<MeasureSpec::RationalAtom> atoms;

  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw ValidationError(source_name + ":" + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& key = tok[0];
    if (key == "name") {
      if (tok.size() != 2) fail("'name' takes one word");
      name = tok[1];
    } else if (key == "case") {
      if (tok.size() != 2 || (tok[1] != "I" && tok[1] != "II")) fail("'case' must be I or II");
      case_label = tok[1];
    } else if (key == "symmetric") {
      if (tok.size() != 2 || (tok[1] != "yes" && tok[1] != "no")) fail("'symmetric' must be yes or no");
      symmetric = tok[1] == "yes";
    } else if (key == "atom") {
      if (tok.size() != 11) fail("'atom' needs a weight and 9 matrix entries");
      MeasureSpec::RationalAtom a;
      try {
        a.weight = parse_rational(tok[1]);
        for (std::size_t i = 0; i < 9; ++i) a.g.a[i] = parse_rational(tok[2 + i]);
      } catch (const ValidationError& e) {
        fail(e.what());
      }
      if (a.weight <= 0) fail("atom weight must be positive");
      if (det(a.g) != 1) fail("atom does not have determinant 1");
      a.label = "g" + std::to_string(atoms.size() + 1);
      atoms.push_back(std::move(a));
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (atoms.empty()) throw ValidationError(source_name + ": measure has no atoms");
  MeasureSpec mu = MeasureSpec::rational(name, std::move(atoms), symmetric);
  mu.with_case_label(case_label);
  return mu;
}

MeasureSpec load_measure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open measure file '" + path + "'");
  return parse_measure(in, path);
}

MeasureSpec resolve_measure(const std::string& name_or_path) {
  const auto names = builtin_measure_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin_measure(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw ValidationError("'" + name_or_path + "' is neither a built-in measure (" + list + ") nor a readable file");
  }
  return parse_measure(in, name_or_path);
}

}  // namespace latdyn
