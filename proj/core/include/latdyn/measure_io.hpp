#pragma once

// Plain-text measure files.  Grammar (one directive per line, '#' starts a
// comment, blank lines ignored):
//
//   name <word>                 optional display name
//   case I | II                 optional Zariski-closure label
//   symmetric yes | no          add inverses of all atoms (default: yes)
//   atom <weight> <g11> <g12> <g13> <g21> ... <g33>
//
// Weights and entries are integers or fractions "p/q".  Weights are
// normalized to sum to 1.  Every atom must have determinant exactly 1.
// See docs/measure-format.md.

#include "latdyn/groups.hpp"

#include <istream>
#include <string>

namespace latdyn {

MeasureSpec parse_measure(std::istream& in, const std::string& source_name = "<stream>");
MeasureSpec load_measure(const std::string& path);

// A built-in name (see builtin_measure) or a path to a measure file.
MeasureSpec resolve_measure(const std::string& name_or_path);

}  // namespace latdyn
