#pragma once

#include <string>

#include "pgw/presentation.hpp"

namespace pgw {

// Parses the line-oriented spec-file format:
//
//   # comment
//   sig op/2 0/0 1/0
//   groupoid op
//   id (x * y) * z = x * (y * z)
//   witness m 1 = x * y
//   witness zero 1 = 0
//   witness one 1 = 1
//   witness U 1 = x
//
// Terms are prefix applications `(f t1 ... tk)` with infix sugar `a * b` for
// the designated groupoid (declare `groupoid` before using `*`). Identifiers
// not declared in `sig` are variables; 0-ary symbols are written bare.
// Witness variables are fixed: x, y for m-terms; x, y, z1..zl (z = z1) for
// U-terms; zero/one witness terms are closed.
VarietyPresentation parse_presentation(const std::string& text);

// Inverse of parse_presentation on parser-produced presentations.
std::string print_presentation(const VarietyPresentation& p);

}  // namespace pgw
