#pragma once

#include <fptprop/core.hpp>

#include <iosfwd>
#include <string>

// Plain-text instance files. One declaration per line, '#' starts a comment,
// blank lines are fine. Variables and sets share one namespace and must be
// declared before use; constraints are named c0, c1, ... in file order.
//
//   var X1 = {1, 2}
//   var N  = {0..3, 5}
//   set S universe={1, 2, 3} lb={1} ub={1, 2}     # lb/ub optional
//   nvalue [X1, X2] N
//   uses [X1, X2] [Y1]
//   cardpath [X1, X2, X3] N p=2 builtin=less-than
//   cardpath [X1, X2, X3] N p=2 tuples={(1, 2); (2, 1)}
//   valsymbreak [X1, X2] sigma={1:2, 2:1} sigma={2:3, 3:2}
//   disjoint [X1, X2] [Y1]
//   among [X1, X2] S N
//   roots [X1, X2] S T
//   sum [X1, X2] = T
//   table [X1, X2] tuples={(1, 2); (2, 1)}
//
// Permutations list their non-identity part; every other value they may meet
// maps to itself. Errors carry path, line and a description.

namespace fptprop::instance {

struct ParseError : UsageError {
    using UsageError::UsageError;
};

ProblemState parse(std::istream &in, const std::string &path = "<input>");
ProblemState parse_file(const std::string &path);
ProblemState parse_string(const std::string &text, const std::string &path = "<string>");

// Canonical text for a state: declarations in id order, value sets written as
// flat sorted lists. parse(write(s)) reproduces s exactly.
std::string write(const ProblemState &state);

} // namespace fptprop::instance
