#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "upalg/core.hpp"

namespace upalg {

// Text format, version 1:
//
//   upalg v1
//   elements: 0 a b c
//   table:
//   0 a b c
//   0 0 0 0
//   0 a 0 c
//   0 a b 0
//
// Row i, column j holds the label of element_i · element_j.  The first
// listed element is the constant.  Tokens are whitespace separated; a line
// whose first non-blank character is '#' is a comment.

/// Throws ParseError (with the 1-based line) on any syntax problem.  The
/// returned table is well formed but not checked against the axioms.
CayleyTable parse_table(std::istream& in, std::string const& source = "<input>");
CayleyTable parse_table_string(std::string_view text,
                               std::string const& source = "<input>");

/// parse_table followed by make_algebra.
UpAlgebra read_algebra(std::filesystem::path const& path);

void write_table(std::ostream& out, CayleyTable const& t);
std::string to_text(UpAlgebra const& alg);
void write_algebra(std::filesystem::path const& path, UpAlgebra const& alg);

}  // namespace upalg
