#ifndef REEB_IO_HPP
#define REEB_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "reeb/core.hpp"

namespace reeb::io {

// Edge-list document, ASCII and newline-delimited:
//
//   reeb v1
//   vertices N
//   edge U V
//
// '#' starts a comment line.  N >= 1; 0 <= U,V < N.  print/parse round-trip
// modulo comments and whitespace.  Parse failures raise FileParseError with
// the 1-based line number.
ExplicitGraph parse_edge_list(std::istream& in);
ExplicitGraph parse_edge_list(const std::string& text);
std::string print_edge_list(const ExplicitGraph& g);

// DOT rendering.  Node shapes encode the role: extrema (degree 1) are
// ellipses, degree-3 saddles points, the degree-2 saddle a doublecircle.
// Vertices are grouped into ranks by longest-path level from the sources
// (cosmetic only).  Output is deterministic; edges appear in ascending
// (u, v) order.
std::string to_dot(const ExplicitGraph& g);

// Stable 64-bit FNV-1a, used for content-addressed file names.
std::uint64_t fnv1a(std::string_view s);

}  // namespace reeb::io

#endif
