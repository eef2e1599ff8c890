#ifndef REEB_CANONICAL_HPP
#define REEB_CANONICAL_HPP

#include <string>

#include "reeb/core.hpp"

namespace reeb::canon {

// Canonical text encoding over the alphabet { * ( ) ^ v [ ] | }.
//
//   rooted := '*' | '(' rooted '^' rooted '^' ')' | '(' rooted '^' rooted 'v' ')'
//   full   := '[' rooted '|' rooted ']'
//
// In the up-up production the first operand is shortlex <= the second
// (shorter first; bytewise within equal lengths).  Two
// objects are isomorphic iff their canonical strings are byte-identical.
// This grammar is a stable public format.
using CanonString = std::string;

CanonString encode_rooted(const TreePtr& t);
CanonString encode_full(const FullReebGraph& g);

// Parses a rooted canonical string.  Up-up operands given out of order are
// accepted and normalized; anything outside the grammar raises ParseError
// with the offending byte offset.
TreePtr parse_rooted(const CanonString& s);

// Parses a full-graph canonical string "[lower|upper]".
FullReebGraph parse_full(const CanonString& s);

// Recovers the rooted-pair form from a flat graph by splitting at the unique
// degree-2 vertex.  Throws InvalidStructureError if the graph does not pass
// structural validation.
FullReebGraph full_from_explicit(const ExplicitGraph& g);

// Decides isomorphism of two flat graphs (both must be valid); invariant
// under vertex relabeling and edge reordering.
bool is_isomorphic(const ExplicitGraph& g1, const ExplicitGraph& g2);

}  // namespace reeb::canon

#endif
