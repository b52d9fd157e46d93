#pragma once

#include <cstdint>
#include <string>

#include "relmix/tuple.hpp"

namespace relmix {

// Documents are strict UTF-8 JSON:
//   polyhedron: {"dim": 2, "generators": [[3,0],[1,1],[0,3]]}
//   tuple:      {"dim": 2, "polyhedra": [{"generators": [[2,0],[0,2]]}, ...]}
// Unknown fields are rejected; numbers must be decimal integers; the
// polyhedra count must equal dim. Parse failures carry a field diagnostic.

OrthantPolyhedron parse_polyhedron(const std::string& text);
PolyTuple parse_tuple(const std::string& text);

// Canonical serializations (generators in canonical order); parsing the
// output reproduces the value exactly.
std::string serialize_polyhedron(const OrthantPolyhedron& b);
std::string serialize_tuple(const PolyTuple& t);

// FNV-1a 64-bit hash of the canonical tuple serialization; stable across
// runs and platforms.
std::uint64_t canonical_hash(const PolyTuple& t);
std::string canonical_hash_hex(const PolyTuple& t);

// The line-oriented `key: value` report printed by the classify command.
std::string classify_report(const PolyTuple& t);

}  // namespace relmix
