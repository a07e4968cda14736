#pragma once

#include "kinn/dissection.hpp"

#include <string>
#include <variant>

namespace kinn {

// Canonical text form, UTF-8, no whitespace, keys in exactly this order:
//   {"n":5,"diagonals":[[0,2],[0,3]]}
//   {"n":5,"diagonals":[[0,2]],"marked_face":[0,2,3,4]}
// Diagonal pairs have a < b and are sorted lexicographically; the marked
// face is in canonical rotation. serialize is byte-identical for equal
// values and parse(serialize(x)) == x.
std::string serialize(const Dissection& d);
std::string serialize(const KInN& x);

// Parses the canonical format only. Returns a KInN when "marked_face" is
// present, otherwise a Dissection. Throws std::invalid_argument with the
// position or field and the cause on malformed input.
std::variant<Dissection, KInN> parse(const std::string& text);

}  // namespace kinn
