#pragma once

#include <string>

#include "mist/tree.hpp"

namespace mist {

// Short-form graph6 (n <= 62): a header byte n+63, then the upper triangle
// of the adjacency matrix in column-major bit order, packed big-endian into
// 6-bit chunks offset by 63. The interchange format for all tree import and
// export in this toolkit: one tree per line.
std::string graph6_encode(const Tree& t);

// Rejects malformed input: bad characters, wrong length, nonzero padding,
// and any edge set that is not a tree.
Tree graph6_decode(const std::string& line);

}  // namespace mist
