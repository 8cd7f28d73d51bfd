#pragma once

#include <string>

#include "mist/tree.hpp"

namespace mist {

// Canonical byte string identifying a free tree up to isomorphism: equal keys
// exactly for isomorphic trees, deterministic across runs. Layout: one byte
// for the center count, then the canonical depth sequence of each
// center-rooted half (halves joined in lexicographically sorted order when
// the diameter is odd).
using CanonKey = std::string;

CanonKey canonical_key(const Tree& t);

}  // namespace mist
