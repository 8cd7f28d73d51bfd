#pragma once

namespace mist {

inline constexpr const char* kToolVersion = "0.1.0";

// Recorded in enumeration cache manifests; bump to invalidate old caches.
inline constexpr const char* kGeneratorVersion = "treegen/1";

}  // namespace mist
