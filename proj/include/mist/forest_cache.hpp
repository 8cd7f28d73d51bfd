#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "mist/tree.hpp"
#include "mist/treegen.hpp"

namespace mist {

// All free trees of one order, bucketed by diameter.
struct DiameterBuckets {
    int n = 0;
    std::map<int, std::vector<Tree>> by_diameter;

    std::size_t total() const;
};

DiameterBuckets enumerate_buckets(int n, int cap = kDefaultOrderCap);

// Disk-backed variant. Layout: <cache_dir>/n<N>/d<D>.g6 with one graph6 line
// per tree, plus a manifest.json recording counts and the generator version.
// Any mismatch regenerates the whole order; writes go to a temporary file
// first and are renamed into place.
DiameterBuckets load_buckets(const std::filesystem::path& cache_dir, int n,
                             int cap = kDefaultOrderCap);

}  // namespace mist
