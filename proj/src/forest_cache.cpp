#include "mist/forest_cache.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mist/graph6.hpp"
#include "mist/version.hpp"

namespace mist {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kManifestFormat = 1;

fs::path order_dir(const fs::path& cache_dir, int n) {
    return cache_dir / ("n" + std::to_string(n));
}

fs::path bucket_file(const fs::path& dir, int d) {
    return dir / ("d" + std::to_string(d) + ".g6");
}

std::optional<DiameterBuckets> try_load(const fs::path& dir, int n) {
    std::ifstream manifest_in(dir / "manifest.json");
    if (!manifest_in) {
        return std::nullopt;
    }
    json manifest;
    try {
        manifest_in >> manifest;
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (!manifest.is_object() || manifest.value("format", 0) != kManifestFormat ||
        manifest.value("generator", "") != kGeneratorVersion || manifest.value("n", -1) != n ||
        !manifest.contains("by_diameter") || !manifest["by_diameter"].is_object()) {
        return std::nullopt;
    }
    DiameterBuckets out;
    out.n = n;
    try {
        for (const auto& [key, value] : manifest["by_diameter"].items()) {
            const int d = std::stoi(key);
            const std::size_t expected = value.get<std::size_t>();
            std::ifstream in(bucket_file(dir, d));
            if (!in) {
                return std::nullopt;
            }
            std::vector<Tree>& bucket = out.by_diameter[d];
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) {
                    continue;
                }
                Tree t = graph6_decode(line);
                if (t.n != n || diameter(t) != d) {
                    return std::nullopt;  // stale or foreign file
                }
                bucket.push_back(std::move(t));
            }
            if (bucket.size() != expected) {
                return std::nullopt;
            }
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (manifest.value("classes", std::size_t{0}) != out.total()) {
        return std::nullopt;
    }
    return out;
}

void atomic_write(const fs::path& target, const std::string& content) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
    }
    fs::rename(tmp, target);
}

void store(const fs::path& dir, const DiameterBuckets& buckets) {
    fs::create_directories(dir);
    json counts = json::object();
    for (const auto& [d, trees] : buckets.by_diameter) {
        std::string lines;
        for (const Tree& t : trees) {
            lines += graph6_encode(t);
            lines += '\n';
        }
        atomic_write(bucket_file(dir, d), lines);
        counts[std::to_string(d)] = trees.size();
    }
    json manifest = {
        {"format", kManifestFormat},
        {"generator", kGeneratorVersion},
        {"n", buckets.n},
        {"classes", buckets.total()},
        {"by_diameter", counts},
    };
    atomic_write(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace

std::size_t DiameterBuckets::total() const {
    std::size_t sum = 0;
    for (const auto& [d, trees] : by_diameter) {
        sum += trees.size();
    }
    return sum;
}

DiameterBuckets enumerate_buckets(int n, int cap) {
    DiameterBuckets out;
    out.n = n;
    TreeStream stream = free_trees(n, cap);
    while (auto t = stream.next()) {
        int d = diameter(*t);
        out.by_diameter[d].push_back(std::move(*t));
    }
    return out;
}

DiameterBuckets load_buckets(const fs::path& cache_dir, int n, int cap) {
    const fs::path dir = order_dir(cache_dir, n);
    if (auto cached = try_load(dir, n)) {
        return std::move(*cached);
    }
    DiameterBuckets fresh = enumerate_buckets(n, cap);
    store(dir, fresh);
    return fresh;
}

}  // namespace mist
