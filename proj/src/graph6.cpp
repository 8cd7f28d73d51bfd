#include "mist/graph6.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mist {

std::string graph6_encode(const Tree& t) {
    if (t.n > 62) {
        throw std::invalid_argument("graph6_encode: order " + std::to_string(t.n) +
                                    " exceeds the short-form limit of 62");
    }
    std::vector<std::uint64_t> mask(t.n, 0);
    for (int v = 0; v < t.n; ++v) {
        for (int u : t.adj[v]) {
            mask[v] |= std::uint64_t{1} << u;
        }
    }
    std::string out(1, static_cast<char>(63 + t.n));
    unsigned group = 0;
    int filled = 0;
    for (int v = 1; v < t.n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | static_cast<unsigned>((mask[v] >> u) & 1);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    }
    return out;
}

Tree graph6_decode(const std::string& line) {
    if (line.empty()) {
        throw std::invalid_argument("graph6_decode: empty line");
    }
    for (unsigned char c : line) {
        if (c < 63 || c > 126) {
            throw std::invalid_argument("graph6_decode: character out of range");
        }
    }
    const int n = line[0] - 63;
    if (n < 1 || n > 62) {
        throw std::invalid_argument("graph6_decode: order " + std::to_string(n) +
                                    " outside 1..62");
    }
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (nbits + 5) / 6;
    if (line.size() != expected) {
        throw std::invalid_argument("graph6_decode: expected " + std::to_string(expected) +
                                    " characters for order " + std::to_string(n) + ", got " +
                                    std::to_string(line.size()));
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            unsigned group = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
            if ((group >> (5 - bit % 6)) & 1) {
                edges.emplace_back(u, v);
            }
        }
    }
    if (nbits % 6 != 0) {
        unsigned last = static_cast<unsigned char>(line.back()) - 63;
        unsigned pad = (1u << (6 - nbits % 6)) - 1;
        if (last & pad) {
            throw std::invalid_argument("graph6_decode: nonzero padding bits");
        }
    }
    return tree_from_edge_list(n, edges);
}

}  // namespace mist
