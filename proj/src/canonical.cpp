#include "mist/canonical.hpp"

#include <algorithm>
#include <vector>

namespace mist {

namespace {

// Reused buffers; canonical_key sits on the hot path of enumeration dedup,
// so the steady state must not allocate.
struct Scratch {
    std::vector<int> order;
    std::vector<int> parent;
    std::vector<std::string> code;
    std::vector<const std::string*> kids;
};

// Canonical depth sequence of the component of `root` that avoids `banned`
// (pass -1 for the whole tree). Depths are bytes relative to the root.
// Child encodings are sorted descending, which pins exactly one encoding per
// rooted isomorphism class. The returned reference lives in s.code[root]
// until the slot is rewritten.
const std::string& rooted_code(const Tree& t, int root, int banned, Scratch& s) {
    s.order.clear();
    s.parent.assign(t.n, -2);
    if (banned >= 0) {
        s.parent[banned] = -3;
    }
    s.parent[root] = -1;
    s.order.push_back(root);
    for (std::size_t head = 0; head < s.order.size(); ++head) {
        int v = s.order[head];
        for (int u : t.adj[v]) {
            if (s.parent[u] == -2) {
                s.parent[u] = v;
                s.order.push_back(u);
            }
        }
    }
    if (s.code.size() < static_cast<std::size_t>(t.n)) {
        s.code.resize(t.n);
    }
    for (std::size_t i = s.order.size(); i-- > 0;) {
        int v = s.order[i];
        std::string& out = s.code[v];
        out.clear();
        out.push_back('\0');
        s.kids.clear();
        for (int u : t.adj[v]) {
            if (s.parent[u] == v) {
                s.kids.push_back(&s.code[u]);
            }
        }
        std::sort(s.kids.begin(), s.kids.end(),
                  [](const std::string* a, const std::string* b) { return *a > *b; });
        for (const std::string* kid : s.kids) {
            for (char c : *kid) {
                out.push_back(static_cast<char>(c + 1));
            }
        }
    }
    return s.code[root];
}

}  // namespace

CanonKey canonical_key(const Tree& t) {
    thread_local Scratch s;
    std::vector<int> c = centers(t);
    if (c.size() == 1) {
        const std::string& code = rooted_code(t, c[0], -1, s);
        CanonKey key;
        key.reserve(code.size() + 1);
        key.push_back('\x01');
        key += code;
        return key;
    }
    // Two centers: conceptually split the central edge and canonicalize the
    // rooted halves. The two calls write into distinct scratch slots, and the
    // first call already grew s.code to t.n, so the second cannot reallocate
    // under the first reference.
    const std::string& a = rooted_code(t, c[0], c[1], s);
    const std::string& b = rooted_code(t, c[1], c[0], s);
    const std::string& lo = a <= b ? a : b;
    const std::string& hi = a <= b ? b : a;
    CanonKey key;
    key.reserve(lo.size() + hi.size() + 1);
    key.push_back('\x02');
    key += lo;
    key += hi;
    return key;
}

}  // namespace mist
