#pragma once

#include <algorithm>
#include <vector>

#include "edv/tree.hpp"

namespace edv {

/// Basic structural profile of a tree. The core is what remains after one
/// round of deleting every leaf; by convention P1 and P2 have core_size 0.
struct TreeProfile {
    int diameter = 0;
    int pendant_count = 0;  // vertices of degree 1 (symbol q)
    int max_degree = 0;     // symbol Delta
    bool is_caterpillar = false;
    int core_size = 0;
};

inline TreeProfile profile(const Tree& t) {
    const int n = t.order();
    TreeProfile p;
    for (int v = 0; v < n; ++v) {
        const int d = t.degree(v);
        p.max_degree = std::max(p.max_degree, d);
        if (d == 1) ++p.pendant_count;
    }

    // Diameter by double BFS sweep.
    if (n >= 2) {
        const std::vector<int> d0 = t.distances_from(0);
        const int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
        const std::vector<int> d1 = t.distances_from(far);
        p.diameter = *std::max_element(d1.begin(), d1.end());
    }

    if (n <= 2) {
        p.core_size = 0;
        p.is_caterpillar = true;
        return p;
    }

    // One round of leaf deletion; the survivors of a tree always form a
    // subtree, so the core is a path iff no survivor keeps three core
    // neighbors.
    std::vector<char> core(n, 0);
    for (int v = 0; v < n; ++v) core[v] = t.degree(v) >= 2;
    p.core_size = static_cast<int>(std::count(core.begin(), core.end(), char(1)));
    p.is_caterpillar = true;
    for (int v = 0; v < n && p.is_caterpillar; ++v) {
        if (!core[v]) continue;
        int core_neighbors = 0;
        for (int w : t.neighbors(v)) core_neighbors += core[w];
        if (core_neighbors > 2) p.is_caterpillar = false;
    }
    return p;
}

}  // namespace edv
