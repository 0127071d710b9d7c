#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "edv/edge_division.hpp"
#include "edv/tree.hpp"

namespace edv {

/// Canonical level sequence of the tree rooted at `root`: the root is level 1
/// and the blocks of sibling subtrees are emitted in nonincreasing
/// lexicographic order, which makes the whole sequence the lexicographically
/// greatest over all child orderings.
inline std::vector<int> rooted_level_sequence(const Tree& t, int root) {
    const int n = t.order();
    std::vector<int> order;
    const std::vector<int> parent = t.parents_from(root, &order);
    std::vector<int> level(n, 0);
    level[root] = 1;
    for (int v : order)
        if (parent[v] >= 0) level[v] = level[parent[v]] + 1;

    std::vector<std::vector<int>> seq(n);
    std::vector<std::vector<int>> child_blocks;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        child_blocks.clear();
        for (int w : t.neighbors(v))
            if (parent[w] == v) child_blocks.push_back(std::move(seq[w]));
        std::sort(child_blocks.begin(), child_blocks.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) { return a > b; });
        std::vector<int>& s = seq[v];
        s.reserve(1 + n);
        s.push_back(level[v]);
        for (const auto& block : child_blocks) s.insert(s.end(), block.begin(), block.end());
    }
    return std::move(seq[root]);
}

/// Free-tree canonical level sequence: root at the centroidal vertex; with two
/// centroidal vertices, take the lexicographically greater of the two rootings.
inline std::vector<int> canonical_level_sequence(const Tree& t) {
    const std::vector<int> c = centroidal_vertices(t);
    std::vector<int> best = rooted_level_sequence(t, c[0]);
    if (c.size() == 2) {
        std::vector<int> other = rooted_level_sequence(t, c[1]);
        if (other > best) best = std::move(other);
    }
    return best;
}

/// Canonical string code: equal for two trees iff they are isomorphic.
inline std::string canonical_code(const Tree& t) {
    const std::vector<int> seq = canonical_level_sequence(t);
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(seq[i]);
    }
    return out;
}

inline bool isomorphic(const Tree& a, const Tree& b) {
    return a.order() == b.order() && canonical_level_sequence(a) == canonical_level_sequence(b);
}

/// Rebuild a tree from a rooted level sequence (root level 1, each later entry
/// between 2 and its predecessor + 1). Vertex ids follow sequence positions.
inline Tree tree_from_level_sequence(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    if (n == 0) throw Error("empty level sequence");
    if (seq[0] != 1) throw Error("level sequence must start at level 1");
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    std::vector<int> last_at_level(static_cast<std::size_t>(n) + 2, -1);
    last_at_level[1] = 0;
    for (int i = 1; i < n; ++i) {
        const int level = seq[static_cast<std::size_t>(i)];
        if (level < 2 || level > seq[static_cast<std::size_t>(i - 1)] + 1)
            throw Error("invalid level " + std::to_string(level) + " at position " +
                        std::to_string(i + 1));
        edges.emplace_back(last_at_level[static_cast<std::size_t>(level - 1)], i);
        last_at_level[static_cast<std::size_t>(level)] = i;
    }
    return Tree(n, std::move(edges));
}

}  // namespace edv
