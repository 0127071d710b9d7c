#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edv/tree.hpp"

namespace edv {

/// Per-edge split sizes of a tree: for edge e = uv, n_u(e) and n_v(e) are the
/// orders of the two components of T - e, and mu(e) = min(n_u(e), n_v(e)).
/// Entries are aligned with Tree::edges().
class EdgeMuMap {
public:
    EdgeMuMap(int order, std::vector<int> first_side)
        : n_(order), first_side_(std::move(first_side)) {}

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(first_side_.size()); }

    /// Component order on the side of edges()[i].u.
    int side_u(int i) const { return first_side_[static_cast<std::size_t>(i)]; }
    int side_v(int i) const { return n_ - side_u(i); }
    int mu(int i) const { return std::min(side_u(i), side_v(i)); }
    /// Order of the smaller component (equals mu by definition).
    int n_small_side(int i) const { return mu(i); }

private:
    int n_;
    std::vector<int> first_side_;
};

/// mu(e) for every edge via subtree sizes from a single DFS; the choice of
/// root does not affect the result. A one-vertex tree yields an empty map.
inline EdgeMuMap edge_mu(const Tree& t) {
    const int n = t.order();
    if (n == 1) return EdgeMuMap(1, {});
    const std::vector<int> size = t.subtree_sizes(0);
    const std::vector<int> parent = t.parents_from(0);
    std::vector<int> first_side(t.edges().size());
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        const Edge& e = t.edges()[i];
        // Exactly one endpoint is the other's parent.
        const int below = (parent[e.v] == e.u) ? size[e.v] : size[e.u];
        const bool u_below = parent[e.u] == e.v;
        first_side[i] = u_below ? below : n - below;
    }
    return EdgeMuMap(n, std::move(first_side));
}

/// Edge division vector r(T) = (r_1, ..., r_{floor(n/2)}) where r_i counts the
/// edges with mu(e) = i. Always sums to n - 1; r_1 is the pendant edge count.
class EdgeDivisionVector {
public:
    EdgeDivisionVector(int order, std::vector<int> counts)
        : n_(order), r_(std::move(counts)) {
        if (static_cast<int>(r_.size()) != n_ / 2)
            throw Error("edge division vector for order " + std::to_string(n_) +
                        " must have length " + std::to_string(n_ / 2));
    }

    int order() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(r_.size()); }

    /// 1-based component access: at(i) == r_i.
    int at(int i) const { return r_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& counts() const noexcept { return r_; }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < r_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(r_[i]);
        }
        out += ')';
        return out;
    }

    friend bool operator==(const EdgeDivisionVector&, const EdgeDivisionVector&) = default;

private:
    int n_;
    std::vector<int> r_;
};

inline EdgeDivisionVector edge_division_vector(const Tree& t) {
    const EdgeMuMap m = edge_mu(t);
    std::vector<int> r(t.order() / 2, 0);
    for (int i = 0; i < m.size(); ++i) ++r[static_cast<std::size_t>(m.mu(i) - 1)];
    return EdgeDivisionVector(t.order(), std::move(r));
}

enum class Ordering { StrictlyLess, StrictlyGreater, Equivalent, Incomparable };

inline const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::StrictlyLess: return "StrictlyLess";
        case Ordering::StrictlyGreater: return "StrictlyGreater";
        case Ordering::Equivalent: return "Equivalent";
        case Ordering::Incomparable: return "Incomparable";
    }
    return "?";
}

/// Outcome of the suffix-sum dominance comparison of two edge division
/// vectors. Witnesses are the smallest indices k at which a suffix-sum
/// inequality is strict in the respective direction.
struct OrderRelation {
    Ordering outcome = Ordering::Equivalent;
    std::optional<int> less_witness;     // least k with sum_{i>=k} r_i < sum_{i>=k} r'_i
    std::optional<int> greater_witness;  // least k with the reverse strict inequality

    std::string to_string() const {
        std::string s = edv::to_string(outcome);
        switch (outcome) {
            case Ordering::StrictlyLess:
                s += " (witness k=" + std::to_string(*less_witness) + ")";
                break;
            case Ordering::StrictlyGreater:
                s += " (witness k=" + std::to_string(*greater_witness) + ")";
                break;
            case Ordering::Incomparable:
                s += " (witness k_less=" + std::to_string(*less_witness) +
                     ", k_greater=" + std::to_string(*greater_witness) + ")";
                break;
            case Ordering::Equivalent:
                break;
        }
        return s;
    }
};

/// The preorder on trees of equal order: r <= r' iff every suffix sum of r is
/// at most the matching suffix sum of r'. Not antisymmetric; Incomparable is a
/// first-class outcome.
inline OrderRelation compare(const EdgeDivisionVector& a, const EdgeDivisionVector& b) {
    if (a.order() != b.order())
        throw Error("orders differ: cannot compare vectors for n=" + std::to_string(a.order()) +
                    " and n=" + std::to_string(b.order()));
    const int m = a.length();
    OrderRelation rel;
    long long suffix_a = 0;
    long long suffix_b = 0;
    std::optional<int> first_less;
    std::optional<int> first_greater;
    // Scan suffixes from the tail; record the *largest*-suffix witnesses seen,
    // then keep the smallest k by overwriting as k decreases.
    for (int k = m; k >= 1; --k) {
        suffix_a += a.at(k);
        suffix_b += b.at(k);
        if (suffix_a < suffix_b) first_less = k;
        if (suffix_a > suffix_b) first_greater = k;
    }
    if (first_less && first_greater)
        rel.outcome = Ordering::Incomparable;
    else if (first_less)
        rel.outcome = Ordering::StrictlyLess;
    else if (first_greater)
        rel.outcome = Ordering::StrictlyGreater;
    else
        rel.outcome = Ordering::Equivalent;
    rel.less_witness = first_less;
    rel.greater_witness = first_greater;
    return rel;
}

inline OrderRelation compare(const Tree& a, const Tree& b) {
    return compare(edge_division_vector(a), edge_division_vector(b));
}

/// Largest component order of T - v over all neighbors of v, per vertex.
inline std::vector<int> max_component_sizes(const Tree& t) {
    const int n = t.order();
    const std::vector<int> size = t.subtree_sizes(0);
    const std::vector<int> parent = t.parents_from(0);
    std::vector<int> result(n, 0);
    for (int v = 0; v < n; ++v) {
        int best = 0;
        for (int w : t.neighbors(v)) {
            const int comp = (parent[w] == v) ? size[w] : n - size[v];
            best = std::max(best, comp);
        }
        result[v] = best;
    }
    return result;
}

/// Centroidal vertices: u with n_u(e) >= n/2 for every incident edge,
/// equivalently every component of T - u has order <= n/2. Every tree has one
/// or two; two centroidal vertices are adjacent with equal halves.
inline std::vector<int> centroidal_vertices(const Tree& t) {
    const int n = t.order();
    if (n == 1) return {0};
    const std::vector<int> maxcomp = max_component_sizes(t);
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (2 * maxcomp[v] <= n) out.push_back(v);
    return out;
}

/// Proper centroidal vertices: n_u(e) > ceil(n/2) for every incident edge,
/// equivalently every component of T - u has order < floor(n/2).
inline std::vector<int> proper_centroidal_vertices(const Tree& t) {
    const int n = t.order();
    if (n == 1) return {0};
    const std::vector<int> maxcomp = max_component_sizes(t);
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (maxcomp[v] < n / 2) out.push_back(v);
    return out;
}

/// Center edges: mu(e) = floor(n/2). A tree has at most two; stars on >= 4
/// vertices have none.
inline std::vector<Edge> center_edges(const Tree& t) {
    const EdgeMuMap m = edge_mu(t);
    std::vector<Edge> out;
    for (int i = 0; i < m.size(); ++i)
        if (m.mu(i) == t.order() / 2) out.push_back(t.edges()[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace edv
