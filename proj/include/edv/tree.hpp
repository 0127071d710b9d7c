#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edv {

/// Base error for malformed input, violated preconditions and bad parameters.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Error with source position (1-based line/column; 0 means "not applicable").
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, int line, int column) {
        std::string where;
        if (line > 0) where += "line " + std::to_string(line);
        if (column > 0) {
            if (!where.empty()) where += ", ";
            where += "column " + std::to_string(column);
        }
        return where.empty() ? message : where + ": " + message;
    }

    int line_;
    int column_;
};

/// Unordered edge; endpoints stored with u <= v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unrooted tree on dense vertex ids 0..n-1.
///
/// Construction validates the full tree invariant: exactly n-1 edges, no
/// self-loops or duplicates, every id in range, connected (hence acyclic).
/// Instances are immutable afterwards and safe to share across threads.
class Tree {
public:
    Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) throw Error("tree order must be >= 1");
        const int expected = n_ - 1;
        const int got = static_cast<int>(edges_.size());
        if (got > expected)
            throw Error("cycle detected: " + std::to_string(n_) + " vertices admit " +
                        std::to_string(expected) + " tree edges, got " + std::to_string(got));
        if (got < expected)
            throw Error("disconnected: " + std::to_string(n_) + " vertices need " +
                        std::to_string(expected) + " tree edges, got " + std::to_string(got));

        adj_.assign(n_, {});
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v >= n_)
                throw Error("vertex id out of range: edge (" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + ") on " + std::to_string(n_) + " vertices");
            if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }

        std::vector<Edge> sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
            throw Error("duplicate edge (" + std::to_string(it->u) + ", " + std::to_string(it->v) + ")");

        // n-1 edges without duplicates: connected <=> acyclic.
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != n_) throw Error("disconnected edge set (a component contains a cycle)");
    }

    int order() const noexcept { return n_; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int a, int b) const {
        const auto& nb = neighbors(a);
        return std::find(nb.begin(), nb.end(), b) != nb.end();
    }

    /// Index into edges() of the edge {a, b}, or -1 when absent.
    int edge_index(int a, int b) const {
        const Edge key(a, b);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i] == key) return static_cast<int>(i);
        return -1;
    }

    /// BFS distances from `source` to every vertex.
    std::vector<int> distances_from(int source) const {
        std::vector<int> dist(n_, -1);
        std::vector<int> queue;
        queue.reserve(n_);
        dist[source] = 0;
        queue.push_back(source);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int w : adj_[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    /// Parent array of the tree rooted at `root` (parent[root] == -1).
    /// When `order` is non-null it receives the vertices in BFS order, so
    /// children always appear after their parent.
    std::vector<int> parents_from(int root, std::vector<int>* order = nullptr) const {
        std::vector<int> parent(n_, -2);
        std::vector<int> queue;
        queue.reserve(n_);
        parent[root] = -1;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int w : adj_[v]) {
                if (parent[w] == -2) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if (order) *order = queue;
        return parent;
    }

    /// Size of the subtree of each vertex when rooted at `root`.
    std::vector<int> subtree_sizes(int root) const {
        std::vector<int> order;
        const std::vector<int> parent = parents_from(root, &order);
        std::vector<int> size(n_, 1);
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (parent[*it] >= 0) size[parent[*it]] += size[*it];
        return size;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace edv
