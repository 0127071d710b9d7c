#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "edv/canonical.hpp"
#include "edv/parallel.hpp"
#include "edv/profile.hpp"
#include "edv/tree.hpp"

namespace edv {

/// Exhaustive generator of unlabeled free trees of order n, one per
/// isomorphism class.
///
/// Canonical rooted level sequences are produced by the constant-amortized
/// successor rule (start from the path, repeatedly truncate-and-tile), walking
/// them in decreasing lexicographic order. A sequence is kept exactly when it
/// is the free-tree canonical form of its own tree: rooted at a centroidal
/// vertex and maximal over the (at most two) centroid rootings. Each free
/// tree therefore appears exactly once, in canonical-code order.
class FreeTreeEnumerator {
public:
    explicit FreeTreeEnumerator(int n) : n_(n) {
        if (n_ < 1) throw Error("free tree enumeration needs n >= 1");
        seq_.resize(n_);
        for (int i = 0; i < n_; ++i) seq_[i] = i + 1;
        pending_ = true;
    }

    /// Resume from a given rooted level sequence (inclusive), e.g. to split
    /// the sequence space across workers.
    FreeTreeEnumerator(int n, std::vector<int> start) : FreeTreeEnumerator(n) {
        if (static_cast<int>(start.size()) != n_) throw Error("start sequence has wrong length");
        seq_ = std::move(start);
    }

    /// Copy the next canonical sequence into `out`; false when exhausted.
    bool next(std::vector<int>& out) {
        while (true) {
            if (!pending_) {
                if (!advance_rooted()) return false;
            }
            pending_ = false;
            if (is_free_canonical()) {
                out = seq_;
                return true;
            }
        }
    }

    static Tree to_tree(const std::vector<int>& sequence) { return tree_from_level_sequence(sequence); }

private:
    // Successor over canonical rooted level sequences (decreasing lex order):
    // locate the last entry above level 2, lower it by tiling the block that
    // starts at the previous occurrence of the lower level.
    bool advance_rooted() {
        int p = -1;
        for (int i = n_ - 1; i >= 1; --i) {
            if (seq_[i] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) return false;
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (seq_[i] == seq_[p] - 1) {
                q = i;
                break;
            }
        }
        const int width = p - q;
        for (int i = p; i < n_; ++i) seq_[i] = seq_[i - width];
        return true;
    }

    bool is_free_canonical() {
        if (n_ <= 2) return true;
        const Tree t = tree_from_level_sequence(seq_);
        const std::vector<int> c = centroidal_vertices(t);
        bool root_is_centroid = false;
        for (int v : c) root_is_centroid |= (v == 0);
        if (!root_is_centroid) return false;
        return canonical_level_sequence(t) == seq_;
    }

    int n_;
    std::vector<int> seq_;
    bool pending_ = false;
};

/// All canonical level sequences of order n, in emission order.
inline std::vector<std::vector<int>> free_tree_sequences(int n) {
    FreeTreeEnumerator gen(n);
    std::vector<std::vector<int>> out;
    std::vector<int> seq;
    while (gen.next(seq)) out.push_back(seq);
    return out;
}

template <class Fn>
void for_each_free_tree(int n, Fn&& fn) {
    FreeTreeEnumerator gen(n);
    std::vector<int> seq;
    while (gen.next(seq)) fn(tree_from_level_sequence(seq));
}

inline unsigned long long free_tree_count(int n) {
    FreeTreeEnumerator gen(n);
    std::vector<int> seq;
    unsigned long long count = 0;
    while (gen.next(seq)) ++count;
    return count;
}

/// One of the four tree classes studied alongside the full set of trees.
struct ClassSpec {
    enum class Kind { AllTrees, Caterpillars, FixedDiameter, FixedPendants, FixedMaxDegree };

    Kind kind = Kind::AllTrees;
    int n = 1;
    int param = 0;  // k, d, q or max degree

    void validate() const {
        if (n < 1) throw Error("class: order must be >= 1");
        switch (kind) {
            case Kind::AllTrees:
                return;
            case Kind::Caterpillars:
                if (param < 1 || param > n) throw Error("caterpillar class needs 1 <= k <= n");
                return;
            case Kind::FixedDiameter:
                if (param < 1 || param > n - 1) throw Error("diameter class needs 1 <= d <= n-1");
                return;
            case Kind::FixedPendants:
                if (param < 2 || param > n - 1) throw Error("pendant class needs 2 <= q <= n-1");
                return;
            case Kind::FixedMaxDegree:
                if (param < 2 || param > n - 1) throw Error("max-degree class needs 2 <= D <= n-1");
                return;
        }
        throw Error("class: unknown kind");
    }

    /// CLI spelling: all:n, cat:n:k, diam:n:d, pend:n:q, maxdeg:n:D.
    static ClassSpec parse(std::string_view text) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            const std::size_t colon = text.find(':', start);
            parts.emplace_back(text.substr(start, colon - start));
            if (colon == std::string_view::npos) break;
            start = colon + 1;
        }
        auto to_int = [](const std::string& s) {
            if (s.empty()) throw Error("class spec: missing number");
            long long v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') throw Error("class spec: invalid number '" + s + "'");
                v = v * 10 + (c - '0');
                if (v > 1'000'000) throw Error("class spec: number too large");
            }
            return static_cast<int>(v);
        };
        ClassSpec spec;
        if (parts.empty()) throw Error("empty class spec");
        const std::string& head = parts[0];
        auto need = [&](std::size_t count) {
            if (parts.size() != count + 1)
                throw Error("class '" + head + "' needs " + std::to_string(count) + " parameter(s)");
        };
        if (head == "all") {
            need(1);
            spec.kind = Kind::AllTrees;
            spec.n = to_int(parts[1]);
        } else if (head == "cat") {
            need(2);
            spec.kind = Kind::Caterpillars;
            spec.n = to_int(parts[1]);
            spec.param = to_int(parts[2]);
        } else if (head == "diam") {
            need(2);
            spec.kind = Kind::FixedDiameter;
            spec.n = to_int(parts[1]);
            spec.param = to_int(parts[2]);
        } else if (head == "pend") {
            need(2);
            spec.kind = Kind::FixedPendants;
            spec.n = to_int(parts[1]);
            spec.param = to_int(parts[2]);
        } else if (head == "maxdeg") {
            need(2);
            spec.kind = Kind::FixedMaxDegree;
            spec.n = to_int(parts[1]);
            spec.param = to_int(parts[2]);
        } else {
            throw Error("unknown class '" + head + "'");
        }
        spec.validate();
        return spec;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::AllTrees: return "all:" + std::to_string(n);
            case Kind::Caterpillars: return "cat:" + std::to_string(n) + ":" + std::to_string(param);
            case Kind::FixedDiameter: return "diam:" + std::to_string(n) + ":" + std::to_string(param);
            case Kind::FixedPendants: return "pend:" + std::to_string(n) + ":" + std::to_string(param);
            case Kind::FixedMaxDegree:
                return "maxdeg:" + std::to_string(n) + ":" + std::to_string(param);
        }
        return "?";
    }
};

/// Spine lengths k under which a caterpillar admits a k-vertex spine
/// presentation: the core path can be extended by promoting an end leaf on
/// either side, so k ranges over [max(1, c), c+2] intersected with [1, n].
inline bool caterpillar_admits_spine(const TreeProfile& p, int n, int k) {
    if (!p.is_caterpillar) return false;
    const int c = p.core_size;
    return k >= std::max(1, c) && k <= c + 2 && k <= n;
}

inline bool in_class(const Tree& t, const ClassSpec& spec) {
    spec.validate();
    if (t.order() != spec.n)
        throw Error("order mismatch: tree has n=" + std::to_string(t.order()) + ", class expects n=" +
                    std::to_string(spec.n));
    if (spec.kind == ClassSpec::Kind::AllTrees) return true;
    const TreeProfile p = profile(t);
    switch (spec.kind) {
        case ClassSpec::Kind::Caterpillars: return caterpillar_admits_spine(p, spec.n, spec.param);
        case ClassSpec::Kind::FixedDiameter: return p.diameter == spec.param;
        case ClassSpec::Kind::FixedPendants: return p.pendant_count == spec.param;
        case ClassSpec::Kind::FixedMaxDegree: return p.max_degree == spec.param;
        case ClassSpec::Kind::AllTrees: return true;
    }
    return false;
}

inline std::vector<Tree> enumerate_class(const ClassSpec& spec) {
    spec.validate();
    std::vector<Tree> out;
    for_each_free_tree(spec.n, [&](const Tree& t) {
        if (in_class(t, spec)) out.push_back(t);
    });
    return out;
}

namespace detail {

/// Decode a Pruefer sequence over labels 0..n-1 into tree edges.
inline void prufer_decode(int n, const std::vector<int>& code, std::vector<Edge>& edges) {
    edges.clear();
    std::vector<int> degree(n, 1);
    for (int a : code) ++degree[a];
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : code) {
        edges.emplace_back(leaf, a);
        if (--degree[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
}

}  // namespace detail

/// Independent oracle for the number of unlabeled trees: decode every one of
/// the n^(n-2) Pruefer sequences and bucket by canonical code. Exponential;
/// intended for n <= 9.
inline std::size_t prufer_isomorphism_class_count(int n, int workers = 1) {
    if (n < 1) throw Error("prufer oracle needs n >= 1");
    if (n > 10) throw Error("prufer oracle capped at n <= 10");
    if (n <= 2) return 1;
    if (n == 3) return 1;

    unsigned long long total = 1;
    for (int i = 0; i < n - 2; ++i) total *= static_cast<unsigned long long>(n);

    std::vector<std::unordered_set<std::string>> buckets(std::max(workers, 1));
    parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end, int chunk) {
        std::vector<int> code(n - 2);
        std::vector<Edge> edges;
        auto& seen = buckets[static_cast<std::size_t>(chunk)];
        for (std::size_t index = begin; index < end; ++index) {
            std::size_t rest = index;
            for (int i = 0; i < n - 2; ++i) {
                code[i] = static_cast<int>(rest % n);
                rest /= n;
            }
            detail::prufer_decode(n, code, edges);
            seen.insert(canonical_code(Tree(n, edges)));
        }
    });
    std::unordered_set<std::string> all;
    for (auto& b : buckets) all.merge(b);
    return all.size();
}

}  // namespace edv
