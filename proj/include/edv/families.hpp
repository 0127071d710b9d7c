#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "edv/edge_division.hpp"
#include "edv/tree.hpp"

namespace edv {

enum class FamilyKind {
    Path,                      // P(n)
    Star,                      // S(n)
    Caterpillar,               // CP(n; c1,...,ck)
    DoubleStarPath,            // DSP(n; a,b; k): spine P_k, a pendants at one end, b at the other
    SingleClusterCaterpillar,  // CP(n,k)^s: spine P_k with all n-k pendants at position s
    BalancedStarlike,          // SP(n,q): q legs from a hub, lengths differing by at most 1
    Broom,                     // BROOM(n,d): spine P_{n-d}, d-1 pendants at one end, 1 at the other
};

/// Symbolic description of an extremal family member, sufficient both to
/// construct the tree and to evaluate closed-form index values.
struct FamilyParams {
    FamilyKind kind = FamilyKind::Path;
    int n = 1;
    std::vector<int> composition;  // Caterpillar pendant counts per spine vertex
    int a = 0, b = 0;              // DoubleStarPath end clusters
    int k = 0;                     // spine length (DoubleStarPath, SingleClusterCaterpillar)
    int s = 0;                     // cluster position, canonicalized to min(s, k-s+1)
    int q = 0;                     // BalancedStarlike leg count
    int max_degree = 0;            // Broom

    static FamilyParams path(int n) { return {FamilyKind::Path, n, {}, 0, 0, 0, 0, 0, 0}; }
    static FamilyParams star(int n) { return {FamilyKind::Star, n, {}, 0, 0, 0, 0, 0, 0}; }

    static FamilyParams caterpillar(int n, std::vector<int> composition) {
        FamilyParams p;
        p.kind = FamilyKind::Caterpillar;
        p.n = n;
        p.composition = std::move(composition);
        p.k = static_cast<int>(p.composition.size());
        return p;
    }

    static FamilyParams double_star_path(int n, int a, int b, int k) {
        FamilyParams p;
        p.kind = FamilyKind::DoubleStarPath;
        p.n = n;
        p.a = a;
        p.b = b;
        p.k = k;
        return p;
    }

    /// The cluster position is folded onto min(s, k-s+1): the two describe the
    /// same tree by spine symmetry.
    static FamilyParams single_cluster(int n, int k, int s) {
        FamilyParams p;
        p.kind = FamilyKind::SingleClusterCaterpillar;
        p.n = n;
        p.k = k;
        p.s = (k >= 1 && s >= 1) ? std::min(s, k - s + 1) : s;
        return p;
    }

    static FamilyParams balanced_starlike(int n, int q) {
        FamilyParams p;
        p.kind = FamilyKind::BalancedStarlike;
        p.n = n;
        p.q = q;
        return p;
    }

    static FamilyParams broom(int n, int max_degree) {
        FamilyParams p;
        p.kind = FamilyKind::Broom;
        p.n = n;
        p.max_degree = max_degree;
        return p;
    }

    void validate() const {
        switch (kind) {
            case FamilyKind::Path:
            case FamilyKind::Star:
                if (n < 1) throw Error("family: order must be >= 1");
                return;
            case FamilyKind::Caterpillar: {
                if (k < 1) throw Error("caterpillar: spine length k must be >= 1");
                long long total = k;
                for (int c : composition) {
                    if (c < 0) throw Error("caterpillar: pendant counts must be >= 0");
                    total += c;
                }
                if (total != n)
                    throw Error("caterpillar: composition plus spine must equal n (" +
                                std::to_string(total) + " != " + std::to_string(n) + ")");
                return;
            }
            case FamilyKind::DoubleStarPath:
                if (a < 0 || b < 0) throw Error("double star path: pendant counts must be >= 0");
                if (k < 1) throw Error("double star path: spine length k must be >= 1");
                if (a + b + k != n)
                    throw Error("double star path: a + b + k must equal n (" +
                                std::to_string(a + b + k) + " != " + std::to_string(n) + ")");
                return;
            case FamilyKind::SingleClusterCaterpillar:
                if (k < 1) throw Error("single cluster caterpillar: k must be >= 1");
                if (n < k) throw Error("single cluster caterpillar: n must be >= k");
                if (s < 1 || s > (k + 1) / 2)
                    throw Error("single cluster caterpillar: s must satisfy 1 <= s <= ceil(k/2)");
                return;
            case FamilyKind::BalancedStarlike:
                if (q < 3) throw Error("balanced starlike: q must be >= 3");
                if (q > n - 1) throw Error("balanced starlike: q must be <= n - 1");
                return;
            case FamilyKind::Broom:
                if (max_degree < 3) throw Error("broom: maximum degree must be >= 3");
                if (max_degree > n - 1) throw Error("broom: maximum degree must be <= n - 1");
                return;
        }
        throw Error("family: unknown kind");
    }

    std::string to_string() const {
        switch (kind) {
            case FamilyKind::Path: return "P(" + std::to_string(n) + ")";
            case FamilyKind::Star: return "S(" + std::to_string(n) + ")";
            case FamilyKind::Caterpillar: {
                std::string out = "CP(" + std::to_string(n) + ";";
                for (std::size_t i = 0; i < composition.size(); ++i) {
                    out += (i ? "," : " ") + std::to_string(composition[i]);
                }
                return out + ")";
            }
            case FamilyKind::DoubleStarPath:
                return "DSP(" + std::to_string(n) + "; " + std::to_string(a) + "," +
                       std::to_string(b) + "; " + std::to_string(k) + ")";
            case FamilyKind::SingleClusterCaterpillar:
                return "CP(" + std::to_string(n) + "," + std::to_string(k) + ")^" + std::to_string(s);
            case FamilyKind::BalancedStarlike:
                return "SP(" + std::to_string(n) + "," + std::to_string(q) + ")";
            case FamilyKind::Broom:
                return "BROOM(" + std::to_string(n) + "," + std::to_string(max_degree) + ")";
        }
        return "?";
    }
};

namespace detail {

/// Spine vertices take ids 0..k-1, pendants follow in spine order.
inline Tree build_caterpillar(int n, const std::vector<int>& composition) {
    const int k = static_cast<int>(composition.size());
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < composition[i]; ++c) edges.emplace_back(i, next++);
    return Tree(n, std::move(edges));
}

}  // namespace detail

/// Build the unique tree of the family with deterministic labels: spine first
/// (in order), then pendants per spine vertex; starlike legs in nondecreasing
/// length, each leg labeled hub-outwards.
inline Tree construct(const FamilyParams& p) {
    p.validate();
    switch (p.kind) {
        case FamilyKind::Path:
            return detail::build_caterpillar(p.n, std::vector<int>(static_cast<std::size_t>(p.n), 0));
        case FamilyKind::Star: {
            if (p.n == 1) return Tree(1, {});
            std::vector<int> comp{p.n - 1};
            return detail::build_caterpillar(p.n, comp);
        }
        case FamilyKind::Caterpillar:
            return detail::build_caterpillar(p.n, p.composition);
        case FamilyKind::DoubleStarPath: {
            std::vector<int> comp(static_cast<std::size_t>(p.k), 0);
            comp.front() += p.a;
            comp.back() += p.b;  // k == 1 puts both clusters on the single spine vertex
            return detail::build_caterpillar(p.n, comp);
        }
        case FamilyKind::SingleClusterCaterpillar: {
            std::vector<int> comp(static_cast<std::size_t>(p.k), 0);
            comp[static_cast<std::size_t>(p.s - 1)] = p.n - p.k;
            return detail::build_caterpillar(p.n, comp);
        }
        case FamilyKind::BalancedStarlike: {
            const int legs = p.q;
            const int shorter = (p.n - 1) / legs;
            const int longer_count = (p.n - 1) % legs;
            std::vector<Edge> edges;
            edges.reserve(p.n - 1);
            int next = 1;
            for (int leg = 0; leg < legs; ++leg) {
                const int len = shorter + (leg >= legs - longer_count ? 1 : 0);
                int prev = 0;
                for (int step = 0; step < len; ++step) {
                    edges.emplace_back(prev, next);
                    prev = next++;
                }
            }
            return Tree(p.n, std::move(edges));
        }
        case FamilyKind::Broom:
            return construct(FamilyParams::double_star_path(p.n, 1, p.max_degree - 1, p.n - p.max_degree));
    }
    throw Error("family: unknown kind");
}

/// Reattach every branch hanging at spine[from_index] to the next spine
/// vertex. The spine must be a path in the tree; vertex labels are preserved,
/// only the branch root edges are rewired.
inline Tree branch_shift(const Tree& t, const std::vector<int>& spine, int from_index) {
    const int k = static_cast<int>(spine.size());
    if (k < 1) throw Error("branch shift: empty spine");
    for (int i = 0; i < k; ++i) {
        if (spine[i] < 0 || spine[i] >= t.order())
            throw Error("branch shift: spine vertex out of range");
        if (i + 1 < k && !t.has_edge(spine[i], spine[i + 1]))
            throw Error("branch shift: spine vertices must be consecutively adjacent");
    }
    if (from_index < 0 || from_index >= k) throw Error("branch shift: from_index out of range");
    if (from_index == k - 1) throw Error("branch shift: the last spine vertex has no successor");

    const int from = spine[from_index];
    const int to = spine[from_index + 1];
    const int prev = from_index > 0 ? spine[from_index - 1] : -1;
    std::vector<int> roots;
    for (int w : t.neighbors(from))
        if (w != to && w != prev) roots.push_back(w);
    if (roots.empty()) throw Error("branch shift: no branch at spine position " + std::to_string(from_index));

    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (const Edge& e : t.edges()) {
        const bool moved = (e.u == from && std::find(roots.begin(), roots.end(), e.v) != roots.end()) ||
                           (e.v == from && std::find(roots.begin(), roots.end(), e.u) != roots.end());
        if (moved)
            edges.emplace_back(to, e.u == from ? e.v : e.u);
        else
            edges.push_back(e);
    }
    return Tree(t.order(), std::move(edges));
}

/// Shifted double star path parameters: one pendant moves from the b-end to
/// the a-end.
inline FamilyParams edge_shift_params(const FamilyParams& p) {
    if (p.kind != FamilyKind::DoubleStarPath) throw Error("edge shift: expects a double star path");
    p.validate();
    if (p.b < 1) throw Error("edge shift: no pendant to shift (b = 0)");
    return FamilyParams::double_star_path(p.n, p.a + 1, p.b - 1, p.k);
}

inline Tree edge_shift(const FamilyParams& p) { return construct(edge_shift_params(p)); }

/// Contract the edge uv into u and reattach v as a pendant at u. Requires both
/// components of T - uv to have order >= 2. Vertex labels are preserved.
inline Tree edge_move(const Tree& t, Edge uv) {
    const int idx = t.edge_index(uv.u, uv.v);
    if (idx < 0)
        throw Error("edge move: (" + std::to_string(uv.u) + ", " + std::to_string(uv.v) +
                    ") is not an edge");
    const EdgeMuMap m = edge_mu(t);
    if (m.mu(idx) < 2) throw Error("edge move: transformation requires both sides >= 2");

    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (const Edge& e : t.edges()) {
        if (e == Edge(uv.u, uv.v)) {
            edges.push_back(e);
        } else if (e.u == uv.v) {
            edges.emplace_back(uv.u, e.v);
        } else if (e.v == uv.v) {
            edges.emplace_back(e.u, uv.u);
        } else {
            edges.push_back(e);
        }
    }
    return Tree(t.order(), std::move(edges));
}

namespace detail {

struct ExprCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    int column() const { return static_cast<int>(pos) + 1; }
    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "'", 1, column());
    }
    int integer() {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw ParseError("expected an integer", 1, column());
        long long value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000'000) throw ParseError("integer too large", 1, column());
        }
        return static_cast<int>(value);
    }
    std::string keyword() {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= 'A' && text[pos] <= 'Z') ++pos;
        return std::string(text.substr(start, pos - start));
    }
    void expect_end() {
        skip_space();
        if (pos != text.size()) throw ParseError("trailing input", 1, column());
    }
};

}  // namespace detail

/// Parse a family expression: P(n), S(n), CP(n; c1,...,ck), CP(n,k)^s,
/// DSP(n; a,b; k), SP(n,q), BROOM(n,d).
inline FamilyParams parse_family_expression(std::string_view text) {
    detail::ExprCursor in{text};
    const std::string word = in.keyword();
    FamilyParams params;
    if (word == "P") {
        in.expect('(');
        params = FamilyParams::path(in.integer());
        in.expect(')');
    } else if (word == "S") {
        in.expect('(');
        params = FamilyParams::star(in.integer());
        in.expect(')');
    } else if (word == "CP") {
        in.expect('(');
        const int n = in.integer();
        if (in.eat(';')) {
            std::vector<int> comp{in.integer()};
            while (in.eat(',')) comp.push_back(in.integer());
            in.expect(')');
            params = FamilyParams::caterpillar(n, std::move(comp));
        } else {
            in.expect(',');
            const int k = in.integer();
            in.expect(')');
            in.expect('^');
            const int s = in.integer();
            if (k >= 1 && (s < 1 || s > k))
                throw ParseError("cluster position s must be between 1 and k", 1, in.column());
            params = FamilyParams::single_cluster(n, k, s);
        }
    } else if (word == "DSP") {
        in.expect('(');
        const int n = in.integer();
        in.expect(';');
        const int a = in.integer();
        in.expect(',');
        const int b = in.integer();
        in.expect(';');
        const int k = in.integer();
        in.expect(')');
        params = FamilyParams::double_star_path(n, a, b, k);
    } else if (word == "SP") {
        in.expect('(');
        const int n = in.integer();
        in.expect(',');
        const int q = in.integer();
        in.expect(')');
        params = FamilyParams::balanced_starlike(n, q);
    } else if (word == "BROOM") {
        in.expect('(');
        const int n = in.integer();
        in.expect(',');
        const int d = in.integer();
        in.expect(')');
        params = FamilyParams::broom(n, d);
    } else {
        throw ParseError("unknown family '" + word + "'", 1, in.column());
    }
    in.expect_end();
    params.validate();
    return params;
}

}  // namespace edv
