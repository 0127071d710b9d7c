#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "edv/canonical.hpp"
#include "edv/families.hpp"
#include "edv/tree.hpp"

namespace edv {

enum class TreeFormat { EdgeList, LevelSequence, FamilyExpression };

namespace detail {

inline bool parse_int_token(std::string_view token, long long& out) {
    if (token.empty()) return false;
    std::size_t i = 0;
    bool negative = false;
    if (token[0] == '-') {
        negative = true;
        i = 1;
        if (token.size() == 1) return false;
    }
    long long value = 0;
    for (; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') return false;
        value = value * 10 + (token[i] - '0');
        if (value > 4'000'000'000LL) return false;
    }
    out = negative ? -value : value;
    return true;
}

}  // namespace detail

/// Parse "u v" pairs, one edge per line; blank lines and '#' comments are
/// skipped. Labels are arbitrary nonnegative integers and are remapped to
/// dense ids 0..n-1 in ascending label order.
inline Tree parse_edge_list(std::string_view text) {
    std::vector<std::pair<long long, long long>> raw;
    std::vector<int> raw_line;
    std::istringstream lines{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string tok_u, tok_v, extra;
        if (!(fields >> tok_u)) continue;  // blank line
        if (!(fields >> tok_v)) throw ParseError("expected two vertex labels", line_no, 1);
        if (fields >> extra) throw ParseError("unexpected trailing token '" + extra + "'", line_no, 1);
        long long u = 0, v = 0;
        if (!detail::parse_int_token(tok_u, u) || u < 0)
            throw ParseError("vertex id out of range: '" + tok_u + "'", line_no, 1);
        if (!detail::parse_int_token(tok_v, v) || v < 0)
            throw ParseError("vertex id out of range: '" + tok_v + "'", line_no, 1);
        if (u == v) throw ParseError("self-loop at vertex " + tok_u, line_no, 1);
        raw.emplace_back(u, v);
        raw_line.push_back(line_no);
    }
    if (raw.empty()) throw ParseError("empty edge list", std::max(line_no, 1), 1);

    std::map<long long, int> dense;
    for (const auto& [u, v] : raw) {
        dense.emplace(u, 0);
        dense.emplace(v, 0);
    }
    int next = 0;
    for (auto& [label, id] : dense) id = next++;

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::vector<char> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Edge e(dense[raw[i].first], dense[raw[i].second]);
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (edges[j] == e)
                throw ParseError("duplicate edge", raw_line[i], 1);
        edges.push_back(e);
    }
    try {
        return Tree(next, std::move(edges));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(err.what(), line_no, 1);
    }
}

/// Parse a rooted level sequence of whitespace-separated integers.
inline Tree parse_level_sequence(std::string_view text) {
    std::vector<int> seq;
    std::istringstream in{std::string(text)};
    std::string token;
    int column = 1;
    while (in >> token) {
        long long value = 0;
        if (!detail::parse_int_token(token, value) || value < 1 ||
            value > 1'000'000)
            throw ParseError("invalid level '" + token + "'", 1, column);
        seq.push_back(static_cast<int>(value));
        ++column;
    }
    if (seq.empty()) throw ParseError("empty level sequence", 1, 1);
    if (seq[0] != 1) throw ParseError("level sequence must start at 1", 1, 1);
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] < 2 || seq[i] > seq[i - 1] + 1)
            throw ParseError("invalid level " + std::to_string(seq[i]) +
                             " after level " + std::to_string(seq[i - 1]),
                             1, static_cast<int>(i) + 1);
    return tree_from_level_sequence(seq);
}

inline Tree parse_tree(std::string_view text, TreeFormat format) {
    switch (format) {
        case TreeFormat::EdgeList: return parse_edge_list(text);
        case TreeFormat::LevelSequence: return parse_level_sequence(text);
        case TreeFormat::FamilyExpression: return construct(parse_family_expression(text));
    }
    throw Error("unknown tree format");
}

/// CLI tree argument: "@path" loads an edge-list file, anything else is a
/// family expression.
inline Tree parse_tree_argument(std::string_view arg) {
    if (!arg.empty() && arg.front() == '@') {
        const std::string path(arg.substr(1));
        std::ifstream file(path);
        if (!file) throw Error("cannot open tree file '" + path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        return parse_edge_list(buf.str());
    }
    return construct(parse_family_expression(arg));
}

inline std::string to_edge_list(const Tree& t) {
    std::string out;
    for (const Edge& e : t.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

/// Canonical level sequence rendered as space-separated integers.
inline std::string to_level_sequence_string(const Tree& t) { return canonical_code(t); }

}  // namespace edv
