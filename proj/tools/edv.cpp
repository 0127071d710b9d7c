// Command-line front end: edge division vectors, the tree preorder, family
// construction, class enumeration and the theorem-verification harness, with
// deterministic text/json/csv output for scripting.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edv/edv.hpp"

namespace {

struct CliConfig {
    int enumeration_cap = 16;
    double float_tolerance = 1e-9;
    int workers = edv::default_worker_count();
    std::string output_format = "text";

    void validate() const {
        if (enumeration_cap < 4) throw edv::Error("enumeration cap must be >= 4");
        if (workers < 1) throw edv::Error("workers must be >= 1");
        if (float_tolerance <= 0) throw edv::Error("tolerance must be > 0");
        if (output_format != "text" && output_format != "json" && output_format != "csv")
            throw edv::Error("format must be one of text, json, csv");
    }
};

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw edv::Error("invalid " + what + ": '" + text + "'");
    }
}

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw edv::Error("invalid " + what + ": '" + text + "'");
    }
}

void apply_config_file(CliConfig& config, const std::string& path) {
    std::ifstream file(path);
    if (!file) throw edv::Error("cannot open config file '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw edv::ParseError("config entries are key=value", line_no, 1);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "cap")
            config.enumeration_cap = parse_int(value, "cap");
        else if (key == "workers")
            config.workers = parse_int(value, "workers");
        else if (key == "format")
            config.output_format = value;
        else if (key == "tolerance")
            config.float_tolerance = parse_double(value, "tolerance");
        else
            throw edv::ParseError("unknown config key '" + key + "'", line_no, 1);
    }
}

void apply_environment(CliConfig& config) {
    if (const char* cap = std::getenv("EDV_CAP")) config.enumeration_cap = parse_int(cap, "EDV_CAP");
    if (const char* workers = std::getenv("EDV_WORKERS"))
        config.workers = parse_int(workers, "EDV_WORKERS");
    if (const char* format = std::getenv("EDV_FORMAT")) config.output_format = format;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::json index_value_json(const edv::IndexValue& value) {
    switch (value.kind()) {
        case edv::ValueKind::ExactInteger:
            return value.as_integer();
        case edv::ValueKind::ExactRational: {
            const edv::Rational r = value.as_rational();
            if (r.is_integral()) return r.to_integer();
            return r.to_string();
        }
        case edv::ValueKind::Floating:
            return value.as_double();
    }
    return nullptr;
}

void enforce_cap(int n, const CliConfig& config) {
    if (n > config.enumeration_cap)
        throw edv::Error("cap exceeded: n=" + std::to_string(n) + " is above the enumeration cap " +
                         std::to_string(config.enumeration_cap) + " (raise with --cap or EDV_CAP)");
}

int run(int argc, char** argv) {
    CLI::App app{"edge division vectors, tree preorder and extremal-tree verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string flag_format, config_path;
    int flag_cap = -1, flag_workers = -1;
    double flag_tolerance = -1;
    app.add_option("--format", flag_format, "output format: text, json or csv");
    app.add_option("--cap", flag_cap, "enumeration cap on the tree order (default 16)");
    app.add_option("--workers", flag_workers, "worker threads for sweeps");
    app.add_option("--tolerance", flag_tolerance, "relative tolerance for floating comparisons");
    app.add_option("--config", config_path, "config file with key=value lines");

    auto* cmd_edv = app.add_subcommand("edv", "print the edge division vector of a tree");
    std::string edv_tree;
    cmd_edv->add_option("tree", edv_tree, "family expression or @file edge list")->required();

    auto* cmd_mu = app.add_subcommand("mu", "print the per-edge mu table of a tree");
    std::string mu_tree;
    cmd_mu->add_option("tree", mu_tree, "family expression or @file edge list")->required();

    auto* cmd_compare = app.add_subcommand("compare", "compare two trees in the preorder");
    std::string cmp_a, cmp_b;
    cmd_compare->add_option("a", cmp_a)->required();
    cmd_compare->add_option("b", cmp_b)->required();

    auto* cmd_index = app.add_subcommand("index", "evaluate a topological index on a tree");
    std::string index_name, index_tree;
    cmd_index->add_option("name", index_name, "wiener, mwiener:L, vwiener:L, steiner:K, "
                                              "hyperwiener-edge, hyperwiener-pairwise, "
                                              "wiener-hosoya, degree-distance, gutman, abc2")
        ->required();
    cmd_index->add_option("tree", index_tree)->required();

    auto* cmd_construct = app.add_subcommand("construct", "emit the edge list of a family member");
    std::string construct_expr;
    cmd_construct->add_option("family", construct_expr, "family expression")->required();

    auto* cmd_enumerate = app.add_subcommand("enumerate", "stream canonical trees of a class");
    std::string enum_spec;
    cmd_enumerate->add_option("class", enum_spec, "all:n, cat:n:k, diam:n:d, pend:n:q, maxdeg:n:D")
        ->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a verification claim");
    std::string claim_name;
    int verify_n_max = 0;
    cmd_verify->add_option("claim", claim_name, "claim id (e.g. Thm-4.2, Cor-5.1, Table-4) or 'all'")
        ->required();
    cmd_verify->add_option("--n-max", verify_n_max, "sweep bound (default: per-claim)");

    auto* cmd_table4 = app.add_subcommand("table4", "reproduce the published Wiener bound table");

    auto* cmd_equiv = app.add_subcommand("equiv-pairs", "non-isomorphic trees with equal vectors");
    int equiv_n = 0;
    cmd_equiv->add_option("n", equiv_n, "tree order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // Precedence: flags > environment > config file > defaults.
    CliConfig config;
    if (!config_path.empty()) apply_config_file(config, config_path);
    apply_environment(config);
    if (flag_cap >= 0) config.enumeration_cap = flag_cap;
    if (flag_workers >= 0) config.workers = flag_workers;
    if (flag_tolerance >= 0) config.float_tolerance = flag_tolerance;
    if (!flag_format.empty()) config.output_format = flag_format;
    config.validate();
    const std::string& format = config.output_format;

    if (cmd_edv->parsed()) {
        const edv::Tree t = edv::parse_tree_argument(edv_tree);
        const edv::EdgeDivisionVector r = edv::edge_division_vector(t);
        if (format == "json") {
            std::cout << nlohmann::json{{"n", r.order()}, {"r", r.counts()},
                                        {"vector", r.to_string()}}
                             .dump(2)
                      << "\n";
        } else if (format == "csv") {
            std::cout << "i,r_i\n";
            for (int i = 1; i <= r.length(); ++i) std::cout << i << "," << r.at(i) << "\n";
        } else {
            std::cout << r.to_string() << "\n";
        }
        return 0;
    }

    if (cmd_mu->parsed()) {
        const edv::Tree t = edv::parse_tree_argument(mu_tree);
        const edv::EdgeMuMap m = edv::edge_mu(t);
        if (format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < m.size(); ++i)
                rows.push_back({{"u", t.edges()[i].u},
                                {"v", t.edges()[i].v},
                                {"side_u", m.side_u(i)},
                                {"side_v", m.side_v(i)},
                                {"mu", m.mu(i)}});
            std::cout << rows.dump(2) << "\n";
        } else {
            if (format == "csv") std::cout << "u,v,side_u,side_v,mu\n";
            const char sep = format == "csv" ? ',' : ' ';
            for (int i = 0; i < m.size(); ++i)
                std::cout << t.edges()[i].u << sep << t.edges()[i].v << sep << m.side_u(i) << sep
                          << m.side_v(i) << sep << m.mu(i) << "\n";
        }
        return 0;
    }

    if (cmd_compare->parsed()) {
        const edv::Tree a = edv::parse_tree_argument(cmp_a);
        const edv::Tree b = edv::parse_tree_argument(cmp_b);
        const edv::EdgeDivisionVector ra = edv::edge_division_vector(a);
        const edv::EdgeDivisionVector rb = edv::edge_division_vector(b);
        const edv::OrderRelation rel = edv::compare(ra, rb);
        if (format == "json") {
            nlohmann::json j{{"outcome", edv::to_string(rel.outcome)},
                             {"a", ra.to_string()},
                             {"b", rb.to_string()}};
            j["less_witness"] = rel.less_witness ? nlohmann::json(*rel.less_witness) : nullptr;
            j["greater_witness"] =
                rel.greater_witness ? nlohmann::json(*rel.greater_witness) : nullptr;
            std::cout << j.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "outcome,less_witness,greater_witness\n"
                      << edv::to_string(rel.outcome) << ","
                      << (rel.less_witness ? std::to_string(*rel.less_witness) : "") << ","
                      << (rel.greater_witness ? std::to_string(*rel.greater_witness) : "") << "\n";
        } else {
            std::cout << rel.to_string() << "\n";
        }
        return 0;
    }

    if (cmd_index->parsed()) {
        const edv::Tree t = edv::parse_tree_argument(index_tree);
        // hyperwiener-pairwise is the distance-based oracle, not edge-additive.
        if (index_name == "hyperwiener-pairwise") {
            const long long v = edv::hyper_wiener_pairwise(t);
            if (format == "json")
                std::cout << nlohmann::json{{"index", index_name}, {"value", v}}.dump(2) << "\n";
            else if (format == "csv")
                std::cout << "index,value\n" << index_name << "," << v << "\n";
            else
                std::cout << v << "\n";
            return 0;
        }
        const edv::IndexSpec spec = edv::IndexSpec::parse(index_name);
        const edv::IndexValue value = edv::index_value(t, spec);
        if (format == "json")
            std::cout << nlohmann::json{{"index", spec.name()}, {"value", index_value_json(value)}}
                             .dump(2)
                      << "\n";
        else if (format == "csv")
            std::cout << "index,value\n" << spec.name() << "," << value.to_string() << "\n";
        else
            std::cout << value.to_string() << "\n";
        return 0;
    }

    if (cmd_construct->parsed()) {
        const edv::FamilyParams params = edv::parse_family_expression(construct_expr);
        const edv::Tree t = edv::construct(params);
        if (format == "json") {
            nlohmann::json edges = nlohmann::json::array();
            for (const edv::Edge& e : t.edges()) edges.push_back({e.u, e.v});
            std::cout << nlohmann::json{{"family", params.to_string()},
                                        {"n", t.order()},
                                        {"edges", edges},
                                        {"code", edv::canonical_code(t)}}
                             .dump(2)
                      << "\n";
        } else if (format == "csv") {
            std::cout << "u,v\n";
            for (const edv::Edge& e : t.edges()) std::cout << e.u << "," << e.v << "\n";
        } else {
            std::cout << edv::to_edge_list(t);
        }
        return 0;
    }

    if (cmd_enumerate->parsed()) {
        const edv::ClassSpec spec = edv::ClassSpec::parse(enum_spec);
        enforce_cap(spec.n, config);
        std::vector<std::string> codes;
        edv::FreeTreeEnumerator gen(spec.n);
        std::vector<int> seq;
        while (gen.next(seq)) {
            const edv::Tree t = edv::tree_from_level_sequence(seq);
            if (!edv::in_class(t, spec)) continue;
            std::string code;
            for (std::size_t i = 0; i < seq.size(); ++i)
                code += (i ? " " : "") + std::to_string(seq[i]);
            codes.push_back(std::move(code));
        }
        if (format == "json") {
            std::cout << nlohmann::json{{"class", spec.to_string()}, {"count", codes.size()},
                                        {"trees", codes}}
                             .dump(2)
                      << "\n";
        } else if (format == "csv") {
            std::cout << "code\n";
            for (const std::string& c : codes) std::cout << csv_quote(c) << "\n";
        } else {
            for (const std::string& c : codes) std::cout << c << "\n";
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        std::vector<edv::Claim> claims;
        if (claim_name == "all") {
            claims = edv::all_claims();
        } else if (const auto claim = edv::claim_from_id(claim_name)) {
            claims.push_back(*claim);
        } else {
            throw edv::Error("unknown claim '" + claim_name + "' (see README for claim ids)");
        }
        edv::VerifyOptions opt;
        opt.workers = config.workers;
        opt.tolerance = config.float_tolerance;
        std::vector<edv::VerificationReport> reports;
        for (edv::Claim claim : claims) {
            edv::VerifyOptions claim_opt = opt;
            claim_opt.n_max = verify_n_max > 0 ? verify_n_max : edv::default_n_max(claim);
            if (edv::claim_uses_enumeration(claim)) enforce_cap(claim_opt.n_max, config);
            reports.push_back(edv::run_claim(claim, claim_opt));
        }
        bool all_ok = true;
        for (const auto& r : reports) all_ok = all_ok && r.ok();
        if (format == "json") {
            if (reports.size() == 1) {
                std::cout << edv::to_json(reports.front()).dump(2) << "\n";
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reports) arr.push_back(edv::to_json(r));
                std::cout << arr.dump(2) << "\n";
            }
        } else if (format == "csv") {
            std::cout << "claim_id,checked,passed,failures\n";
            for (const auto& r : reports)
                std::cout << r.claim_id << "," << r.checked << "," << r.passed << ","
                          << r.failures.size() << "\n";
        } else {
            for (const auto& r : reports) std::cout << edv::to_text(r);
            std::cout << (all_ok ? "all claims passed\n" : "CLAIMS FAILED\n");
        }
        return all_ok ? 0 : 1;
    }

    if (cmd_table4->parsed()) {
        const edv::Table4Result result = edv::reproduce_table4();
        if (format == "json")
            std::cout << edv::table4_json(result).dump(2) << "\n";
        else if (format == "csv")
            std::cout << edv::table4_csv(result);
        else
            std::cout << edv::table4_text(result);
        return result.report.ok() ? 0 : 1;
    }

    if (cmd_equiv->parsed()) {
        enforce_cap(equiv_n, config);
        if (equiv_n < 1) throw edv::Error("n must be >= 1");
        const std::vector<edv::EquivalentPair> pairs = edv::find_equivalent_nonisomorphic(equiv_n);
        if (format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& p : pairs)
                arr.push_back({{"vector", p.vector}, {"first", p.first}, {"second", p.second}});
            std::cout << arr.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "vector,first,second\n";
            for (const auto& p : pairs)
                std::cout << csv_quote(p.vector) << "," << csv_quote(p.first) << ","
                          << csv_quote(p.second) << "\n";
        } else {
            for (const auto& p : pairs)
                std::cout << p.vector << "  " << p.first << "  |  " << p.second << "\n";
            std::cout << pairs.size() << " pair(s)\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const edv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
