#pragma once

#include "edv/verify.hpp"

namespace edv {

/// Indices exercised by the monotonicity-transfer sweep: the edge-additive
/// battery together with parameterized variants.
inline std::vector<IndexSpec> transfer_battery() {
    return {IndexSpec::wiener(),
            IndexSpec::hyper_wiener_edge(),
            IndexSpec::wiener_hosoya(),
            IndexSpec::degree_distance(),
            IndexSpec::gutman(),
            IndexSpec::abc2(),
            IndexSpec::modified_wiener(2.0),
            IndexSpec::modified_wiener(0.5),
            IndexSpec::modified_wiener(-1.0),
            IndexSpec::variable_wiener(2.0),
            IndexSpec::variable_wiener(0.5),
            IndexSpec::steiner(3)};
}

/// Monotonicity transfer at one order: on every comparable pair the index
/// must respect the order according to its numeric monotone class, and each
/// class's extremal tree must attain the index bound over the whole class.
inline VerificationReport verify_index_transfer(const VerifyOptions& opt) {
    using namespace detail_verify;
    Timer timer;
    const int n = opt.n_max > 0 ? opt.n_max : default_n_max(Claim::Thm8_1);
    VerificationReport report;
    report.claim_id = claim_id(Claim::Thm8_1);
    report.universe = "all trees of order " + std::to_string(n) + ", all comparable pairs";
    if (n < 4) throw Error("index transfer needs n >= 4");

    struct Entry {
        Tree tree;
        std::string code;
        EdgeDivisionVector vec;
        TreeProfile prof;
        std::vector<int> cat_ks;
    };
    std::vector<Entry> entries;
    for_each_free_tree(n, [&](const Tree& t) {
        const TreeProfile prof = profile(t);
        std::vector<int> ks;
        for (int k = 1; k <= n; ++k)
            if (caterpillar_admits_spine(prof, n, k)) ks.push_back(k);
        entries.push_back({t, canonical_code(t), edge_division_vector(t), prof, std::move(ks)});
    });

    const std::vector<IndexSpec> battery = transfer_battery();
    auto leq = [&](const IndexValue& a, const IndexValue& b, bool strict) {
        if (a.is_exact() && b.is_exact())
            return strict ? a.as_rational() < b.as_rational() : !(b.as_rational() < a.as_rational());
        const double x = a.as_double();
        const double y = b.as_double();
        const double scale = std::max({1.0, std::abs(x), std::abs(y)});
        return x <= y + opt.tolerance * scale;  // floating: direction only
    };

    // Pairwise order relations, computed once.
    std::vector<std::vector<Ordering>> rel(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        rel[i].resize(entries.size(), Ordering::Equivalent);
        for (std::size_t j = 0; j < entries.size(); ++j)
            if (i != j) rel[i][j] = compare(entries[i].vec, entries[j].vec).outcome;
    }

    for (const IndexSpec& spec : battery) {
        const Monotonicity mono = monotone_class(spec, n);
        if (mono == Monotonicity::Neither) {
            report.notes.push_back(spec.name() + ": not applicable (contribution not monotone)");
            continue;
        }
        std::vector<IndexValue> value;
        value.reserve(entries.size());
        for (const Entry& e : entries) value.push_back(index_value(e.tree, spec));

        const bool exact = spec.value_kind() != ValueKind::Floating;
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                if (rel[i][j] == Ordering::Incomparable) continue;
                ++report.checked;
                std::size_t lo = i, hi = j;
                if (rel[i][j] == Ordering::StrictlyGreater) std::swap(lo, hi);
                bool ok = true;
                if (rel[i][j] == Ordering::Equivalent) {
                    ok = leq(value[i], value[j], false) && leq(value[j], value[i], false);
                } else if (mono == Monotonicity::Increasing) {
                    ok = leq(value[lo], value[hi], exact);
                } else {
                    ok = leq(value[hi], value[lo], exact);
                }
                if (!ok)
                    report.failures.push_back(
                        {entries[i].code + " | " + entries[j].code,
                         spec.name() + " must follow the order (" + to_string(mono) + ")",
                         "F=" + value[i].to_string() + " vs F=" + value[j].to_string() + ", relation " +
                             to_string(rel[i][j])});
            }

        // Extremal placements per class.
        struct Placement {
            std::string label;
            std::optional<FamilyParams> order_max;
            std::optional<FamilyParams> order_min;
            std::vector<std::size_t> members;
        };
        std::vector<Placement> placements;
        {
            Placement all{"all:" + std::to_string(n), FamilyParams::path(n), FamilyParams::star(n), {}};
            for (std::size_t i = 0; i < entries.size(); ++i) all.members.push_back(i);
            placements.push_back(std::move(all));
            for (int k = 2; k <= n - 1; ++k) {
                Placement p{"cat:" + std::to_string(n) + ":" + std::to_string(k),
                            FamilyParams::double_star_path(n, (n - k) / 2, (n - k + 1) / 2, k),
                            FamilyParams::single_cluster(n, k, (k + 1) / 2),
                            {}};
                for (std::size_t i = 0; i < entries.size(); ++i) {
                    const auto& ks = entries[i].cat_ks;
                    if (std::find(ks.begin(), ks.end(), k) != ks.end()) p.members.push_back(i);
                }
                placements.push_back(std::move(p));
            }
            for (int d = 2; d <= n - 1; ++d) {
                Placement p{"diam:" + std::to_string(n) + ":" + std::to_string(d), std::nullopt,
                            FamilyParams::single_cluster(n, d + 1, (d + 2) / 2), {}};
                for (std::size_t i = 0; i < entries.size(); ++i)
                    if (entries[i].prof.diameter == d) p.members.push_back(i);
                placements.push_back(std::move(p));
            }
            for (int q = 3; q <= n - 2; ++q) {
                Placement p{"pend:" + std::to_string(n) + ":" + std::to_string(q),
                            FamilyParams::double_star_path(n, q / 2, (q + 1) / 2, n - q),
                            FamilyParams::balanced_starlike(n, q),
                            {}};
                for (std::size_t i = 0; i < entries.size(); ++i)
                    if (entries[i].prof.pendant_count == q) p.members.push_back(i);
                placements.push_back(std::move(p));
            }
            for (int d = 3; d <= n - 2; ++d) {
                Placement p{"maxdeg:" + std::to_string(n) + ":" + std::to_string(d),
                            FamilyParams::broom(n, d), std::nullopt, {}};
                for (std::size_t i = 0; i < entries.size(); ++i)
                    if (entries[i].prof.max_degree == d) p.members.push_back(i);
                placements.push_back(std::move(p));
            }
        }
        for (const Placement& p : placements) {
            std::optional<IndexValue> hi_value;  // F at the order-maximum graph
            std::optional<IndexValue> lo_value;
            if (p.order_max) hi_value = index_value(construct(*p.order_max), spec);
            if (p.order_min) lo_value = index_value(construct(*p.order_min), spec);
            for (std::size_t i : p.members) {
                if (hi_value) {
                    ++report.checked;
                    const bool ok = mono == Monotonicity::Increasing
                                        ? leq(value[i], *hi_value, false)
                                        : leq(*hi_value, value[i], false);
                    if (!ok)
                        report.failures.push_back(
                            {entries[i].code,
                             spec.name() + " bounded by the order-maximum graph of " + p.label,
                             "F=" + value[i].to_string() + " vs " + hi_value->to_string()});
                }
                if (lo_value) {
                    ++report.checked;
                    const bool ok = mono == Monotonicity::Increasing
                                        ? leq(*lo_value, value[i], false)
                                        : leq(value[i], *lo_value, false);
                    if (!ok)
                        report.failures.push_back(
                            {entries[i].code,
                             spec.name() + " bounded by the order-minimum graph of " + p.label,
                             "F=" + value[i].to_string() + " vs " + lo_value->to_string()});
                }
            }
        }
    }

    // The pairwise hyper-Wiener is not edge-additive; its agreement with the
    // order is observed, never asserted.
    {
        std::vector<long long> ww(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i)
            ww[i] = hyper_wiener_pairwise(entries[i].tree);
        long long pairs = 0, violations = 0;
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                if (rel[i][j] == Ordering::Incomparable || rel[i][j] == Ordering::Equivalent) continue;
                ++pairs;
                const bool less = rel[i][j] == Ordering::StrictlyLess;
                if ((less && ww[i] > ww[j]) || (!less && ww[j] > ww[i])) ++violations;
            }
        report.notes.push_back("hyperwiener-pairwise (EMPIRICAL, not edge-additive): " +
                               std::to_string(violations) + " order violations among " +
                               std::to_string(pairs) + " strictly comparable pairs");
    }
    finalize(report, timer);
    return report;
}

/// Closed forms for the caterpillar-class extremal trees against brute force
/// and the edge-additive evaluation, cell by cell.
inline VerificationReport verify_caterpillar_closed_forms(const VerifyOptions& opt) {
    using namespace detail_verify;
    Timer timer;
    const int n_max = opt.n_max > 0 ? opt.n_max : default_n_max(Claim::Prop8_1);
    VerificationReport report;
    report.claim_id = claim_id(Claim::Prop8_1);
    report.universe = "5 <= n <= " + std::to_string(n_max) + ", 2 <= k <= n-1";
    auto check_cell = [&](const FamilyParams& params, const Rational& closed) {
        ++report.checked;
        const Tree t = construct(params);
        const long long brute = wiener_bruteforce(t);
        const long long edge = index_value(t, IndexSpec::wiener()).as_integer();
        if (!closed.is_integral() || closed.to_integer() != brute || edge != brute)
            report.failures.push_back({params.to_string(), "closed = brute = edge-additive",
                                       closed.to_string() + " / " + std::to_string(brute) + " / " +
                                           std::to_string(edge)});
    };
    for (int n = 5; n <= n_max; ++n)
        for (int k = 2; k <= n - 1; ++k) {
            check_cell(FamilyParams::single_cluster(n, k, (k + 1) / 2),
                       wiener_single_cluster_min(n, k));
            check_cell(FamilyParams::double_star_path(n, (n - k) / 2, (n - k + 1) / 2, k),
                       wiener_balanced_double_star_by_spine(n, k));
        }
    finalize(report, timer);
    return report;
}

/// Closed forms for the pendant-class extremal trees.
inline VerificationReport verify_pendant_closed_forms(const VerifyOptions& opt) {
    using namespace detail_verify;
    Timer timer;
    const int n_max = opt.n_max > 0 ? opt.n_max : default_n_max(Claim::Prop8_2);
    VerificationReport report;
    report.claim_id = claim_id(Claim::Prop8_2);
    report.universe = "5 <= n <= " + std::to_string(n_max) + ", 3 <= q <= n-1";
    for (int n = 5; n <= n_max; ++n)
        for (int q = 3; q <= n - 1; ++q) {
            {
                ++report.checked;
                const FamilyParams params = FamilyParams::balanced_starlike(n, q);
                const long long brute = wiener_bruteforce(construct(params));
                const Rational closed = wiener_balanced_starlike(n, q);
                if (!closed.is_integral() || closed.to_integer() != brute)
                    report.failures.push_back({params.to_string(), "closed = brute",
                                               closed.to_string() + " / " + std::to_string(brute)});
            }
            {
                ++report.checked;
                const FamilyParams params =
                    FamilyParams::double_star_path(n, q / 2, (q + 1) / 2, n - q);
                const long long brute = wiener_bruteforce(construct(params));
                const Rational closed = wiener_balanced_double_star_by_pendants(n, q);
                if (!closed.is_integral() || closed.to_integer() != brute)
                    report.failures.push_back({params.to_string(), "closed = brute",
                                               closed.to_string() + " / " + std::to_string(brute)});
            }
        }
    finalize(report, timer);
    return report;
}

/// Broom closed form. Only the split cases around n/2 have satisfiable
/// conditions as stated; the general cubic's guard is unsatisfiable as
/// written, so the remaining cells are evaluated and reported, not asserted.
inline VerificationReport verify_broom_closed_form(const VerifyOptions& opt) {
    using namespace detail_verify;
    Timer timer;
    const int n_max = opt.n_max > 0 ? opt.n_max : default_n_max(Claim::Prop8_3);
    VerificationReport report;
    report.claim_id = claim_id(Claim::Prop8_3);
    report.universe = "5 <= n <= " + std::to_string(n_max) + ", 3 <= D <= n-1";
    long long uncovered = 0;
    long long uncovered_matched = 0;
    std::vector<std::string> mismatches;
    for (int n = 5; n <= n_max; ++n)
        for (int d = 3; d <= n - 1; ++d) {
            const bool middle = (n % 2 == 0 && d == n / 2) ||
                                (n % 2 == 1 && (d == n / 2 || d == n / 2 + 1));
            const FamilyParams params = FamilyParams::broom(n, d);
            const long long brute = wiener_bruteforce(construct(params));
            const Rational closed = wiener_broom(n, d);
            const bool match = closed.is_integral() && closed.to_integer() == brute;
            if (middle) {
                ++report.checked;
                if (!match)
                    report.failures.push_back({params.to_string(), "closed = brute",
                                               closed.to_string() + " / " + std::to_string(brute)});
            } else {
                ++uncovered;
                if (match)
                    ++uncovered_matched;
                else if (mismatches.size() < 10)
                    mismatches.push_back(params.to_string() + ": " + closed.to_string() + " vs " +
                                         std::to_string(brute));
            }
        }
    report.notes.push_back(
        "general-case guard (D < floor(n/2) and D > ceil(n/2)) is unsatisfiable as written; " +
        std::to_string(uncovered) + " cells fall outside the satisfiable cases");
    report.notes.push_back("general cubic evaluated on those cells matches brute force on " +
                           std::to_string(uncovered_matched) + "/" + std::to_string(uncovered));
    for (const std::string& m : mismatches) report.notes.push_back("general-cubic mismatch: " + m);
    finalize(report, timer);
    return report;
}

struct Table4Cell {
    int n = 0, k = 0;
    long long expected_min = 0, expected_max = 0;
    long long min_edge = 0, min_brute = 0, min_closed = 0;
    long long max_edge = 0, max_brute = 0, max_closed = 0;
    bool ok = false;
};

struct Table4Result {
    std::vector<Table4Cell> cells;
    VerificationReport report;
};

/// The published 28-cell table of Wiener bounds over the caterpillar classes:
/// W of the middle-cluster caterpillar (lower bound) and of the balanced
/// double star path (upper bound), 5 <= n <= 11, 4 <= k <= 10.
inline Table4Result reproduce_table4() {
    using namespace detail_verify;
    Timer timer;
    static constexpr struct {
        int n, k;
        long long w_min, w_max;
    } kExpected[] = {
        {5, 4, 18, 20},    {6, 4, 28, 35},    {6, 5, 31, 35},    {7, 4, 40, 52},
        {7, 5, 44, 56},    {7, 6, 50, 56},    {8, 4, 54, 74},    {8, 5, 59, 79},
        {8, 6, 67, 84},    {8, 7, 75, 84},    {9, 4, 70, 98},    {9, 5, 76, 108},
        {9, 6, 86, 114},   {9, 7, 96, 120},   {9, 8, 108, 120},  {10, 4, 88, 127},
        {10, 5, 95, 139},  {10, 6, 107, 151}, {10, 7, 119, 158}, {10, 8, 134, 165},
        {10, 9, 149, 165}, {11, 4, 108, 158}, {11, 5, 116, 176}, {11, 6, 130, 190},
        {11, 7, 144, 204}, {11, 8, 162, 212}, {11, 9, 180, 220}, {11, 10, 200, 220},
    };

    Table4Result result;
    result.report.claim_id = claim_id(Claim::Table4);
    result.report.universe = "5 <= n <= 11, 4 <= k <= 10 (28 cells, both columns)";
    for (const auto& row : kExpected) {
        Table4Cell cell;
        cell.n = row.n;
        cell.k = row.k;
        cell.expected_min = row.w_min;
        cell.expected_max = row.w_max;

        const Tree lo = construct(FamilyParams::single_cluster(row.n, row.k, (row.k + 1) / 2));
        cell.min_edge = index_value(lo, IndexSpec::wiener()).as_integer();
        cell.min_brute = wiener_bruteforce(lo);
        cell.min_closed = wiener_single_cluster_min(row.n, row.k).to_integer();

        const Tree hi = construct(FamilyParams::double_star_path(
            row.n, (row.n - row.k) / 2, (row.n - row.k + 1) / 2, row.k));
        cell.max_edge = index_value(hi, IndexSpec::wiener()).as_integer();
        cell.max_brute = wiener_bruteforce(hi);
        cell.max_closed = wiener_balanced_double_star_by_spine(row.n, row.k).to_integer();

        cell.ok = cell.min_edge == row.w_min && cell.min_brute == row.w_min &&
                  cell.min_closed == row.w_min && cell.max_edge == row.w_max &&
                  cell.max_brute == row.w_max && cell.max_closed == row.w_max;
        ++result.report.checked;
        if (!cell.ok)
            result.report.failures.push_back(
                {"(" + std::to_string(row.n) + "," + std::to_string(row.k) + ")",
                 std::to_string(row.w_min) + "/" + std::to_string(row.w_max) + " three ways",
                 "min " + std::to_string(cell.min_edge) + "/" + std::to_string(cell.min_brute) + "/" +
                     std::to_string(cell.min_closed) + ", max " + std::to_string(cell.max_edge) +
                     "/" + std::to_string(cell.max_brute) + "/" + std::to_string(cell.max_closed)});
        result.cells.push_back(cell);
    }
    finalize(result.report, timer);
    return result;
}

/// The standing non-antisymmetry witness: the equal-vector search at n = 11
/// must surface the known non-isomorphic pair with vector (4,3,2,1,0).
inline VerificationReport verify_equal_vector_witness(const VerifyOptions&) {
    using namespace detail_verify;
    Timer timer;
    VerificationReport report;
    report.claim_id = claim_id(Claim::Remark3_1);
    report.universe = "all trees of order 11, bucketed by edge division vector";

    const Tree a = equal_vector_witness_a();
    const Tree b = equal_vector_witness_b();
    const std::string code_a = canonical_code(a);
    const std::string code_b = canonical_code(b);

    ++report.checked;
    if (edge_division_vector(a).to_string() != "(4,3,2,1,0)" ||
        edge_division_vector(b).to_string() != "(4,3,2,1,0)")
        report.failures.push_back({code_a, "witness vectors equal (4,3,2,1,0)",
                                   edge_division_vector(a).to_string() + " / " +
                                       edge_division_vector(b).to_string()});
    ++report.checked;
    if (code_a == code_b)
        report.failures.push_back({code_a, "witness trees non-isomorphic", "equal canonical codes"});

    const std::vector<EquivalentPair> pairs = find_equivalent_nonisomorphic(11);
    ++report.checked;
    bool found = false;
    for (const EquivalentPair& p : pairs)
        found |= (p.first == code_a && p.second == code_b) || (p.first == code_b && p.second == code_a);
    if (!found)
        report.failures.push_back(
            {code_a + " | " + code_b, "pair present among equal-vector pairs at n=11", "absent"});
    report.notes.push_back("equal-vector non-isomorphic pairs at n=11: " + std::to_string(pairs.size()));
    finalize(report, timer);
    return report;
}

/// The two hyper-Wiener forms disagree; reproducing the gap (and flagging it)
/// is itself a checked claim.
inline VerificationReport verify_hyper_wiener_divergence(const VerifyOptions&) {
    using namespace detail_verify;
    Timer timer;
    VerificationReport report;
    report.claim_id = claim_id(Claim::WWDivergence);
    report.universe = "P3 and P4";

    struct Case {
        int n;
        long long edge_expected, pairwise_expected;
    } cases[] = {{3, 6, 5}, {4, 22, 15}};
    for (const Case& c : cases) {
        ++report.checked;
        const Tree p = construct(FamilyParams::path(c.n));
        const long long edge = index_value(p, IndexSpec::hyper_wiener_edge()).as_integer();
        const long long pairwise = hyper_wiener_pairwise(p);
        if (edge != c.edge_expected || pairwise != c.pairwise_expected || edge == pairwise)
            report.failures.push_back(
                {"P" + std::to_string(c.n),
                 "edge form " + std::to_string(c.edge_expected) + " != pairwise " +
                     std::to_string(c.pairwise_expected),
                 std::to_string(edge) + " vs " + std::to_string(pairwise)});
    }
    report.notes.push_back(
        "FLAG: the edge-additive hyper-Wiener form does not reproduce the pairwise "
        "hyper-Wiener definition (P4: 22 vs 15); both are exposed as distinct indices");
    finalize(report, timer);
    return report;
}

/// Free-tree counts against the published sequence and the Pruefer-bucketing
/// oracle.
inline VerificationReport verify_enumeration_counts(const VerifyOptions& opt) {
    using namespace detail_verify;
    Timer timer;
    const int n_max = opt.n_max > 0 ? opt.n_max : default_n_max(Claim::EnumCounts);
    VerificationReport report;
    report.claim_id = claim_id(Claim::EnumCounts);
    report.universe = "1 <= n <= " + std::to_string(n_max);

    static constexpr unsigned long long kUnlabeledTreeCounts[] = {
        0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
        317955, 823065};
    const int table_max = static_cast<int>(std::size(kUnlabeledTreeCounts)) - 1;
    for (int n = 1; n <= std::min(n_max, table_max); ++n) {
        ++report.checked;
        const unsigned long long got = free_tree_count(n);
        if (got != kUnlabeledTreeCounts[n])
            report.failures.push_back({"n=" + std::to_string(n),
                                       std::to_string(kUnlabeledTreeCounts[n]) + " trees",
                                       std::to_string(got)});
    }
    for (int n = 4; n <= std::min(n_max, 9); ++n) {
        ++report.checked;
        const std::size_t classes = prufer_isomorphism_class_count(n, opt.workers);
        const unsigned long long generated = free_tree_count(n);
        if (classes != generated)
            report.failures.push_back({"n=" + std::to_string(n),
                                       "generator count equals Pruefer class count",
                                       std::to_string(generated) + " vs " + std::to_string(classes)});
    }
    finalize(report, timer);
    return report;
}

/// Run one claim with the given options.
inline VerificationReport run_claim(Claim claim, const VerifyOptions& opt = {}) {
    switch (claim) {
        case Claim::Thm4_1:
        case Claim::Thm4_2:
        case Claim::Thm5_1:
        case Claim::Thm6_1:
        case Claim::Thm6_2:
        case Claim::Thm7_1:
            return verify_extremal(claim, opt);
        case Claim::Cor4_1:
        case Claim::Cor5_1:
        case Claim::Cor6_1:
        case Claim::Cor7_1:
            return verify_chain(claim, opt);
        case Claim::Cor5_2:
            return verify_global_bounds(opt);
        case Claim::Lem3_1:
            return verify_similarity_criterion(opt);
        case Claim::Lem4_1:
            return verify_edge_shift_lemma(opt);
        case Claim::Lem4_2:
            return verify_cluster_slide_lemma(opt);
        case Claim::Lem5_1:
            return verify_edge_move_lemma(opt);
        case Claim::Thm8_1:
            return verify_index_transfer(opt);
        case Claim::Prop8_1:
            return verify_caterpillar_closed_forms(opt);
        case Claim::Prop8_2:
            return verify_pendant_closed_forms(opt);
        case Claim::Prop8_3:
            return verify_broom_closed_form(opt);
        case Claim::Table4:
            return reproduce_table4().report;
        case Claim::Remark3_1:
            return verify_equal_vector_witness(opt);
        case Claim::WWDivergence:
            return verify_hyper_wiener_divergence(opt);
        case Claim::EnumCounts:
            return verify_enumeration_counts(opt);
    }
    throw Error("unknown claim");
}

}  // namespace edv
