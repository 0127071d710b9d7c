#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>
#include <set>

#include "edv/canonical.hpp"
#include "edv/enumeration.hpp"
#include "edv/families.hpp"
#include "edv/profile.hpp"

using namespace edv;

TEST_CASE("free tree counts match the unlabeled tree sequence") {
    const unsigned long long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) CHECK(free_tree_count(n) == expected[n - 1]);
}

TEST_CASE("generator emits each class once, in decreasing sequence order") {
    for (int n = 2; n <= 9; ++n) {
        const std::vector<std::vector<int>> seqs = free_tree_sequences(n);
        std::set<std::string> codes;
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            if (i) REQUIRE(seqs[i] < seqs[i - 1]);  // strictly decreasing lexicographic
            const Tree t = tree_from_level_sequence(seqs[i]);
            REQUIRE(canonical_level_sequence(t) == seqs[i]);
            codes.insert(canonical_code(t));
        }
        REQUIRE(codes.size() == seqs.size());
    }
}

TEST_CASE("prufer oracle agrees with the generator") {
    for (int n = 4; n <= 8; ++n)
        CHECK(prufer_isomorphism_class_count(n, 2) == free_tree_count(n));
}

TEST_CASE("generator supports resuming from a sequence") {
    const std::vector<std::vector<int>> all = free_tree_sequences(9);
    const std::size_t split = all.size() / 2;
    FreeTreeEnumerator resumed(9, all[split]);
    std::vector<int> seq;
    std::size_t at = split;
    while (resumed.next(seq)) {
        REQUIRE(at < all.size());
        REQUIRE(seq == all[at]);
        ++at;
    }
    CHECK(at == all.size());
}

TEST_CASE("class membership") {
    SECTION("caterpillar spine range") {
        const Tree s6 = construct(FamilyParams::star(6));
        CHECK(in_class(s6, {ClassSpec::Kind::Caterpillars, 6, 1}));
        CHECK(in_class(s6, {ClassSpec::Kind::Caterpillars, 6, 3}));
        CHECK_FALSE(in_class(s6, {ClassSpec::Kind::Caterpillars, 6, 4}));
        const Tree p6 = construct(FamilyParams::path(6));
        CHECK(in_class(p6, {ClassSpec::Kind::Caterpillars, 6, 6}));
        CHECK_FALSE(in_class(p6, {ClassSpec::Kind::Caterpillars, 6, 3}));
        const Tree sp = construct(FamilyParams::balanced_starlike(7, 3));
        for (int k = 1; k <= 7; ++k) CHECK_FALSE(in_class(sp, {ClassSpec::Kind::Caterpillars, 7, k}));
    }
    SECTION("profile classes") {
        CHECK(in_class(construct(FamilyParams::path(6)), {ClassSpec::Kind::FixedDiameter, 6, 5}));
        CHECK(in_class(construct(FamilyParams::balanced_starlike(7, 3)),
                       {ClassSpec::Kind::FixedPendants, 7, 3}));
        CHECK(in_class(construct(FamilyParams::star(5)), {ClassSpec::Kind::FixedMaxDegree, 5, 4}));
    }
    SECTION("order mismatch is an error") {
        CHECK_THROWS_AS(in_class(construct(FamilyParams::path(5)), {ClassSpec::Kind::AllTrees, 6, 0}),
                        Error);
    }
    SECTION("max degree n-1 forces the star") {
        const std::vector<Tree> trees = enumerate_class({ClassSpec::Kind::FixedMaxDegree, 5, 4});
        REQUIRE(trees.size() == 1);
        CHECK(isomorphic(trees[0], construct(FamilyParams::star(5))));
    }
}

TEST_CASE("caterpillar class equals the composition closure") {
    // enumerate_class(cat:n:k) must produce exactly the isomorphism classes of
    // CP(n; c_1..c_k) over all compositions of n-k.
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::set<std::string> by_rule;
            for (const Tree& t : enumerate_class({ClassSpec::Kind::Caterpillars, n, k}))
                by_rule.insert(canonical_code(t));

            std::set<std::string> by_composition;
            std::vector<int> comp(k, 0);
            const int pendants = n - k;
            // odometer over compositions of `pendants` into k parts
            std::vector<int> cuts;
            std::function<void(int, int)> rec = [&](int pos, int left) {
                if (pos == k - 1) {
                    comp[pos] = left;
                    by_composition.insert(canonical_code(construct(FamilyParams::caterpillar(n, comp))));
                    return;
                }
                for (int c = 0; c <= left; ++c) {
                    comp[pos] = c;
                    rec(pos + 1, left - c);
                }
            };
            rec(0, pendants);
            REQUIRE(by_rule == by_composition);
        }
    }
}

TEST_CASE("class partitions cover the whole order") {
    for (int n = 3; n <= 9; ++n) {
        const unsigned long long total = free_tree_count(n);
        unsigned long long by_pendants = 0, by_diameter = 0, by_maxdeg = 0;
        for (int q = 2; q <= n - 1; ++q)
            by_pendants += enumerate_class({ClassSpec::Kind::FixedPendants, n, q}).size();
        for (int d = 1; d <= n - 1; ++d)
            by_diameter += enumerate_class({ClassSpec::Kind::FixedDiameter, n, d}).size();
        for (int m = 2; m <= n - 1; ++m)
            by_maxdeg += enumerate_class({ClassSpec::Kind::FixedMaxDegree, n, m}).size();
        CHECK(by_pendants == total);
        CHECK(by_diameter == total);
        CHECK(by_maxdeg == total);
    }
}

TEST_CASE("class spec parsing") {
    CHECK(ClassSpec::parse("all:7").kind == ClassSpec::Kind::AllTrees);
    CHECK(ClassSpec::parse("cat:7:3").param == 3);
    CHECK(ClassSpec::parse("diam:6:5").kind == ClassSpec::Kind::FixedDiameter);
    CHECK(ClassSpec::parse("pend:7:3").n == 7);
    CHECK(ClassSpec::parse("maxdeg:5:4").param == 4);
    CHECK_THROWS_AS(ClassSpec::parse("cat:7"), Error);
    CHECK_THROWS_AS(ClassSpec::parse("weird:7:3"), Error);
    CHECK_THROWS_AS(ClassSpec::parse("pend:7:1"), Error);  // q >= 2
    CHECK_THROWS_AS(ClassSpec::parse("cat:7:x"), Error);
    for (const char* s : {"all:7", "cat:7:3", "diam:6:5", "pend:7:3", "maxdeg:5:4"})
        CHECK(ClassSpec::parse(s).to_string() == s);
}
