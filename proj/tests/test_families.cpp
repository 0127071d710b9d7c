#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "edv/canonical.hpp"
#include "edv/edge_division.hpp"
#include "edv/families.hpp"
#include "edv/profile.hpp"

using namespace edv;

TEST_CASE("family construction") {
    SECTION("caterpillar pendant placement, vector recomputed from mu") {
        const Tree t = construct(FamilyParams::caterpillar(7, {1, 1, 2}));
        CHECK(t.order() == 7);
        CHECK(edge_division_vector(t).to_string() == "(4,1,1)");
    }
    SECTION("balanced starlike legs") {
        const Tree t = construct(FamilyParams::balanced_starlike(7, 3));
        CHECK(t.degree(0) == 3);
        CHECK(profile(t).pendant_count == 3);
        CHECK(profile(t).diameter == 4);
        // 10 vertices over 3 legs: lengths 3,3,3
        CHECK(profile(construct(FamilyParams::balanced_starlike(10, 3))).diameter == 6);
        // 9 vertices over 3 legs: lengths 3,3,2 (differ by at most one)
        const Tree u = construct(FamilyParams::balanced_starlike(9, 3));
        CHECK(profile(u).diameter == 6);
        CHECK(profile(u).pendant_count == 3);
    }
    SECTION("single cluster caterpillar is the spine plus one cluster") {
        const Tree t = construct(FamilyParams::single_cluster(7, 4, 2));
        CHECK(profile(t).diameter == 3);
        CHECK(t.degree(1) == 5);  // spine position 2 carries all three pendants
    }
    SECTION("cluster position folds by spine symmetry") {
        const FamilyParams p = FamilyParams::single_cluster(7, 4, 3);
        CHECK(p.s == 2);
        CHECK(isomorphic(construct(p), construct(FamilyParams::single_cluster(7, 4, 2))));
    }
    SECTION("degenerate identities") {
        CHECK(isomorphic(construct(FamilyParams::single_cluster(6, 2, 1)),
                         construct(FamilyParams::star(6))));
        CHECK(isomorphic(construct(FamilyParams::single_cluster(6, 3, 2)),
                         construct(FamilyParams::star(6))));
        CHECK(isomorphic(construct(FamilyParams::double_star_path(6, 0, 0, 6)),
                         construct(FamilyParams::path(6))));
        CHECK(isomorphic(construct(FamilyParams::double_star_path(6, 2, 3, 1)),
                         construct(FamilyParams::star(6))));
        CHECK(isomorphic(construct(FamilyParams::broom(6, 5)), construct(FamilyParams::star(6))));
        CHECK(isomorphic(construct(FamilyParams::balanced_starlike(5, 4)),
                         construct(FamilyParams::star(5))));
    }
    SECTION("parameter validation names the constraint") {
        CHECK_THROWS_AS(construct(FamilyParams::caterpillar(7, {1, 0, 2})), Error);  // sums to 6
        CHECK_THROWS_AS(construct(FamilyParams::balanced_starlike(7, 2)), Error);
        CHECK_THROWS_AS(construct(FamilyParams::balanced_starlike(7, 7)), Error);
        CHECK_THROWS_AS(construct(FamilyParams::broom(5, 2)), Error);
        CHECK_THROWS_AS(construct(FamilyParams::broom(5, 5)), Error);
        CHECK_THROWS_AS(construct(FamilyParams::double_star_path(7, 3, 3, 2)), Error);
        CHECK_THROWS_AS(construct(FamilyParams::single_cluster(7, 4, 4)), Error);
    }
    SECTION("construction is deterministic") {
        const FamilyParams p = FamilyParams::caterpillar(9, {2, 0, 1, 2});
        CHECK(canonical_code(construct(p)) == canonical_code(construct(p)));
    }
}

TEST_CASE("branch shift") {
    SECTION("moves all pendants one step along the spine") {
        const Tree t = construct(FamilyParams::caterpillar(6, {1, 2, 0}));
        const Tree shifted = branch_shift(t, {0, 1, 2}, 1);
        CHECK(isomorphic(shifted, construct(FamilyParams::caterpillar(6, {1, 0, 2}))));
    }
    SECTION("branches keep their shape") {
        // spine 0-1-2-3, a three-vertex path branch at spine vertex 1,
        // two pendants at spine vertex 3
        const Tree t(9, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {5, 6}, {3, 7}, {3, 8}});
        const Tree shifted = branch_shift(t, {0, 1, 2, 3}, 1);
        const Tree expected(9, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {3, 7}, {3, 8}});
        CHECK(isomorphic(shifted, expected));

        // degree multiset outside the two affected spine vertices is preserved
        std::multiset<int> before, after;
        for (int v = 0; v < 9; ++v) {
            if (v == 1 || v == 2) continue;
            before.insert(t.degree(v));
            after.insert(shifted.degree(v));
        }
        CHECK(before == after);
        CHECK(t.order() == shifted.order());
    }
    SECTION("input tree is not mutated") {
        const Tree t = construct(FamilyParams::caterpillar(6, {1, 2, 0}));
        const auto edges_before = t.edges();
        (void)branch_shift(t, {0, 1, 2}, 1);
        CHECK(t.edges() == edges_before);
    }
    SECTION("errors") {
        const Tree t = construct(FamilyParams::caterpillar(6, {1, 2, 0}));
        CHECK_THROWS_AS(branch_shift(t, {0, 1, 2}, 2), Error);  // last spine vertex
        CHECK_THROWS_AS(branch_shift(t, {0, 1, 2}, -1), Error);
        CHECK_THROWS_AS(branch_shift(t, {0, 2, 1}, 0), Error);  // not a path
        const Tree p = construct(FamilyParams::path(5));
        CHECK_THROWS_AS(branch_shift(p, {0, 1, 2, 3, 4}, 1), Error);  // no branch there
    }
}

TEST_CASE("edge shift on double star paths") {
    SECTION("moves one pendant from the b-cluster to the a-cluster") {
        const Tree shifted = edge_shift(FamilyParams::double_star_path(9, 1, 3, 5));
        CHECK(isomorphic(shifted, construct(FamilyParams::double_star_path(9, 2, 2, 5))));
    }
    SECTION("mechanical also when it does not increase the order") {
        const Tree shifted = edge_shift(FamilyParams::double_star_path(8, 2, 2, 4));
        CHECK(isomorphic(shifted, construct(FamilyParams::double_star_path(8, 3, 1, 4))));
    }
    SECTION("nothing to shift") {
        CHECK_THROWS_AS(edge_shift(FamilyParams::double_star_path(6, 2, 0, 4)), Error);
        CHECK_THROWS_AS(edge_shift(FamilyParams::star(6)), Error);  // wrong family
    }
}

TEST_CASE("edge move") {
    SECTION("the middle edge of P4 contracts to the star") {
        const Tree p4 = construct(FamilyParams::path(4));
        const Tree moved = edge_move(p4, Edge(1, 2));
        CHECK(isomorphic(moved, construct(FamilyParams::star(4))));
        CHECK(edge_division_vector(moved).to_string() == "(3,0)");
    }
    SECTION("an inner leg edge of the starlike tree") {
        const Tree t = construct(FamilyParams::balanced_starlike(7, 3));  // legs at 1,3,5
        const Tree moved = edge_move(t, Edge(0, 1));
        // hub keeps legs (3,4) and (5,6); vertex 1 becomes a pendant, vertex 2
        // re-hangs at the hub
        const Tree expected(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
        CHECK(isomorphic(moved, expected));
        CHECK(moved.order() == t.order());
    }
    SECTION("pendant edges are rejected") {
        const Tree p4 = construct(FamilyParams::path(4));
        CHECK_THROWS_AS(edge_move(p4, Edge(0, 1)), Error);
        CHECK_THROWS_AS(edge_move(p4, Edge(0, 3)), Error);  // not an edge
    }
}

TEST_CASE("family expressions") {
    CHECK(isomorphic(construct(parse_family_expression("P(5)")), construct(FamilyParams::path(5))));
    CHECK(isomorphic(construct(parse_family_expression("S(6)")), construct(FamilyParams::star(6))));
    CHECK(isomorphic(construct(parse_family_expression("CP(7; 1,1,2)")),
                     construct(FamilyParams::caterpillar(7, {1, 1, 2}))));
    CHECK(isomorphic(construct(parse_family_expression("DSP(9; 2,3; 4)")),
                     construct(FamilyParams::double_star_path(9, 2, 3, 4))));
    CHECK(isomorphic(construct(parse_family_expression("CP(7,4)^2")),
                     construct(FamilyParams::single_cluster(7, 4, 2))));
    CHECK(isomorphic(construct(parse_family_expression("SP(7,3)")),
                     construct(FamilyParams::balanced_starlike(7, 3))));
    CHECK(isomorphic(construct(parse_family_expression("BROOM(8,4)")),
                     construct(FamilyParams::broom(8, 4))));

    CHECK_THROWS_AS(parse_family_expression("Q(5)"), ParseError);
    CHECK_THROWS_AS(parse_family_expression("CP(7;1,2"), ParseError);
    CHECK_THROWS_AS(parse_family_expression("CP(7,4)"), ParseError);    // missing ^s
    CHECK_THROWS_AS(parse_family_expression("P(5) junk"), ParseError);  // trailing input
    CHECK_THROWS_AS(parse_family_expression("SP(7,2)"), Error);         // constraint violation
}
