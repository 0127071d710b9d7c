#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "edv/canonical.hpp"
#include "edv/edge_division.hpp"
#include "edv/enumeration.hpp"
#include "edv/families.hpp"
#include "edv/profile.hpp"
#include "edv/verify.hpp"

using namespace edv;

namespace {

int mu_of(const Tree& t, int u, int v) {
    const EdgeMuMap m = edge_mu(t);
    const int idx = t.edge_index(u, v);
    REQUIRE(idx >= 0);
    return m.mu(idx);
}

}  // namespace

TEST_CASE("edge mu values") {
    SECTION("path splits") {
        const Tree p5 = construct(FamilyParams::path(5));
        CHECK(mu_of(p5, 0, 1) == 1);
        CHECK(mu_of(p5, 1, 2) == 2);
        CHECK(mu_of(p5, 2, 3) == 2);
        CHECK(mu_of(p5, 3, 4) == 1);
    }
    SECTION("every star edge is pendant") {
        const Tree s6 = construct(FamilyParams::star(6));
        const EdgeMuMap m = edge_mu(s6);
        for (int i = 0; i < m.size(); ++i) CHECK(m.mu(i) == 1);
    }
    SECTION("single-cluster caterpillar") {
        const Tree t = construct(FamilyParams::single_cluster(7, 4, 2));  // spine 0-1-2-3
        CHECK(mu_of(t, 0, 1) == 1);
        CHECK(mu_of(t, 1, 2) == 2);
        CHECK(mu_of(t, 2, 3) == 1);
        CHECK(mu_of(t, 1, 4) == 1);  // cluster pendant
    }
    SECTION("n = 1 yields an empty map") { CHECK(edge_mu(Tree(1, {})).size() == 0); }
    SECTION("mu is root-independent via split sizes") {
        for_each_free_tree(8, [](const Tree& t) {
            const EdgeMuMap m = edge_mu(t);
            for (int i = 0; i < m.size(); ++i) {
                CHECK(m.side_u(i) + m.side_v(i) == t.order());
                CHECK(m.mu(i) == std::min(m.side_u(i), m.side_v(i)));
                CHECK(m.mu(i) == m.n_small_side(i));
            }
        });
    }
}

TEST_CASE("edge division vectors") {
    CHECK(edge_division_vector(equal_vector_witness_a()).to_string() == "(4,3,2,1,0)");
    CHECK(edge_division_vector(equal_vector_witness_b()).to_string() == "(4,3,2,1,0)");
    CHECK(edge_division_vector(construct(FamilyParams::star(6))).to_string() == "(5,0,0)");
    CHECK(edge_division_vector(construct(FamilyParams::path(5))).to_string() == "(2,2)");

    SECTION("sum, pendant count and bound hold on every tree") {
        for (int n = 2; n <= 10; ++n)
            for_each_free_tree(n, [&](const Tree& t) {
                const EdgeDivisionVector r = edge_division_vector(t);
                REQUIRE(r.length() == n / 2);
                long long sum = 0;
                for (int i = 1; i <= r.length(); ++i) {
                    REQUIRE(r.at(i) >= 0);
                    sum += r.at(i);
                }
                REQUIRE(sum == n - 1);
                int pendant_edges = 0;
                for (const Edge& e : t.edges())
                    pendant_edges += t.degree(e.u) == 1 || t.degree(e.v) == 1;
                REQUIRE(r.at(1) == pendant_edges);
            });
    }
}

TEST_CASE("preorder comparison") {
    const auto vec = [](const FamilyParams& p) { return edge_division_vector(construct(p)); };

    SECTION("star below path with witness") {
        const OrderRelation rel = compare(vec(FamilyParams::star(5)), vec(FamilyParams::path(5)));
        CHECK(rel.outcome == Ordering::StrictlyLess);
        REQUIRE(rel.less_witness.has_value());
        CHECK(*rel.less_witness == 2);
        CHECK(rel.to_string() == "StrictlyLess (witness k=2)");
    }
    SECTION("identical vectors are equivalent") {
        const OrderRelation rel =
            compare(edge_division_vector(equal_vector_witness_a()),
                    edge_division_vector(equal_vector_witness_b()));
        CHECK(rel.outcome == Ordering::Equivalent);
        CHECK_FALSE(rel.less_witness.has_value());
    }
    SECTION("incomparable pair with both witnesses") {
        const OrderRelation rel = compare(vec(FamilyParams::balanced_starlike(7, 3)),
                                          vec(FamilyParams::double_star_path(7, 2, 2, 3)));
        CHECK(vec(FamilyParams::balanced_starlike(7, 3)).to_string() == "(3,3,0)");
        CHECK(vec(FamilyParams::double_star_path(7, 2, 2, 3)).to_string() == "(4,0,2)");
        CHECK(rel.outcome == Ordering::Incomparable);
        REQUIRE(rel.less_witness.has_value());
        REQUIRE(rel.greater_witness.has_value());
        CHECK(*rel.less_witness == 3);
        CHECK(*rel.greater_witness == 2);
    }
    SECTION("orders must match") {
        CHECK_THROWS_AS(compare(vec(FamilyParams::path(5)), vec(FamilyParams::path(6))), Error);
    }
    SECTION("reflexive, swap-symmetric and transitive on order 9") {
        std::vector<EdgeDivisionVector> vs;
        for_each_free_tree(9, [&](const Tree& t) { vs.push_back(edge_division_vector(t)); });
        for (const auto& v : vs) CHECK(compare(v, v).outcome == Ordering::Equivalent);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const Ordering ab = compare(vs[i], vs[j]).outcome;
                const Ordering ba = compare(vs[j], vs[i]).outcome;
                switch (ab) {
                    case Ordering::StrictlyLess: CHECK(ba == Ordering::StrictlyGreater); break;
                    case Ordering::StrictlyGreater: CHECK(ba == Ordering::StrictlyLess); break;
                    default: CHECK(ab == ba);
                }
            }
        // transitivity of the non-strict relation over a full triple scan
        auto lesseq = [&](std::size_t i, std::size_t j) {
            const Ordering o = compare(vs[i], vs[j]).outcome;
            return o == Ordering::StrictlyLess || o == Ordering::Equivalent;
        };
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j)
                for (std::size_t k = 0; k < vs.size(); ++k)
                    if (lesseq(i, j) && lesseq(j, k)) REQUIRE(lesseq(i, k));
    }
    SECTION("comparison is invariant under relabeling") {
        const Tree a = Tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        const Tree b = Tree(5, {{4, 2}, {2, 0}, {0, 3}, {3, 1}});  // P5 relabeled
        const Tree s = construct(FamilyParams::star(5));
        CHECK(compare(s, a).outcome == compare(s, b).outcome);
    }
}

TEST_CASE("centroidal vertices and center edges") {
    SECTION("examples") {
        CHECK(centroidal_vertices(construct(FamilyParams::path(4))) == std::vector<int>{1, 2});
        CHECK(centroidal_vertices(construct(FamilyParams::path(5))) == std::vector<int>{2});
        CHECK(centroidal_vertices(construct(FamilyParams::star(6))) == std::vector<int>{0});
        CHECK(center_edges(construct(FamilyParams::path(4))) == std::vector<Edge>{{1, 2}});
        CHECK(center_edges(construct(FamilyParams::path(5))) == std::vector<Edge>{{1, 2}, {2, 3}});
        CHECK(center_edges(construct(FamilyParams::star(6))).empty());
    }

    SECTION("structure lemmas hold on every tree up to n = 10") {
        for (int n = 2; n <= 10; ++n)
            for_each_free_tree(n, [&](const Tree& t) {
                const std::vector<int> c = centroidal_vertices(t);
                REQUIRE((c.size() == 1 || c.size() == 2));
                if (c.size() == 2) {
                    REQUIRE(t.has_edge(c[0], c[1]));
                    const EdgeMuMap m = edge_mu(t);
                    const int idx = t.edge_index(c[0], c[1]);
                    REQUIRE(n % 2 == 0);
                    REQUIRE(m.side_u(idx) == n / 2);
                }

                const std::vector<Edge> centers = center_edges(t);
                REQUIRE(centers.size() <= 2);
                if (centers.size() == 2) {
                    REQUIRE(n % 2 == 1);
                    // the two center edges share a vertex
                    std::set<int> ends{centers[0].u, centers[0].v, centers[1].u, centers[1].v};
                    REQUIRE(ends.size() == 3);
                }
                if (n % 2 == 0) REQUIRE(centers.size() <= 1);

                // two centroidal vertices <=> their joining edge is the center edge
                if (c.size() == 2) {
                    REQUIRE(centers.size() == 1);
                    REQUIRE(centers[0] == Edge(c[0], c[1]));
                }
                // exactly one proper centroidal vertex <=> no center edge
                const std::vector<int> proper = proper_centroidal_vertices(t);
                REQUIRE(proper.size() <= 1);
                CHECK((proper.size() == 1) == centers.empty());
            });
    }
}
