#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "edv/enumeration.hpp"
#include "edv/families.hpp"
#include "edv/indices.hpp"

using namespace edv;

TEST_CASE("wiener brute force oracle") {
    CHECK(wiener_bruteforce(construct(FamilyParams::path(5))) == 20);
    CHECK(wiener_bruteforce(construct(FamilyParams::star(6))) == 25);
    CHECK(wiener_bruteforce(construct(FamilyParams::balanced_starlike(7, 3))) == 48);
}

TEST_CASE("pairwise oracles") {
    const Tree p3 = construct(FamilyParams::path(3));
    const Tree p4 = construct(FamilyParams::path(4));
    CHECK(pairwise_index_oracle(p4, PairwiseKind::HyperWienerPairwise) == 15);
    CHECK(pairwise_index_oracle(p3, PairwiseKind::DegreeDistancePairwise) == 10);
    CHECK(pairwise_index_oracle(p3, PairwiseKind::GutmanPairwise) == 6);
}

TEST_CASE("edge-additive index values") {
    CHECK(index_value(construct(FamilyParams::single_cluster(7, 4, 2)), IndexSpec::wiener())
              .as_integer() == 40);
    CHECK(index_value(construct(FamilyParams::path(5)), IndexSpec::wiener()).as_integer() == 20);
    CHECK(index_value(construct(FamilyParams::path(3)), IndexSpec::gutman()).as_integer() == 6);
    CHECK(index_value(construct(FamilyParams::path(3)), IndexSpec::degree_distance()).as_integer() ==
          10);
    CHECK(index_value(construct(FamilyParams::star(4)), IndexSpec::abc2()).as_double() ==
          Catch::Approx(3.0 * std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    SECTION("abc2 degenerates to zero on one edge") {
        CHECK(index_value(Tree(2, {{0, 1}}), IndexSpec::abc2()).as_double() == 0.0);
    }
    SECTION("parameter errors") {
        CHECK_THROWS_AS(index_value(construct(FamilyParams::path(4)), IndexSpec::steiner(5)), Error);
        CHECK_THROWS_AS(
            index_value(construct(FamilyParams::path(4)), IndexSpec::modified_wiener(NAN)), Error);
    }
}

TEST_CASE("edge form equals the pairwise definition where the identity holds") {
    for (int n = 2; n <= 10; ++n)
        for_each_free_tree(n, [&](const Tree& t) {
            const long long w = wiener_bruteforce(t);
            REQUIRE(index_value(t, IndexSpec::wiener()).as_integer() == w);
            REQUIRE(index_value(t, IndexSpec::degree_distance()).as_integer() ==
                    pairwise_index_oracle(t, PairwiseKind::DegreeDistancePairwise));
            REQUIRE(index_value(t, IndexSpec::gutman()).as_integer() ==
                    pairwise_index_oracle(t, PairwiseKind::GutmanPairwise));
            if (n >= 2)
                REQUIRE(pairwise_index_oracle(t, PairwiseKind::DegreeDistancePairwise) ==
                        4 * w - static_cast<long long>(n) * (n - 1));
            REQUIRE(pairwise_index_oracle(t, PairwiseKind::GutmanPairwise) ==
                    4 * w - static_cast<long long>(2 * n - 1) * (n - 1));
        });
}

TEST_CASE("the two hyper-Wiener forms are distinct indices") {
    const Tree p3 = construct(FamilyParams::path(3));
    const Tree p4 = construct(FamilyParams::path(4));
    CHECK(index_value(p4, IndexSpec::hyper_wiener_edge()).as_integer() == 22);
    CHECK(hyper_wiener_pairwise(p4) == 15);
    CHECK(index_value(p3, IndexSpec::hyper_wiener_edge()).as_integer() == 6);
    CHECK(hyper_wiener_pairwise(p3) == 5);
}

TEST_CASE("steiner k-Wiener") {
    SECTION("edge form equals the subset brute force") {
        for (int n = 4; n <= 9; ++n)
            for_each_free_tree(n, [&](const Tree& t) {
                for (int k = 2; k <= std::min(4, n); ++k)
                    REQUIRE(index_value(t, IndexSpec::steiner(k)).as_integer() ==
                            steiner_k_wiener_bruteforce(t, k));
            });
    }
    SECTION("k = 2 is the Wiener index") {
        for_each_free_tree(8, [](const Tree& t) {
            REQUIRE(index_value(t, IndexSpec::steiner(2)).as_integer() ==
                    index_value(t, IndexSpec::wiener()).as_integer());
        });
    }
    SECTION("hand example on P4") {
        CHECK(steiner_k_wiener_bruteforce(construct(FamilyParams::path(4)), 3) == 10);
    }
}

TEST_CASE("lambda families agree with exact specializations") {
    for_each_free_tree(9, [](const Tree& t) {
        const double w = static_cast<double>(index_value(t, IndexSpec::wiener()).as_integer());
        REQUIRE(index_value(t, IndexSpec::modified_wiener(1.0)).as_double() == w);
        REQUIRE(index_value(t, IndexSpec::variable_wiener(2.0)).as_double() ==
                Catch::Approx(2.0 * w).epsilon(1e-12));
    });
}

TEST_CASE("monotone classification") {
    CHECK(monotone_class(IndexSpec::wiener(), 10) == Monotonicity::Increasing);
    CHECK(monotone_class(IndexSpec::abc2(), 10) == Monotonicity::Decreasing);
    CHECK(monotone_class(IndexSpec::variable_wiener(1.0), 10) == Monotonicity::Neither);
    CHECK_THROWS_AS(monotone_class(IndexSpec::wiener(), 3), Error);

    SECTION("classification across orders") {
        for (int n = 4; n <= 50; ++n) {
            CHECK(monotone_class(IndexSpec::wiener(), n) == Monotonicity::Increasing);
            CHECK(monotone_class(IndexSpec::hyper_wiener_edge(), n) == Monotonicity::Increasing);
            CHECK(monotone_class(IndexSpec::wiener_hosoya(), n) == Monotonicity::Increasing);
            CHECK(monotone_class(IndexSpec::degree_distance(), n) == Monotonicity::Increasing);
            CHECK(monotone_class(IndexSpec::gutman(), n) == Monotonicity::Increasing);
            CHECK(monotone_class(IndexSpec::abc2(), n) == Monotonicity::Decreasing);
            for (double lambda : {0.5, 2.0})
                CHECK(monotone_class(IndexSpec::modified_wiener(lambda), n) ==
                      Monotonicity::Increasing);
            for (double lambda : {-2.0, -1.0, -0.5})
                CHECK(monotone_class(IndexSpec::modified_wiener(lambda), n) ==
                      Monotonicity::Decreasing);
            CHECK(monotone_class(IndexSpec::variable_wiener(2.0), n) == Monotonicity::Increasing);
            CHECK(monotone_class(IndexSpec::variable_wiener(0.5), n) == Monotonicity::Decreasing);
            CHECK(monotone_class(IndexSpec::steiner(2), n) == Monotonicity::Increasing);
            CHECK(monotone_class(IndexSpec::steiner(3), n) == Monotonicity::Increasing);
        }
    }
    SECTION("negative-exponent variable Wiener is numerically increasing") {
        // f(x) = n^L - x^L - (n-x)^L with L < 0 rises towards the balanced
        // split, so the classification lands on the Wiener side.
        for (int n : {6, 10, 20, 50})
            CHECK(monotone_class(IndexSpec::variable_wiener(-1.0), n) == Monotonicity::Increasing);
    }
    SECTION("steiner k = n is constant") {
        CHECK(monotone_class(IndexSpec::steiner(4), 4) == Monotonicity::Neither);
        CHECK(monotone_class(IndexSpec::steiner(4), 5) == Monotonicity::Increasing);
    }
}

TEST_CASE("closed-form Wiener values") {
    SECTION("published caterpillar bounds") {
        CHECK(wiener_single_cluster_min(5, 4).to_integer() == 18);
        CHECK(wiener_balanced_double_star_by_spine(5, 4).to_integer() == 20);
        CHECK(wiener_single_cluster_min(9, 6).to_integer() == 86);
        CHECK(wiener_balanced_double_star_by_spine(9, 6).to_integer() == 114);
        CHECK(wiener_single_cluster_min(11, 10).to_integer() == 200);
        CHECK(wiener_balanced_double_star_by_spine(11, 10).to_integer() == 220);
    }
    SECTION("starlike bound") {
        CHECK(wiener_balanced_starlike(7, 3).to_integer() == 48);
        CHECK(wiener_balanced_starlike(7, 3).to_integer() ==
              wiener_bruteforce(construct(FamilyParams::balanced_starlike(7, 3))));
    }
    SECTION("every closed form matches brute force on its family") {
        for (int n = 5; n <= 25; ++n) {
            for (int k = 2; k <= n - 1; ++k) {
                CHECK(wiener_single_cluster_min(n, k).to_integer() ==
                      wiener_bruteforce(construct(FamilyParams::single_cluster(n, k, (k + 1) / 2))));
                CHECK(wiener_balanced_double_star_by_spine(n, k).to_integer() ==
                      wiener_bruteforce(construct(
                          FamilyParams::double_star_path(n, (n - k) / 2, (n - k + 1) / 2, k))));
            }
            for (int q = 3; q <= n - 1; ++q) {
                CHECK(wiener_balanced_starlike(n, q).to_integer() ==
                      wiener_bruteforce(construct(FamilyParams::balanced_starlike(n, q))));
                CHECK(wiener_balanced_double_star_by_pendants(n, q).to_integer() ==
                      wiener_bruteforce(
                          construct(FamilyParams::double_star_path(n, q / 2, (q + 1) / 2, n - q))));
            }
            for (int d = 3; d <= n - 1; ++d)
                CHECK(wiener_broom(n, d).to_integer() ==
                      wiener_bruteforce(construct(FamilyParams::broom(n, d))));
        }
    }
    SECTION("dispatch covers exactly the stated families") {
        CHECK(closed_form_wiener(FamilyParams::single_cluster(7, 4, 2)).to_integer() == 40);
        CHECK(closed_form_wiener(FamilyParams::double_star_path(7, 1, 2, 4)).to_integer() == 52);
        CHECK(closed_form_wiener(FamilyParams::balanced_starlike(7, 3)).to_integer() == 48);
        CHECK(closed_form_wiener(FamilyParams::broom(8, 3)).to_integer() == 79);
        CHECK_THROWS_AS(closed_form_wiener(FamilyParams::single_cluster(9, 6, 2)), Error);
        CHECK_THROWS_AS(closed_form_wiener(FamilyParams::double_star_path(9, 1, 4, 4)), Error);
        CHECK_THROWS_AS(closed_form_wiener(FamilyParams::path(9)), Error);
    }
}

TEST_CASE("index spec parsing") {
    CHECK(IndexSpec::parse("wiener").kind == IndexKind::Wiener);
    CHECK(IndexSpec::parse("mwiener:0.5").lambda == 0.5);
    CHECK(IndexSpec::parse("vwiener:-1").lambda == -1.0);
    CHECK(IndexSpec::parse("steiner:3").k == 3);
    CHECK(IndexSpec::parse("hyperwiener-edge").kind == IndexKind::HyperWienerEdge);
    CHECK(IndexSpec::parse("wiener-hosoya").kind == IndexKind::WienerHosoya);
    CHECK(IndexSpec::parse("abc2").kind == IndexKind::Abc2);
    CHECK_THROWS_AS(IndexSpec::parse("zagreb"), Error);
    CHECK_THROWS_AS(IndexSpec::parse("mwiener"), Error);
    CHECK_THROWS_AS(IndexSpec::parse("steiner:1"), Error);
    CHECK_THROWS_AS(IndexSpec::parse("mwiener:abc"), Error);
    for (const char* name : {"wiener", "mwiener:0.5", "steiner:3", "abc2", "degree-distance"})
        CHECK(IndexSpec::parse(IndexSpec::parse(name).name()).name() == IndexSpec::parse(name).name());
}

TEST_CASE("rational arithmetic") {
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(-1, 12) * Rational(8)) == Rational(-2, 3));
    CHECK(Rational(4, 2).is_integral());
    CHECK(Rational(4, 2).to_integer() == 2);
    CHECK_FALSE(Rational(1, 3).is_integral());
    CHECK_THROWS_AS(Rational(1, 3).to_integer(), Error);
    CHECK(Rational(1, -2) < Rational(0));
    CHECK(binomial(10, 4) == 210);
    CHECK(binomial(3, 5) == 0);
}
