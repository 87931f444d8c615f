#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinian/error.hpp"
#include "kleinian/orbifold.hpp"

#include <algorithm>
#include <random>

using namespace kleinian;

TEST_CASE("sector data of the A family reads off the diagonal action") {
    for (int n : {1, 3, 6}) {
        FiniteSubgroup g = build_group(Family::A, n);
        auto classes = conjugacy_classes(g);
        auto sectors = sector_data(g, classes);
        REQUIRE(sectors.size() == classes.size());
        CHECK(sectors[0].age == 0);
        CHECK(sectors[0].exponents == std::pair{Rational(0), Rational(0)});
        for (std::size_t i = 1; i < sectors.size(); ++i) {
            CHECK(sectors[i].age == 1);
            CHECK(sectors[i].exponents.first + sectors[i].exponents.second == 1);
            CHECK(sectors[i].exponents.first <= sectors[i].exponents.second);
        }
    }
}

TEST_CASE("the class of -I has exponents (1/2, 1/2)") {
    FiniteSubgroup g = build_group(Family::D, 4);
    auto sectors = sector_data(g, conjugacy_classes(g));
    // classes are sorted by element order; class 1 is {-I}
    CHECK(sectors[1].element_order == 2);
    CHECK(sectors[1].exponents == std::pair{Rational(1, 2), Rational(1, 2)});
    CHECK(sectors[1].age == 1);
}

TEST_CASE("every nontrivial class of every family has age one") {
    for (auto [family, rank] : {std::pair{Family::A, 5}, {Family::D, 7}, {Family::E6, 0},
                                {Family::E7, 0}, {Family::E8, 0}}) {
        FiniteSubgroup g = build_group(family, rank);
        auto sectors = sector_data(g, conjugacy_classes(g));
        for (std::size_t i = 1; i < sectors.size(); ++i) CHECK(sectors[i].age == 1);
        CHECK(sectors[0].age == 0);
    }
}

TEST_CASE("orbifold cohomology dimensions") {
    // the trivial group has a single untwisted sector
    TwistedSector identity_only{0, 1, {Rational(0), Rational(0)}, Rational(0)};
    auto trivial = orbifold_cohomology({identity_only});
    CHECK(trivial.graded_dims == std::map<int, int>{{0, 1}});
    CHECK(trivial.total == 1);

    FiniteSubgroup e8 = build_group(Family::E8);
    auto coh = orbifold_cohomology(sector_data(e8, conjugacy_classes(e8)));
    CHECK(coh.graded_dims == std::map<int, int>{{0, 1}, {2, 8}});
    CHECK(coh.total == 9);

    for (int n : {1, 4, 9}) {
        FiniteSubgroup g = build_group(Family::A, n);
        auto c = orbifold_cohomology(sector_data(g, conjugacy_classes(g)));
        CHECK(c.graded_dims == std::map<int, int>{{0, 1}, {2, n}});
        CHECK(c.total == n + 1);
    }
}

TEST_CASE("skew product on the commutative part") {
    FiniteSubgroup g = build_group(Family::A, 2);
    GroupElement id = GroupElement::identity(g.cyclotomic_order);
    CycPoly2 f = CycPoly2::from_rational(parse_polynomial("x + y"), g.cyclotomic_order);
    CycPoly2 h = CycPoly2::from_rational(parse_polynomial("xy"), g.cyclotomic_order);
    SkewElement a = skew_term(g, f, id);
    SkewElement b = skew_term(g, h, id);
    CHECK(skew_equal(skew_product(a, b), skew_term(g, f * h, id)));
}

TEST_CASE("skew product twists by the group action") {
    FiniteSubgroup g = build_group(Family::A, 2); // generator diag(zeta_3, zeta_3^2)
    const GroupElement& gen = g.generators[0];
    GroupElement id = GroupElement::identity(g.cyclotomic_order);
    Cyclotomic one(Rational(1), g.cyclotomic_order);

    // (1, g) * (x, 1) = (zeta_3 x, g)
    SkewElement left = skew_term(g, CycPoly2(one), gen);
    SkewElement right = skew_term(g, CycPoly2::monomial(1, 0, one), id);
    SkewElement expected = skew_term(g, CycPoly2::monomial(1, 0, Cyclotomic::zeta(3)), gen);
    CHECK(skew_equal(skew_product(left, right), expected));

    // mixed groups are rejected
    FiniteSubgroup other = build_group(Family::A, 2);
    SkewElement foreign = skew_term(other, CycPoly2(one), GroupElement::identity(3));
    CHECK_THROWS_AS(skew_product(left, foreign), UsageError);
}

TEST_CASE("skew product is associative and unital on sampled triples") {
    FiniteSubgroup g = build_group(Family::D, 5);
    std::mt19937 rng(2024);
    Cyclotomic one(Rational(1), g.cyclotomic_order);
    auto random_skew = [&]() {
        SkewElement e;
        e.group = &g;
        for (int t = 0; t < 2; ++t) {
            CycPoly2 p = CycPoly2::monomial(static_cast<int>(rng() % 3),
                                            static_cast<int>(rng() % 3),
                                            Cyclotomic(Rational(1 + rng() % 3), g.cyclotomic_order));
            e = skew_add(e, skew_term(g, p, g.elements[rng() % g.elements.size()]));
        }
        return e;
    };
    SkewElement unit = skew_term(g, CycPoly2(one), GroupElement::identity(g.cyclotomic_order));
    for (int trial = 0; trial < 10; ++trial) {
        SkewElement a = random_skew(), b = random_skew(), c = random_skew();
        CHECK(skew_equal(skew_product(skew_product(a, b), c),
                         skew_product(a, skew_product(b, c))));
        CHECK(skew_equal(skew_product(unit, a), a));
        CHECK(skew_equal(skew_product(a, unit), a));
    }
}

TEST_CASE("invariance checks") {
    FiniteSubgroup a3 = build_group(Family::A, 3);
    CHECK(invariance_check(parse_polynomial("xy"), a3));
    CHECK(invariance_check(parse_polynomial("x^4"), a3)); // zeta_4^4 = 1
    CHECK(invariance_check(parse_polynomial("x^4 + y^4"), a3));
    CHECK_FALSE(invariance_check(parse_polynomial("x"), a3));
    CHECK_FALSE(invariance_check(parse_polynomial("x^2"), a3));
    CHECK_THROWS_AS(invariance_check(parse_polynomial("z"), a3), UsageError);

    // fixture triples validate for the A and D families
    for (int n = 1; n <= 6; ++n) CHECK(invariant_triple(build_group(Family::A, n)).size() == 3);
    for (int n = 4; n <= 7; ++n) CHECK(invariant_triple(build_group(Family::D, n)).size() == 3);
    CHECK_THROWS_AS(invariant_triple(build_group(Family::E6)), UsageError);
}

TEST_CASE("comparison report for A3") {
    FiniteSubgroup g = build_group(Family::A, 3);
    auto sectors = sector_data(g, conjugacy_classes(g));
    auto analysis = analyze_singularity(parse_polynomial("x^4 + y^2 + z^2"));
    OrbifoldComparison report = compare_spectrum_orbifold(analysis.sp, sectors, Family::A);

    CHECK(report.mu == 3);
    CHECK(report.classes == 4);
    REQUIRE(report.sector_exponents.size() == 3);
    // pairs {1/4,3/4}, {1/2,1/2}, {1/4,3/4} in class order
    std::vector<std::pair<Rational, Rational>> expected = {
        {Rational(1, 4), Rational(3, 4)}, {Rational(1, 4), Rational(3, 4)},
        {Rational(1, 2), Rational(1, 2)}};
    std::vector<std::pair<Rational, Rational>> got = report.sector_exponents;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);

    // flattened pairs give 6 values vs 3 spectral numbers: no match; but
    // choosing one exponent per class tiles the spectrum exactly
    CHECK_FALSE(report.flattened_match);
    CHECK_FALSE(report.smaller_match); // {1/4,1/4,1/2} vs {1/4,1/2,3/4}
    CHECK(report.one_per_class_match);
    REQUIRE(report.a_family_exact_match.has_value());
    CHECK(*report.a_family_exact_match);
}

TEST_CASE("comparison report for A1 and E8") {
    FiniteSubgroup a1 = build_group(Family::A, 1);
    auto r1 = compare_spectrum_orbifold(
        analyze_singularity(parse_polynomial("x^2 + y^2 + z^2")).sp,
        sector_data(a1, conjugacy_classes(a1)), Family::A);
    CHECK(r1.smaller_match);
    CHECK(r1.one_per_class_match);
    CHECK(*r1.a_family_exact_match);

    FiniteSubgroup e8 = build_group(Family::E8);
    auto r8 = compare_spectrum_orbifold(
        analyze_singularity(parse_polynomial("x^5 + y^3 + z^2")).sp,
        sector_data(e8, conjugacy_classes(e8)), Family::E8);
    CHECK(r8.mu == 8);
    CHECK(r8.classes == 9);
    CHECK_FALSE(r8.a_family_exact_match.has_value());
    CHECK_FALSE(r8.one_per_class_match); // exponent denominators never reach 30
    // the off-by-one against the untwisted sector is reported
    bool found_note = false;
    for (const std::string& note : r8.notes)
        if (note.find("untwisted") != std::string::npos) found_note = true;
    CHECK(found_note);
}
