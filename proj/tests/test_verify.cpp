#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinian/emit.hpp"
#include "kleinian/error.hpp"
#include "kleinian/fixtures.hpp"
#include "kleinian/verify.hpp"

#include <algorithm>

using namespace kleinian;

TEST_CASE("fixture expression evaluation") {
    CHECK(eval_linear("24", 0) == 24);
    CHECK(eval_linear("n+1", 4) == 5);
    CHECK(eval_linear("n-2", 10) == 8);
    CHECK(eval_linear("2n-2", 6) == 10);
    CHECK(eval_linear("4n-8", 5) == 12);
    CHECK(eval_linear("n", 7) == 7);
    CHECK_THROWS_AS(eval_linear("n^2", 3), UsageError);
}

TEST_CASE("table1 fixtures instantiate to the classification data") {
    const FixtureTables& f = FixtureTables::embedded();

    Table1Entry a3 = f.table1(Family::A, 3);
    CHECK(a3.order == 4);
    CHECK(a3.polynomial == parse_polynomial("x^4 + y^2 + z^2"));
    CHECK(a3.name == "Cyclic");
    CHECK(a3.rotation_group == "Z/(n+1)Z");

    Table1Entry d6 = f.table1(Family::D, 6);
    CHECK(d6.order == 16);
    CHECK(d6.polynomial == parse_polynomial("x^5 + xy^2 + z^2"));

    Table1Entry e8 = f.table1(Family::E8, 0);
    CHECK(e8.order == 120);
    CHECK(e8.polynomial == parse_polynomial("x^5 + y^3 + z^2"));
}

TEST_CASE("table2 fixtures carry the printed spectra and the D erratum") {
    const FixtureTables& f = FixtureTables::embedded();

    Table2Entry a2 = f.table2(Family::A, 2);
    CHECK(a2.printed == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
    CHECK_FALSE(a2.erratum.has_value());
    CHECK(a2.derived == a2.printed);

    Table2Entry e6 = f.table2(Family::E6, 0);
    CHECK(e6.printed.size() == 6);
    CHECK(e6.printed.front() == Rational(1, 12));
    CHECK(e6.printed.back() == Rational(11, 12));

    // D4: printed {1/6, 2/6, 3/6, 5/6}; derived replaces 2/6 by 3/6
    Table2Entry d4 = f.table2(Family::D, 4);
    REQUIRE(d4.erratum.has_value());
    CHECK(d4.erratum->first == Rational(1, 3));
    CHECK(d4.erratum->second == Rational(1, 2));
    CHECK(d4.printed == std::vector<Rational>{Rational(1, 6), Rational(1, 3), Rational(1, 2),
                                              Rational(5, 6)});
    CHECK(d4.derived == std::vector<Rational>{Rational(1, 6), Rational(1, 2), Rational(1, 2),
                                              Rational(5, 6)});
}

TEST_CASE("run_verification on A(2) passes every check") {
    VerificationCase vc = run_verification(Family::A, 2, FixtureTables::embedded());
    CHECK(vc.passed());
    for (const CheckResult& c : vc.checks) CHECK(c.status == CheckStatus::Pass);
    // spectrum check reports the expected multiset
    auto it = std::find_if(vc.checks.begin(), vc.checks.end(),
                           [](const CheckResult& c) { return c.name == "spectrum-vs-table2"; });
    REQUIRE(it != vc.checks.end());
    CHECK(it->actual.find("1/3") != std::string::npos);
    CHECK(it->actual.find("2/3") != std::string::npos);
}

TEST_CASE("run_verification on D(4) flags the printed-table entry without failing") {
    VerificationCase vc = run_verification(Family::D, 4, FixtureTables::embedded());
    CHECK(vc.passed());
    auto it = std::find_if(vc.checks.begin(), vc.checks.end(),
                           [](const CheckResult& c) { return c.name == "spectrum-vs-table2"; });
    REQUIRE(it != vc.checks.end());
    CHECK(it->status == CheckStatus::Flagged);
    CHECK(it->actual.find("misprint") != std::string::npos);
}

TEST_CASE("run_verification on E8 passes with the documented profile") {
    VerificationCase vc = run_verification(Family::E8, 0, FixtureTables::embedded());
    CHECK(vc.passed());
    auto find = [&](const std::string& name) {
        auto it = std::find_if(vc.checks.begin(), vc.checks.end(),
                               [&](const CheckResult& c) { return c.name == name; });
        REQUIRE(it != vc.checks.end());
        return *it;
    };
    CHECK(find("group-order").actual == "120");
    CHECK(find("coxeter-order").actual.find("h = 30") != std::string::npos);
    CHECK(find("mu-vs-classes").actual.find("mu = 8") != std::string::npos);
    CHECK(find("mu-vs-classes").actual.find("9") != std::string::npos);
}

TEST_CASE("emission is deterministic and rejects unsupported pairings") {
    VerificationCase vc = run_verification(Family::A, 1, FixtureTables::embedded());
    std::vector<VerificationCase> cases{vc};
    for (Format f : {Format::Text, Format::Json, Format::Tsv})
        CHECK(emit_verification(cases, f) == emit_verification(cases, f));
    CHECK_THROWS_AS(emit_verification(cases, Format::Dot), UsageError);

    FiniteSubgroup g = build_group(Family::A, 2);
    auto classes = conjugacy_classes(g);
    CHECK(emit_group(g, classes, Format::Json) == emit_group(g, classes, Format::Json));
    CHECK_THROWS_AS(emit_group(g, classes, Format::Dot), UsageError);

    SingularityAnalysis an = analyze_singularity(parse_polynomial("x^3 + y^2 + z^2"));
    CHECK(emit_spectrum("A2", an, Format::Tsv) == "1/3\t1\n2/3\t1\n");
    CHECK_THROWS_AS(emit_spectrum("A2", an, Format::Dot), UsageError);
}

TEST_CASE("spectrum tsv for E6 has six lines") {
    SingularityAnalysis an = analyze_singularity(parse_polynomial("x^4 + y^3 + z^2"));
    std::string tsv = emit_spectrum("E6", an, Format::Tsv);
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 6);
}

TEST_CASE("E8 quiver dot output has 9 nodes and 8 edges") {
    McKayGraph m = mckay_graph(character_table(build_group(Family::E8)));
    std::string dot = emit_quiver("E8", m, Format::Dot);
    CHECK(std::count(dot.begin(), dot.end(), '[') == 9);
    std::size_t edges = 0, pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++edges;
        pos += 4;
    }
    CHECK(edges == 8);
}

TEST_CASE("chartable json for A(1) is the 2x2 grid") {
    std::string j = emit_chartable(character_table(build_group(Family::A, 1)), Format::Json);
    CHECK(j.find("\"values\"") != std::string::npos);
    CHECK(j.find("-1") != std::string::npos);
}

TEST_CASE("run_all covers the requested ranks") {
    auto cases = run_all(4, FixtureTables::embedded());
    // A1..A4, D4, E6, E7, E8
    CHECK(cases.size() == 8);
    for (const VerificationCase& vc : cases) CHECK(vc.passed());
    CHECK_THROWS_AS(run_all(0, FixtureTables::embedded()), UsageError);
}
