#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinian/error.hpp"
#include "kleinian/roots.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace kleinian;

namespace {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size();
    IntMatrix out(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

std::vector<Rational> fractions(std::vector<std::pair<int, int>> ps) {
    std::vector<Rational> out;
    for (auto [n, d] : ps) out.emplace_back(n, d);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("Cartan matrices") {
    CartanMatrix a2 = cartan_matrix(reference_diagram(Family::A, 2, false).graph);
    CHECK(a2.entries == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(positive_definite(a2));
    CHECK(determinant(a2.entries) == 3); // det of the A_n Cartan matrix is n+1

    CHECK(determinant(cartan_matrix(reference_diagram(Family::D, 6, false).graph).entries) == 4);
    CHECK(determinant(cartan_matrix(reference_diagram(Family::E6, 0, false).graph).entries) == 3);
    CHECK(determinant(cartan_matrix(reference_diagram(Family::E7, 0, false).graph).entries) == 2);
    CHECK(determinant(cartan_matrix(reference_diagram(Family::E8, 0, false).graph).entries) == 1);

    // extended matrices are singular with kernel spanned by the marks
    for (Family f : {Family::E6, Family::E7, Family::E8}) {
        Graph ext = reference_diagram(f, 0, true).graph;
        CHECK(extended_cartan_kernel_is_marks(ext));
        CHECK_FALSE(positive_definite(cartan_matrix(ext)));
    }
    CHECK(extended_cartan_kernel_is_marks(reference_diagram(Family::A, 5, true).graph));
    CHECK(extended_cartan_kernel_is_marks(reference_diagram(Family::D, 7, true).graph));
}

TEST_CASE("simple reflections") {
    CartanMatrix a1 = cartan_matrix(reference_diagram(Family::A, 1, false).graph);
    auto r1 = simple_reflections(a1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == IntMatrix{{-1}});

    CartanMatrix a2 = cartan_matrix(reference_diagram(Family::A, 2, false).graph);
    auto r2 = simple_reflections(a2);
    CHECK(r2[0] == IntMatrix{{-1, 1}, {0, 1}});
    CHECK(r2[1] == IntMatrix{{1, 0}, {1, -1}});

    // every reflection is an involution
    for (Family f : {Family::D, Family::E8}) {
        CartanMatrix c = cartan_matrix(reference_diagram(f, f == Family::D ? 6 : 0, false).graph);
        IntMatrix id(c.entries.size(), std::vector<Int>(c.entries.size(), 0));
        for (std::size_t i = 0; i < c.entries.size(); ++i) id[i][i] = 1;
        for (const IntMatrix& s : simple_reflections(c)) CHECK(mat_mul(s, s) == id);
    }
}

TEST_CASE("Coxeter numbers") {
    CHECK(coxeter_element(reference_diagram(Family::A, 1, false)).order == 2);
    CHECK(coxeter_element(reference_diagram(Family::A, 2, false)).order == 3);
    for (int n = 1; n <= 10; ++n)
        CHECK(coxeter_element(reference_diagram(Family::A, n, false)).order == n + 1);
    for (int n = 4; n <= 10; ++n)
        CHECK(coxeter_element(reference_diagram(Family::D, n, false)).order == 2 * n - 2);
    CHECK(coxeter_element(reference_diagram(Family::E6, 0, false)).order == 12);
    CHECK(coxeter_element(reference_diagram(Family::E7, 0, false)).order == 18);
    CHECK(coxeter_element(reference_diagram(Family::E8, 0, false)).order == 30);

    CHECK_THROWS_AS(coxeter_element(reference_diagram(Family::A, 3, true)), UsageError);
}

TEST_CASE("Coxeter exponents") {
    CHECK(coxeter_exponents(coxeter_element(reference_diagram(Family::A, 2, false))) ==
          fractions({{1, 3}, {2, 3}}));
    CHECK(coxeter_exponents(coxeter_element(reference_diagram(Family::D, 4, false))) ==
          fractions({{1, 6}, {3, 6}, {3, 6}, {5, 6}}));
    CHECK(coxeter_exponents(coxeter_element(reference_diagram(Family::E8, 0, false))) ==
          fractions({{1, 30}, {7, 30}, {11, 30}, {13, 30}, {17, 30}, {19, 30}, {23, 30}, {29, 30}}));

    // symmetry m <-> h - m
    for (Family f : {Family::E6, Family::E7}) {
        auto exps = coxeter_exponents(coxeter_element(reference_diagram(f, 0, false)));
        std::vector<Rational> reflected;
        for (const Rational& e : exps) reflected.push_back(Rational(1) - e);
        std::sort(reflected.begin(), reflected.end());
        CHECK(exps == reflected);
    }
}

TEST_CASE("characteristic polynomial is conjugation invariant across vertex orders") {
    DynkinDiagram d4 = reference_diagram(Family::D, 4, false);
    std::vector<int> order(4);
    std::iota(order.begin(), order.end(), 0);
    auto reference = characteristic_polynomial(coxeter_element(d4).matrix);
    int checked = 0;
    do {
        CoxeterElement t = coxeter_element(d4, order);
        CHECK(characteristic_polynomial(t.matrix) == reference);
        CHECK(t.order == 6);
        ++checked;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(checked == 24);

    // spot-check a large type with random orders
    DynkinDiagram e8 = reference_diagram(Family::E8, 0, false);
    auto ref8 = characteristic_polynomial(coxeter_element(e8).matrix);
    std::mt19937 rng(11);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(characteristic_polynomial(coxeter_element(e8, perm).matrix) == ref8);
    }
}

TEST_CASE("T^h = I and no smaller power is the identity") {
    DynkinDiagram e6 = reference_diagram(Family::E6, 0, false);
    CoxeterElement t = coxeter_element(e6);
    IntMatrix id(6, std::vector<Int>(6, 0));
    for (int i = 0; i < 6; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    IntMatrix power = id;
    for (int k = 1; k <= t.order; ++k) {
        power = mat_mul(power, t.matrix);
        if (k < t.order) CHECK(power != id);
    }
    CHECK(power == id);

    // determinant of a product of reflections is (+-1)^rank
    Int det = determinant(t.matrix);
    CHECK((det == 1 || det == -1));
}

TEST_CASE("positive root counts") {
    auto count = [](Family f, int rank) {
        return positive_roots(cartan_matrix(reference_diagram(f, rank, false).graph)).size();
    };
    CHECK(count(Family::A, 1) == 1);
    CHECK(count(Family::A, 3) == 6);
    for (int n = 1; n <= 10; ++n)
        CHECK(count(Family::A, n) == static_cast<std::size_t>(n * (n + 1) / 2));
    for (int n = 4; n <= 10; ++n)
        CHECK(count(Family::D, n) == static_cast<std::size_t>(n * (n - 1)));
    CHECK(count(Family::E6, 0) == 36);
    CHECK(count(Family::E7, 0) == 63);
    CHECK(count(Family::E8, 0) == 120);

    CHECK_THROWS_AS(positive_roots(cartan_matrix(reference_diagram(Family::A, 2, true).graph)),
                    UsageError);
}
