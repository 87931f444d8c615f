#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinian/cyclotomic.hpp"
#include "kleinian/error.hpp"
#include "kleinian/numeric.hpp"

#include <complex>
#include <random>

using namespace kleinian;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Cyclotomic acc(Rational(0), order);
    for (int k = 0; k < order; ++k)
        acc = acc + Cyclotomic::zeta(order, k) * Rational(num(rng), den(rng));
    return acc;
}

} // namespace

TEST_CASE("rational parsing and formatting round-trips") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(rational_str(Rational(-3, 4)) == "-3/4");
    CHECK(rational_str(Rational(10, 2)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational("x"), UsageError);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
    CHECK(euler_phi(60) == 16);
}

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = x - 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1, Phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
}

TEST_CASE("multiplication examples") {
    // zeta_4 * zeta_4 = -1
    Cyclotomic i = Cyclotomic::zeta(4);
    CHECK((i * i) == Cyclotomic(Rational(-1), 4));

    // zeta_5 * zeta_5^4 = 1
    CHECK((Cyclotomic::zeta(5) * Cyclotomic::zeta(5, 4)) == Cyclotomic(Rational(1), 5));

    // (1 + zeta_3)(1 + zeta_3^2) = 1: expanding gives 1 + z + z^2 + z^3 and
    // z^3 = 1, z^2 = -1 - z by Phi_3, so the product collapses to 1.
    Cyclotomic one3(Rational(1), 3);
    Cyclotomic a = one3 + Cyclotomic::zeta(3);
    Cyclotomic b = one3 + Cyclotomic::zeta(3, 2);
    CHECK((a * b) == one3);

    CHECK_THROWS_AS(Cyclotomic::zeta(3) * Cyclotomic::zeta(4), UsageError);
}

TEST_CASE("inverse examples") {
    Cyclotomic one5(Rational(1), 5);
    CHECK(one5.inverse() == one5);

    for (int n : {3, 5, 8, 12}) {
        Cyclotomic z = Cyclotomic::zeta(n);
        CHECK(z.inverse() == Cyclotomic::zeta(n, n - 1));
    }

    // (1 + zeta_3)^-1 = 1 + zeta_3^2, from the multiplication oracle above.
    Cyclotomic one3(Rational(1), 3);
    Cyclotomic a = one3 + Cyclotomic::zeta(3);
    CHECK(a.inverse() == one3 + Cyclotomic::zeta(3, 2));

    CHECK_THROWS_AS(Cyclotomic(Rational(0), 5).inverse(), UsageError);
}

TEST_CASE("embed_complex examples") {
    auto close = [](std::complex<double> a, std::complex<double> b) {
        return std::abs(a - b) < 1e-12;
    };
    CHECK(close(Cyclotomic::zeta(4).to_complex(), {0.0, 1.0}));
    CHECK(close(Cyclotomic(Rational(-1), 4).to_complex(), {-1.0, 0.0}));
    // zeta_5 + zeta_5^4 = 2 cos(2 pi / 5) = (sqrt(5) - 1) / 2
    Cyclotomic golden = Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4);
    CHECK(close(golden.to_complex(), {(std::sqrt(5.0) - 1.0) / 2.0, 0.0}));
}

TEST_CASE("zeta^N = 1 and Phi_N(zeta_N) = 0 for N <= 30") {
    for (int n = 1; n <= 30; ++n) {
        Cyclotomic z = Cyclotomic::zeta(n);
        CHECK(z.pow(n) == Cyclotomic(Rational(1), n));
        Cyclotomic acc(Rational(0), n);
        const auto& phi = cyclotomic_polynomial(n);
        for (std::size_t k = 0; k < phi.size(); ++k)
            acc = acc + z.pow(static_cast<long long>(k)) * Rational(phi[k]);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("ring laws hold exactly on random samples") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> pick_order(1, 30);
    int samples = 0;
    while (samples < 1000) {
        int n = pick_order(rng);
        Cyclotomic a = random_cyclotomic(rng, n);
        Cyclotomic b = random_cyclotomic(rng, n);
        Cyclotomic c = random_cyclotomic(rng, n);
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * b) == (b * a));
        samples += 3;
    }
}

TEST_CASE("embed_complex is a ring homomorphism up to 1e-10") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 30);
        Cyclotomic a = random_cyclotomic(rng, n);
        Cyclotomic b = random_cyclotomic(rng, n);
        CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-10);
        CHECK(std::abs((a * b).to_complex() - (a.to_complex() * b.to_complex())) < 1e-10);
    }
}

TEST_CASE("inverse is an involution on nonzero inputs") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 100) {
        int n = 1 + static_cast<int>(rng() % 24);
        Cyclotomic a = random_cyclotomic(rng, n);
        if (a.is_zero()) continue;
        CHECK(a.inverse().inverse() == a);
        CHECK((a * a.inverse()) == Cyclotomic(Rational(1), n));
        ++done;
    }
}

TEST_CASE("order promotion") {
    // zeta_3 embedded in Q(zeta_12) is zeta_12^4
    CHECK(Cyclotomic::zeta(3).embedded(12) == Cyclotomic::zeta(12, 4));
    CHECK_THROWS_AS(Cyclotomic::zeta(3).embedded(8), UsageError);

    // mixed-order comparison through the lcm
    CHECK(equal_values(Cyclotomic(Rational(-1), 4), Cyclotomic::zeta(2)));
    CHECK(equal_values(Cyclotomic::zeta(6, 3), Cyclotomic(Rational(-1), 2)));
    CHECK_FALSE(equal_values(Cyclotomic::zeta(5), Cyclotomic::zeta(7)));

    auto [a, b] = to_common_order(Cyclotomic::zeta(4), Cyclotomic::zeta(6));
    CHECK(a.order() == 12);
    CHECK((a * b) == Cyclotomic::zeta(12, 5));
}

TEST_CASE("conjugation and rationality") {
    Cyclotomic z = Cyclotomic::zeta(5);
    Cyclotomic r = z + z.conjugate();           // 2 cos(2 pi / 5), real but irrational
    CHECK(r.conjugate() == r);
    CHECK_FALSE(r.is_rational());
    Cyclotomic norm = z * z.conjugate();
    CHECK(norm.rational_value() == Rational(1));
    CHECK(Cyclotomic(Rational(7, 2), 8).rational_value() == Rational(7, 2));
}
