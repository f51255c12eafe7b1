#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gemq/uncertainty.hpp"

using namespace gemq;
using namespace gemq::uncertainty;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const Constants k = Constants::codata();
}

TEST_CASE("em product bound at micron confinement is comparable to unity") {
    const auto bound = em_product_bound(meters(1e-6), k);
    CHECK_THAT(bound.unity_indicator, WithinRel(3.161526771559562e-2, 1e-12)); // hbar c / L^4
    CHECK(bound.value.dim() == dims::mass / dims::length / dims::time.pow(2));

    // L^-4 law
    const auto doubled = em_product_bound(meters(2e-6), k);
    CHECK_THAT(bound.unity_indicator / doubled.unity_indicator, WithinRel(16.0, 1e-12));

    // classical limit
    Constants classical = k;
    classical.hbar = Quantity::scalar(0.0, k.hbar.dim());
    CHECK(em_product_bound(meters(1e-6), classical).unity_indicator == 0.0);

    CHECK_THROWS_AS(em_product_bound(meters(0.0), k), domain_error);
}

TEST_CASE("metric uncertainty l_P / L") {
    const double lp = planck_length(k).si();

    CHECK_THAT(metric_uncertainty(meters(lp), k).value.si(), WithinRel(1.0, 1e-12));
    CHECK_THAT(metric_uncertainty(meters(1.0), k).value.si(),
               WithinRel(1.61625502392855e-35, 1e-12));
    CHECK(metric_uncertainty(meters(1.0), k).value.is_dimensionless());

    const double full = metric_uncertainty(meters(1.0), k).value.si();
    const double halved = metric_uncertainty(meters(0.5), k).value.si();
    CHECK_THAT(halved, WithinRel(2.0 * full, 1e-12));
}

TEST_CASE("christoffel uncertainty l_P / L^2") {
    const double lp = planck_length(k).si();

    const auto at_lp = christoffel_uncertainty(meters(lp), k);
    CHECK_THAT(at_lp.value.si(), WithinRel(6.18714240757223e34, 1e-9)); // 1/l_P
    CHECK(at_lp.value.dim() == Dimension::none() / dims::length);

    CHECK_THAT(christoffel_uncertainty(meters(1.0), k).value.si(),
               WithinRel(1.61625502392855e-35, 1e-12));

    // definitional: equals metric_uncertainty(L) / L
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> mag(-20.0, 0.0);
    for (int i = 0; i < 50; ++i) {
        const double L = std::pow(10.0, mag(rng));
        const double lhs = christoffel_uncertainty(meters(L), k).value.si();
        const double rhs = metric_uncertainty(meters(L), k).value.si() / L;
        CHECK_THAT(lhs, WithinRel(rhs, 1e-12));
    }
}

TEST_CASE("christoffel product bound and its two algebraic forms") {
    SECTION("value at a micron") {
        const auto bound = christoffel_product_bound(meters(1e-6), k);
        CHECK_THAT(bound.unity_indicator, WithinRel(2.6122803023742777e-46, 1e-12));
        CHECK(bound.value.dim() == Dimension::none() / dims::area);
    }

    SECTION("l_P^2 / L^4 equals hbar G / (c^3 L^4) over random L") {
        std::mt19937 rng(1234);
        std::uniform_real_distribution<double> mag(-20.0, 0.0);
        for (int i = 0; i < 100; ++i) {
            const Quantity L = meters(std::pow(10.0, mag(rng)));
            const double via_lp = christoffel_product_bound(L, k).unity_indicator;
            const Quantity direct = k.hbar * k.G / (pow(k.c, 3) * pow(L, 4));
            CHECK_THAT(via_lp, WithinRel(direct.si(), 1e-12));
            CHECK(direct.dim() == Dimension::none() / dims::area);
        }
    }

    SECTION("equals the squared christoffel uncertainty") {
        const Quantity L = meters(3.7e-5);
        const double prod = christoffel_product_bound(L, k).unity_indicator;
        const double single = christoffel_uncertainty(L, k).value.si();
        CHECK_THAT(prod, WithinRel(single * single, 1e-12));
    }
}

TEST_CASE("gem product bound agrees with the christoffel bound at L = r") {
    SECTION("random r") {
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> mag(-9.0, 0.0);
        for (int i = 0; i < 100; ++i) {
            const Quantity r = meters(std::pow(10.0, mag(rng)));
            const double gem = gem_product_bound(r, r, k).unity_indicator;
            const double christoffel = christoffel_product_bound(r, k).unity_indicator;
            CHECK_THAT(gem / christoffel, WithinRel(1.0, 1e-12));
        }
    }

    SECTION("micron values") {
        const auto bound = gem_product_bound(meters(1e-6), meters(1e-6), k);
        CHECK_THAT(bound.unity_indicator, WithinRel(2.6122803023742777e-46, 1e-12));
    }

    SECTION("r^-3 law") {
        const Quantity L = meters(1e-6);
        const double b1 = gem_product_bound(meters(1e-6), L, k).unity_indicator;
        const double b2 = gem_product_bound(meters(2e-6), L, k).unity_indicator;
        CHECK_THAT(b1 / b2, WithinRel(8.0, 1e-12));
    }

    CHECK_THROWS_AS(gem_product_bound(meters(-1.0), meters(1.0), k), domain_error);
    CHECK_THROWS_AS(gem_product_bound(meters(1.0), meters(0.0), k), domain_error);
}

TEST_CASE("unity crossover scale") {
    const Quantity L = unity_scale(k);
    CHECK(L.dim() == dims::length);
    CHECK_THAT(L.si(), WithinRel(4.0202674338015744e-18, 1e-12));
    CHECK_THAT(L.si(), WithinRel(4.0203e-18, 1e-3));
    CHECK(L.si() < 1e-15); // below nuclear dimensions

    // by construction the product bound is unity there
    CHECK_THAT(christoffel_product_bound(L, k).unity_indicator, WithinAbs(1.0, 1e-10));
}

TEST_CASE("all bounds decrease monotonically in the confinement scale") {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> mag(-18.0, 0.0);
    for (int i = 0; i < 50; ++i) {
        double a = std::pow(10.0, mag(rng));
        double b = std::pow(10.0, mag(rng));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const Quantity La = meters(a), Lb = meters(b);
        const Quantity r = meters(1e-6);

        CHECK(em_product_bound(La, k).unity_indicator > em_product_bound(Lb, k).unity_indicator);
        CHECK(metric_uncertainty(La, k).value.si() > metric_uncertainty(Lb, k).value.si());
        CHECK(christoffel_uncertainty(La, k).value.si() >
              christoffel_uncertainty(Lb, k).value.si());
        CHECK(christoffel_product_bound(La, k).unity_indicator >
              christoffel_product_bound(Lb, k).unity_indicator);
        CHECK(gem_product_bound(r, La, k).unity_indicator >
              gem_product_bound(r, Lb, k).unity_indicator);

        CHECK(em_product_bound(La, k).unity_indicator > 0.0);
        CHECK(gem_product_bound(r, La, k).unity_indicator > 0.0);
    }
}
