#include <catch2/catch_amalgamated.hpp>

#include "gemq/constants.hpp"

using namespace gemq;
using Catch::Matchers::WithinRel;

TEST_CASE("planck length from CODATA constants") {
    const auto k = Constants::codata();
    const Quantity lp = planck_length(k);
    CHECK(lp.dim() == dims::length);
    CHECK_THAT(lp.si(), WithinRel(1.616255e-35, 1e-4));
    // full-precision value, hand-evaluated from sqrt(hbar G / c^3)
    CHECK_THAT(lp.si(), WithinRel(1.61625502392855e-35, 1e-12));
}

TEST_CASE("planck length is 1 m exactly for unit constants") {
    const auto k = Constants::unit_values();
    const Quantity lp = planck_length(k);
    CHECK(lp.si() == 1.0);
    CHECK(lp.dim() == dims::length);
}

TEST_CASE("planck length squared inverts hbar G / c^3") {
    const auto k = Constants::codata();
    const Quantity lp = planck_length(k);
    const Quantity one = lp * lp * pow(k.c, 3) / (k.hbar * k.G);
    CHECK(one.is_dimensionless());
    CHECK_THAT(one.si(), WithinRel(1.0, 1e-12));
}

TEST_CASE("gem constant conventions") {
    const auto k = Constants::codata();

    SECTION("paper_literal values") {
        const auto conv = gem_constants(k, ConventionName::paper_literal);
        CHECK_THAT(conv.mu_g.si(), WithinRel(2.9704641076474662e-27, 1e-12));
        CHECK(conv.mu_g.dim() == dims::length / dims::mass);
        CHECK_THAT(conv.eps_g.si(), WithinRel(1192296893.246448, 1e-12));
        CHECK(conv.eps_g.dim() == Dimension::none() / k.G.dim());
    }

    SECTION("maxwell_consistent restores the wave-speed identity") {
        CHECK_THAT(convention_identity(k, ConventionName::maxwell_consistent),
                   WithinRel(1.0, 1e-12));
    }

    SECTION("paper_literal identity lands on 1/pi") {
        CHECK_THAT(convention_identity(k, ConventionName::paper_literal),
                   WithinRel(1.0 / M_PI, 1e-12));
    }

    SECTION("electric-like field dimension is acceleration under both conventions") {
        for (auto name : {ConventionName::paper_literal, ConventionName::maxwell_consistent}) {
            const auto conv = gem_constants(k, name);
            const Quantity e = kilograms(1.0) / (conv.eps_g * square_meters(1.0));
            CHECK(e.dim() == dims::acceleration);
        }
    }
}

TEST_CASE("convention names parse leniently and render canonically") {
    CHECK(convention_from_string("paper_literal") == ConventionName::paper_literal);
    CHECK(convention_from_string("PaperLiteral") == ConventionName::paper_literal);
    CHECK(convention_from_string("maxwell-consistent") == ConventionName::maxwell_consistent);
    CHECK(to_string(ConventionName::maxwell_consistent) == "maxwell_consistent");
    CHECK_THROWS_AS(convention_from_string("newtonian"), parse_error);
}

TEST_CASE("codata record carries the pinned values") {
    const auto k = Constants::codata();
    CHECK(k.G.si() == 6.67430e-11);
    CHECK(k.hbar.si() == 1.054571817e-34);
    CHECK(k.c.si() == 299792458.0);
    CHECK(k.mu0.si() == 1.25663706212e-6);
}
