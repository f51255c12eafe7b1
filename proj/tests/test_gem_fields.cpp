#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gemq/gem_fields.hpp"

using namespace gemq;
using namespace gemq::fields;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const Constants k = Constants::codata();
const GemConvention paper = gem_constants(k, ConventionName::paper_literal);
const GemConvention maxwell = gem_constants(k, ConventionName::maxwell_consistent);
} // namespace

TEST_CASE("electric-like field of a nanogram at a micron") {
    const Quantity e = electric_like_field(kilograms(1e-12), meters(1e-6), paper);
    CHECK(e.dim() == dims::acceleration);
    CHECK_THAT(e.si(), WithinRel(8.387172739141742e-10, 1e-12)); // 4 pi G M / r^2

    const Quantity en =
        electric_like_field(kilograms(1e-12), meters(1e-6), paper, FieldForm::newtonian);
    CHECK_THAT(en.si(), WithinRel(6.6743e-11, 1e-12)); // G M / r^2

    // paper form is exactly 4 pi times the newtonian form
    CHECK_THAT(e.si() / en.si(), WithinRel(4.0 * M_PI, 1e-12));
}

TEST_CASE("electric-like field vanishes linearly with the mass") {
    const Quantity e = electric_like_field(kilograms(0.0), meters(1.0), maxwell);
    CHECK(e.si() == 0.0);
    CHECK_THROWS_AS(electric_like_field(kilograms(1.0), meters(0.0), maxwell), domain_error);
    CHECK_THROWS_AS(electric_like_field(kilograms(-1.0), meters(1.0), maxwell), domain_error);
}

TEST_CASE("magnetic-like field of a line current") {
    const Quantity b = magnetic_like_field_line(kg_per_second(1.0), meters(1.0), paper);
    CHECK(b.dim() == dims::frequency);
    CHECK_THAT(b.si(), WithinRel(2.9704641076474662e-27, 1e-12)); // equals mu_g

    CHECK(magnetic_like_field_line(kg_per_second(0.0), meters(1.0), paper).si() == 0.0);

    const Quantity b2 = magnetic_like_field_line(kg_per_second(1.0), meters(2.0), paper);
    CHECK_THAT(b.si() / b2.si(), WithinRel(2.0, 1e-12));
    CHECK_THROWS_AS(magnetic_like_field_line(kg_per_second(1.0), meters(-1.0), paper),
                    domain_error);
}

TEST_CASE("magnetic-like field of a point mass") {
    const MassBody body =
        MassBody::make(kilograms(1.0), Quantity::vector({1.0, 0.0, 0.0}, dims::speed), k);

    CHECK(magnetic_like_field_point(body, meters(1.0), 0.0, maxwell).si() == 0.0);

    const Quantity b = magnetic_like_field_point(body, meters(1.0), M_PI / 2.0, maxwell);
    CHECK_THAT(b.si(), WithinRel(7.4261602691186655e-28, 1e-12)); // G / c^2
    CHECK(b.dim() == dims::frequency);

    const MassBody fast =
        MassBody::make(kilograms(1.0), Quantity::vector({3.0, 0.0, 0.0}, dims::speed), k);
    const Quantity b3 = magnetic_like_field_point(fast, meters(1.0), M_PI / 2.0, maxwell);
    CHECK_THAT(b3.si() / b.si(), WithinRel(3.0, 1e-12));
}

TEST_CASE("gravitational lorentz force") {
    const Quantity zero_v = Quantity::vector({0.0, 0.0, 0.0}, dims::speed);
    const Quantity e_z = Quantity::vector({0.0, 0.0, 6.674e-11}, dims::acceleration);
    const Quantity b_zero = Quantity::vector({0.0, 0.0, 0.0}, dims::frequency);

    SECTION("at rest the force is mass times the electric-like field") {
        const MassBody body = MassBody::make(kilograms(1e-12), zero_v, k);
        const Quantity f = lorentz_force(body, e_z, b_zero);
        CHECK(f.dim() == dims::force);
        CHECK_THAT(f.vec().z, WithinRel(6.674e-23, 1e-12));
        CHECK(f.vec().x == 0.0);
    }

    SECTION("velocity parallel to the magnetic-like field contributes nothing") {
        const Quantity v = Quantity::vector({0.0, 0.0, 100.0}, dims::speed);
        const Quantity b = Quantity::vector({0.0, 0.0, 5.0}, dims::frequency);
        const Quantity e0 = Quantity::vector({0.0, 0.0, 0.0}, dims::acceleration);
        const MassBody body = MassBody::make(kilograms(2.0), v, k);
        CHECK(norm(lorentz_force(body, e0, b)).si() == 0.0);
    }

    SECTION("force is linear in mass and additive in its two terms") {
        std::mt19937 rng(555);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            const Quantity v = Quantity::vector({u(rng), u(rng), u(rng)}, dims::speed);
            const Quantity e = Quantity::vector({u(rng), u(rng), u(rng)}, dims::acceleration);
            const Quantity b = Quantity::vector({u(rng), u(rng), u(rng)}, dims::frequency);
            const MassBody m1 = MassBody::make(kilograms(1.0), v, k);
            const MassBody m3 = MassBody::make(kilograms(3.0), v, k);
            const Vec3 f1 = lorentz_force(m1, e, b).vec();
            const Vec3 f3 = lorentz_force(m3, e, b).vec();
            CHECK_THAT(f3.x, WithinAbs(3.0 * f1.x, 1e-18));
            CHECK_THAT(f3.y, WithinAbs(3.0 * f1.y, 1e-18));
            CHECK_THAT(f3.z, WithinAbs(3.0 * f1.z, 1e-18));

            const Quantity e0 = Quantity::vector({0.0, 0.0, 0.0}, dims::acceleration);
            const Quantity b0 = Quantity::vector({0.0, 0.0, 0.0}, dims::frequency);
            const Vec3 sum =
                (lorentz_force(m1, e, b0) + lorentz_force(m1, e0, b)).vec();
            CHECK_THAT(f1.x, WithinAbs(sum.x, 1e-18));
            CHECK_THAT(f1.y, WithinAbs(sum.y, 1e-18));
            CHECK_THAT(f1.z, WithinAbs(sum.z, 1e-18));
        }
    }

    SECTION("dimension mismatches are rejected") {
        const MassBody body = MassBody::make(kilograms(1.0), zero_v, k);
        CHECK_THROWS_AS(lorentz_force(body, b_zero, b_zero), dimension_error);
        CHECK_THROWS_AS(lorentz_force(body, e_z, e_z), dimension_error);
    }
}

TEST_CASE("force ratio between the magnetic-like and electric-like forces") {
    const Quantity ratio = force_ratio(meters_per_second(1e6), maxwell, k);
    CHECK(ratio.is_dimensionless());
    CHECK_THAT(ratio.si(), WithinRel(1.1126500560536185e-5, 1e-12)); // (v/c)^2

    CHECK(force_ratio(meters_per_second(0.0), maxwell, k).si() == 0.0);

    const Quantity milli_c = force_ratio(meters_per_second(299792458.0 * 1e-3), maxwell, k);
    CHECK_THAT(milli_c.si(), WithinRel(1e-6, 1e-12));

    // paper_literal picks up the 1/pi of its broken identity
    const Quantity pr = force_ratio(meters_per_second(1e6), paper, k);
    CHECK_THAT(pr.si() * M_PI, WithinRel(1.1126500560536185e-5, 1e-12));

    CHECK_THROWS_AS(force_ratio(meters_per_second(3e8), maxwell, k), domain_error);
}

TEST_CASE("force ratio stays below one for subluminal speeds") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double v = u(rng) * (299792458.0 - 1.0);
        for (const auto& conv : {paper, maxwell})
            CHECK(force_ratio(meters_per_second(v), conv, k).si() < 1.0);
    }
}

TEST_CASE("scaling laws of the field formulas") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> mag(-9.0, 9.0);
    for (int i = 0; i < 100; ++i) {
        const double M = std::pow(10.0, mag(rng));
        const double r = std::pow(10.0, mag(rng));
        const double s = 1.0 + 9.0 * std::generate_canonical<double, 53>(rng);

        const double e1 = electric_like_field(kilograms(M), meters(r), paper).si();
        const double e2 = electric_like_field(kilograms(s * M), meters(r), paper).si();
        const double e3 = electric_like_field(kilograms(M), meters(s * r), paper).si();
        CHECK_THAT(e2 / e1, WithinRel(s, 1e-12));
        CHECK_THAT(e1 / e3, WithinRel(s * s, 1e-12));

        const double b1 = magnetic_like_field_line(kg_per_second(M), meters(r), maxwell).si();
        const double b2 =
            magnetic_like_field_line(kg_per_second(s * M), meters(r), maxwell).si();
        const double b3 =
            magnetic_like_field_line(kg_per_second(M), meters(s * r), maxwell).si();
        CHECK_THAT(b2 / b1, WithinRel(s, 1e-12));
        CHECK_THAT(b1 / b3, WithinRel(s, 1e-12));
    }
}

TEST_CASE("two-mass scenario reproduces the nanogram estimates") {
    const auto rep =
        two_mass_scenario(kilograms(1e-12), meters(1e-6), meters_per_second(1e6), maxwell, k);

    CHECK_THAT(rep.f_electric_newtonian.si(), WithinRel(6.674299999999999e-23, 1e-12));
    CHECK_THAT(rep.f_electric_paper.si(), WithinRel(8.387172739141742e-22, 1e-12));
    CHECK_THAT(rep.f_electric_paper.si() / rep.f_electric_newtonian.si(),
               WithinRel(4.0 * M_PI, 1e-12));
    CHECK_THAT(rep.ratio.si(), WithinRel(1.1126500560536185e-5, 1e-12));
    CHECK_THAT(rep.f_magnetic.si(), WithinRel(rep.f_electric_paper.si() * rep.ratio.si(), 1e-12));
    CHECK(rep.f_magnetic.dim() == dims::force);
    CHECK_FALSE(rep.relativistic_warning);
}

TEST_CASE("two-mass scenario edge cases") {
    const auto rest =
        two_mass_scenario(kilograms(1e-12), meters(1e-6), meters_per_second(0.0), maxwell, k);
    CHECK(rest.f_magnetic.si() == 0.0);

    const auto fast = two_mass_scenario(kilograms(1e-12), meters(1e-6),
                                        meters_per_second(0.2 * 299792458.0), maxwell, k);
    CHECK(fast.relativistic_warning);

    CHECK_THROWS_AS(
        two_mass_scenario(kilograms(1e-12), meters(1e-6), meters_per_second(3e8), maxwell, k),
        domain_error);
    CHECK_THROWS_AS(
        two_mass_scenario(kilograms(0.0), meters(1e-6), meters_per_second(1.0), maxwell, k),
        domain_error);
}

TEST_CASE("field samples keep h_g consistent with b_g") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> mag(-12.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const auto conv = (i % 2) ? paper : maxwell;
        const Quantity e = Quantity::scalar(std::pow(10.0, mag(rng)), dims::acceleration);
        const Quantity b = Quantity::scalar(std::pow(10.0, mag(rng)), dims::frequency);
        const auto sample = GemFieldSample::make(e, b, conv);
        const Quantity back = sample.h_g * conv.mu_g;
        CHECK(back.dim() == dims::frequency);
        CHECK_THAT(back.si(), WithinRel(b.si(), 1e-12));
    }
}

TEST_CASE("mass bodies reject unphysical inputs") {
    CHECK_THROWS_AS(
        MassBody::make(kilograms(-1.0), Quantity::vector({0, 0, 0}, dims::speed), k),
        domain_error);
    CHECK_THROWS_AS(
        MassBody::make(kilograms(1.0), Quantity::vector({3e8, 0, 0}, dims::speed), k),
        domain_error);
    CHECK_THROWS_AS(MassBody::make(meters(1.0), Quantity::vector({0, 0, 0}, dims::speed), k),
                    dimension_error);

    const MassBody slow =
        MassBody::make(kilograms(1.0), Quantity::vector({1e6, 0, 0}, dims::speed), k);
    CHECK_FALSE(slow.is_relativistic(k));
    const MassBody fast =
        MassBody::make(kilograms(1.0), Quantity::vector({4e7, 0, 0}, dims::speed), k);
    CHECK(fast.is_relativistic(k));
}
