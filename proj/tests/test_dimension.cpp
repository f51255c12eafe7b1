#include <catch2/catch_amalgamated.hpp>

#include "gemq/dimension.hpp"

using namespace gemq;

TEST_CASE("dimension algebra adds and subtracts exponents") {
    const Dimension force = dims::mass * dims::length / dims::time.pow(2);
    CHECK(force == dims::force);
    CHECK(force / dims::mass == dims::acceleration);
    CHECK(dims::speed * dims::time == dims::length);
    CHECK(dims::length / dims::length == Dimension::none());
    CHECK(dims::length != dims::time);
}

TEST_CASE("dimension pow and sqrt") {
    CHECK(dims::length.pow(2) == dims::area);
    CHECK(dims::length.pow(0) == Dimension::none());
    CHECK(dims::area.sqrt() == dims::length);
    CHECK(dims::length.pow(-2).sqrt() == Dimension::none() / dims::length);

    // sqrt(m) = m^1/2 is representable; sqrt(m^1/2) is not
    const Dimension half = dims::length.sqrt();
    CHECK(half * half == dims::length);
    CHECK_THROWS_AS(half.sqrt(), dimension_error);
}

TEST_CASE("dimension rendering") {
    CHECK(dims::force.str() == "kg m s^-2");
    CHECK(dims::length.str() == "m");
    CHECK(dims::frequency.str() == "s^-1");
    CHECK(Dimension::none().str() == "1");
    CHECK(dims::length.sqrt().str() == "m^1/2");
    CHECK((Dimension::none() / dims::length.sqrt() / dims::length).str() == "m^-3/2");
}

TEST_CASE("dimensionless detection") {
    CHECK(Dimension::none().is_dimensionless());
    CHECK_FALSE(dims::mass.is_dimensionless());
    CHECK((dims::speed / dims::speed).is_dimensionless());
}
