#include <doctest.h>

#include <cmath>
#include <limits>

#include "projkit/geometry.hpp"
#include "support/oracles.hpp"

using namespace projkit;

TEST_CASE("Vector rejects invalid construction") {
    CHECK_THROWS_AS(Vector(std::vector<double>{}), DimensionError);
    CHECK_THROWS_AS(Vector({1.0, std::numeric_limits<double>::quiet_NaN()}), NumericError);
    CHECK_THROWS_AS(Vector({std::numeric_limits<double>::infinity()}), NumericError);
    CHECK_THROWS_AS(Vector::zeros(0), DimensionError);
    CHECK(Vector::zeros(3).dim() == 3);
}

TEST_CASE("vector arithmetic and dimension checks") {
    const Vector u{1.0, 2.0};
    const Vector v{3.0, -1.0};
    CHECK((u + v) == Vector{4.0, 1.0});
    CHECK((u - v) == Vector{-2.0, 3.0});
    CHECK((2.0 * u) == Vector{2.0, 4.0});
    CHECK(dot(u, v) == 1.0);
    CHECK(norm(Vector{3.0, 4.0}) == 5.0);
    CHECK(distance(u, v) == doctest::Approx(std::sqrt(13.0)));
    CHECK_THROWS_AS(u + Vector{1.0}, DimensionError);
    CHECK_THROWS_AS(dot(u, Vector{1.0}), DimensionError);
    CHECK(lex_less(Vector{-1.0, 5.0}, Vector{0.0, 0.0}));
    CHECK(lex_less(Vector{0.0, -1.0}, Vector{0.0, 0.0}));
    CHECK_FALSE(lex_less(Vector{0.0, 0.0}, Vector{0.0, 0.0}));
}

TEST_CASE("cos_angle basics") {
    CHECK(cos_angle(Vector{1.0, 0.0}, Vector{0.0, 1.0}) == 0.0);
    CHECK(cos_angle(Vector{1.0, 0.0}, Vector{1.0, 0.0}) == 1.0);
    CHECK_THROWS_AS(cos_angle(Vector{0.0, 0.0}, Vector{1.0, 0.0}), DegenerateAngleError);
}

TEST_CASE("cos_angle on consecutive spiral steps gives 135 degrees") {
    // b = (1,0), a+ = (1/2,1/2), b+ = (0,1/2): the angle between b - a+ and
    // b+ - a+ is 3*pi/4
    const Vector b{1.0, 0.0}, ap{0.5, 0.5}, bp{0.0, 0.5};
    const double c = cos_angle(b - ap, bp - ap);
    CHECK(c == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("cos_angle symmetry and scale invariance") {
    auto gen = oracles::rng(42);
    for (std::size_t dim = 1; dim <= 10; ++dim) {
        for (int rep = 0; rep < 100; ++rep) {
            const Vector u = oracles::random_vector(gen, dim, -5.0, 5.0);
            const Vector v = oracles::random_vector(gen, dim, -5.0, 5.0);
            if (norm(u) == 0.0 || norm(v) == 0.0) continue;
            const double c = cos_angle(u, v);
            CHECK(c == cos_angle(v, u));
            CHECK(std::abs(c) <= 1.0);
            CHECK(cos_angle(2.5 * u, 0.125 * v) == doctest::Approx(c).epsilon(1e-12));
        }
    }
}

TEST_CASE("make_block computes both cosines") {
    SUBCASE("spiral triple") {
        const auto blk = make_block(Vector{1.0, 0.0}, Vector{0.5, 0.5}, Vector{0.0, 0.5});
        CHECK_FALSE(blk.alpha_degenerate);
        CHECK(blk.cos_alpha == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-14));
    }
    SUBCASE("coincident points flag both angles degenerate") {
        const Vector p{1.0, 2.0};
        const auto blk = make_block(p, p, p);
        CHECK(blk.alpha_degenerate);
        CHECK(blk.beta_degenerate);
        CHECK(blk.cos_alpha == 0.0);
        CHECK(blk.cos_beta == 0.0);
    }
    SUBCASE("hand-checked beta") {
        // beta is the angle at b+ between (0,-1) and (2,-1): cos = 1/sqrt(5)
        const auto blk = make_block(Vector{2.0, 0.0}, Vector{0.0, 0.0}, Vector{0.0, 1.0});
        CHECK(blk.cos_alpha == doctest::Approx(0.0));
        const double expect = (0.0 * 2.0 + (-1.0) * (-1.0)) / std::sqrt(5.0);
        CHECK(blk.cos_beta == doctest::Approx(expect).epsilon(1e-15));
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(make_block(Vector{1.0}, Vector{1.0, 2.0}, Vector{1.0, 2.0}),
                        DimensionError);
    }
}
