#include <doctest.h>

#include "hypergreen/relations.hpp"

using namespace hypergreen;

namespace {
double rel(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }
}

TEST_CASE("Kummer rows are internally consistent") {
    HypParams p{cplx(0.63, 0.21), cplx(1.17, -0.34), cplx(0.85, 0.4)};
    const cplx z(0.31, 0.27);
    for (int row = 1; row <= 6; ++row) {
        const cplx base = kummer_expression(row, 0, p, z);
        for (int col = 1; col <= 3; ++col) {
            CAPTURE(row);
            CAPTURE(col);
            CHECK(rel(kummer_expression(row, col, p, z), base) <= 1e-11);
        }
    }
    CHECK_THROWS_AS(kummer_expression(7, 0, p, z), UsageError);
    CHECK_THROWS_AS(kummer_expression(1, 4, p, z), UsageError);
}

TEST_CASE("connection identities hold at fixed interior points") {
    HypParams p{cplx(0.58, 0.19), cplx(1.31, -0.27), cplx(0.92, 0.36)};
    const cplx z(0.42, 0.33);
    CHECK(connection_residual({RelationKind::con2}, p, z) <= 1e-11);
    CHECK(connection_residual({RelationKind::con2b}, p, z) <= 1e-11);
    CHECK(connection_residual({RelationKind::reqdes_pair}, p, z) <= 1e-11);
    const cplx zl(3.4, 1.2);
    CHECK(connection_residual({RelationKind::con_minus1}, p, zl) <= 1e-11);
    CHECK(connection_residual({RelationKind::con_minus2}, p, zl) <= 1e-11);
    CHECK(connection_residual({RelationKind::popo_pair}, p, zl) <= 1e-11);
}

TEST_CASE("Gegenbauer connection and reflection identities") {
    HypParams p{cplx(0.66, 0.12), cplx(0.0), cplx(1.24, -0.31)};
    CHECK(connection_residual({RelationKind::gegencon}, p, cplx(2.3, 0.8)) <= 1e-11);
    CHECK(connection_residual({RelationKind::gegencon2}, p, cplx(0.35, 0.55)) <= 1e-11);
    CHECK(connection_residual({RelationKind::whipple}, p, cplx(2.7, 0.4)) <= 1e-11);
}

TEST_CASE("positive integer index degeneration at the stated example point") {
    HypParams p{cplx(0.7), cplx(1.3), cplx(0.0)};
    CHECK(connection_residual({RelationKind::degen, 2}, p, cplx(0.4)) < 1e-11);
    CHECK(connection_residual({RelationKind::degen, 1}, p, cplx(0.4, 0.2)) < 1e-11);
    CHECK(connection_residual({RelationKind::degen, 3}, p, cplx(-0.6, 0.1)) < 1e-11);
    CHECK_THROWS_AS(connection_residual({RelationKind::degen, 0}, p, cplx(0.4)), UsageError);
}

TEST_CASE("trigonometric reductions collapse at the origin") {
    HypParams p{cplx(0.0), cplx(0.0), cplx(1.7)};
    CHECK(connection_residual({RelationKind::half_integer, 3}, p, cplx(0.0)) <= 1e-14);
}

TEST_CASE("trigonometric and Chebyshev reductions at generic points") {
    HypParams p{cplx(0.0), cplx(0.0), cplx(1.35, 0.0)};
    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(connection_residual({RelationKind::half_integer, k}, p, cplx(0.8, 0.3)) <= 1e-12);
    }
    HypParams pn{cplx(0.0), cplx(0.0), cplx(4.0)};
    CHECK(connection_residual({RelationKind::half_integer, 7}, pn, cplx(0.37)) <= 1e-12);
    CHECK(connection_residual({RelationKind::half_integer, 8}, pn, cplx(0.37)) <= 1e-12);
    CHECK_THROWS_AS(connection_residual({RelationKind::half_integer, 9}, pn, cplx(0.3)),
                    UsageError);
}
