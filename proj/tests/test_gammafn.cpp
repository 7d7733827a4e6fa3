#include <doctest.h>

#include "hypergreen/gammafn.hpp"
#include "reference_values.hpp"

using namespace hypergreen;

namespace {
double rel(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }
}

TEST_CASE("gamma matches independent reference values") {
    for (const auto& c : ref::gamma_cases) {
        CAPTURE(c.z.real());
        CAPTURE(c.z.imag());
        CHECK(rel(gamma(c.z), c.value) <= c.tol);
    }
}

TEST_CASE("gamma recurrence and reflection") {
    const cplx pts[] = {{0.3, 0.7}, {-1.4, 2.2}, {5.5, -3.1}, {-6.3, -0.4}, {0.01, -0.02}};
    for (cplx z : pts) {
        CHECK(rel(gamma(z + 1.0), z * gamma(z)) <= 1e-13);
        CHECK(rel(gamma(z) * gamma(1.0 - z), pi / std::sin(pi * z)) <= 1e-12);
    }
}

TEST_CASE("rgamma is entire and inverts gamma") {
    CHECK(rgamma(cplx(0.0)) == cplx(0.0));
    CHECK(rgamma(cplx(-1.0)) == cplx(0.0));
    CHECK(rgamma(cplx(-7.0)) == cplx(0.0));
    const cplx pts[] = {{0.5, 0.0}, {2.3, 1.1}, {-0.7, 0.3}, {-4.2, -2.0}};
    for (cplx z : pts) CHECK(rel(gamma(z) * rgamma(z), 1.0) <= 1e-13);
}

TEST_CASE("gamma pole raises") {
    CHECK_THROWS_AS(gamma(cplx(0.0)), PoleError);
    CHECK_THROWS_AS(gamma(cplx(-3.0)), PoleError);
}
