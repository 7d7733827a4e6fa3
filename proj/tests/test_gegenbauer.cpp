#include <doctest.h>

#include "hypergreen/gegenbauer.hpp"
#include "hypergreen/gammafn.hpp"
#include "reference_values.hpp"

using namespace hypergreen;

namespace {
double rel(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }
}

TEST_CASE("Gegenbauer solutions match independent reference values") {
    for (const auto& c : ref::gegen_cases) {
        CAPTURE(c.kind);
        CAPTURE(c.w.real());
        const cplx got = c.kind == 0 ? gegenbauer_S(c.alpha, c.lambda_, c.w)
                                     : gegenbauer_Z(c.alpha, c.lambda_, c.w);
        CHECK(rel(got, c.value) <= c.tol);
    }
}

TEST_CASE("bullet power matches independent reference values") {
    for (const auto& c : ref::bullet_cases) {
        CHECK(rel(bullet_pow(c.w, c.a), c.value) <= 1e-13);
    }
}

TEST_CASE("first kind is normalized at w = 1 and even in lambda") {
    const cplx al(0.8, 0.3);
    CHECK(rel(gegenbauer_S(al, cplx(1.3, -0.2), cplx(1.0)), rgamma(1.0 + al)) <= 1e-14);
    const cplx ws[] = {{0.4, 0.0}, {2.7, 0.9}, {-0.3, 1.1}};
    for (cplx w : ws) {
        const cplx lam(0.9, 0.45);
        CHECK(rel(gegenbauer_S(al, lam, w), gegenbauer_S(al, -lam, w)) <= 1e-12);
    }
}

TEST_CASE("kind swap under the algebraic argument map") {
    const cplx pts[] = {{2.4, 0.6}, {1.9, -1.1}, {3.5, 0.2}};
    for (cplx w : pts) {
        const cplx al(0.7, 0.2), lam(1.1, -0.3);
        const cplx expo = -0.25 - 0.5 * al - 0.5 * lam;
        const cplx pref = pow_p(w - 1.0, expo) * pow_p(w + 1.0, expo);
        const cplx warg = w / bullet_pow(w, 0.5);
        CHECK(rel(gegenbauer_Z(al, lam, w), pref * gegenbauer_S(lam, al, warg)) <= 1e-11);
        CHECK(rel(gegenbauer_S(al, lam, w), pref * gegenbauer_Z(lam, al, warg)) <= 1e-11);
    }
}

TEST_CASE("Legendre layer matches independent reference values") {
    for (const auto& c : ref::legendre_cases) {
        CAPTURE(c.kind);
        const auto kind = static_cast<LegendreKind>(c.kind);
        CHECK(rel(legendre(kind, c.alpha, c.mu, c.z), c.value) <= c.tol);
    }
}
