#include <doctest.h>

#include <cmath>

#include "hypergreen/families.hpp"
#include "hypergreen/oracle.hpp"

using namespace hypergreen;

namespace {
double rel(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

const PotentialFn kFree = [](double) { return cplx(0.0); };
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Grid{1.0, 0.0, 512, 0.0}.validate(), DomainError);
    CHECK_THROWS_AS(Grid{0.0, 1.0, 8, 0.0}.validate(), DomainError);
    CHECK_THROWS_AS(Grid{0.0, 1.0, 512, 0.5}.validate(), DomainError);
}

TEST_CASE("free Dirichlet kernel on the interval") {
    const Grid g{0.0, pi, 4097, 0.0};
    const BoundaryBehavior dir{BoundaryKind::decay_exponent, cplx(1.0)};
    const cplx got = fd_green(kFree, g, dir, dir, cplx(-1.0), 0.25 * pi, 0.5 * pi);
    const cplx want = elementary_kernel(ElementaryCase::DD, 1.0, 0.25 * pi, 0.5 * pi);
    CHECK(rel(got, want) <= 1e-6);
}

TEST_CASE("marched kernel is symmetric") {
    const Grid g{0.0, pi, 2048, 0.0};
    const BoundaryBehavior dir{BoundaryKind::decay_exponent, cplx(1.0)};
    const PotentialFn pot = [](double x) { return cplx(std::cos(x), 0.1); };
    const cplx a = fd_green(pot, g, dir, dir, cplx(0.3, 0.9), 1.1, 2.3);
    const cplx b = fd_green(pot, g, dir, dir, cplx(0.3, 0.9), 2.3, 1.1);
    CHECK(rel(a, b) <= 1e-13);
}

TEST_CASE("free Dirichlet eigenvalues on the interval") {
    const Grid g{0.0, pi, 4096, 0.0};
    const auto ev = fd_spectrum(kFree, g, 3);
    REQUIRE(ev.size() == 3);
    CHECK(std::abs(ev[0] - cplx(1.0)) <= 1e-4);
    CHECK(std::abs(ev[1] - cplx(4.0)) <= 1e-4);
    CHECK(std::abs(ev[2] - cplx(9.0)) <= 1e-4);
}

TEST_CASE("numeric Wronskian of the circular pair is constant") {
    const OdeFn f1 = [](double x) { return ValueDeriv{std::sin(x), std::cos(x)}; };
    const OdeFn f2 = [](double x) { return ValueDeriv{std::cos(x), -std::sin(x)}; };
    for (double x : {0.3, 1.1, 2.6}) {
        CHECK(std::abs(numeric_wronskian(f1, f2, x) - cplx(-1.0)) <= 1e-14);
    }
}

TEST_CASE("adaptive integration reproduces the free decaying solution") {
    const BoundaryBehavior decay{BoundaryKind::decay_rate, cplx(1.0)};
    const auto [v, d] = ode_solution(kFree, cplx(-1.0), MarchFrom::right, decay, 10.0, 5.0);
    CHECK(rel(v, std::exp(5.0)) <= 1e-9);
    CHECK(rel(d, -std::exp(5.0)) <= 1e-9);
}

TEST_CASE("adaptive integration reproduces the inverse-square recessive solution") {
    const PotentialFn pot = [](double x) { return cplx(2.0 / (x * x), 0.0); };
    const BoundaryBehavior frob{BoundaryKind::decay_exponent, cplx(2.0)};
    const auto [v, d] = ode_solution(pot, cplx(0.0), MarchFrom::left, frob, 0.0, 0.8);
    const double scale = std::abs(v) + std::abs(d);
    CHECK(std::abs(v / 0.8 / 0.8 - d / 2.0 / 0.8) <= 1e-8 * scale);
}

TEST_CASE("well eigenvalues match the closed enumeration") {
    const FamilyParams fp{Family::GegDS, 2.5};
    const PotentialFn pot = [&](double x) { return potential(fp, x); };
    const Grid g{-20.0, 20.0, 8192, 0.0};
    const auto ev = fd_spectrum(pot, g, 2);
    REQUIRE(ev.size() == 2);
    CHECK(std::abs(ev[0] - cplx(-4.0)) <= 1e-3);
    CHECK(std::abs(ev[1] - cplx(-1.0)) <= 1e-3);
}

TEST_CASE("half-line family with flat potential has no bound states") {
    const FamilyParams fp{Family::H1H, 0.5, 0.5};
    CHECK(std::abs(potential(fp, 1.0)) <= 1e-15);
    const PotentialFn pot = [&](double x) { return potential(fp, x); };
    const Grid g{0.0, 30.0, 4096, 0.0};
    const auto ev = fd_spectrum(pot, g, 2);
    for (cplx e : ev) CHECK(e.real() >= -1e-8);
}

TEST_CASE("complex potentials shift the spectrum rigidly") {
    const PotentialFn well = [](double x) { return cplx(x * x, 0.0); };
    const PotentialFn shifted = [](double x) { return cplx(x * x, 0.3); };
    const Grid g{-8.0, 8.0, 769, 0.0};
    const auto base = fd_spectrum(well, g, 3);
    const auto up = fd_spectrum(shifted, g, 3);
    REQUIRE(base.size() == 3);
    REQUIRE(up.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CAPTURE(i);
        CHECK(std::abs(up[i] - base[i] - cplx(0.0, 0.3)) <= 1e-6);
        CHECK(std::abs(base[i] - cplx(2.0 * i + 1.0)) <= 5e-3);
    }
}

TEST_CASE("singular endpoint closure recovers the Bessel-type interval operator") {
    const FamilyParams fp{Family::GegS, 1.0};
    const PotentialFn pot = [&](double x) { return potential(fp, x); };
    const Grid g{0.0, pi, 4096, 0.002};
    const BoundaryBehavior frob{BoundaryKind::decay_exponent, cplx(1.5)};
    const auto ev = fd_spectrum(pot, g, 3, frob, frob);
    REQUIRE(ev.size() == 3);
    CHECK(std::abs(ev[0] - cplx(2.25)) <= 1e-3);
    CHECK(std::abs(ev[1] - cplx(6.25)) <= 1e-3);
    CHECK(std::abs(ev[2] - cplx(12.25)) <= 1e-3);
}
