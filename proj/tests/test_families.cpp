#include <doctest.h>

#include "hypergreen/families.hpp"
#include "reference_values.hpp"

using namespace hypergreen;

namespace {
double rel(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

FamilyParams params_of(int family, cplx p1, cplx p2) {
    return {static_cast<Family>(family), p1, p2};
}
}

TEST_CASE("eigen solutions match independent reference values") {
    for (const auto& c : ref::solution_cases) {
        CAPTURE(c.family);
        CAPTURE(c.which);
        CAPTURE(c.x);
        const auto fp = params_of(c.family, c.p1, c.p2);
        const auto got = solution(fp, static_cast<SolutionId>(c.which), c.z, c.x);
        CHECK(rel(got, c.value) <= c.tol);
    }
}

TEST_CASE("potentials match independent reference values") {
    for (const auto& c : ref::potential_cases) {
        CAPTURE(c.family);
        CAPTURE(c.x);
        CHECK(rel(potential(params_of(c.family, c.p1, c.p2), c.x), c.value) <= 1e-12);
    }
}

TEST_CASE("closed Wronskians match independent reference values") {
    for (const auto& c : ref::wronskian_cases) {
        CAPTURE(c.family);
        CAPTURE(c.pair);
        const auto pair = c.pair == 0 ? PairKind::kernel_pair : PairKind::secondary_pair;
        CHECK(rel(wronskian_closed(params_of(c.family, c.p1, c.p2), c.z, pair), c.value)
              <= 1e-11);
    }
}

TEST_CASE("whole-line families have no distinguished secondary pair") {
    CHECK_THROWS_AS(
        wronskian_closed({Family::GegDS, 1.2}, cplx(0.3, 0.4), PairKind::secondary_pair),
        DomainError);
    CHECK_THROWS_AS(
        wronskian_closed({Family::H2DS, 1.1, 0.7}, cplx(0.3, 0.4), PairKind::secondary_pair),
        DomainError);
}

TEST_CASE("Green kernels match independent reference values") {
    for (const auto& c : ref::kernel_cases) {
        CAPTURE(c.family);
        CAPTURE(c.x);
        CAPTURE(c.y);
        const GreenKernel g(params_of(c.family, c.p1, c.p2), c.z);
        CHECK(rel(g(c.x, c.y), c.value) <= c.tol);
    }
}

TEST_CASE("kernels are symmetric in the two coordinates") {
    const GreenKernel g1({Family::GegS, 1.3}, cplx(1.0, 0.5));
    CHECK(rel(g1(0.9, 2.1), g1(2.1, 0.9)) <= 1e-13);
    const GreenKernel g2({Family::H2H, 1.3, 2.5}, cplx(0.8, 0.6));
    CHECK(rel(g2(1.8, 2.3), g2(2.3, 1.8)) <= 1e-13);
}

TEST_CASE("self-adjoint kernels are real below the spectrum") {
    const GreenKernel g({Family::GegH, 1.2}, cplx(-5.0, 0.0));
    const cplx v = g(0.9, 1.7);
    CHECK(std::abs(v.imag()) <= 1e-12 * (1.0 + std::abs(v)));
}

TEST_CASE("mirror solutions reflect the coordinate") {
    const cplx z(1.7, -0.9);
    CHECK(rel(solution({Family::GegS, cplx(0.73, 0.21)}, SolutionId::Ps_mirror, z, 0.6),
              solution({Family::GegS, cplx(0.73, 0.21)}, SolutionId::Ps, z, pi - 0.6))
          <= 1e-13);
    CHECK(rel(solution({Family::H1S, cplx(0.67), cplx(1.22)}, SolutionId::P1s_mirror, z, 0.8),
              solution({Family::H1S, cplx(1.22), cplx(0.67)}, SolutionId::P1s, z, pi - 0.8))
          <= 1e-13);
}

TEST_CASE("sphere-type spectra enumerate shifted half-integers") {
    const auto s = spectrum({Family::GegS, 1.0}, 20.0);
    REQUIRE(s.discrete.size() == 3);
    CHECK(s.discrete[0] == cplx(2.25));
    CHECK(s.discrete[1] == cplx(6.25));
    CHECK(s.discrete[2] == cplx(12.25));
    CHECK(s.essential_rays.empty());
    CHECK(s.exhaustive_below_bound);

    const auto sq = spectrum({Family::H1S, 0.5, 0.5}, 26.0);
    REQUIRE(sq.discrete.size() == 5);
    for (int n = 1; n <= 5; ++n) CHECK(sq.discrete[n - 1] == cplx(double(n * n)));
}

TEST_CASE("well-type spectra terminate and sit below the essential edge") {
    const auto s = spectrum({Family::GegDS, 2.5}, 100.0);
    REQUIRE(s.discrete.size() == 2);
    CHECK(s.discrete[0] == cplx(-4.0));
    CHECK(s.discrete[1] == cplx(-1.0));
    REQUIRE(s.essential_rays.size() == 1);
    CHECK(s.essential_rays[0].offset == cplx(0.0));

    const auto h = spectrum({Family::H2S, 1.3, 2.5}, 15.0);
    REQUIRE(h.discrete.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(rel(h.discrete[i], ref::h2s_spectrum_tau13_mu25[i]) <= 1e-13);
}

TEST_CASE("spectrum rejects parameters outside the holomorphic region") {
    CHECK_THROWS_AS(spectrum({Family::GegS, -1.5}, 10.0), ParamRegionError);
}

TEST_CASE("kernel construction rejects spectral points") {
    CHECK_THROWS_AS(green_kernel({Family::GegS, 1.0}, cplx(2.25)), SpectrumError);
    CHECK_THROWS_AS(green_kernel({Family::GegH, 1.2}, cplx(3.0)), SpectrumError);
    const GreenKernel g({Family::GegS, 1.0}, cplx(2.25 + 1e-8, 0.0));
    CHECK(std::abs(g.prefactor()) > 1e6);
}

TEST_CASE("evaluation outside the coordinate domain raises") {
    const GreenKernel g({Family::GegS, 1.0}, cplx(1.0, 0.5));
    CHECK_THROWS_AS(g(-0.5, 1.0), DomainError);
    CHECK_THROWS_AS(g(0.5, 3.5), DomainError);
    CHECK_THROWS_AS(potential({Family::GegH, 1.0}, -2.0), DomainError);
}

TEST_CASE("textbook kernels on the interval and half line") {
    const double k = 1.0;
    const double want = std::sinh(k * 0.25 * pi) * std::sinh(k * 0.5 * pi)
                        / (k * std::sinh(k * pi));
    CHECK(rel(elementary_kernel(ElementaryCase::DD, k, 0.25 * pi, 0.5 * pi), want) <= 1e-15);
    CHECK(rel(elementary_kernel(ElementaryCase::Line, 2.0, -0.3, 1.1),
              std::exp(-2.0 * 1.4) / 4.0)
          <= 1e-15);
    CHECK(rel(elementary_kernel(ElementaryCase::HalfD, 1.5, 0.7, 2.0),
              std::sinh(1.5 * 0.7) * std::exp(-1.5 * 2.0) / 1.5)
          <= 1e-15);
    CHECK(elementary_kernel(ElementaryCase::NN, 1.0, 2.0, 0.4)
          == elementary_kernel(ElementaryCase::NN, 1.0, 0.4, 2.0));
    CHECK_THROWS_AS(elementary_kernel(ElementaryCase::DD, 0.0, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(elementary_kernel(ElementaryCase::DD, 1.0, 1.0, 3.5), DomainError);
    CHECK_THROWS_AS(elementary_kernel(ElementaryCase::HalfD, 1.0, -0.2, 1.0), DomainError);
}

TEST_CASE("kernel coincidence residual at unit second parameter") {
    const Sample s{cplx(0.8, 0.9), 0.9, 2.1};
    CHECK(degenerate_identity_residual(Family::H2S, cplx(1.3), s) <= 1e-9);
    const Sample sh{cplx(-0.7, 0.8), 0.9, 2.1};
    CHECK(degenerate_identity_residual(Family::H2H, cplx(0.8), sh) <= 1e-9);
    CHECK_THROWS_AS(degenerate_identity_residual(Family::GegS, cplx(1.0), s), UsageError);
    CHECK_THROWS_AS(degenerate_identity_residual(Family::H2S, cplx(0.0), s),
                    DegenerateParameterError);
}

TEST_CASE("endpoint classification") {
    const auto e0 = endpoint_class({Family::GegS, cplx(1.3)}, 0);
    CHECK(e0.kind == EndpointKind::Bessel);
    CHECK(e0.index == cplx(1.3));
    CHECK(endpoint_class({Family::GegH, cplx(1.3)}, 1).kind == EndpointKind::ShortRange);
    const auto w0 = endpoint_class({Family::H2H, cplx(0.9), cplx(1.7)}, 0);
    CHECK(w0.kind == EndpointKind::Whittaker);
    CHECK(w0.index == cplx(0.5 * 1.7));
    CHECK(w0.coupling == cplx(-0.9));
    CHECK(endpoint_class({Family::H2DS, cplx(0.9), cplx(1.7)}, 1).kind
          == EndpointKind::ShiftedShortRange);
    CHECK_THROWS_AS(endpoint_class({Family::GegS, cplx(1.0)}, 2), UsageError);
}
