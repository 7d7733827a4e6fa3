#include <doctest.h>

#include "hypergreen/hyp.hpp"
#include "reference_values.hpp"

using namespace hypergreen;

namespace {
double rel(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }
}

TEST_CASE("regularized 2F1 matches independent reference values") {
    for (const auto& c : ref::hyp_cases) {
        HypParams p{c.alpha, c.beta, c.mu};
        CAPTURE(c.z.real());
        CAPTURE(c.z.imag());
        CHECK(rel(hyp2f1_reg(p, c.z), c.value) <= c.tol);
    }
}

TEST_CASE("cut values select the requested side") {
    for (const auto& c : ref::hyp_cut_cases) {
        HypParams p{c.alpha, c.beta, c.mu};
        CAPTURE(c.x);
        CHECK(rel(hyp2f1_reg(p, cplx(c.x, 0.0), BranchTag::above_cut), c.above) <= 1e-11);
        CHECK(rel(hyp2f1_reg(p, cplx(c.x, 0.0), BranchTag::below_cut), c.below) <= 1e-11);
        CHECK_THROWS_AS(hyp2f1_reg(p, cplx(c.x, 0.0)), CutError);
    }
}

TEST_CASE("value at the origin is the reciprocal gamma of the lower parameter") {
    HypParams p{cplx(0.73, 0.21), cplx(1.37, -0.42), cplx(0.9, 0.3)};
    CHECK(rel(hyp2f1_reg(p, cplx(0.0)), rgamma(p.c())) <= 1e-14);
}

TEST_CASE("even in the spectral index") {
    const cplx zs[] = {{0.4, 0.2}, {-3.1, 0.7}, {2.2, 1.9}, {0.93, -0.41}};
    for (cplx z : zs) {
        HypParams plus{cplx(0.62, 0.11), cplx(1.05, -0.3), cplx(1.4, 0.8)};
        HypParams minus{plus.alpha, plus.beta, -plus.mu};
        CHECK(rel(hyp2f1_reg(plus, z), hyp2f1_reg(minus, z)) <= 1e-12);
    }
}

TEST_CASE("derivative agrees with central differences") {
    HypParams p{cplx(0.81, -0.17), cplx(1.21, 0.33), cplx(0.7, 0.5)};
    const cplx zs[] = {{0.3, 0.1}, {-1.8, 0.4}, {2.6, 1.3}, {0.85, 0.25}};
    const double h = 1e-5;
    for (cplx z : zs) {
        const cplx fd = (hyp2f1_reg(p, z + h) - hyp2f1_reg(p, z - h)) / (2.0 * h);
        CHECK(rel(hyp2f1_reg_deriv(p, z), fd) <= 1e-6);
    }
}
