#include <doctest.h>

#include "hypergreen/transmute.hpp"

using namespace hypergreen;

namespace {
constexpr TransmutationId kIds[] = {
    TransmutationId::T1_GegS_GegDS, TransmutationId::T2_H1S_H1H,
    TransmutationId::T3_H2H_H2DS,   TransmutationId::T4_H1S_H2DS,
    TransmutationId::T5_H1H_H2H,    TransmutationId::T6_H1DS_H2S,
};

double rel(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }
}

TEST_CASE("coordinate maps invert each other") {
    for (auto id : kIds) {
        const FamilyDomain w = source_window(id);
        const FamilyDomain dom = family_domain(source_family(id));
        CHECK(w.a > dom.a);
        CHECK(w.b < dom.b);
        for (int i = 0; i <= 4; ++i) {
            const double x = w.a + (w.b - w.a) * (0.1 + 0.2 * i);
            const double t = coord_map(id, x, MapDirection::forward);
            CAPTURE(static_cast<int>(id));
            CAPTURE(x);
            CHECK(std::abs(coord_map(id, t, MapDirection::inverse) - x) <= 1e-12);
        }
    }
}

TEST_CASE("diagonal weight is the coordinate-map derivative magnitude") {
    const double h = 1e-6;
    for (auto id : kIds) {
        const FamilyDomain w = source_window(id);
        for (int i = 0; i <= 3; ++i) {
            const double x = w.a + (w.b - w.a) * (0.2 + 0.2 * i);
            const double slope = (coord_map(id, x + h, MapDirection::forward)
                                  - coord_map(id, x - h, MapDirection::forward))
                                 / (2.0 * h);
            CAPTURE(static_cast<int>(id));
            CAPTURE(x);
            CHECK(std::abs(transmute_weight(id, x, x) - std::abs(slope))
                  <= 1e-7 * (1.0 + std::abs(slope)));
        }
    }
}

TEST_CASE("exchange map swaps spectral data and couplings") {
    const cplx z(1.2, 0.7);
    const auto im1 = exchange_map(TransmutationId::T1_GegS_GegDS, {Family::GegS, 1.3}, z);
    CHECK(im1.target.family == Family::GegDS);
    CHECK(rel(im1.target.p1, std::sqrt(z)) <= 1e-14);
    CHECK(rel(im1.target_z, cplx(-1.69, 0.0)) <= 1e-14);

    const auto im2 =
        exchange_map(TransmutationId::T2_H1S_H1H, {Family::H1S, 0.8, cplx(0.6, 0.2)}, z);
    CHECK(im2.target.family == Family::H1H);
    CHECK(im2.target.p1 == cplx(0.8));
    CHECK(rel(im2.target_z, -0.25 * cplx(0.6, 0.2) * cplx(0.6, 0.2)) <= 1e-14);
}

TEST_CASE("kernel identities hold at interior points") {
    struct Draw {
        TransmutationId id;
        FamilyParams src;
        cplx z;
    };
    const Draw draws[] = {
        {TransmutationId::T1_GegS_GegDS, {Family::GegS, 1.3}, {1.2, 0.7}},
        {TransmutationId::T2_H1S_H1H, {Family::H1S, 0.8, cplx(0.6, 0.25)}, {0.5, 0.8}},
        {TransmutationId::T3_H2H_H2DS, {Family::H2H, cplx(-0.8, 0.3), cplx(1.4, 0.2)}, {0.9, 1.1}},
        {TransmutationId::T4_H1S_H2DS, {Family::H1S, cplx(1.1, 0.2), cplx(0.7, 0.3)}, {0.8, 0.9}},
        {TransmutationId::T5_H1H_H2H, {Family::H1H, cplx(1.2, 0.15), cplx(0.8, 0.25)}, {-0.7, 0.9}},
        {TransmutationId::T6_H1DS_H2S, {Family::H1DS, cplx(0.9, 0.35), cplx(0.6, -0.3)}, {0.4, 1.3}},
    };
    for (const auto& d : draws) {
        const FamilyDomain w = source_window(d.id);
        const double x = w.a + 0.38 * (w.b - w.a);
        const double y = w.a + 0.71 * (w.b - w.a);
        CAPTURE(static_cast<int>(d.id));
        CHECK(kernel_residual(d.id, d.src, d.z, x, y) <= 1e-9);
        const auto both = kernel_residual_dual(d.id, d.src, d.z, x, y);
        CHECK(both.first <= 1e-9);
        CHECK(both.second <= 1e-9);
    }
}
