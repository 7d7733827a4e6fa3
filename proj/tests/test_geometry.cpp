#include <doctest.h>

#include "hypergreen/geometry.hpp"

using namespace hypergreen;

TEST_CASE("radial reduction of the round sphere") {
    const Reduction r = reduce({ManifoldKind::Sphere, 3, 0, 0, 0, 0});
    CHECK(r.params.family == Family::GegS);
    CHECK(r.params.p1 == cplx(0.5));
    CHECK(r.gauge_shift == cplx(1.0));
    CHECK(r.scale == 1.0);

    const Reduction rl = reduce({ManifoldKind::Sphere, 4, 0, 0, 2, 0});
    CHECK(rl.params.p1 == cplx(3.0));
    CHECK(rl.gauge_shift == cplx(2.25));
}

TEST_CASE("radial reduction of the two-sheet kinds") {
    const Reduction h = reduce({ManifoldKind::Hyperboloid, 0, 2, 3, 1, 0});
    CHECK(h.params.family == Family::H1H);
    CHECK(h.params.p1 == cplx(1.5));
    CHECK(h.params.p2 == cplx(0.0));
    CHECK(h.gauge_shift == cplx(2.25));
    CHECK(h.scale == 4.0);

    const Reduction d = reduce({ManifoldKind::DoubleSphere, 0, 2, 2, 1, 1});
    CHECK(d.params.family == Family::H1S);
    CHECK(d.params.p1 == cplx(1.0));
    CHECK(d.params.p2 == cplx(1.0));
    CHECK(d.gauge_shift == cplx(1.0));
    CHECK(d.scale == 4.0);

    const Reduction c = reduce({ManifoldKind::ComplexHyperboloid, 0, 2, 0, 1, 0});
    CHECK(c.params.family == Family::H1DS);
    CHECK(c.params.p1 == cplx(1.0));
    CHECK(c.params.p2 == cplx(0.0));
    CHECK(c.gauge_shift == cplx(1.0));
}

TEST_CASE("sphere eigenvalues are exact integers") {
    for (int d = 2; d <= 6; ++d) {
        for (int L = 0; L <= 4; ++L) {
            const ManifoldSpec m{ManifoldKind::Sphere, d, 0, 0, 0, 0};
            CAPTURE(d);
            CAPTURE(L);
            CHECK(manifold_eigenvalue(m, L + 0.5) == cplx(double(-L * (L + d - 1))));
        }
    }
}

TEST_CASE("hyperbolic and deSitter reconstructions agree with the closed forms") {
    const ManifoldSpec h{ManifoldKind::Hyperbolic, 2, 0, 0, 0, 0};
    const cplx eh = manifold_eigenvalue(h, 1.5);
    CHECK(std::abs(eh - cplx(1.5 * 1.5 - 0.25)) <= 1e-14);

    const ManifoldSpec ds{ManifoldKind::DeSitter, 2, 0, 0, 0, 0};
    CHECK(std::abs(manifold_eigenvalue(ds, 0.5)) <= 1e-14);

    const ManifoldSpec db{ManifoldKind::DoubleSphere, 0, 2, 2, 0, 0};
    CHECK(std::abs(manifold_eigenvalue(db, 0.5)) <= 1e-14);
}

TEST_CASE("specification guards") {
    CHECK_THROWS_AS(reduce({ManifoldKind::Sphere, 1, 0, 0, 0, 0}), SpecError);
    CHECK_THROWS_AS(reduce({ManifoldKind::Sphere, 3, 0, 0, -1, 0}), SpecError);
    CHECK_THROWS_AS(reduce({ManifoldKind::Sphere, 3, 0, 0, 0, 2}), SpecError);
    CHECK_THROWS_AS(reduce({ManifoldKind::Hyperboloid, 0, 0, 3, 0, 0}), SpecError);
    const ManifoldSpec m{ManifoldKind::Sphere, 3, 0, 0, 0, 0};
    CHECK_THROWS_AS(manifold_eigenvalue(m, 1.0), SpecError);
    CHECK_THROWS_AS(manifold_eigenvalue(m, -0.5), SpecError);
}
