#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "hypergreen/families.hpp"
#include "hypergreen/geometry.hpp"
#include "hypergreen/verify.hpp"

using namespace hypergreen;

namespace {

void line(int n, const char* name, bool ok, double worst, long ms) {
    std::printf("[criterion %d] %-32s %s  (worst %.3e, %.2f s)\n", n, name,
                ok ? "PASS" : "FAIL", worst, static_cast<double>(ms) / 1000.0);
    std::fflush(stdout);
}

double u01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
double uni(std::mt19937_64& g, double lo, double hi) { return lo + (hi - lo) * u01(g); }

bool fold(bool ok, const CheckReport& r, double& worst, long& ms) {
    worst = std::max(worst, r.max_residual);
    ms += r.wall_time_ms;
    return ok && r.pass();
}

}  // namespace

TEST_CASE("criterion 1: special-function relation battery") {
    bool ok = true;
    double worst = 0.0;
    long ms = 0;
    for (const char* s : {"kummer", "connect", "whipple", "halfint"})
        ok = fold(ok, run_suite(s, 1e-10), worst, ms);
    ok = fold(ok, degen_relation_report(1e-10), worst, ms);
    const bool in_time = ms < 30000;
    line(1, "special-function closure", ok && in_time, worst, ms);
    CHECK(ok);
    CHECK(in_time);
}

TEST_CASE("criterion 2: closed Wronskians against integrated solutions") {
    double worst = 0.0;
    long ms = 0;
    const bool ok = fold(true, run_suite("wronskian", 1e-8), worst, ms);
    line(2, "wronskian closure", ok, worst, ms);
    CHECK(ok);
}

TEST_CASE("criterion 3: closed kernels against the marching oracle") {
    double worst = 0.0;
    long ms = 0;
    const bool ok = fold(true, run_suite("kernels-oracle", 1e-4), worst, ms);
    const bool in_time = ms < 300000;
    line(3, "kernel oracle and order", ok && in_time, worst, ms);
    CHECK(ok);
    CHECK(in_time);
}

TEST_CASE("criterion 4: discrete spectra against the eigenvalue oracle") {
    double worst = 0.0;
    long ms = 0;
    const bool ok = fold(true, run_suite("spectra-oracle", 1e-3), worst, ms);
    line(4, "spectra oracle", ok, worst, ms);
    CHECK(ok);
}

TEST_CASE("criterion 5: transmutation identities") {
    double worst = 0.0;
    long ms = 0;
    const bool ok = fold(true, run_suite("transmute", 1e-8), worst, ms);
    line(5, "transmutation identities", ok, worst, ms);
    CHECK(ok);
}

TEST_CASE("criterion 6: kernel coincidence at unit second parameter") {
    double worst = 0.0;
    long ms = 0;
    const bool ok = fold(true, degenerate_kernels_report(1e-9), worst, ms);
    line(6, "degenerate coincidence", ok, worst, ms);
    CHECK(ok);
}

TEST_CASE("criterion 7: elementary kernels and the flat interval spectrum") {
    double worst = 0.0;
    long ms = 0;
    bool ok = fold(true, run_suite("elementary", 1e-10), worst, ms);
    const auto sq = spectrum({Family::H1S, 0.5, 0.5}, 26.0);
    bool exact = sq.discrete.size() == 5;
    for (int n = 1; exact && n <= 5; ++n) exact = sq.discrete[n - 1] == cplx(double(n * n));
    ok = ok && exact;
    line(7, "elementary coincidences", ok, worst, ms);
    CHECK(ok);
}

TEST_CASE("criterion 8: geometric reductions") {
    double worst = 0.0;
    long ms = 0;
    bool ok = fold(true, run_suite("geometry", 1e-7), worst, ms);
    for (int d = 2; d <= 6; ++d)
        for (int L = 0; L <= 4; ++L) {
            const ManifoldSpec m{ManifoldKind::Sphere, d, 0, 0, 0, 0};
            if (manifold_eigenvalue(m, L + 0.5) != cplx(double(-L * (L + d - 1)))) ok = false;
        }
    line(8, "geometric reductions", ok, worst, ms);
    CHECK(ok);
}

TEST_CASE("criterion 9: diagonal jump and off-diagonal defect") {
    struct Window {
        Family fam;
        double p1lo, p1hi, p2lo, p2hi;
        double xlo, xhi;
        bool two;
    };
    const Window wins[] = {
        {Family::GegS, 0.6, 1.6, 0.0, 0.0, 0.6, 2.5, false},
        {Family::GegH, 0.6, 1.6, 0.0, 0.0, 0.6, 2.6, false},
        {Family::GegDS, 0.6, 1.6, 0.0, 0.0, -1.5, 1.5, false},
        {Family::H1S, 0.6, 1.4, 0.6, 1.4, 0.6, 2.5, true},
        {Family::H1H, 0.6, 1.4, 0.6, 1.4, 0.6, 2.6, true},
        {Family::H1DS, 0.6, 1.4, 0.6, 1.4, -1.5, 1.5, true},
        {Family::H2S, 0.8, 1.6, 0.8, 1.6, 0.6, 2.5, true},
        {Family::H2H, 0.6, 1.4, 0.8, 1.6, 0.6, 2.6, true},
        {Family::H2DS, 0.8, 1.4, 0.8, 1.6, -1.5, 1.5, true},
    };
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 g(0x64656665637400ull);
    bool ok = true;
    double worst_jump = 0.0, worst_ode = 0.0;
    for (const auto& w : wins) {
        for (int d = 0; d < 20; ++d) {
            const FamilyParams fp{w.fam, uni(g, w.p1lo, w.p1hi),
                                  w.two ? cplx(uni(g, w.p2lo, w.p2hi)) : cplx(0.0)};
            const cplx z(uni(g, -2.0, 2.0), uni(g, 0.6, 1.6));
            const GreenKernel k(fp, z);

            const double x0 = uni(g, w.xlo + 0.1, w.xhi - 0.1);
            const double h = 1e-4;
            const cplx dplus = (-11.0 * k(x0, x0) + 18.0 * k(x0 + h, x0)
                                - 9.0 * k(x0 + 2 * h, x0) + 2.0 * k(x0 + 3 * h, x0))
                               / (6.0 * h);
            const cplx dminus = (11.0 * k(x0, x0) - 18.0 * k(x0 - h, x0)
                                 + 9.0 * k(x0 - 2 * h, x0) - 2.0 * k(x0 - 3 * h, x0))
                                / (6.0 * h);
            const double jump_err = std::abs(dplus - dminus - cplx(-1.0));
            worst_jump = std::max(worst_jump, jump_err);
            if (jump_err > 1e-6) ok = false;

            double x1 = uni(g, w.xlo, w.xhi), y1 = uni(g, w.xlo, w.xhi);
            for (int tries = 0; std::abs(x1 - y1) < 0.4 && tries < 64; ++tries)
                y1 = uni(g, w.xlo, w.xhi);
            if (std::abs(x1 - y1) < 0.4) y1 = x1 > 0.5 * (w.xlo + w.xhi) ? w.xlo : w.xhi;

            const double hh = 3e-3;
            const cplx g0 = k(x1, y1);
            const cplx d2 = (-k(x1 + 2 * hh, y1) + 16.0 * k(x1 + hh, y1) - 30.0 * g0
                             + 16.0 * k(x1 - hh, y1) - k(x1 - 2 * hh, y1))
                            / (12.0 * hh * hh);
            const cplx res = -d2 + (potential(fp, x1) - z) * g0;
            const double scale =
                1.0 + std::abs(z * g0) + std::abs(potential(fp, x1) * g0);
            const double ode_err = std::abs(res) / scale;
            worst_ode = std::max(worst_ode, ode_err);
            if (ode_err > 1e-6) ok = false;
        }
    }
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    line(9, "kernel defect", ok, std::max(worst_jump, worst_ode), ms);
    CHECK(ok);
}
