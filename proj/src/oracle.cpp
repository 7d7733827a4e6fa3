#include "hypergreen/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <boost/numeric/odeint.hpp>

#define LAPACK_COMPLEX_CPP
#include <complex>
#include <lapacke.h>

namespace hypergreen {
namespace {

// Leading Frobenius data of -phi'' + (V - z) phi = 0 at a finite endpoint
// where V has a double pole: phi(t) = t^nu (1 + c1 t + c2 t^2) with the
// Laurent coefficients of V recovered by Richardson extrapolation.
struct FrobeniusSeed {
    cplx nu;
    cplx c1;
    cplx c2;

    FrobeniusSeed(const PotentialFn& pot, double endpoint, double dir, cplx nu_in, cplx z)
        : nu(nu_in) {
        if (nu.real() <= -0.5) throw SeedError("endpoint exponent is not square integrable");
        if (std::abs(nu) < 1e-12) throw SeedError("zero endpoint exponent is unsupported");
        const cplx l2 = nu * (nu - 1.0);
        const auto g1 = [&](double t) { return t * (pot(endpoint + dir * t) - l2 / (t * t)); };
        const double t = 1e-3;
        const cplx v1 = 2.0 * g1(0.5 * t) - g1(t);
        const auto g0 = [&](double s) {
            return pot(endpoint + dir * s) - l2 / (s * s) - v1 / s;
        };
        const cplx v0 = 2.0 * g0(0.5 * t) - g0(t);
        c1 = v1 / (2.0 * nu);
        c2 = (v1 * c1 + v0 - z) / (2.0 * (2.0 * nu + 1.0));
    }

    cplx value(double t) const { return pow_p(cplx(t), nu) * (1.0 + c1 * t + c2 * t * t); }

    cplx deriv(double t) const {
        return pow_p(cplx(t), nu - 1.0)
               * (nu + (nu + 1.0) * c1 * t + (nu + 2.0) * c2 * t * t);
    }
};

cplx decay_rate_of(const BoundaryBehavior& bc) {
    if (bc.value.real() <= 0.0) throw SeedError("decay rate must have positive real part");
    return bc.value;
}

}  // namespace

void Grid::validate() const {
    if (!(b > a)) throw UsageError("grid interval is empty");
    if (n < 64) throw UsageError("grid needs at least 64 points");
    if (!(clamp > 0.0 && clamp < 0.2)) throw UsageError("clamp fraction must lie in (0, 0.2)");
}

cplx fd_green(const PotentialFn& potential, const Grid& grid, const BoundaryBehavior& bc_a,
              const BoundaryBehavior& bc_b, cplx z, double x, double y) {
    grid.validate();
    const int n = grid.n;
    const double h = grid.h();
    const double lo = grid.lo();
    const double hi = grid.hi();

    std::vector<cplx> psa(n), psb(n);
    if (bc_a.kind == BoundaryKind::decay_exponent) {
        const FrobeniusSeed seed(potential, grid.a, +1.0, bc_a.value, z);
        psa[0] = seed.value(lo - grid.a);
        psa[1] = seed.value(lo - grid.a + h);
    } else {
        const cplx lam = decay_rate_of(bc_a);
        psa[0] = 1.0;
        psa[1] = std::exp(lam * h);
    }
    if (bc_b.kind == BoundaryKind::decay_exponent) {
        const FrobeniusSeed seed(potential, grid.b, -1.0, bc_b.value, z);
        psb[n - 1] = seed.value(grid.b - hi);
        psb[n - 2] = seed.value(grid.b - hi + h);
    } else {
        const cplx lam = decay_rate_of(bc_b);
        psb[n - 1] = 1.0;
        psb[n - 2] = std::exp(lam * h);
    }

    const auto node = [&](int i) { return lo + i * h; };
    for (int i = 1; i + 1 < n; ++i)
        psa[i + 1] = (2.0 + h * h * (potential(node(i)) - z)) * psa[i] - psa[i - 1];
    for (int i = n - 2; i > 0; --i)
        psb[i - 1] = (2.0 + h * h * (potential(node(i)) - z)) * psb[i] - psb[i + 1];

    const int m = n / 2;
    const cplx w = (psa[m + 1] - psa[m - 1]) / (2.0 * h) * psb[m]
                   - psa[m] * (psb[m + 1] - psb[m - 1]) / (2.0 * h);
    if (std::abs(w) < 1e-12) throw ConvergenceError("numeric Wronskian vanishes near spectrum");

    const auto snap = [&](double v) {
        const int i = static_cast<int>(std::lround((v - lo) / h));
        if (i < 0 || i >= n || std::abs(v - node(i)) > 0.51 * h)
            throw DomainError("evaluation point outside the clamped grid");
        return i;
    };
    const int ix = snap(x), iy = snap(y);
    return psa[std::min(ix, iy)] * psb[std::max(ix, iy)] / w;
}

ValueDeriv ode_solution(const PotentialFn& potential, cplx z, MarchFrom from,
                        const BoundaryBehavior& seed, double anchor, double x) {
    namespace ode = boost::numeric::odeint;
    using state_type = std::array<cplx, 2>;

    const double dir = from == MarchFrom::left ? 1.0 : -1.0;
    double start;
    state_type s;
    if (seed.kind == BoundaryKind::decay_exponent) {
        const FrobeniusSeed fs(potential, anchor, dir, seed.value, z);
        const double off = 1e-3;
        start = anchor + dir * off;
        s = {fs.value(off), dir * fs.deriv(off)};
    } else {
        const cplx lam = decay_rate_of(seed);
        start = anchor;
        s = {cplx(1.0), dir * lam};
    }
    if (x == start) return {s[0], s[1]};
    if ((x - start) * dir < 0.0) throw DomainError("evaluation point behind the seed anchor");

    const auto sys = [&](const state_type& st, state_type& dst, double t) {
        dst[0] = st[1];
        dst[1] = (potential(t) - z) * st[0];
    };
    auto stepper =
        ode::make_controlled(1e-12, 1e-10, ode::runge_kutta_dopri5<state_type>());
    double t = start;
    double dt = dir * std::min(1e-4, std::abs(x - start));
    while ((x - t) * dir > 0.0) {
        if (std::abs(dt) > std::abs(x - t)) dt = x - t;
        const auto result = stepper.try_step(sys, s, t, dt);
        if (result == ode::fail && std::abs(dt) < 1e-12)
            throw StiffnessError("step size collapsed");
    }
    return {s[0], s[1]};
}

cplx numeric_wronskian(const OdeFn& f1, const OdeFn& f2, double x) {
    const ValueDeriv a = f1(x);
    const ValueDeriv b = f2(x);
    return a.first * b.second - a.second * b.first;
}

std::vector<cplx> fd_spectrum(const PotentialFn& potential, const Grid& grid, int count,
                              std::optional<BoundaryBehavior> bc_a,
                              std::optional<BoundaryBehavior> bc_b) {
    grid.validate();
    const int n = grid.n;
    const double h = grid.h();
    const double lo = grid.lo();
    const double hi = grid.hi();
    if (count < 1 || count > n) throw UsageError("eigenvalue count out of range");

    std::vector<cplx> vx(n);
    bool real_problem = true;
    for (int i = 0; i < n; ++i) {
        vx[i] = potential(lo + i * h);
        if (std::abs(vx[i].imag()) > 1e-13 * (1.0 + std::abs(vx[i].real())))
            real_problem = false;
    }
    const auto real_bc = [](const std::optional<BoundaryBehavior>& bc) {
        return !bc || bc->value.imag() == 0.0;
    };
    real_problem = real_problem && real_bc(bc_a) && real_bc(bc_b);

    if (!real_problem) {
        if (n > 2048) throw UsageError("dense spectral path limited to 2048 points");
        std::vector<cplx> mat(static_cast<std::size_t>(n) * n, cplx(0.0));
        const double ih2 = 1.0 / (h * h);
        for (int i = 0; i < n; ++i) {
            mat[static_cast<std::size_t>(i) * n + i] = 2.0 * ih2 + vx[i];
            if (i + 1 < n) {
                mat[static_cast<std::size_t>(i + 1) * n + i] = -ih2;
                mat[static_cast<std::size_t>(i) * n + i + 1] = -ih2;
            }
        }
        std::vector<cplx> w(n);
        const lapack_int info = LAPACKE_zhseqr(LAPACK_COL_MAJOR, 'E', 'N', n, 1, n, mat.data(),
                                               n, w.data(), nullptr, 1);
        if (info != 0) throw ConvergenceError("eigenvalue iteration failed");
        std::sort(w.begin(), w.end(), [](cplx a, cplx b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        w.resize(count);
        return w;
    }

    // Symmetric path.  A decay_exponent behavior folds the ghost-node ratio
    // phi(t0 - h)/phi(t0) into the end diagonal; the ratio depends on the
    // eigenvalue through the quadratic seed term, so each index is solved
    // self-consistently.
    const double ih2 = 1.0 / (h * h);
    std::vector<double> dbase(n), e(n - 1, -ih2);
    for (int i = 0; i < n; ++i) dbase[i] = 2.0 * ih2 + vx[i].real();

    const auto closure = [&](const std::optional<BoundaryBehavior>& bc, double endpoint,
                             double dir, double t0, double energy) -> double {
        if (!bc || bc->kind != BoundaryKind::decay_exponent) return 0.0;
        if (t0 - h <= 0.0) throw SeedError("clamp margin too small for the endpoint closure");
        const FrobeniusSeed seed(potential, endpoint, dir, bc->value, cplx(energy));
        return (seed.value(t0 - h) / seed.value(t0)).real();
    };

    std::vector<cplx> out;
    std::vector<double> d(n), wout(n);
    std::vector<lapack_int> iblock(n), isplit(n);
    for (int idx = 1; idx <= count; ++idx) {
        double energy = 0.0;
        for (int iter = 0; iter < 30; ++iter) {
            d = dbase;
            d[0] -= closure(bc_a, grid.a, +1.0, lo - grid.a, energy) * ih2;
            d[n - 1] -= closure(bc_b, grid.b, -1.0, grid.b - hi, energy) * ih2;
            lapack_int found = 0, nsplit = 0;
            const lapack_int info =
                LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, idx, idx, 0.0, d.data(), e.data(),
                               &found, &nsplit, wout.data(), iblock.data(), isplit.data());
            if (info != 0 || found != 1) throw ConvergenceError("eigenvalue bisection failed");
            const double next = wout[0];
            const bool settled = std::abs(next - energy) < 1e-13 * std::max(1.0, std::abs(next));
            energy = next;
            if (settled) break;
        }
        out.push_back(cplx(energy));
    }
    return out;
}

}  // namespace hypergreen
