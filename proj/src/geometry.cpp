#include "hypergreen/geometry.hpp"

#include <cmath>
#include <cstdint>

namespace hypergreen {
namespace {

bool uses_d(ManifoldKind k) {
    return k == ManifoldKind::Sphere || k == ManifoldKind::Hyperbolic
           || k == ManifoldKind::DeSitter;
}

bool uses_j(ManifoldKind k) {
    return k == ManifoldKind::DoubleSphere || k == ManifoldKind::Hyperboloid
           || k == ManifoldKind::ComplexHyperboloid;
}

void validate(const ManifoldSpec& m) {
    if (m.l < 0 || m.j < 0) throw SpecError("harmonic degrees must be nonnegative");
    if (uses_d(m.kind)) {
        if (m.d < 2) throw SpecError("dimension must be at least 2");
        if (m.j != 0) throw SpecError("second harmonic degree does not apply to this manifold");
        return;
    }
    if (m.kind == ManifoldKind::ComplexHyperboloid) {
        if (m.p < 1) throw SpecError("sheet dimension must be at least 1");
        return;
    }
    if (m.p < 1 || m.q < 1) throw SpecError("sheet dimensions must be at least 1");
}

double half_k_index(double k) {
    const double two_k = 2.0 * k;
    const long long n = std::llround(two_k);
    if (!(k > 0.0) || std::abs(two_k - static_cast<double>(n)) > 1e-12 || n % 2 != 1)
        throw SpecError("index must be a positive half-odd integer");
    return k;
}

}  // namespace

Reduction reduce(const ManifoldSpec& m) {
    validate(m);
    switch (m.kind) {
        case ManifoldKind::Sphere: {
            const double al = 0.5 * m.d - 1.0 + m.l;
            const double half = 0.5 * (m.d - 1.0);
            return {{Family::GegS, al, 0.0}, half * half, 1.0};
        }
        case ManifoldKind::Hyperbolic: {
            const double al = 0.5 * m.d - 1.0 + m.l;
            const double half = 0.5 * (m.d - 1.0);
            return {{Family::GegH, al, 0.0}, half * half, 1.0};
        }
        case ManifoldKind::DeSitter: {
            const double al = 0.5 * m.d - 1.0 + m.l;
            const double half = 0.5 * (m.d - 1.0);
            return {{Family::GegDS, al, 0.0}, half * half, 1.0};
        }
        case ManifoldKind::DoubleSphere: {
            const double al = 0.5 * m.p - 1.0 + m.l;
            const double be = 0.5 * m.q - 1.0 + m.j;
            const double half = 0.5 * (m.p + m.q - 2.0);
            return {{Family::H1S, al, be}, half * half, 4.0};
        }
        case ManifoldKind::Hyperboloid: {
            const double al = 0.5 * m.q - 1.0 + m.l;
            const double be = 0.5 * m.p - 1.0 + m.j;
            const double half = 0.5 * (m.p + m.q - 2.0);
            return {{Family::H1H, al, be}, half * half, 4.0};
        }
        case ManifoldKind::ComplexHyperboloid: {
            const double al = 0.5 * m.p - 1.0 + m.l;
            const double be = 0.5 * m.p - 1.0 + m.j;
            const double shift = (m.p - 1.0) * (m.p - 1.0);
            return {{Family::H1DS, al, be}, shift, 4.0};
        }
    }
    throw SpecError("unknown manifold kind");
}

cplx manifold_eigenvalue(const ManifoldSpec& m, double k) {
    half_k_index(k);
    const Reduction red = reduce(m);
    if (m.kind == ManifoldKind::Sphere) {
        const std::int64_t two_k = std::llround(2.0 * k);
        const std::int64_t s = two_k + m.d - 2 + 2 * m.l;
        const std::int64_t num = static_cast<std::int64_t>(m.d - 1) * (m.d - 1) - s * s;
        return cplx(static_cast<double>(num / 4));
    }
    const cplx al = red.params.p1, be = red.params.p2;
    const cplx base = uses_j(m.kind) ? k + 0.5 * (al + be) : k + al;
    const cplx e2 = base * base;
    switch (m.kind) {
        case ManifoldKind::Hyperbolic:
            // family eigenvalue -(k+al)^2; operator value -(E + shift)
            return e2 - red.gauge_shift;
        case ManifoldKind::DeSitter:
            return red.gauge_shift - e2;
        case ManifoldKind::DoubleSphere:
            return red.gauge_shift - red.scale * e2;
        case ManifoldKind::Hyperboloid:
            return red.scale * e2 - red.gauge_shift;
        case ManifoldKind::ComplexHyperboloid:
            return red.gauge_shift - red.scale * e2;
        default:
            break;
    }
    throw SpecError("unknown manifold kind");
}

}  // namespace hypergreen
