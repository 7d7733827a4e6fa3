#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hypergreen/scalar.hpp"

namespace hypergreen {

using PotentialFn = std::function<cplx(double)>;

// Uniform grid on [a, b] with a margin of clamp*(b-a) excluded at each
// end; singular or truncated endpoints both live outside the margin.
struct Grid {
    double a;
    double b;
    int n;
    double clamp;

    void validate() const;
    double lo() const { return a + clamp * (b - a); }
    double hi() const { return b - clamp * (b - a); }
    double h() const { return (hi() - lo()) / (n - 1); }
};

enum class BoundaryKind {
    decay_exponent,  // |x - end|^nu leading behavior at a finite endpoint
    decay_rate,      // e^{-lambda |x|} behavior at a truncated infinite endpoint
};

struct BoundaryBehavior {
    BoundaryKind kind;
    cplx value;
};

// Resolvent kernel of -d^2/dx^2 + V - z by second-order marching from both
// endpoints with seeded leading behavior, combined through the numeric
// Wronskian; (x, y) snap to grid nodes.
cplx fd_green(const PotentialFn& potential, const Grid& grid, const BoundaryBehavior& bc_a,
              const BoundaryBehavior& bc_b, cplx z, double x, double y);

enum class MarchFrom { left, right };

using ValueDeriv = std::pair<cplx, cplx>;
using OdeFn = std::function<ValueDeriv(double)>;

// Adaptive integration of -phi'' + (V - z) phi = 0 from the anchor
// endpoint toward x, seeded with the stated boundary behavior; returns
// (value, derivative).  For decay_exponent seeds the anchor is the
// singular endpoint itself and integration starts a fixed small offset
// inside; for decay_rate seeds it starts exactly at the anchor.
ValueDeriv ode_solution(const PotentialFn& potential, cplx z, MarchFrom from,
                        const BoundaryBehavior& seed, double anchor, double x);

cplx numeric_wronskian(const OdeFn& f1, const OdeFn& f2, double x);

// Lowest `count` eigenvalues of the discretized operator.  Real-valued
// potentials use the symmetric tridiagonal path, with an energy-consistent
// one-sided closure where a decay_exponent behavior is supplied;
// complex-valued potentials use the dense Hessenberg path (n <= 2048).
std::vector<cplx> fd_spectrum(const PotentialFn& potential, const Grid& grid, int count,
                              std::optional<BoundaryBehavior> bc_a = std::nullopt,
                              std::optional<BoundaryBehavior> bc_b = std::nullopt);

}  // namespace hypergreen
