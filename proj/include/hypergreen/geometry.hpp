#pragma once

#include "hypergreen/families.hpp"

namespace hypergreen {

enum class ManifoldKind { Sphere, Hyperbolic, DeSitter, DoubleSphere, Hyperboloid, ComplexHyperboloid };

// A symmetric space together with the harmonic degrees of the angular
// separation; d is used by the single-parameter kinds, (p, q) by the
// two-sheet kinds, p alone by the complex hyperboloid.
struct ManifoldSpec {
    ManifoldKind kind;
    int d = 0;
    int p = 0;
    int q = 0;
    int l = 0;
    int j = 0;
};

// Radial reduction of the (pseudo-)Laplacian: the Hamiltonian family with
// its parameters, the additive gauge constant, and the factor picked up
// when the radial coordinate is halved.
struct Reduction {
    FamilyParams params;
    cplx gauge_shift;
    double scale = 1.0;
};

Reduction reduce(const ManifoldSpec& m);

// Eigenvalue of the manifold operator reconstructed from the k-th member
// (k a positive half-odd-integer index) of the reduced family's spectrum;
// exact integer arithmetic for the sphere.
cplx manifold_eigenvalue(const ManifoldSpec& m, double k);

}  // namespace hypergreen
