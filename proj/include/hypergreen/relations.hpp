#pragma once

#include "hypergreen/hyp.hpp"
#include "hypergreen/scalar.hpp"

namespace hypergreen {

enum class RelationKind {
    con2,          // reflected argument expressed in the solution basis at z
    con2b,         // companion reflected-argument expansion
    reqdes_pair,   // both expansions in the reflected basis
    con_minus1,    // first inverse-argument solution in the basis at z
    con_minus2,    // second inverse-argument solution in the basis at z
    popo_pair,     // basis at z expressed through both inverse-argument solutions
    gegencon,      // second-kind Gegenbauer through both first-kind solutions
    gegencon2,     // first-kind Gegenbauer reflection w -> -w
    whipple,       // kind swap under w -> w/sqrt(w^2-1)
    degen,         // positive-integer index degeneration
    half_integer,  // trigonometric reductions and Chebyshev cases, k = 1..8
};

struct Relation {
    RelationKind kind;
    int k = 0;
};

// Relative defect |lhs - rhs| / (1 + |lhs|) of the selected identity, both
// sides evaluated independently. For pair kinds the larger defect of the
// two identities is returned.
double connection_residual(Relation rel, const HypParams& p, cplx z);

// One of the 24 classical solution expressions, grouped in six rows of four
// equal representations; row in 1..6, col in 0..3.
cplx kummer_expression(int row, int col, const HypParams& p, cplx z);

}  // namespace hypergreen
