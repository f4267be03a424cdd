#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wittex/cocycle.hpp"
#include "wittex/linalg.hpp"

namespace wittex {

// A homogeneous linear system with labelled unknowns: the matrix rows are the
// equations, all right-hand sides are zero.
struct LinSystem {
    PolyMat<MPoly> matrix;
    std::vector<std::string> unknowns;
};

// The full residual system of the homogeneous degree-n polynomial ansatz
//   tau = sum_{a=0}^{n} c_a k^(n-a) m^a
// with both weights symbolic: one row per monomial k^i s^j m^l of total
// degree n+1 (all of them, in deterministic order), one column per unknown
// c_a, entries polynomial in alpha and beta.  tau is a cocycle at a weight
// pair exactly when its coefficient vector lies in the null space of the
// specialized matrix.
LinSystem residual_system(unsigned n);

// Reduced relations on graded-basis coordinates c_0 .. c_{n-1}, where
//   tau = sum_i c_i k^(n-i) (m+k)^i / i!
// (see theta_to_poly).  Two families, both consequences of the residual
// system for k-divisible tau:
//   triangular, rows i = 2 .. n:
//     i! (alpha - beta - (n-1)) c_{n-i} + (-1)^i (i alpha - n) c_{n-1} = 0
//   chain, rows 2 <= i < j with i + j <= n + 1:
//     (i+j-1)! (j-i) c_{n-i-j+1}
//       - j! (-1)^(i-1) (i alpha - (n-j+1)) c_{n-j}
//       + i! (-1)^(j-1) (j alpha - (n-i+1)) c_{n-i} = 0.
// Every solution of residual_system satisfies them after the coordinate
// change; the converse can fail, so this is a cross-check on completeness of
// the full solve, not a replacement for it.  Requires n >= 2.
LinSystem lemmaAB_system(unsigned n);

// Basis of the space of homogeneous degree-n polynomial cocycles at fixed
// weights: the exact null space of residual_system specialized at
// (alpha, beta).  Deterministic basis order.
std::vector<Cocycle> poly_cocycle_space(unsigned n, const ExtensionParams& params);

// Cocycles modulo trivial functions in one homogeneous polynomial degree.
struct H1Report {
    unsigned n = 0;
    ExtensionParams params{Scalar(0), Scalar(0)};
    unsigned cocycle_space_dim = 0;
    unsigned coboundary_space_dim = 0;  // 0 or 1 in a fixed degree
    unsigned h1_dim = 0;                // cocycle_space_dim - coboundary_space_dim
    // h1_dim many cocycles spanning a complement of the coboundary line,
    // pairwise inequivalent, first nonzero coefficient (in descending
    // k-degree order) normalized to 1.
    std::vector<Cocycle> representatives;
};

H1Report h1_poly(unsigned n, const ExtensionParams& params);

// One weight on a scanned line where the quotient dimension exceeds the
// generic value.
struct SpecialPoint {
    Scalar alpha;
    unsigned h1_dim = 0;
    std::vector<Cocycle> representatives;
};

// Classification of one line beta = alpha - offset with alpha left symbolic.
struct LineScan {
    unsigned n = 0;
    long offset = 0;
    unsigned generic_h1_dim = 0;
    // Symbolic representatives (polynomials in k, m, alpha) of the generic
    // quotient classes, primitive with sign-normalized leading coefficient.
    std::vector<MPoly> generic_classes;
    // Verified dimension jumps, in candidate-discovery order.
    std::vector<SpecialPoint> special;
    // Candidate factors whose roots have no exact closed form; reported, not
    // silently dropped.  Empty in every degree reached here.
    std::vector<UPoly> unresolved;
};

// Classifies homogeneous degree-n polynomial cocycles with the weight kept
// symbolic.  For n <= 2 every integer offset alpha - beta in {0, .., n-1} is
// scanned.  For n >= 3 the scan first proves symbolically that the quotient
// vanishes identically away from offset n-1 (ConsistencyError if the
// underlying identities fail) and then scans that single line.  Candidate
// special weights are the exact roots of pivot minors of the fraction-free
// elimination, sharpened through seeded randomized re-eliminations and the
// content of the coboundary-generator image; every candidate is confirmed or
// rejected by an exact fixed-weight solve, so the result does not depend on
// the seed.  Requires 1 <= n <= 14.
std::vector<LineScan> parametric_scan(unsigned n, std::uint64_t seed = 0x5eedb015u);

// Fully reduced obstruction rows of the chain relations on the line
// beta = alpha - (n-1) with c_{n-1} = 0: after eliminating the chain columns
// the rows indexed i = 1 .. n-5 couple only c_{n-3} and c_{n-2},
//   bp * c_{n-3} + b * c_{n-2} = 0,
// so a nontrivial class in degree n >= 6 forces every bp and b to vanish at
// the weight.  Entries are univariate polynomials in alpha.  Requires n >= 6.
struct ObstructionRow {
    UPoly bp;  // coefficient of c_{n-3}
    UPoly b;   // coefficient of c_{n-2}
};
std::vector<ObstructionRow> obstruction_rows(unsigned n);

// Classifies point-mass functions tau = delta_{k+m,0} f(k) with f = k^d,
// d <= max_deg, on the integral lattice at alpha = 0 (the weight pair where
// such functions can be equivariant at all).  For each degree the defining
// identity is solved in (k, s) with beta parametric; surviving values of
// beta yield classes, and those killed by the point-mass coboundary
// generator are dropped.  Deterministic order: degree ascending.
std::vector<Cocycle> delta_km_scan(unsigned max_deg);

// Mirror classification of tau = delta_{m,0} f(k) at beta = 1 with alpha
// parametric.
std::vector<Cocycle> delta_m0_scan(unsigned max_deg);

// Independent check of delta_m0_scan in one weight: solves the defining
// identity directly on the window mu(1 .. upto), then regenerates every
// solution from its first two values through the k = 1 recurrence
//   (q - 1) mu(q+1) = (q + alpha) mu(q) - (1 + q alpha) mu(1)
// and fits the least polynomial degree bounding all solutions.
struct RecurrenceReport {
    Scalar alpha;
    unsigned upto = 0;
    unsigned solution_dim = 0;        // dimension of the direct window solve
    int max_poly_degree = -1;         // least uniform fit degree, -1 if no solutions
    bool recurrence_matches = false;  // recurrence regenerates every solution
};

RecurrenceReport recurrence_check(const Scalar& alpha, unsigned upto);

// Classes with a 1/m part at quotient weight beta = 1: lifts each nontrivial
// polynomial class mu at (alpha, 0) to the candidate mu(k,m)/m at
// (alpha, 1) on the half-integral index lattice, and keeps the lifts that
// carry a genuine 1/m component, pass the windowed residual check and are
// not killed by the inverse-index coboundary generator.  The 1/m component
// of each returned class is monic.
std::vector<Cocycle> invm_classes();

}  // namespace wittex
