#pragma once

#include <vector>

#include "wittex/linalg.hpp"
#include "wittex/poly.hpp"

namespace wittex {

// Weight-homogeneous operator between index-graded modules: sends the basis
// vector indexed m to
//     poly(m) * u_{m + weight}   plus   delta * u_0   when m + weight == 0.
// The source module carries the trivial weight; the target weight alpha is
// supplied to the actions below.
struct WeightOp {
    long weight = 0;
    UPoly poly;             // polynomial in the source index m
    Scalar delta = Scalar(0);

    friend bool operator==(const WeightOp& x, const WeightOp& y) {
        return x.weight == y.weight && x.poly == y.poly && x.delta == y.delta;
    }
    friend bool operator!=(const WeightOp& x, const WeightOp& y) { return !(x == y); }
};

// Commutator action of the degree-k vector-field generator on a weight
// operator, for target weight alpha:
//     poly'(m) = (m + weight + alpha*k) * poly(m) - m * poly(m + k),
//     weight'  = weight + k,
//     delta'   = (weight + k) * delta.
// A nonzero delta mass only transforms within this family when alpha == 0 or
// k == 0; otherwise DegenerateInput is thrown.
WeightOp act_witt(long k, const WeightOp& op, const Scalar& alpha);

// Precomposition with the index shift by l:
//     poly'(m) = poly(m + l),  weight' = weight + l,  delta' = delta.
WeightOp act_shift(long l, const WeightOp& op);

// The standard graded family theta^(p)_j: weight j, poly (m+j)^p / p!.
WeightOp theta_op(unsigned p, long j);

// Closed form of act_witt(k, theta_op(p, j), alpha) as coefficients over the
// basis theta^(0)_{j+k} ... theta^(p)_{j+k}:
//   coeff[i] = (-1)^(p-i)/(p+1-i)! * ((p+1-i)*alpha - (p+1)) * k^(p+1-i)  (i < p)
//   coeff[p] = j + (alpha - p)*k
std::vector<Scalar> theta_act_closed(long k, unsigned p, long j, const Scalar& alpha);

// A finite combination of composite generators t^a e_b.
struct ComboTerm {
    Scalar coeff;
    long a_power;   // exponent of the multiplication operator
    long e_index;   // degree of the vector-field generator
};
struct DiffOpCombo {
    std::vector<ComboTerm> terms;
};

bool combo_equal(const DiffOpCombo& x, const DiffOpCombo& y);

// The ladder operators used by the weight-operator calculus:
//   z_n = sum_{i=0}^{n+1} (-1)^i C(n+1, i) t^(i-1) e_(1-i)
//   y_n = sum_{i=0}^{n}   (-1)^i C(n, i)   t^i     e_(-i)
DiffOpCombo z_op(unsigned n);
DiffOpCombo y_op(unsigned n);

// Applies each term as shift(a_power) after witt(e_index) and sums.  All
// terms must shift the weight by the same amount (else DegenerateInput).
WeightOp apply_combo(const DiffOpCombo& c, const WeightOp& op, const Scalar& alpha);

// --- the epsilon/eta symbol pair of the length-two extension -----------------

// A combination  eps * eps_{index} + eta * eta_{index}.
struct EpsEtaElem {
    Scalar eps = Scalar(0), eta = Scalar(0);
    long index = 0;
};

// Action of the degree-k generator, for extension weight beta:
//   e_k . eps_j = (j + beta*k) eps_{j+k}
//   e_k . eta_j = (j + (beta-1)*k) eta_{j+k} - (beta-1)*k^2 eps_{j+k}
EpsEtaElem act_eps_eta(long k, const EpsEtaElem& x, const Scalar& beta);

// The canonical pairing value phi(e_k, w_j) = beta*eta_{j+k} + (1-beta)*j*eps_{j+k}.
EpsEtaElem phi_pairing(long k, long j, const Scalar& beta);

// --- finite-dimensional bracket-relation check -------------------------------

struct RhoViolation {
    unsigned i, j;  // generator pair whose bracket relation fails
};

// For a coefficient vector c = (c_0 ... c_{n-1}) builds the operators A_i on
// the basis (theta^(0), ..., theta^(n-1), eps):
//   A_1: theta^(p) -> (alpha - p) theta^(p),  eps -> beta*eps + c_{n-1} theta^(n-1)
//   A_i (i >= 2): theta^(p) -> (-1)^(i-1) (i*alpha - (p+1)) theta^(p+1-i)
//                 eps -> i! c_{n-i} theta^(n-i)
// (maps to out-of-range basis elements are zero) and returns every pair
// 1 <= i < j <= n+1 with [A_i, A_j] != (j - i) A_{i+j-1}.
std::vector<RhoViolation> rho_check(const std::vector<Scalar>& c, const Scalar& alpha,
                                    const Scalar& beta);

}  // namespace wittex
