#pragma once

#include <map>
#include <vector>

#include "wittex/cocycle.hpp"

namespace wittex {

// A finite slice of a length-two extension module: basis vectors v_m, w_m for
// m = gamma + j with j in [-radius, radius], acted on by the generators e_k
// through
//   e_k v_m = (m + alpha k) v_{m+k}
//   e_k w_m = (m + beta k) w_{m+k} + tau(k, m) v_{m+k}.
// A basis shift w_m -> w_m + g(m) v_m is tracked exactly: it adds the
// coboundary of g to the structure function without affecting whether the
// bracket axiom holds.  Actions that would leave the slice are treated as
// undefined, never as zero, so checks only range over orbits that stay
// inside.  Instances are immutable once constructed.
class ModuleWindow {
  public:
    // radius >= 1 required
    ModuleWindow(const Cocycle& tau, long radius);

    const ExtensionParams& params() const { return tau_.params; }
    const Cocycle& tau() const { return tau_; }
    long radius() const { return radius_; }
    const std::map<long, Scalar>& shift() const { return shift_; }

    bool in_window(long offset) const {
        return -radius_ <= offset && offset <= radius_;
    }
    // The module index of a basis slot: gamma + offset.
    Scalar index(long offset) const;

    // Coefficient of v_{offset+k} in e_k v_offset.
    Scalar act_v(long k, long offset) const;
    // Coefficient of w_{offset+k} in e_k w_offset.
    Scalar act_w(long k, long offset) const;
    // Coefficient of v_{offset+k} in e_k w_offset, in the current basis:
    // tau(k, m) plus the coboundary of the accumulated shift.
    Scalar act_mixed(long k, long offset) const;

  private:
    Cocycle tau_;
    long radius_;
    std::map<long, Scalar> shift_;  // offset -> g(gamma + offset)

    friend ModuleWindow change_basis(const ModuleWindow& mw,
                                     const std::map<long, Scalar>& g);
};

// One failed instance of the bracket axiom
//   [e_k, e_s] x = (s - k) e_{k+s} x
// on a basis vector x whose orbit stays inside the window.
struct BracketViolation {
    long k = 0, s = 0;     // the acting pair
    long offset = 0;       // basis slot tested, module index gamma + offset
    char layer = 'v';      // which basis vector was tested: 'v' or 'w'
    char component = 'v';  // coefficient layer where the mismatch appears
    Scalar defect;         // commutator coefficient minus its target
};

// Checks the bracket axiom for all k, s in [-K, K] and every basis slot whose
// orbit under e_k, e_s, e_{k+s} stays inside the window.  Empty result means
// no violation; on the tested range this is equivalent to the structure
// function having zero residual.  Requires 1 <= K and 2K <= radius so that
// composed actions stay in range (WindowTooSmall otherwise).
std::vector<BracketViolation> bracket_check(const ModuleWindow& mw, long K);

// The window module in the shifted basis w_m -> w_m + g(m) v_m, with g given
// per offset (absent keys mean zero).  Shifts compose additively; the bracket
// axiom is unaffected.
ModuleWindow change_basis(const ModuleWindow& mw, const std::map<long, Scalar>& g);

// Semidirect product of the Virasoro algebra span{L(k), c1} with a weight
// module V = span{W(m), c2, c3}:
//   [L(k), L(m)] = (m - k) L(k+m) + delta_{k+m,0} (k^3 - k)/12 c1
//   [L(k), W(m)] = (m + beta k) W(k+m) + delta_{k+m,0} mu(k) c2
//   [W(k), W(m)] = 0                      (abelian V)
//                  delta_{k+m,0} k c3     (Heisenberg V)
// with every central element bracketing to zero.  Whether the result is a
// Lie algebra depends on (beta, mu, abelian); jacobi_check decides.
struct CurrentAlgebra {
    Scalar beta;
    UPoly mu;             // central structure function in [L(k), W(-k)]
    bool abelian = true;  // V abelian, else Heisenberg
    long radius = 6;      // default index range for checks
};

// A formal element: a finite span of the L(n), W(n) and the three central
// elements.  Maps hold no explicit zero entries.
struct CAElement {
    std::map<long, Scalar> L, W;
    Scalar c1, c2, c3;

    bool is_zero() const;
    CAElement& operator+=(const CAElement& o);
    friend CAElement operator+(CAElement x, const CAElement& y) { return x += y; }
    friend bool operator==(const CAElement& x, const CAElement& y) {
        return x.L == y.L && x.W == y.W && x.c1 == y.c1 && x.c2 == y.c2 &&
               x.c3 == y.c3;
    }
    friend bool operator!=(const CAElement& x, const CAElement& y) {
        return !(x == y);
    }
};

CAElement ca_scale(const Scalar& c, const CAElement& x);
CAElement ca_L(long n);
CAElement ca_W(long n);

// The bilinear bracket of the algebra.
CAElement ca_bracket(const CurrentAlgebra& ca, const CAElement& x, const CAElement& y);

struct GenRef {
    char type = 'L';  // 'L' or 'W'
    long index = 0;
};

// A generator triple whose Jacobi sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
// is nonzero, together with that sum.
struct JacobiViolation {
    GenRef x, y, z;
    CAElement defect;
};

// Evaluates the Jacobi identity on every triple of generators L(i), W(j)
// with indices in [-K, K], tracking central contributions exactly.  Central
// generators bracket to zero with everything and are skipped.  Requires
// K >= 2 (DegenerateInput otherwise).
std::vector<JacobiViolation> jacobi_check(const CurrentAlgebra& ca, long K);

struct RescaleViolation {
    long k = 0, m = 0;
    CAElement defect;
};

// The rescaled basis I(m) = m W(m), available when beta = 1: compares
// [L(k), I(m)] computed in ca against the bracket of the algebra with
// beta' = 0 and mu'(k) = -k mu(k) expressed through the same identification,
// for all k, m in [-K, K].  Empty for every beta = 1 algebra; the index-0
// vector W(0) is invisible through the identification since I(0) = 0.
// Requires beta = 1 (DegenerateInput otherwise).
std::vector<RescaleViolation> index_rescale_check(const CurrentAlgebra& ca, long K);

}  // namespace wittex
