#pragma once

#include <string>
#include <vector>

#include "wittex/linalg.hpp"
#include "wittex/poly.hpp"

namespace wittex {

// Parameters of a length-two extension of index-graded modules: submodule
// weight alpha, quotient weight beta, common index offset gamma (indices run
// over gamma + Z).  gamma is normalized into [0, 1).
struct ExtensionParams {
    Scalar alpha, beta, gamma;

    ExtensionParams(Scalar a, Scalar b, Scalar g = Scalar(0));

    bool gamma_integral() const { return gamma.is_zero(); }

    friend bool operator==(const ExtensionParams& x, const ExtensionParams& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma;
    }
    friend bool operator!=(const ExtensionParams& x, const ExtensionParams& y) {
        return !(x == y);
    }
};

enum class CocycleKind { Zero, Poly, DeltaKM, DeltaM0, InvM, Mixed };

const char* kind_name(CocycleKind k);

// A structure-constant function tau(k, m) stored by components:
//   tau(k,m) = poly(k,m)
//            + invm(k)/m        (taken as 0 at m = 0)
//            + invk(k)/(m+k)    (taken as 0 at m = -k)
//            + dkm(k)  when k+m == 0
//            + dm0(k)  when m == 0
// k ranges over the integers, m over gamma + Z.  The invk component never
// appears in serialized data; it arises internally as the dual image of an
// invm component.
struct Cocycle {
    ExtensionParams params;
    MPoly poly;   // in k, m only
    UPoly invm;
    UPoly invk;
    UPoly dkm;
    UPoly dm0;

    explicit Cocycle(ExtensionParams p) : params(std::move(p)) {}

    CocycleKind kind() const;
    bool is_zero() const;

    friend bool operator==(const Cocycle& x, const Cocycle& y) {
        return x.params == y.params && x.poly == y.poly && x.invm == y.invm &&
               x.invk == y.invk && x.dkm == y.dkm && x.dm0 == y.dm0;
    }
    friend bool operator!=(const Cocycle& x, const Cocycle& y) { return !(x == y); }
};

// Convenience constructors.
Cocycle make_poly_cocycle(ExtensionParams p, MPoly tau);
Cocycle make_delta_km(ExtensionParams p, UPoly f);
Cocycle make_delta_m0(ExtensionParams p, UPoly f);
// tau(k,m) = mu(k,m)/m off m = 0 and at_zero(k) at m = 0 (mu polynomial in
// k, m); decomposed into poly + invm + dm0 components.  Requires that m = 0
// not be a pole, i.e. mu is polynomial (always true here).
Cocycle make_inv_m(ExtensionParams p, const MPoly& mu, const UPoly& at_zero);

// Exact value tau(k, m); m must lie in gamma + Z.
Scalar cocycle_eval(const Cocycle& c, long k, const Scalar& m);

// The extension identity residual, symbolically, for polynomial tau in
// (k, m) and arbitrary polynomial weights:
//   (s-k) tau(k+s,m) - (m+beta*s) tau(k,m+s) + (m+beta*k) tau(s,m+k)
//   - (m+s+alpha*k) tau(s,m) + (m+k+alpha*s) tau(k,m)
// A cocycle is exactly a tau with vanishing residual.
MPoly residual_poly(const MPoly& tau, const MPoly& alpha, const MPoly& beta);

struct ResidualViolation {
    long k, s, t;   // evaluated at m = gamma + t
    Scalar value;
};

// Evaluates the residual on the finite window k, s, t in [-window, window]
// (m = gamma + t) and reports every nonzero value.  window >= 1 required.
std::vector<ResidualViolation> residual_window(const Cocycle& c, long window);

// A generator of trivial structure-constant functions: a polynomial g acting
// through  tau_g(k,m) = (m + alpha*k) g(m) - (m + beta*k) g(m+k),  plus an
// optional mass term delta_g available only at (alpha, beta) = (0, 1) with
// integral gamma, contributing delta_g * (delta_{k+m,0} - delta_{m,0}).
struct CoboundaryGen {
    UPoly poly_g;              // in the index variable
    Scalar delta_g = Scalar(0);
};

Cocycle coboundary(const ExtensionParams& p, const CoboundaryGen& gen);

// True when c1 = c * c2 + (trivial function) for some scalar c != 0.  The
// trivial functions quotiented out are spanned by polynomial generators, the
// inverse-index generator and (for integral gamma) the point-mass generator.
bool equivalent(const Cocycle& c1, const Cocycle& c2);

// Shorthand for equivalence with the zero function.
bool is_trivial(const Cocycle& c);

// The dual cocycle  tau^(k, m) = tau(k, -m-k)  at parameters
// (1 - beta, 1 - alpha, -gamma).  An involution; duals of valid cocycles are
// valid at the dual parameters.
Cocycle dualize(const Cocycle& c);

// Graded-basis coordinates: a coefficient vector (c_0 ... c_{n-1}) denotes
//   tau(k, m) = sum_i c_i k^(n-i) (m+k)^i / i!.
MPoly theta_to_poly(const std::vector<Scalar>& coeffs);

// Inverse transform: coefficients C_i = i! [x^i] tau(k, x - k) for i = 0..n,
// as polynomials in k.  For tau in the image of theta_to_poly with top
// degree n, C_i == c_i k^(n-i) for i < n and C_n == 0.
std::vector<MPoly> poly_to_theta(const MPoly& tau, unsigned n);

}  // namespace wittex
