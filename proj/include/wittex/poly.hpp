#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wittex/scalar.hpp"

namespace wittex {

// The fixed variable set used throughout the library.  k and s index Witt
// generators, m indexes module basis vectors, alpha and beta are module
// weights kept symbolic in parametric computations, and x is a scratch
// variable (generator arguments, change-of-coordinates collection).
enum class Var : int { K = 0, S = 1, M = 2, ALPHA = 3, BETA = 4, X = 5 };

inline constexpr int kNumVars = 6;

const char* var_name(Var v);

// Exponent vector of a monomial, indexed by Var.
using Expo = std::array<std::uint16_t, kNumVars>;

// Sparse multivariate polynomial over exact scalars, with deterministic
// (lexicographic) term order.
class MPoly {
  public:
    MPoly() = default;
    MPoly(const Scalar& c);
    MPoly(long n) : MPoly(Scalar(n)) {}
    MPoly(int n) : MPoly(Scalar(n)) {}

    static MPoly var(Var v, unsigned exponent = 1);
    static MPoly monomial(const Scalar& c, const Expo& e);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant term (zero if absent); with is_constant(), the value.
    Scalar constant_term() const;

    const std::map<Expo, Scalar>& terms() const { return terms_; }

    int degree(Var v) const;       // -1 for the zero polynomial
    int total_degree() const;      // -1 for the zero polynomial

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Scalar& c);

    MPoly pow(unsigned e) const;

    // Simultaneous substitution of polynomials for variables.  Variables not
    // in the map are left alone.
    MPoly substitute(const std::map<Var, MPoly>& repl) const;

    // Full evaluation.  Every variable occurring in the polynomial must be
    // bound, otherwise DegenerateInput is thrown.
    Scalar eval(const std::map<Var, Scalar>& point) const;

    // Coefficient of v^e, as a polynomial in the remaining variables.
    MPoly coeff_of(Var v, unsigned e) const;

    // Terms whose total degree in the given variables is d, unchanged.
    MPoly homogeneous_component(unsigned d, std::initializer_list<Var> vars) const;

    friend bool operator==(const MPoly& x, const MPoly& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const MPoly& x, const MPoly& y) { return !(x == y); }

  private:
    std::map<Expo, Scalar> terms_;  // invariant: no zero coefficients stored
    void put(const Expo& e, const Scalar& c);
};

MPoly operator+(MPoly x, const MPoly& y);
MPoly operator-(MPoly x, const MPoly& y);
MPoly operator*(MPoly x, const MPoly& y);
MPoly operator*(MPoly x, const Scalar& c);
MPoly operator*(const Scalar& c, MPoly x);

// Exact division; throws DivisionByZero on zero divisor and DegenerateInput
// if the division leaves a remainder.
MPoly divexact(const MPoly& num, const MPoly& den);

// Groups terms by their exponents in `vars`: the key keeps only those
// exponents, the value collects the cofactors in the remaining variables.
std::map<Expo, MPoly> group_by_vars(const MPoly& p, std::initializer_list<Var> vars);

// Text form, e.g. "12*k^6 - 22*k^5*m + (7+sqrt(19))/2*m^6 - 3".  Terms are
// ordered lexicographically descending in (k, s, m, alpha, beta, x).
std::string mpoly_format(const MPoly& p);

// Parses the mpoly_format grammar:
//   poly   := ["-"] term (("+"|"-") term)*
//   term   := coeff | coeff "*" factors | factors
//   factor := name | name "^" UINT       (names: k s m alpha beta x)
//   coeff  := scalar literal (see scalar_parse)
MPoly mpoly_parse(std::string_view text);

// Dense univariate polynomial, coefficients low-degree first.
class UPoly {
  public:
    UPoly() = default;
    UPoly(const Scalar& c);
    UPoly(long n) : UPoly(Scalar(n)) {}
    UPoly(int n) : UPoly(Scalar(n)) {}
    explicit UPoly(std::vector<Scalar> coeffs);

    static UPoly monomial(const Scalar& c, unsigned e);
    static UPoly x();  // the identity polynomial

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& leading() const;
    Scalar coeff(unsigned e) const;       // zero beyond the degree
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar eval(const Scalar& x) const;
    UPoly derivative() const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Scalar& c);

    friend bool operator==(const UPoly& x, const UPoly& y) { return x.c_ == y.c_; }
    friend bool operator!=(const UPoly& x, const UPoly& y) { return !(x == y); }

  private:
    std::vector<Scalar> c_;  // invariant: leading coefficient nonzero
    void trim();
};

UPoly operator+(UPoly x, const UPoly& y);
UPoly operator-(UPoly x, const UPoly& y);
UPoly operator*(UPoly x, const UPoly& y);
UPoly operator*(UPoly x, const Scalar& c);
UPoly operator*(const Scalar& c, UPoly x);

// Quotient and remainder over the coefficient field.
struct UDivMod {
    UPoly quot, rem;
};
UDivMod divmod(const UPoly& num, const UPoly& den);

// Exact division; throws DegenerateInput if a remainder is left.
UPoly divexact(const UPoly& num, const UPoly& den);

// Greatest common divisor.  For rational coefficients the result is the
// primitive integer gcd with positive leading coefficient; otherwise it is
// monic.  gcd(0, 0) == 0.
UPoly upoly_gcd(UPoly a, UPoly b);

// Squarefree part p / gcd(p, p').
UPoly squarefree_part(const UPoly& p);

// Composition p(q(x)).
UPoly upoly_compose(const UPoly& p, const UPoly& q);

// p(x + c), the argument shift used by index-translation actions.
UPoly upoly_shift(const UPoly& p, const Scalar& c);

// Exact roots of p.  Rational roots are found for any rational-coefficient
// polynomial; degree <= 2 factors are solved in closed form (quadratic
// irrationalities included).  Factors that cannot be resolved exactly are
// returned in `unresolved`.  The zero polynomial is rejected
// (DegenerateInput).
struct RootSet {
    std::vector<Scalar> roots;        // distinct, deterministic order
    std::vector<UPoly> unresolved;    // squarefree factors of degree >= 3
};
RootSet solve_upoly(const UPoly& p);

// Conversions between the univariate and multivariate representations.
MPoly to_mpoly(const UPoly& p, Var v);
// Throws DegenerateInput if p involves a variable other than v.
UPoly to_upoly(const MPoly& p, Var v);

}  // namespace wittex
