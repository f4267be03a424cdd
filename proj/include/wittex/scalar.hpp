#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "wittex/error.hpp"

namespace wittex {

// Exact rational number.
using Rat = mpq_class;

// True when d is a valid quadratic radicand: d != 0, d != 1 and d squarefree.
bool valid_radicand(long d);

// An exact scalar: either a rational number or an element a + b*sqrt(d) of a
// quadratic extension of the rationals.
//
// Invariants:
//   * d() == 0  <=>  the value is rational; then b() == 0.
//   * d() != 0  =>   d() is squarefree, d() != 1, and b() != 0 (values whose
//                    irrational part cancels are demoted to rationals).
//
// Arithmetic between two irrational scalars with different radicands throws
// IncompatibleField.  Ordering (sign, cmp, floor) is defined for rationals
// and for real extensions (d > 0) and throws DegenerateInput for d < 0.
class Scalar {
  public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long n) : a_(n), b_(0), d_(0) {}
    Scalar(int n) : a_(n), b_(0), d_(0) {}
    Scalar(const mpz_class& n) : a_(n), b_(0), d_(0) {}
    Scalar(Rat r) : a_(std::move(r)), b_(0), d_(0) { a_.canonicalize(); }
    Scalar(Rat a, Rat b, long d);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && a_ == 0; }
    bool is_one() const { return d_ == 0 && a_ == 1; }
    bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }

    // Quadratic conjugate a - b*sqrt(d); identity on rationals.
    Scalar conj() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    // Multiplicative inverse; throws DivisionByZero on zero.
    Scalar inv() const;

    // -1, 0 or +1; requires a real value (rational or d > 0).
    int sign() const;

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  private:
    Rat a_, b_;
    long d_;
    void normalize();
};

Scalar operator+(Scalar x, const Scalar& y);
Scalar operator-(Scalar x, const Scalar& y);
Scalar operator*(Scalar x, const Scalar& y);
Scalar operator/(Scalar x, const Scalar& y);

// sign(x - y) for real scalars.
int cmp(const Scalar& x, const Scalar& y);

// n! and C(n, k) as exact scalars.
Scalar factorial(unsigned long n);
Scalar binomial(unsigned long n, unsigned long k);

// x^e for integer e (negative e inverts; throws DivisionByZero on 0^-e).
Scalar scalar_pow(const Scalar& x, long e);

// Largest integer <= x, for real scalars.
mpz_class floor_to_int(const Scalar& x);

// Parses the canonical textual forms:
//   rational:   INT | INT/POSINT                      e.g. "-3", "5/6"
//   quadratic:  (INT +/- [POSINT*]sqrt(INT))/POSINT   e.g. "(7+sqrt(19))/2"
// Whole-string match; leading/trailing ASCII whitespace is permitted.
// Throws ParseError (with byte offset) on malformed input and NotSquarefree
// on an invalid radicand.  Quadratic forms whose irrational part is zero
// parse to plain rationals.
Scalar scalar_parse(std::string_view text);

// Reads one scalar literal starting at `pos` inside a larger text and
// advances `pos` past it.  Used by parsers that embed scalar literals.
Scalar scalar_read(std::string_view text, std::size_t& pos);

// Canonical rendering; scalar_parse(scalar_format(x)) == x.
std::string scalar_format(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace wittex
