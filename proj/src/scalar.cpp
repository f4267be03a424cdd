#include "wittex/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace wittex {

bool valid_radicand(long d) {
    if (d == 0 || d == 1) return false;
    mpz_class n = abs(mpz_class(d));
    if (n == 1) return true;  // d == -1
    for (mpz_class p = 2; p * p * p <= n; ++p) {
        if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) continue;
        n /= p;
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return false;
    }
    // The leftover cofactor is 1, a prime, a product of two distinct primes,
    // or the square of a prime; only the last is not squarefree.
    if (n == 1) return true;
    return mpz_perfect_square_p(n.get_mpz_t()) == 0;
}

Scalar::Scalar(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ != 0 && !valid_radicand(d_))
        throw NotSquarefree("invalid radicand " + std::to_string(d_) +
                            ": must be squarefree and distinct from 0 and 1");
    if (b_ == 0) d_ = 0;
}

void Scalar::normalize() {
    if (b_ == 0) d_ = 0;
}

namespace {

// Radicand of the extension containing both operands, or a throw.
long join_fields(const Scalar& x, const Scalar& y) {
    if (x.d() == 0) return y.d();
    if (y.d() == 0 || y.d() == x.d()) return x.d();
    throw IncompatibleField("cannot combine sqrt(" + std::to_string(x.d()) +
                            ") with sqrt(" + std::to_string(y.d()) + ")");
}

int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = join_fields(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = join_fields(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    long d = join_fields(*this, o);
    Rat na = a_ * o.a_ + b_ * o.b_ * Rat(d);
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (d_ == 0) return Scalar(Rat(1) / a_);
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d))/(a^2-b^2 d); the norm cannot vanish
    // because sqrt(d) is irrational.
    Rat norm = a_ * a_ - b_ * b_ * Rat(d_);
    return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

int Scalar::sign() const {
    if (d_ == 0) return rat_sign(a_);
    if (d_ < 0)
        throw DegenerateInput("no ordering on an imaginary quadratic extension");
    int sa = rat_sign(a_), sb = rat_sign(b_);
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
    int c = lhs < rhs ? -1 : 1;  // equality impossible: sqrt(d) is irrational
    return sa > 0 ? c : -c;
}

Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

int cmp(const Scalar& x, const Scalar& y) { return (x - y).sign(); }

Scalar factorial(unsigned long n) {
    mpz_class v;
    mpz_fac_ui(v.get_mpz_t(), n);
    return Scalar(v);
}

Scalar binomial(unsigned long n, unsigned long k) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), n, k);
    return Scalar(v);
}

Scalar scalar_pow(const Scalar& x, long e) {
    Scalar base = e < 0 ? x.inv() : x;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar r(1);
    while (n > 0) {
        if (n & 1ul) r *= base;
        n >>= 1ul;
        if (n) base *= base;
    }
    return r;
}

mpz_class floor_to_int(const Scalar& x) {
    if (x.is_rational()) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), x.a().get_num_mpz_t(), x.a().get_den_mpz_t());
        return q;
    }
    if (x.d() < 0)
        throw DegenerateInput("no floor on an imaginary quadratic extension");
    // High-precision estimate, then exact correction by sign tests.
    mpf_class fa(x.a(), 256), fb(x.b(), 256), fd(x.d(), 256);
    mpf_class est = fa + fb * sqrt(fd);
    mpz_class n;
    mpz_set_f(n.get_mpz_t(), mpf_class(floor(est)).get_mpf_t());
    while (cmp(x, Scalar(mpz_class(n + 1))) >= 0) ++n;
    while (cmp(x, Scalar(n)) < 0) --n;
    return n;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
};

mpz_class read_integer(Cursor& c, bool allow_sign) {
    bool neg = false;
    if (allow_sign && (c.peek() == '-' || c.peek() == '+')) {
        neg = c.peek() == '-';
        ++c.i;
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError("expected an integer", c.i);
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) digits += c.s[c.i++];
    mpz_class v(digits);
    return neg ? mpz_class(-v) : v;
}

mpz_class read_positive(Cursor& c, const char* what) {
    std::size_t at = c.i;
    mpz_class v = read_integer(c, false);
    if (v == 0) throw ParseError(std::string("zero ") + what, at);
    return v;
}

Scalar read_scalar(Cursor& c) {
    if ((c.peek() == '-' || c.peek() == '+') && c.i + 1 < c.s.size() &&
        c.s[c.i + 1] == '(') {
        // sign distributed over a parenthesized radical, e.g. -(5-sqrt(19))/2
        const bool neg = c.peek() == '-';
        ++c.i;
        const Scalar v = read_scalar(c);
        return neg ? -v : v;
    }
    if (c.peek() == '(') {
        ++c.i;
        mpz_class p = read_integer(c, true);
        char sg = c.peek();
        if (sg != '+' && sg != '-')
            throw ParseError("expected '+' or '-' before the radical part", c.i);
        ++c.i;
        mpz_class q = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            q = read_integer(c, false);
            c.expect('*');
        }
        if (c.s.substr(c.i, 4) != "sqrt") throw ParseError("expected 'sqrt'", c.i);
        c.i += 4;
        c.expect('(');
        std::size_t rad_at = c.i;
        mpz_class dz = read_integer(c, true);
        c.expect(')');
        c.expect(')');
        c.expect('/');
        mpz_class r = read_positive(c, "denominator");
        if (!dz.fits_slong_p()) throw ParseError("radicand out of range", rad_at);
        long d = dz.get_si();
        if (!valid_radicand(d))
            throw NotSquarefree("invalid radicand " + dz.get_str() +
                                ": must be squarefree and distinct from 0 and 1");
        if (sg == '-') q = -q;
        return Scalar(Rat(p, r), Rat(q, r), d);
    }
    mpz_class p = read_integer(c, true);
    if (c.eat('/')) {
        mpz_class r = read_positive(c, "denominator");
        return Scalar(Rat(p, r));
    }
    return Scalar(Rat(p));
}

}  // namespace

Scalar scalar_read(std::string_view text, std::size_t& pos) {
    Cursor c{text, pos};
    Scalar v = read_scalar(c);
    pos = c.i;
    return v;
}

Scalar scalar_parse(std::string_view text) {
    Cursor c{text, 0};
    c.skip_ws();
    Scalar v = read_scalar(c);
    c.skip_ws();
    if (c.i != text.size()) throw ParseError("trailing characters", c.i);
    return v;
}

std::string scalar_format(const Scalar& x) {
    if (x.is_rational()) return x.a().get_str();
    mpz_class q0 = x.a().get_den(), q1 = x.b().get_den();
    mpz_class r = lcm(q0, q1);
    mpz_class P = x.a().get_num() * (r / q0);
    mpz_class Q = x.b().get_num() * (r / q1);
    mpz_class g = gcd(gcd(P, Q), r);
    P /= g;
    Q /= g;
    r /= g;
    std::string s = "(" + P.get_str() + (Q < 0 ? "-" : "+");
    mpz_class qa = abs(Q);
    if (qa != 1) s += qa.get_str() + "*";
    s += "sqrt(" + std::to_string(x.d()) + "))/" + r.get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
    return os << scalar_format(x);
}

}  // namespace wittex
