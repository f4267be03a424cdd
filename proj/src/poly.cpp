#include "wittex/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

namespace wittex {

const char* var_name(Var v) {
    switch (v) {
        case Var::K: return "k";
        case Var::S: return "s";
        case Var::M: return "m";
        case Var::ALPHA: return "alpha";
        case Var::BETA: return "beta";
        case Var::X: return "x";
    }
    return "?";
}

// ---------------------------------------------------------------- MPoly ----

MPoly::MPoly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Expo{}, c);
}

MPoly MPoly::var(Var v, unsigned exponent) {
    MPoly p;
    if (exponent == 0) return MPoly(Scalar(1));
    Expo e{};
    e[static_cast<int>(v)] = static_cast<std::uint16_t>(exponent);
    p.terms_.emplace(e, Scalar(1));
    return p;
}

MPoly MPoly::monomial(const Scalar& c, const Expo& e) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
}

Scalar MPoly::constant_term() const {
    auto it = terms_.find(Expo{});
    return it == terms_.end() ? Scalar(0) : it->second;
}

int MPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, int(e[static_cast<int>(v)]));
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MPoly::put(const Expo& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) put(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) put(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    MPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Expo e;
            for (int i = 0; i < kNumVars; ++i)
                e[i] = static_cast<std::uint16_t>(e1[i] + e2[i]);
            r.put(e, c1 * c2);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

MPoly& MPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(Scalar(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& repl) const {
    MPoly out;
    for (const auto& [e, c] : terms_) {
        MPoly term(c);
        Expo kept{};
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            auto it = repl.find(static_cast<Var>(i));
            if (it == repl.end())
                kept[i] = e[i];
            else
                term *= it->second.pow(e[i]);
        }
        term *= MPoly::monomial(Scalar(1), kept);
        out += term;
    }
    return out;
}

Scalar MPoly::eval(const std::map<Var, Scalar>& point) const {
    Scalar total(0);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(static_cast<Var>(i));
            if (it == point.end())
                throw DegenerateInput(std::string("unbound variable ") +
                                      var_name(static_cast<Var>(i)) + " in evaluation");
            for (unsigned j = 0; j < e[i]; ++j) term *= it->second;
        }
        total += term;
    }
    return total;
}

MPoly MPoly::coeff_of(Var v, unsigned e) const {
    MPoly r;
    int vi = static_cast<int>(v);
    for (const auto& [ex, c] : terms_) {
        if (ex[vi] != e) continue;
        Expo reduced = ex;
        reduced[vi] = 0;
        r.put(reduced, c);
    }
    return r;
}

MPoly MPoly::homogeneous_component(unsigned d, std::initializer_list<Var> vars) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        unsigned total = 0;
        for (Var v : vars) total += e[static_cast<int>(v)];
        if (total == d) r.put(e, c);
    }
    return r;
}

MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
MPoly operator*(MPoly x, const MPoly& y) { return x *= y; }
MPoly operator*(MPoly x, const Scalar& c) { return x *= c; }
MPoly operator*(const Scalar& c, MPoly x) { return x *= c; }

MPoly divexact(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly q, r = num;
    const auto& dterms = den.terms();
    auto dlead = std::prev(dterms.end());
    while (!r.is_zero()) {
        auto rlead = std::prev(r.terms().end());
        Expo diff;
        for (int i = 0; i < kNumVars; ++i) {
            if (rlead->first[i] < dlead->first[i])
                throw DegenerateInput("inexact polynomial division");
            diff[i] = static_cast<std::uint16_t>(rlead->first[i] - dlead->first[i]);
        }
        MPoly t = MPoly::monomial(rlead->second / dlead->second, diff);
        q += t;
        r -= t * den;
    }
    return q;
}

std::map<Expo, MPoly> group_by_vars(const MPoly& p, std::initializer_list<Var> vars) {
    std::map<Expo, MPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        Expo key{};
        Expo rest = e;
        for (Var v : vars) {
            int i = static_cast<int>(v);
            key[i] = e[i];
            rest[i] = 0;
        }
        groups[key] += MPoly::monomial(c, rest);
    }
    return groups;
}

// ------------------------------------------------------- MPoly text form ----

namespace {

std::string format_monomial(const Expo& e) {
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(static_cast<Var>(i));
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string mpoly_format(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Scalar& c = it->second;
        std::string mono = format_monomial(it->first);
        // Pull a leading minus out of rational coefficients; quadratic
        // coefficients always render parenthesized and join with '+'.
        bool negative = c.is_rational() && c.sign() < 0;
        Scalar shown = negative ? -c : c;
        std::string cs = scalar_format(shown);
        std::string body;
        if (mono.empty())
            body = cs;
        else if (shown.is_one())
            body = mono;
        else
            body = cs + "*" + mono;
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

namespace {

struct PCursor {
    std::string_view s;
    std::size_t i = 0;
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
};

bool read_var(PCursor& c, Var& out) {
    static const std::pair<const char*, Var> names[] = {
        {"alpha", Var::ALPHA}, {"beta", Var::BETA}, {"k", Var::K},
        {"s", Var::S},         {"m", Var::M},       {"x", Var::X},
    };
    for (const auto& [name, v] : names) {
        std::string_view n(name);
        if (c.s.substr(c.i, n.size()) == n) {
            // Reject longer identifiers such as "kk" or "malpha".
            char next = c.i + n.size() < c.s.size() ? c.s[c.i + n.size()] : '\0';
            if (std::isalnum(static_cast<unsigned char>(next)) && next != '^') continue;
            c.i += n.size();
            out = v;
            return true;
        }
    }
    return false;
}

unsigned read_uint(PCursor& c) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError("expected an exponent", c.i);
    unsigned v = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + unsigned(c.s[c.i] - '0');
        if (v > 60000) throw ParseError("exponent out of range", c.i);
        ++c.i;
    }
    return v;
}

MPoly read_term(PCursor& c) {
    c.skip_ws();
    MPoly term(Scalar(1));
    bool have_coeff = false;
    char p = c.peek();
    if (std::isdigit(static_cast<unsigned char>(p)) || p == '(') {
        std::size_t pos = c.i;
        term = MPoly(scalar_read(c.s, pos));
        c.i = pos;
        have_coeff = true;
        c.skip_ws();
        if (!c.eat('*')) return term;
        c.skip_ws();
    }
    bool any_factor = false;
    for (;;) {
        Var v;
        std::size_t at = c.i;
        if (!read_var(c, v)) {
            if (any_factor || !have_coeff)
                throw ParseError("expected a variable name", at);
            throw ParseError("expected a factor after '*'", at);
        }
        any_factor = true;
        unsigned e = 1;
        c.skip_ws();
        if (c.eat('^')) {
            c.skip_ws();
            e = read_uint(c);
        }
        term *= MPoly::var(v, e);
        c.skip_ws();
        std::size_t star = c.i;
        if (!c.eat('*')) break;
        c.skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(c.peek()))) {
            c.i = star;
            break;
        }
    }
    return term;
}

}  // namespace

MPoly mpoly_parse(std::string_view text) {
    PCursor c{text, 0};
    c.skip_ws();
    MPoly result;
    int sign = 1;
    if (c.eat('-'))
        sign = -1;
    else
        c.eat('+');
    for (;;) {
        MPoly term = read_term(c);
        result += sign < 0 ? -term : term;
        c.skip_ws();
        if (c.eat('-'))
            sign = -1;
        else if (c.eat('+'))
            sign = 1;
        else
            break;
    }
    if (c.i != text.size()) throw ParseError("trailing characters", c.i);
    return result;
}

// ---------------------------------------------------------------- UPoly ----

UPoly::UPoly(const Scalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Scalar& c, unsigned e) {
    UPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(e + 1, Scalar(0));
    p.c_[e] = c;
    return p;
}

UPoly UPoly::x() { return monomial(Scalar(1), 1); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& UPoly::leading() const {
    if (c_.empty()) throw DegenerateInput("leading coefficient of zero polynomial");
    return c_.back();
}

Scalar UPoly::coeff(unsigned e) const {
    return e < c_.size() ? c_[e] : Scalar(0);
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::derivative() const {
    UPoly d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.c_.push_back(Scalar(long(i)) * c_[i]);
    d.trim();
    return d;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

UPoly operator+(UPoly x, const UPoly& y) { return x += y; }
UPoly operator-(UPoly x, const UPoly& y) { return x -= y; }
UPoly operator*(UPoly x, const UPoly& y) { return x *= y; }
UPoly operator*(UPoly x, const Scalar& c) { return x *= c; }
UPoly operator*(const Scalar& c, UPoly x) { return x *= c; }

UDivMod divmod(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    UDivMod r{UPoly(), num};
    Scalar lead_inv = den.leading().inv();
    while (!r.rem.is_zero() && r.rem.degree() >= den.degree()) {
        unsigned shift = unsigned(r.rem.degree() - den.degree());
        Scalar c = r.rem.leading() * lead_inv;
        UPoly t = UPoly::monomial(c, shift);
        r.quot += t;
        r.rem -= t * den;
    }
    return r;
}

UPoly divexact(const UPoly& num, const UPoly& den) {
    UDivMod dm = divmod(num, den);
    if (!dm.rem.is_zero()) throw DegenerateInput("inexact polynomial division");
    return dm.quot;
}

namespace {

bool all_rational(const UPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

// Scales a rational-coefficient polynomial to integer coefficients with
// content 1 and positive leading coefficient.
UPoly make_primitive(const UPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) den_lcm = lcm(den_lcm, c.a().get_den());
    mpz_class num_gcd = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) num_gcd = gcd(num_gcd, mpz_class(c.a().get_num() * (den_lcm / c.a().get_den())));
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.leading().a() < 0) scale = -scale;
    return p * Scalar(scale);
}

UPoly make_monic(const UPoly& p) {
    if (p.is_zero()) return p;
    return p * p.leading().inv();
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
    bool rational = all_rational(a) && all_rational(b);
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return rational ? make_primitive(a) : make_monic(a);
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return UPoly(Scalar(1));
    UPoly g = upoly_gcd(p, p.derivative());
    UPoly sf = divexact(p, g);
    return all_rational(sf) ? make_primitive(sf) : make_monic(sf);
}

UPoly upoly_compose(const UPoly& p, const UPoly& q) {
    UPoly r;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        r = r * q + UPoly(*it);
    return r;
}

UPoly upoly_shift(const UPoly& p, const Scalar& c) {
    return upoly_compose(p, UPoly(std::vector<Scalar>{c, Scalar(1)}));
}

// ------------------------------------------------------ integer factoring ----

namespace {

mpz_class mulmod(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
    mpz_class r = a * b;
    return r % n;
}

mpz_class pollard_rho(const mpz_class& n, unsigned long seed) {
    // Brent's cycle-finding variant.
    mpz_class y(seed % 1000 + 2), c(seed % 97 + 1), m(128);
    mpz_class g(1), r(1), q(1), x, ys;
    while (g == 1) {
        x = y;
        for (mpz_class i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
        mpz_class k(0);
        while (k < r && g == 1) {
            ys = y;
            mpz_class lim = std::min(m, mpz_class(r - k));
            for (mpz_class i = 0; i < lim; ++i) {
                y = (mulmod(y, y, n) + c) % n;
                q = mulmod(q, abs(mpz_class(x - y)), n);
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time.
        do {
            ys = (mulmod(ys, ys, n) + c) % n;
            g = gcd(abs(mpz_class(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    // Trial division by 6k+-1 up to 100000.
    for (long p = 41; p <= 100000 && n > 1; p += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                ++out[mpz_class(p)];
                n /= p;
            }
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    unsigned long seed = 1;
    mpz_class d = n;
    while (d == n) {
        d = pollard_rho(n, seed++);
        if (seed > 64) throw DegenerateInput("integer factorization failed");
    }
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<mpz_class> divisors_of(const mpz_class& n, std::size_t cap) {
    std::map<mpz_class, unsigned> f;
    factor_into(abs(n), f);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f) {
        std::vector<mpz_class> next;
        next.reserve(divs.size() * (e + 1));
        mpz_class pe(1);
        for (unsigned i = 0; i <= e; ++i) {
            for (const auto& d : divs) next.push_back(d * pe);
            if (i < e) pe *= p;
        }
        divs = std::move(next);
        if (divs.size() > cap) return {};
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Splits n = s^2 * d with d squarefree; returns (s, d).
std::pair<mpz_class, mpz_class> square_split(const mpz_class& n) {
    std::map<mpz_class, unsigned> f;
    factor_into(abs(n), f);
    mpz_class s(1), d(n < 0 ? -1 : 1);
    for (const auto& [p, e] : f) {
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) d *= p;
    }
    return {s, d};
}

// Divides a squarefree rational-coefficient polynomial by (x - r).
UPoly deflate(const UPoly& p, const Scalar& r) {
    return divexact(p, UPoly(std::vector<Scalar>{-r, Scalar(1)}));
}

}  // namespace

RootSet solve_upoly(const UPoly& p) {
    if (p.is_zero()) throw DegenerateInput("root-finding on the zero polynomial");
    RootSet out;
    UPoly f = p;
    // Strip powers of x.
    if (f.coeff(0).is_zero()) {
        out.roots.push_back(Scalar(0));
        std::vector<Scalar> shifted(f.coeffs().begin(), f.coeffs().end());
        while (!shifted.empty() && shifted.front().is_zero())
            shifted.erase(shifted.begin());
        f = UPoly(shifted);
    }
    if (f.degree() <= 0) return out;
    f = squarefree_part(f);
    if (all_rational(f)) {
        f = make_primitive(f);
        // Rational root search.
        if (f.degree() >= 1) {
            std::vector<mpz_class> ps = divisors_of(f.coeff(0).a().get_num(), 4096);
            std::vector<mpz_class> qs = divisors_of(f.leading().a().get_num(), 4096);
            if (!ps.empty() && !qs.empty()) {
                std::vector<Scalar> candidates;
                for (const auto& q : qs)
                    for (const auto& num : ps)
                        for (int sg : {1, -1}) {
                            Rat r(sg * num, q);
                            r.canonicalize();
                            candidates.push_back(Scalar(r));
                        }
                std::sort(candidates.begin(), candidates.end(),
                          [](const Scalar& x, const Scalar& y) { return cmp(x, y) < 0; });
                candidates.erase(std::unique(candidates.begin(), candidates.end()),
                                 candidates.end());
                for (const Scalar& r : candidates) {
                    if (f.degree() < 1) break;
                    if (f.eval(r).is_zero()) {
                        out.roots.push_back(r);
                        f = deflate(f, r);
                    }
                }
            }
        }
        if (f.degree() == 1) {
            out.roots.push_back(-f.coeff(0) / f.coeff(1));
            return out;
        }
        if (f.degree() == 2) {
            // x = (-b +- sqrt(b^2-4ac)) / (2a), with the radical split into
            // s*sqrt(d)/t for squarefree d.
            Scalar a = f.coeff(2), b = f.coeff(1), cc = f.coeff(0);
            Rat disc = (b * b - Scalar(4) * a * cc).a();
            mpz_class n = disc.get_num() * disc.get_den();
            auto [s, d] = square_split(n);
            Rat rad_rat(s, disc.get_den());
            rad_rat.canonicalize();
            if (d == 1) {
                // A perfect square: two rational roots (normally found above).
                Scalar sq{Rat(rad_rat)};
                for (int sg : {1, -1})
                    out.roots.push_back((-b + Scalar(sg) * sq) / (Scalar(2) * a));
            } else if (!d.fits_slong_p()) {
                out.unresolved.push_back(f);
            } else {
                Rat two_a = (Scalar(2) * a).a();
                Rat bpart = rad_rat / two_a;
                for (int sg : {1, -1}) {
                    Scalar root(Rat(-b.a() / two_a), sg > 0 ? bpart : Rat(-bpart),
                                d.get_si());
                    out.roots.push_back(root);
                }
            }
            return out;
        }
        if (f.degree() >= 3) out.unresolved.push_back(f);
        return out;
    }
    // Non-rational coefficient field: solve only linear factors exactly.
    if (f.degree() == 1) {
        out.roots.push_back(-f.coeff(0) / f.coeff(1));
        return out;
    }
    if (f.degree() >= 2) out.unresolved.push_back(f);
    return out;
}

MPoly to_mpoly(const UPoly& p, Var v) {
    MPoly r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        Expo e{};
        e[static_cast<int>(v)] = static_cast<std::uint16_t>(i);
        r += MPoly::monomial(p.coeffs()[i], e);
    }
    return r;
}

UPoly to_upoly(const MPoly& p, Var v) {
    int vi = static_cast<int>(v);
    std::vector<Scalar> c;
    for (const auto& [e, coeff] : p.terms()) {
        for (int i = 0; i < kNumVars; ++i)
            if (i != vi && e[i] != 0)
                throw DegenerateInput(std::string("polynomial involves ") +
                                      var_name(static_cast<Var>(i)) +
                                      ", expected only " + var_name(v));
        if (e[vi] >= c.size()) c.resize(e[vi] + 1, Scalar(0));
        c[e[vi]] = coeff;
    }
    return UPoly(std::move(c));
}

}  // namespace wittex
