#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "wittex/poly.hpp"

using namespace wittex;

namespace {

const MPoly K = MPoly::var(Var::K);
const MPoly S = MPoly::var(Var::S);
const MPoly M = MPoly::var(Var::M);
const MPoly A = MPoly::var(Var::ALPHA);
const MPoly X = MPoly::var(Var::X);

std::mt19937_64 rng(0xBEEF5EEDuLL);

MPoly random_mpoly() {
    std::uniform_int_distribution<int> nterms(1, 6), expo(0, 3), coeff(-9, 9);
    MPoly p;
    for (int t = nterms(rng); t > 0; --t) {
        Expo e{};
        e[0] = std::uint16_t(expo(rng));
        e[2] = std::uint16_t(expo(rng));
        e[3] = std::uint16_t(expo(rng));
        int c = coeff(rng);
        p += MPoly::monomial(Scalar(c), e);
    }
    return p;
}

UPoly upoly_from(std::initializer_list<long> lows) {
    std::vector<Scalar> c;
    for (long v : lows) c.push_back(Scalar(v));
    return UPoly(c);
}

}  // namespace

TEST_CASE("multivariate arithmetic") {
    MPoly p = (K + M) * (K + M);
    CHECK(p == K * K + Scalar(2) * K * M + M * M);
    CHECK(p.degree(Var::K) == 2);
    CHECK(p.degree(Var::S) == 0);
    CHECK(p.total_degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((K + M).pow(3) == K.pow(3) + Scalar(3) * K * K * M + Scalar(3) * K * M * M + M.pow(3));
    CHECK(MPoly(Scalar(0)).is_zero());
    CHECK(MPoly(Scalar(0)).total_degree() == -1);
    CHECK((K - K).is_zero());
    CHECK(p.is_constant() == false);
    CHECK(MPoly(Scalar(5)).constant_term() == Scalar(5));
}

TEST_CASE("substitution and evaluation") {
    CHECK((K + M).substitute({{Var::M, X - K}}) == X);
    MPoly p = K * K * M + A * M;
    MPoly q = p.substitute({{Var::K, MPoly(Scalar(2))}});
    CHECK(q == Scalar(4) * M + A * M);
    CHECK(p.eval({{Var::K, Scalar(2)}, {Var::M, Scalar(3)}, {Var::ALPHA, Scalar(Rat(1, 2))}}) ==
          Scalar(Rat(27, 2)));
    CHECK_THROWS_AS(p.eval({{Var::K, Scalar(2)}}), DegenerateInput);
    // Simultaneous substitution: swap k and m.
    MPoly swapped = (K * K * M).substitute({{Var::K, M}, {Var::M, K}});
    CHECK(swapped == M * M * K);
}

TEST_CASE("coefficient extraction and grading") {
    MPoly p = Scalar(3) * K.pow(2) * M + Scalar(5) * K * M - Scalar(7) * M + A * K.pow(2);
    CHECK(p.coeff_of(Var::K, 2) == Scalar(3) * M + A);
    CHECK(p.coeff_of(Var::K, 1) == Scalar(5) * M);
    CHECK(p.coeff_of(Var::K, 0) == Scalar(-7) * M);
    CHECK(p.homogeneous_component(3, {Var::K, Var::M}) == Scalar(3) * K.pow(2) * M);
    CHECK(p.homogeneous_component(2, {Var::K, Var::M}) ==
          Scalar(5) * K * M + A * K.pow(2));
    auto groups = group_by_vars(p, {Var::K});
    Expo k2{};
    k2[0] = 2;
    CHECK(groups.at(k2) == Scalar(3) * M + A);
}

TEST_CASE("exact multivariate division") {
    CHECK(divexact(K * K - M * M, K - M) == K + M);
    CHECK(divexact(K.pow(3) * M.pow(2), K * M) == K * K * M);
    CHECK_THROWS_AS(divexact(K * K + M, K - M), DegenerateInput);
    CHECK_THROWS_AS(divexact(K, MPoly()), DivisionByZero);
}

TEST_CASE("polynomial text form") {
    MPoly p = Scalar(12) * K.pow(6) - Scalar(22) * K.pow(5) * M + M - Scalar(3);
    CHECK(mpoly_format(p) == "12*k^6 - 22*k^5*m + m - 3");
    CHECK(mpoly_format(MPoly()) == "0");
    CHECK(mpoly_format(-K) == "-k");
    CHECK(mpoly_format(K - M) == "k - m");
    CHECK(mpoly_format(Scalar(Rat(1, 2)) * K) == "1/2*k");
    MPoly quad = Scalar(Rat(7, 2), Rat(1, 2), 19) * M.pow(6);
    CHECK(mpoly_format(quad) == "(7+sqrt(19))/2*m^6");
    MPoly negquad = Scalar(Rat(-11, 2), Rat(-1, 4), 19) * K;
    CHECK(mpoly_format(negquad + M) == "(-22-sqrt(19))/4*k + m");

    CHECK(mpoly_parse("12*k^6 - 22*k^5*m + m - 3") == p);
    CHECK(mpoly_parse("(7+sqrt(19))/2*m^6") == quad);
    CHECK(mpoly_parse("k^2+2*k*m+m^2") == (K + M) * (K + M));
    CHECK(mpoly_parse("-k + 3") == Scalar(3) - K);
    CHECK(mpoly_parse("alpha*beta*x") ==
          A * MPoly::var(Var::BETA) * X);
    CHECK(mpoly_parse("2") == MPoly(Scalar(2)));
    CHECK(mpoly_parse("0") == MPoly());
    CHECK(mpoly_parse(" k \t- m ") == K - M);
    CHECK(mpoly_parse("1/2*k") == Scalar(Rat(1, 2)) * K);

    for (int i = 0; i < 100; ++i) {
        MPoly p2 = random_mpoly();
        CHECK(mpoly_parse(mpoly_format(p2)) == p2);
    }
}

TEST_CASE("polynomial parse errors") {
    CHECK_THROWS_AS(mpoly_parse(""), ParseError);
    CHECK_THROWS_AS(mpoly_parse("k+"), ParseError);
    CHECK_THROWS_AS(mpoly_parse("2**k"), ParseError);
    CHECK_THROWS_AS(mpoly_parse("k^"), ParseError);
    CHECK_THROWS_AS(mpoly_parse("y"), ParseError);
    CHECK_THROWS_AS(mpoly_parse("2 3"), ParseError);
    CHECK_THROWS_AS(mpoly_parse("k*2"), ParseError);
    CHECK_THROWS_AS(mpoly_parse("(1+sqrt(2))"), ParseError);
    CHECK_THROWS_AS(mpoly_parse("k^999999"), ParseError);
    CHECK_THROWS_AS(mpoly_parse("(1+sqrt(8))/2*k"), NotSquarefree);
}

TEST_CASE("univariate arithmetic") {
    UPoly p = upoly_from({1, 2, 1});  // 1 + 2x + x^2
    UPoly q = upoly_from({1, 1});     // 1 + x
    CHECK(p == q * q);
    CHECK(p.degree() == 2);
    CHECK(p.eval(Scalar(3)) == Scalar(16));
    CHECK(p.derivative() == upoly_from({2, 2}));
    CHECK((p - p).is_zero());
    CHECK(UPoly().degree() == -1);
    CHECK(UPoly::x().degree() == 1);
    CHECK(UPoly::monomial(Scalar(3), 4) == upoly_from({0, 0, 0, 0, 3}));
    CHECK(p.coeff(5) == Scalar(0));
}

TEST_CASE("univariate division and gcd") {
    UPoly x3m1 = upoly_from({-1, 0, 0, 1});
    UPoly xm1 = upoly_from({-1, 1});
    auto dm = divmod(x3m1, xm1);
    CHECK(dm.quot == upoly_from({1, 1, 1}));
    CHECK(dm.rem.is_zero());
    CHECK(divexact(x3m1, xm1) == upoly_from({1, 1, 1}));
    CHECK_THROWS_AS(divexact(upoly_from({1, 1, 1}), xm1), DegenerateInput);
    CHECK_THROWS_AS(divmod(xm1, UPoly()), DivisionByZero);

    UPoly x2m1 = upoly_from({-1, 0, 1});
    CHECK(upoly_gcd(x2m1, x3m1) == xm1);
    CHECK(upoly_gcd(upoly_from({2, 2}), upoly_from({-4, 0, 4})) == upoly_from({1, 1}));
    CHECK(upoly_gcd(UPoly(), UPoly()).is_zero());
    CHECK(upoly_gcd(UPoly(), xm1) == xm1);
    // Result sign convention: positive leading coefficient.
    CHECK(upoly_gcd(upoly_from({1, -1}), upoly_from({-1, 0, 1})) == upoly_from({-1, 1}));

    UPoly sq = xm1 * xm1 * upoly_from({2, 1});
    CHECK(squarefree_part(sq) == xm1 * upoly_from({2, 1}));
}

TEST_CASE("root solving") {
    // (x-3)(2x+1) = 2x^2 - 5x - 3
    RootSet r = solve_upoly(upoly_from({-3, -5, 2}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == Scalar(Rat(-1, 2)));
    CHECK(r.roots[1] == Scalar(3));
    CHECK(r.unresolved.empty());

    // x^2 - 19
    r = solve_upoly(upoly_from({-19, 0, 1}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == Scalar(Rat(0), Rat(1), 19));
    CHECK(r.roots[1] == Scalar(Rat(0), Rat(-1), 19));

    // 2x^2 - 14x + 15 has roots (7 +- sqrt(19))/2
    r = solve_upoly(upoly_from({15, -14, 2}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == Scalar(Rat(7, 2), Rat(1, 2), 19));
    CHECK(r.roots[1] == Scalar(Rat(7, 2), Rat(-1, 2), 19));

    // x^3 - 1 = (x-1)(x^2+x+1); the quadratic factor has imaginary roots
    r = solve_upoly(upoly_from({-1, 0, 0, 1}));
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0] == Scalar(1));
    CHECK(r.roots[1] == Scalar(Rat(-1, 2), Rat(1, 2), -3));
    CHECK(r.roots[2] == Scalar(Rat(-1, 2), Rat(-1, 2), -3));

    // x^3 - 2 stays unresolved
    r = solve_upoly(upoly_from({-2, 0, 0, 1}));
    CHECK(r.roots.empty());
    REQUIRE(r.unresolved.size() == 1);
    CHECK(r.unresolved[0].degree() == 3);

    // repeated and zero roots are reported once
    UPoly p = upoly_from({0, 1}) * upoly_from({-1, 1}) * upoly_from({-1, 1});
    r = solve_upoly(p);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == Scalar(0));
    CHECK(r.roots[1] == Scalar(1));

    // pure power of x
    r = solve_upoly(upoly_from({0, 0, 0, 0, 0, 7}));
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0] == Scalar(0));

    CHECK_THROWS_AS(solve_upoly(UPoly()), DegenerateInput);

    // rational roots of a polynomial with large composite constant term
    // (x - 1001)(x + 30030)(x - 1/7) -> 7x^3 + ...
    UPoly big = upoly_from({-1001, 1}) * upoly_from({30030, 1}) * upoly_from({-1, 7});
    r = solve_upoly(big);
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0] == Scalar(-30030));
    CHECK(r.roots[1] == Scalar(Rat(1, 7)));
    CHECK(r.roots[2] == Scalar(1001));
}

TEST_CASE("roots found against evaluation, randomized") {
    std::uniform_int_distribution<long> rootval(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        UPoly p(Scalar(1));
        std::set<long> expected;
        for (int i = 0; i < 4; ++i) {
            long v = rootval(rng);
            expected.insert(v);
            p *= upoly_from({-v, 1});
        }
        RootSet r = solve_upoly(p);
        CHECK(r.unresolved.empty());
        CHECK(r.roots.size() == expected.size());
        for (const Scalar& root : r.roots) {
            CHECK(p.eval(root).is_zero());
            CHECK(expected.count(mpz_get_si(root.a().get_num_mpz_t())) == 1);
        }
    }
}

TEST_CASE("univariate and multivariate conversions") {
    UPoly p = upoly_from({1, 0, -3, 2});
    CHECK(to_upoly(to_mpoly(p, Var::ALPHA), Var::ALPHA) == p);
    CHECK(to_mpoly(p, Var::K) == Scalar(2) * K.pow(3) - Scalar(3) * K.pow(2) + Scalar(1));
    CHECK_THROWS_AS(to_upoly(K + M, Var::K), DegenerateInput);
    CHECK(to_upoly(MPoly(), Var::K).is_zero());
}
