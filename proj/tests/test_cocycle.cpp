#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "wittex/cocycle.hpp"
#include "wittex/error.hpp"

using namespace wittex;

namespace {

std::mt19937_64 rng(0xB16B00B5uLL);

const MPoly kK = MPoly::var(Var::K);
const MPoly kM = MPoly::var(Var::M);
const MPoly kAl = MPoly::var(Var::ALPHA);
const MPoly kBe = MPoly::var(Var::BETA);

ExtensionParams params(long a, long b) {
    return ExtensionParams(Scalar(a), Scalar(b));
}

UPoly kpow(long c, unsigned e) { return UPoly::monomial(Scalar(c), e); }

}  // namespace

TEST_CASE("extension parameters normalize the index offset into [0,1)") {
    CHECK(ExtensionParams(Scalar(0), Scalar(0), Scalar(2)).gamma == Scalar(0));
    CHECK(ExtensionParams(Scalar(0), Scalar(0), Scalar(Rat(3, 2))).gamma ==
          Scalar(Rat(1, 2)));
    CHECK(ExtensionParams(Scalar(0), Scalar(0), Scalar(Rat(-1, 4))).gamma ==
          Scalar(Rat(3, 4)));
    CHECK(ExtensionParams(Scalar(0), Scalar(0), Scalar(-3)).gamma_integral());
    // Quadratic-irrational offsets are allowed as long as they are real.
    const Scalar root2(Rat(0), Rat(1), 2);  // sqrt(2) ~ 1.414...
    CHECK(ExtensionParams(Scalar(0), Scalar(0), root2).gamma ==
          root2 - Scalar(1));
    CHECK_THROWS_AS(ExtensionParams(Scalar(0), Scalar(0), Scalar(Rat(0), Rat(1), -1)),
                    DegenerateInput);
}

TEST_CASE("tau(k,m) = k solves the functional equation for every weight pair") {
    // Symbolic check with both weights left as free variables.
    CHECK(residual_poly(kK, kAl, kBe).is_zero());
    // And not just the scalar multiples of k: k + m fails already.
    CHECK_FALSE(residual_poly(kK + kM, kAl, kBe).is_zero());
}

TEST_CASE("coboundaries of polynomial generators solve the functional equation") {
    for (unsigned j = 0; j <= 6; ++j) {
        const MPoly mj = kM.pow(j);
        const MPoly mkj = (kM + kK).pow(j);
        const MPoly image = (kM + kAl * kK) * mj - (kM + kBe * kK) * mkj;
        CAPTURE(j);
        CHECK(residual_poly(image, kAl, kBe).is_zero());
    }
}

TEST_CASE("windowed residual agrees with the symbolic residual") {
    const MPoly tau = kK.pow(2) * kM;  // not a solution
    const Cocycle c = make_poly_cocycle(params(2, 3), tau);
    const MPoly res = residual_poly(tau, MPoly(2), MPoly(3));
    const auto violations = residual_window(c, 2);
    CHECK_FALSE(violations.empty());
    std::size_t nonzero = 0;
    for (long k = -2; k <= 2; ++k)
        for (long s = -2; s <= 2; ++s)
            for (long t = -2; t <= 2; ++t) {
                const Scalar v = res.eval({{Var::K, Scalar(k)},
                                           {Var::S, Scalar(s)},
                                           {Var::M, Scalar(t)}});
                if (!v.is_zero()) ++nonzero;
            }
    CHECK(violations.size() == nonzero);
    for (const auto& viol : violations) {
        const Scalar v = res.eval({{Var::K, Scalar(viol.k)},
                                   {Var::S, Scalar(viol.s)},
                                   {Var::M, Scalar(viol.t)}});
        CHECK(v == viol.value);
    }
}

TEST_CASE("window bounds and index lattice are validated") {
    const Cocycle c = make_poly_cocycle(params(0, 0), kK);
    CHECK_THROWS_AS(residual_window(c, 0), WindowTooSmall);
    CHECK_THROWS_AS(cocycle_eval(c, 1, Scalar(Rat(1, 3))), DegenerateInput);
    const Cocycle shifted = make_poly_cocycle(
        ExtensionParams(Scalar(0), Scalar(0), Scalar(Rat(1, 3))), kK);
    CHECK(cocycle_eval(shifted, 2, Scalar(Rat(4, 3))) == Scalar(2));
    CHECK_THROWS_AS(cocycle_eval(shifted, 2, Scalar(1)), DegenerateInput);
}

TEST_CASE("graded coefficient vectors expand to the expected polynomials") {
    // (c_0 ... c_{n-1}) stands for sum_i c_i k^(n-i) (m+k)^i / i!.
    SUBCASE("weight-two representatives") {
        CHECK(theta_to_poly({Scalar(0), Scalar(1)}) == kK * kM + kK.pow(2));
        CHECK(theta_to_poly({Scalar(1), Scalar(0)}) == kK.pow(2));
    }
    SUBCASE("degree-five representative matches its hand expansion") {
        // alpha = 3 specialization of ((alpha-1), -1, -12, 24, 0).
        const MPoly expect = mpoly_parse(
            "-1*k^5 - k^4*m + 6*k^3*m^2 + 4*k^2*m^3");
        CHECK(theta_to_poly({Scalar(2), Scalar(-1), Scalar(-12), Scalar(24),
                             Scalar(0)}) == expect);
    }
    SUBCASE("round trip recovers the coefficients") {
        std::uniform_int_distribution<long> small(-9, 9);
        for (int rep = 0; rep < 20; ++rep) {
            const unsigned n = 1 + static_cast<unsigned>(rep % 6);
            std::vector<Scalar> coeffs;
            for (unsigned i = 0; i < n; ++i) coeffs.emplace_back(small(rng));
            const auto back = poly_to_theta(theta_to_poly(coeffs), n);
            REQUIRE(back.size() == n + 1);
            for (unsigned i = 0; i < n; ++i)
                CHECK(back[i] == MPoly(coeffs[i]) * kK.pow(n - i));
            CHECK(back[n].is_zero());
        }
    }
}

TEST_CASE("low-weight representatives solve the functional equation") {
    // Weight n representatives live on the weight line beta = alpha - (n-1),
    // with alpha symbolic throughout.
    SUBCASE("n = 2 at (1, 0), two independent solutions") {
        const MPoly t1 = theta_to_poly({Scalar(0), Scalar(1)});
        const MPoly t2 = theta_to_poly({Scalar(1), Scalar(0)});
        CHECK(residual_poly(t1, MPoly(1), MPoly(0)).is_zero());
        CHECK(residual_poly(t2, MPoly(1), MPoly(0)).is_zero());
        // Elsewhere on the line beta = alpha - 1 the first dies outright and
        // the second survives only as a coboundary (k^2 = -((m+2k)m -
        // (m+k)^2) at (2,1)), hence trivially.
        CHECK_FALSE(residual_poly(t1, MPoly(2), MPoly(1)).is_zero());
        CHECK(residual_poly(t2, MPoly(2), MPoly(1)).is_zero());
        CHECK(is_trivial(make_poly_cocycle(params(2, 1), t2)));
        CHECK_FALSE(is_trivial(make_poly_cocycle(params(1, 0), t2)));
    }
    SUBCASE("n = 3 representative, alpha symbolic") {
        const MPoly tau = -kK.pow(3) - Scalar(2) * kK.pow(2) * kM;
        CHECK(residual_poly(tau, kAl, kAl - MPoly(2)).is_zero());
        CHECK_FALSE(residual_poly(tau, kAl, kAl - MPoly(3)).is_zero());
    }
    SUBCASE("n = 4 representative, alpha symbolic") {
        const MPoly tau = -kK.pow(3) * kM - kK.pow(2) * kM.pow(2);
        CHECK(residual_poly(tau, kAl, kAl - MPoly(3)).is_zero());
    }
    SUBCASE("n = 5 representative solves for every alpha on its line") {
        const MPoly tau = (kAl - MPoly(4)) * kK.pow(5) - kK.pow(4) * kM +
                          Scalar(6) * kK.pow(3) * kM.pow(2) +
                          Scalar(4) * kK.pow(2) * kM.pow(3);
        CHECK(residual_poly(tau, kAl, kAl - MPoly(4)).is_zero());
        // The sign of the k^5 term matters: flipping it breaks the equation
        // away from alpha = 4.
        const MPoly flipped = (MPoly(4) - kAl) * kK.pow(5) - kK.pow(4) * kM +
                              Scalar(6) * kK.pow(3) * kM.pow(2) +
                              Scalar(4) * kK.pow(2) * kM.pow(3);
        CHECK_FALSE(residual_poly(flipped, kAl, kAl - MPoly(4)).is_zero());
        CHECK(residual_poly(flipped.substitute({{Var::ALPHA, MPoly(4)}}),
                            MPoly(4), MPoly(0)).is_zero());
        CHECK_FALSE(residual_poly(flipped.substitute({{Var::ALPHA, MPoly(2)}}),
                                  MPoly(2), MPoly(-2)).is_zero());
    }
    SUBCASE("n = 7 representative over a quadratic extension") {
        const Scalar r19(Rat(0), Rat(1), 19);  // sqrt(19)
        const Scalar alpha = (Scalar(7) + r19) / Scalar(2);
        const std::vector<Scalar> coeffs = {
            -(Scalar(22) + Scalar(5) * r19) / Scalar(4),
            (Scalar(31) + Scalar(7) * r19) / Scalar(2),
            -(Scalar(25) + Scalar(7) * r19),
            Scalar(30),
            Scalar(120),
            Scalar(-240),
            Scalar(0)};
        const MPoly tau = theta_to_poly(coeffs);
        CHECK(residual_poly(tau, MPoly(alpha), MPoly(alpha - Scalar(6))).is_zero());
        // The conjugate weight needs the conjugate coefficients.
        CHECK_FALSE(residual_poly(tau, MPoly(alpha.conj()),
                                  MPoly(alpha.conj() - Scalar(6))).is_zero());
    }
}

TEST_CASE("point-mass solutions on the integral lattice") {
    // delta_{k+m,0} rows: all at alpha = 0, with beta depending on degree.
    CHECK(residual_window(make_delta_km(params(0, 1), kpow(1, 0)), 4).empty());
    CHECK(residual_window(make_delta_km(params(0, 1), kpow(1, 1)), 4).empty());
    CHECK(residual_window(make_delta_km(params(0, 0), kpow(1, 2)), 4).empty());
    CHECK(residual_window(make_delta_km(params(0, -1), kpow(1, 3)), 4).empty());
    // Wrong weights leave violations.
    CHECK_FALSE(residual_window(make_delta_km(params(0, 1), kpow(1, 2)), 4).empty());
    CHECK_FALSE(residual_window(make_delta_km(params(1, 0), kpow(1, 2)), 4).empty());
    // The degree-1 row is a solution for every beta (triviality differs).
    CHECK(residual_window(make_delta_km(params(0, 5), kpow(1, 1)), 4).empty());

    // delta_{m,0} rows: all at beta = 1, with alpha depending on degree.
    CHECK(residual_window(make_delta_m0(params(0, 1), kpow(1, 1)), 4).empty());
    CHECK(residual_window(make_delta_m0(params(1, 1), kpow(1, 2)), 4).empty());
    CHECK(residual_window(make_delta_m0(params(2, 1), kpow(1, 3)), 4).empty());
    CHECK_FALSE(residual_window(make_delta_m0(params(0, 1), kpow(1, 2)), 4).empty());
    CHECK_FALSE(residual_window(make_delta_m0(params(2, 0), kpow(1, 3)), 4).empty());
    // Degree 4 masses work at no weight: spot-check a few.
    for (long a = -2; a <= 3; ++a) {
        CAPTURE(a);
        CHECK_FALSE(residual_window(make_delta_m0(ExtensionParams(Scalar(a), Scalar(1)),
                                                  kpow(1, 4)), 4).empty());
        CHECK_FALSE(residual_window(make_delta_km(ExtensionParams(Scalar(0), Scalar(a)),
                                                  kpow(1, 4)), 4).empty());
    }
}

TEST_CASE("inverse-index solutions off the integral lattice") {
    const Scalar half(Rat(1, 2));
    auto at = [&](long a, long b) {
        return ExtensionParams(Scalar(a), Scalar(b), half);
    };
    const UPoly none;
    CHECK(residual_window(make_inv_m(at(0, 1), kK, none), 4).empty());
    CHECK(residual_window(make_inv_m(at(1, 1), kK.pow(2), none), 4).empty());
    CHECK(residual_window(make_inv_m(at(2, 1), kK.pow(3), none), 4).empty());
    // A polynomial correction outside the 1/m factor is fine at (2, 1) and
    // stays in the same class: k^3/m + k^2, i.e. numerator k^3 + k^2 m.
    const Cocycle corrected =
        make_inv_m(at(2, 1), kK.pow(3) + kK.pow(2) * kM, none);
    CHECK(residual_window(corrected, 4).empty());
    CHECK(equivalent(corrected, make_inv_m(at(2, 1), kK.pow(3), none)));
    // Mixing the quadratic term under the 1/m factor breaks the equation at
    // (2, 1): the quadratic inverse row solves it only at (1, 1).
    CHECK_FALSE(
        residual_window(make_inv_m(at(2, 1), kK.pow(3) + kK.pow(2), none), 4)
            .empty());
    CHECK_FALSE(residual_window(make_inv_m(at(0, 0), kK, none), 4).empty());
}

TEST_CASE("numerator splitting stores inverse-index data canonically") {
    // tau = (k^2 m + k^3)/m = k^2 + k^3/m away from m = 0.
    const MPoly mu = kK.pow(2) * kM + kK.pow(3);
    const UPoly at_zero = kpow(1, 2) + kpow(5, 0);
    const Cocycle c = make_inv_m(params(0, 1), mu, at_zero);
    CHECK(c.poly == kK.pow(2));
    CHECK(c.invm == kpow(1, 3));
    CHECK(c.dm0 == kpow(5, 0));
    CHECK(c.invk.is_zero());
    CHECK(c.kind() == CocycleKind::InvM);
    CHECK(cocycle_eval(c, 2, Scalar(0)) == Scalar(9));        // 4 + 5
    CHECK(cocycle_eval(c, 2, Scalar(4)) == Scalar(6));        // 4 + 8/4
    CHECK(cocycle_eval(c, 2, Scalar(-2)) == Scalar(0));       // 4 + 8/(-2)
}

TEST_CASE("kind classification follows the stored components") {
    CHECK(Cocycle(params(0, 0)).kind() == CocycleKind::Zero);
    CHECK(make_poly_cocycle(params(0, 0), kK).kind() == CocycleKind::Poly);
    CHECK(make_delta_km(params(0, 1), kpow(1, 1)).kind() == CocycleKind::DeltaKM);
    CHECK(make_delta_m0(params(0, 1), kpow(1, 1)).kind() == CocycleKind::DeltaM0);
    Cocycle mixed = make_poly_cocycle(params(0, 0), kK);
    mixed.dkm = kpow(1, 0);
    CHECK(mixed.kind() == CocycleKind::Mixed);
}

TEST_CASE("coboundaries are solutions and are recognized as trivial") {
    std::uniform_int_distribution<long> small(-6, 6);
    for (int rep = 0; rep < 8; ++rep) {
        std::vector<Scalar> gc;
        for (int i = 0; i <= rep % 4; ++i) gc.emplace_back(small(rng));
        CoboundaryGen gen;
        gen.poly_g = UPoly(gc);
        const ExtensionParams p(Scalar(small(rng)), Scalar(small(rng)));
        const Cocycle c = coboundary(p, gen);
        CAPTURE(rep);
        CHECK(residual_window(c, 3).empty());
        CHECK(is_trivial(c));
    }
}

TEST_CASE("the point-mass generator exists only at weights (0,1) on the lattice") {
    CoboundaryGen gen;
    gen.delta_g = Scalar(3);
    const Cocycle c = coboundary(params(0, 1), gen);
    CHECK(c.dkm == kpow(3, 0));
    CHECK(c.dm0 == kpow(-3, 0));
    CHECK(residual_window(c, 4).empty());
    CHECK(is_trivial(c));
    CHECK_THROWS_AS(coboundary(params(1, 0), gen), InvalidCoboundary);
    CHECK_THROWS_AS(coboundary(params(0, 2), gen), InvalidCoboundary);
    CHECK_THROWS_AS(
        coboundary(ExtensionParams(Scalar(0), Scalar(1), Scalar(Rat(1, 2))), gen),
        InvalidCoboundary);
}

TEST_CASE("derived images of the singular generators solve the equation") {
    // Image of m -> 1/m: alpha*k/m - (beta-1)*k/(m+k) with point corrections.
    auto inverse_image = [](const ExtensionParams& p) {
        Cocycle c(p);
        c.invm = UPoly::monomial(p.alpha, 1);
        c.invk = UPoly::monomial(Scalar(1) - p.beta, 1);
        if (p.gamma_integral()) {
            c.dkm = UPoly(Scalar(1));
            c.dm0 = UPoly(Scalar(-1));
        }
        return c;
    };
    for (auto [a, b] : {std::pair<long, long>{0, 1}, {1, 0}, {2, -3}}) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(residual_window(inverse_image(ExtensionParams(Scalar(a), Scalar(b))), 3)
                  .empty());
        CHECK(residual_window(
                  inverse_image(ExtensionParams(Scalar(a), Scalar(b), Scalar(Rat(1, 2)))),
                  3)
                  .empty());
        CHECK(is_trivial(inverse_image(ExtensionParams(Scalar(a), Scalar(b)))));
    }
    // Dropping the point corrections on the lattice breaks the equation.
    Cocycle broken = inverse_image(params(1, 0));
    broken.dm0 = UPoly(Scalar(1));
    CHECK_FALSE(residual_window(broken, 3).empty());

    // Image of m -> delta_{m,0}: alpha*k at m = 0 and (1-beta)*k at m = -k.
    auto mass_image = [](const ExtensionParams& p) {
        Cocycle c(p);
        c.dm0 = UPoly::monomial(p.alpha, 1);
        c.dkm = UPoly::monomial(Scalar(1) - p.beta, 1);
        return c;
    };
    for (auto [a, b] : {std::pair<long, long>{0, 0}, {2, 1}, {1, -2}}) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(residual_window(mass_image(ExtensionParams(Scalar(a), Scalar(b))), 3)
                  .empty());
        CHECK(is_trivial(mass_image(ExtensionParams(Scalar(a), Scalar(b)))));
    }
}

TEST_CASE("equivalence distinguishes solution classes") {
    SUBCASE("scaling and coboundary shifts preserve the class") {
        const MPoly t1 = theta_to_poly({Scalar(0), Scalar(1)});
        const Cocycle c1 = make_poly_cocycle(params(1, 0), t1);
        CHECK(equivalent(c1, c1));
        Cocycle scaled = make_poly_cocycle(params(1, 0), Scalar(-7) * t1);
        CHECK(equivalent(c1, scaled));
        CHECK(equivalent(scaled, c1));
        CoboundaryGen gen;
        gen.poly_g = UPoly(std::vector<Scalar>{Scalar(2), Scalar(-1), Scalar(4)});
        Cocycle shifted = make_poly_cocycle(
            params(1, 0), t1 + coboundary(params(1, 0), gen).poly);
        CHECK(equivalent(c1, shifted));
    }
    SUBCASE("the two weight-two classes at (1,0) are distinct") {
        const Cocycle c1 =
            make_poly_cocycle(params(1, 0), theta_to_poly({Scalar(0), Scalar(1)}));
        const Cocycle c2 =
            make_poly_cocycle(params(1, 0), theta_to_poly({Scalar(1), Scalar(0)}));
        CHECK_FALSE(equivalent(c1, c2));
        CHECK_FALSE(equivalent(c2, c1));
        CHECK_FALSE(is_trivial(c1));
        CHECK_FALSE(is_trivial(c2));
        // Their sum spans yet another line, inequivalent to both.
        const Cocycle sum = make_poly_cocycle(
            params(1, 0), theta_to_poly({Scalar(1), Scalar(1)}));
        CHECK_FALSE(equivalent(sum, c1));
        CHECK_FALSE(equivalent(sum, c2));
    }
    SUBCASE("tau = k is trivial exactly where the weights differ") {
        CHECK(is_trivial(make_poly_cocycle(params(2, 5), kK)));
        CHECK(is_trivial(make_poly_cocycle(params(0, 1), kK)));
        CHECK_FALSE(is_trivial(make_poly_cocycle(params(3, 3), kK)));
    }
    SUBCASE("zero against zero and nontrivial against zero") {
        CHECK(equivalent(Cocycle(params(1, 0)), Cocycle(params(1, 0))));
        const Cocycle c1 =
            make_poly_cocycle(params(1, 0), theta_to_poly({Scalar(0), Scalar(1)}));
        CHECK_FALSE(equivalent(c1, Cocycle(params(1, 0))));
        CHECK_FALSE(equivalent(Cocycle(params(1, 0)), c1));
    }
    SUBCASE("point masses: degree one is trivial except at its listed weights") {
        CHECK(is_trivial(make_delta_km(params(0, 0), kpow(1, 1))));
        CHECK(is_trivial(make_delta_km(params(0, 5), kpow(1, 1))));
        CHECK_FALSE(is_trivial(make_delta_km(params(0, 1), kpow(1, 1))));
        CHECK_FALSE(is_trivial(make_delta_km(params(0, 0), kpow(1, 2))));
        CHECK_FALSE(is_trivial(make_delta_m0(params(0, 1), kpow(1, 1))));
        CHECK(is_trivial(make_delta_m0(params(2, 1), kpow(1, 1))));
    }
    SUBCASE("mismatched parameters are rejected") {
        CHECK_THROWS_AS(
            equivalent(Cocycle(params(1, 0)), Cocycle(params(0, 1))),
            DegenerateInput);
    }
}

TEST_CASE("dualization is an involution matching the reversed weights") {
    SUBCASE("components and parameters") {
        Cocycle c(ExtensionParams(Scalar(Rat(1, 2)), Scalar(-2), Scalar(Rat(1, 3))));
        c.poly = kK.pow(2) * kM;
        c.invm = kpow(2, 1);
        c.invk = kpow(-1, 2);
        c.dkm = kpow(3, 0);
        c.dm0 = kpow(1, 1);
        const Cocycle d = dualize(c);
        CHECK(d.params.alpha == Scalar(3));            // 1 - (-2)
        CHECK(d.params.beta == Scalar(Rat(1, 2)));     // 1 - 1/2
        CHECK(d.params.gamma == Scalar(Rat(2, 3)));    // -1/3 normalized
        CHECK(d.poly == kK.pow(2) * (-kM - kK));
        CHECK(d.invm == kpow(1, 2));
        CHECK(d.invk == kpow(-2, 1));
        CHECK(d.dkm == kpow(1, 1));
        CHECK(d.dm0 == kpow(3, 0));
        CHECK(dualize(d) == c);
    }
    SUBCASE("pointwise the dual is tau(k, -m-k)") {
        Cocycle c(params(2, -1));
        c.poly = kK * kM.pow(2);
        c.invm = kpow(1, 1);
        c.dkm = kpow(4, 0);
        const Cocycle d = dualize(c);
        for (long k = -3; k <= 3; ++k)
            for (long t = -3; t <= 3; ++t) {
                CAPTURE(k);
                CAPTURE(t);
                CHECK(cocycle_eval(d, k, Scalar(t)) ==
                      cocycle_eval(c, k, Scalar(-t - k)));
            }
    }
    SUBCASE("residuals transport through the substitution m -> -m-k-s") {
        // For an arbitrary polynomial tau (weights symbolic), the residual of
        // the dual at (1-beta, 1-alpha) is the original residual evaluated at
        // m = -m-k-s.
        const MPoly tau = kK.pow(2) * kM.pow(3) + Scalar(5) * kK * kM + kK.pow(4);
        const MPoly dual_tau = tau.substitute({{Var::M, -kM - kK}});
        const MPoly lhs =
            residual_poly(dual_tau, MPoly(1) - kBe, MPoly(1) - kAl);
        const MPoly rhs = residual_poly(tau, kAl, kBe)
                              .substitute({{Var::M, -kM - kK - MPoly::var(Var::S)}});
        CHECK(lhs == rhs);
    }
    SUBCASE("duals of point-mass rows land on the mirrored rows") {
        CHECK(dualize(make_delta_km(params(0, 0), kpow(1, 2))) ==
              make_delta_m0(params(1, 1), kpow(1, 2)));
        CHECK(dualize(make_delta_km(params(0, -1), kpow(1, 3))) ==
              make_delta_m0(params(2, 1), kpow(1, 3)));
        CHECK(dualize(make_delta_km(params(0, 1), kpow(1, 1))) ==
              make_delta_m0(params(0, 1), kpow(1, 1)));
        // At self-dual weights (0,1) the two degree-zero masses even fall in
        // the same class: their difference is the image of m -> 1/m.
        const Cocycle km0 = make_delta_km(params(0, 1), kpow(1, 0));
        CHECK(equivalent(dualize(km0), km0));
    }
    SUBCASE("duals of solutions solve the equation at the reversed weights") {
        const MPoly n5 = theta_to_poly(
            {Scalar(2), Scalar(-1), Scalar(-12), Scalar(24), Scalar(0)});
        const Cocycle c = make_poly_cocycle(ExtensionParams(Scalar(3), Scalar(-1)), n5);
        CHECK(residual_window(c, 3).empty());
        const Cocycle d = dualize(c);
        CHECK(d.params == ExtensionParams(Scalar(2), Scalar(-2)));
        CHECK(residual_window(d, 3).empty());
        CHECK(residual_poly(d.poly, MPoly(2), MPoly(-2)).is_zero());
    }
}
