#include "wittex/catalog.hpp"

namespace wittex {

namespace {

const MPoly kK = MPoly::var(Var::K);
const MPoly kM = MPoly::var(Var::M);
const MPoly kAl = MPoly::var(Var::ALPHA);

// a + b*sqrt(19)
Scalar surd(Rat a, Rat b) { return Scalar(std::move(a), std::move(b), 19); }

WeightPattern line(long offset) {
    WeightPattern w;
    w.is_line = true;
    w.offset = offset;
    return w;
}

WeightPattern point(Scalar alpha, Scalar beta) {
    WeightPattern w;
    w.alpha = std::move(alpha);
    w.beta = std::move(beta);
    return w;
}

BaselineRow theta_row(unsigned degree, WeightPattern w, std::string alpha_text,
                      std::string beta_text, std::string display,
                      std::vector<MPoly> coeffs, bool variant = false) {
    BaselineRow r;
    r.degree = degree;
    r.weights = std::move(w);
    r.coords = CoordSystem::Theta;
    r.alpha_text = std::move(alpha_text);
    r.beta_text = std::move(beta_text);
    r.display = std::move(display);
    r.theta_coeffs = std::move(coeffs);
    r.variant = variant;
    return r;
}

BaselineRow mono_row(unsigned degree, WeightPattern w, std::string alpha_text,
                     std::string beta_text, std::string display, MPoly cls) {
    BaselineRow r;
    r.degree = degree;
    r.weights = std::move(w);
    r.coords = CoordSystem::Monomial;
    r.alpha_text = std::move(alpha_text);
    r.beta_text = std::move(beta_text);
    r.display = std::move(display);
    r.monomial = std::move(cls);
    return r;
}

NonPolyRow np_row(long alpha, long beta, bool gamma_integral, unsigned degree,
                  std::string display, Cocycle machine) {
    return NonPolyRow{Scalar(alpha), Scalar(beta),    gamma_integral,
                      degree,        std::move(display), std::move(machine)};
}

std::vector<BaselineRow> build_theta_table() {
    std::vector<BaselineRow> t;
    t.push_back(theta_row(1, line(0), "α − β = 0", "", "k θ^{(0)}", {MPoly(1)}));
    t.push_back(theta_row(2, point(Scalar(1), Scalar(0)), "α = 1", "β = 0",
                          "k θ^{(1)}", {MPoly(0), MPoly(1)}));
    t.push_back(theta_row(2, point(Scalar(1), Scalar(0)), "α = 1", "β = 0",
                          "k² θ^{(0)}", {MPoly(1), MPoly(0)}));
    t.push_back(theta_row(3, line(2), "α − β = 2", "",
                          "k³ θ^{(0)} - 2k² θ^{(1)}",
                          {MPoly(1), MPoly(-2), MPoly(0)}));
    t.push_back(theta_row(4, line(3), "α − β = 3", "",
                          "k³ θ^{(1)} - 2k² θ^{(2)}",
                          {MPoly(0), MPoly(1), MPoly(-2), MPoly(0)}));
    t.push_back(theta_row(
        5, line(4), "α − β = 4", "",
        "(α - 1)k⁵ θ^{(0)} - k⁴ θ^{(1)} - 12k³ θ^{(2)} + 24k² θ^{(3)}",
        {kAl - MPoly(1), MPoly(-1), MPoly(-12), MPoly(24), MPoly(0)}));
    t.push_back(theta_row(
        6, point(Scalar(1), Scalar(-4)), "α = 1", "β = -4",
        "2k⁵ θ^{(1)} + 10k⁴ θ^{(2)} + 60k³ θ^{(3)} - 120k² θ^{(4)}",
        {MPoly(0), MPoly(2), MPoly(10), MPoly(60), MPoly(-120), MPoly(0)}));
    t.push_back(theta_row(
        6, point(Scalar(5), Scalar(0)), "α = 5", "β = 0",
        "12k⁶ θ^{(0)} - 22k⁵ θ^{(1)} + 10k⁴ θ^{(2)} + 60k³ θ^{(3)} - 120k² θ^{(4)}",
        {MPoly(12), MPoly(-22), MPoly(10), MPoly(60), MPoly(-120), MPoly(0)}));
    t.push_back(theta_row(
        7, point(surd(Rat(7, 2), Rat(1, 2)), surd(Rat(-5, 2), Rat(-1, 2))),
        "α = (7+√19)/2", "β = -(5+√19)/2",
        "-(22+√19)/4 k⁷ θ^{(0)} + (31+7√19)/2 k⁶ θ^{(1)} - (25+7√19)k⁵ θ^{(2)} "
        "+ 30k⁴ θ^{(3)} + 120k³ θ^{(4)} - 240k² θ^{(5)}",
        {MPoly(surd(Rat(-11, 2), Rat(-1, 4))), MPoly(surd(Rat(31, 2), Rat(7, 2))),
         MPoly(surd(Rat(-25), Rat(-7))), MPoly(30), MPoly(120), MPoly(-240),
         MPoly(0)}));
    t.push_back(theta_row(
        7, point(surd(Rat(7, 2), Rat(-1, 2)), surd(Rat(-5, 2), Rat(1, 2))),
        "α = (7-√19)/2", "β = -(5-√19)/2",
        "-(22-√19)/4 k⁷ θ^{(0)} + (31-7√19)/2 k⁶ θ^{(1)} - (25-7√19)k⁵ θ^{(2)} "
        "+ 30k⁴ θ^{(3)} + 120k³ θ^{(4)} - 240k² θ^{(5)}",
        {MPoly(surd(Rat(-11, 2), Rat(1, 4))), MPoly(surd(Rat(31, 2), Rat(-7, 2))),
         MPoly(surd(Rat(-25), Rat(7))), MPoly(30), MPoly(120), MPoly(-240),
         MPoly(0)}));
    // alternate statements of the degree-6 and degree-7 classes, with their
    // own stated weights
    t.push_back(theta_row(
        6, point(Scalar(5), Scalar(0)), "α = 5", "β = 0",
        "k⁵ θ^{(1)} + 5k⁴ θ^{(2)} + 30k³ θ^{(3)} - 60k² θ^{(4)}",
        {MPoly(0), MPoly(1), MPoly(5), MPoly(30), MPoly(-60), MPoly(0)}, true));
    t.push_back(theta_row(
        6, point(Scalar(1), Scalar(-4)), "α = 1", "β = -4",
        "6k⁶ θ^{(0)} - 11k⁵ θ^{(1)} + 5k⁴ θ^{(2)} + 30k³ θ^{(3)} - 60k² θ^{(4)}",
        {MPoly(6), MPoly(-11), MPoly(5), MPoly(30), MPoly(-60), MPoly(0)}, true));
    // the degree-7 restatements leave beta implied by the populated line
    t.push_back(theta_row(
        7, point(surd(Rat(7, 2), Rat(1, 2)), surd(Rat(-5, 2), Rat(1, 2))),
        "α = (7+√19)/2", "",
        "-(22+√19)/4 k⁷ θ^{(0)} + (31+7√19)/2 k⁶ θ^{(1)} - (25+7√19)k⁵ θ^{(2)} "
        "+ 30k⁴ θ^{(3)} + 120k³ θ^{(4)} - 240k² θ^{(5)}",
        {MPoly(surd(Rat(-11, 2), Rat(-1, 4))), MPoly(surd(Rat(31, 2), Rat(7, 2))),
         MPoly(surd(Rat(-25), Rat(-7))), MPoly(30), MPoly(120), MPoly(-240),
         MPoly(0)},
        true));
    t.push_back(theta_row(
        7, point(surd(Rat(7, 2), Rat(-1, 2)), surd(Rat(-5, 2), Rat(-1, 2))),
        "α = (7-√19)/2", "",
        "-(22-√19)/4 k⁷ θ^{(0)} + (31-7√19)/2 k⁶ θ^{(1)} - (25-7√19)k⁵ θ^{(2)} "
        "+ 30k⁴ θ^{(3)} + 120k³ θ^{(4)} - 240k² θ^{(5)}",
        {MPoly(surd(Rat(-11, 2), Rat(1, 4))), MPoly(surd(Rat(31, 2), Rat(-7, 2))),
         MPoly(surd(Rat(-25), Rat(7))), MPoly(30), MPoly(120), MPoly(-240),
         MPoly(0)},
        true));
    return t;
}

std::vector<BaselineRow> build_monomial_table() {
    std::vector<BaselineRow> t;
    t.push_back(mono_row(1, line(0), "α − β = 0", "", "k", kK));
    t.push_back(mono_row(2, point(Scalar(1), Scalar(0)), "α = 1", "β = 0", "km",
                         kK * kM));
    t.push_back(mono_row(2, point(Scalar(1), Scalar(0)), "α = 1", "β = 0", "k²",
                         kK.pow(2)));
    t.push_back(mono_row(3, line(2), "α − β = 2", "", "k³ + 2k²m",
                         kK.pow(3) + MPoly(2) * kK.pow(2) * kM));
    t.push_back(mono_row(4, line(3), "α − β = 3", "", "k³m + k²m²",
                         kK.pow(3) * kM + kK.pow(2) * kM.pow(2)));
    t.push_back(mono_row(5, line(4), "α − β = 4", "",
                         "(α - 4)k⁵ + k⁴m - 6k³m² - 4k²m³",
                         (kAl - MPoly(4)) * kK.pow(5) + kK.pow(4) * kM -
                             MPoly(6) * kK.pow(3) * kM.pow(2) -
                             MPoly(4) * kK.pow(2) * kM.pow(3)));
    t.push_back(mono_row(6, point(Scalar(1), Scalar(-4)), "α = 1", "β = -4",
                         "12k⁶ + 22k⁵m + 5k⁴m² - 10k³m³ - 5k²m⁴",
                         MPoly(12) * kK.pow(6) + MPoly(22) * kK.pow(5) * kM +
                             MPoly(5) * kK.pow(4) * kM.pow(2) -
                             MPoly(10) * kK.pow(3) * kM.pow(3) -
                             MPoly(5) * kK.pow(2) * kM.pow(4)));
    t.push_back(mono_row(6, point(Scalar(5), Scalar(0)), "α = 5", "β = 0",
                         "2k⁵m - 5k⁴m² + 10k³m³ + 5k²m⁴",
                         MPoly(2) * kK.pow(5) * kM - MPoly(5) * kK.pow(4) * kM.pow(2) +
                             MPoly(10) * kK.pow(3) * kM.pow(3) +
                             MPoly(5) * kK.pow(2) * kM.pow(4)));
    t.push_back(mono_row(
        7, point(surd(Rat(7, 2), Rat(1, 2)), surd(Rat(-5, 2), Rat(-1, 2))),
        "α = (7+√19)/2", "β = -(5+√19)/2",
        "-(22+√19)/4 k⁷ - (31+7√19)/2 k⁶m - (25+7√19)/2 k⁵m² - 5k⁴m³ + 5k³m⁴ "
        "+ 2k²m⁵",
        MPoly(surd(Rat(-11, 2), Rat(-1, 4))) * kK.pow(7) +
            MPoly(surd(Rat(-31, 2), Rat(-7, 2))) * kK.pow(6) * kM +
            MPoly(surd(Rat(-25, 2), Rat(-7, 2))) * kK.pow(5) * kM.pow(2) -
            MPoly(5) * kK.pow(4) * kM.pow(3) + MPoly(5) * kK.pow(3) * kM.pow(4) +
            MPoly(2) * kK.pow(2) * kM.pow(5)));
    t.push_back(mono_row(
        7, point(surd(Rat(7, 2), Rat(-1, 2)), surd(Rat(-5, 2), Rat(1, 2))),
        "α = (7-√19)/2", "β = -(5-√19)/2",
        "-(22-√19)/4 k⁷ - (31-7√19)/2 k⁶m - (25-7√19)/2 k⁵m² - 5k⁴m³ + 5k³m⁴ "
        "+ 2k²m⁵",
        MPoly(surd(Rat(-11, 2), Rat(1, 4))) * kK.pow(7) +
            MPoly(surd(Rat(-31, 2), Rat(7, 2))) * kK.pow(6) * kM +
            MPoly(surd(Rat(-25, 2), Rat(7, 2))) * kK.pow(5) * kM.pow(2) -
            MPoly(5) * kK.pow(4) * kM.pow(3) + MPoly(5) * kK.pow(3) * kM.pow(4) +
            MPoly(2) * kK.pow(2) * kM.pow(5)));
    return t;
}

std::vector<NonPolyRow> build_nonpoly_table() {
    const Scalar half(Rat(1, 2));
    std::vector<NonPolyRow> t;
    t.push_back(np_row(0, -1, true, 3, "δ_{k+m,0} k³",
                       make_delta_km(ExtensionParams(Scalar(0), Scalar(-1)),
                                     UPoly::monomial(Scalar(1), 3))));
    t.push_back(np_row(0, 0, true, 2, "δ_{k+m,0} k²",
                       make_delta_km(ExtensionParams(Scalar(0), Scalar(0)),
                                     UPoly::monomial(Scalar(1), 2))));
    t.push_back(np_row(0, 1, false, 1, "m⁻¹k",
                       make_inv_m(ExtensionParams(Scalar(0), Scalar(1), half), kK,
                                  UPoly(0))));
    t.push_back(np_row(0, 1, true, 0, "δ_{k+m,0}",
                       make_delta_km(ExtensionParams(Scalar(0), Scalar(1)),
                                     UPoly(1))));
    t.push_back(np_row(0, 1, true, 1, "δ_{k+m,0} k",
                       make_delta_km(ExtensionParams(Scalar(0), Scalar(1)),
                                     UPoly::monomial(Scalar(1), 1))));
    t.push_back(np_row(0, 1, true, 1, "δ_{m,0} k",
                       make_delta_m0(ExtensionParams(Scalar(0), Scalar(1)),
                                     UPoly::monomial(Scalar(1), 1))));
    t.push_back(np_row(1, 1, false, 2, "m⁻¹k²",
                       make_inv_m(ExtensionParams(Scalar(1), Scalar(1), half),
                                  kK.pow(2), UPoly(0))));
    t.push_back(np_row(1, 1, true, 2, "δ_{m,0} k²",
                       make_delta_m0(ExtensionParams(Scalar(1), Scalar(1)),
                                     UPoly::monomial(Scalar(1), 2))));
    t.push_back(np_row(2, 1, false, 3, "m⁻¹k³ + k²",
                       make_inv_m(ExtensionParams(Scalar(2), Scalar(1), half),
                                  kK.pow(3) + kK.pow(2) * kM, UPoly(0))));
    t.push_back(np_row(2, 1, true, 3, "δ_{m,0} k³",
                       make_delta_m0(ExtensionParams(Scalar(2), Scalar(1)),
                                     UPoly::monomial(Scalar(1), 3))));
    return t;
}

}  // namespace

const std::vector<BaselineRow>& theta_table() {
    static const std::vector<BaselineRow> t = build_theta_table();
    return t;
}

const std::vector<BaselineRow>& monomial_table() {
    static const std::vector<BaselineRow> t = build_monomial_table();
    return t;
}

const std::vector<NonPolyRow>& nonpoly_table() {
    static const std::vector<NonPolyRow> t = build_nonpoly_table();
    return t;
}

}  // namespace wittex
