#include "wittex/cocycle.hpp"

#include <set>
#include <string>
#include <utility>

#include "wittex/error.hpp"

namespace wittex {

namespace {

void require_km_only(const MPoly& p, const char* what) {
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        for (int v = 0; v < kNumVars; ++v) {
            if (v == static_cast<int>(Var::K) || v == static_cast<int>(Var::M))
                continue;
            if (e[static_cast<std::size_t>(v)] != 0)
                throw DegenerateInput(std::string(what) +
                                      " must involve only the variables k and m");
        }
    }
}

Scalar poly_coeff(const MPoly& p, const Expo& e) {
    auto it = p.terms().find(e);
    return it == p.terms().end() ? Scalar(0) : it->second;
}

}  // namespace

ExtensionParams::ExtensionParams(Scalar a, Scalar b, Scalar g)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
    gamma -= Scalar(floor_to_int(gamma));
}

const char* kind_name(CocycleKind k) {
    switch (k) {
        case CocycleKind::Zero: return "zero";
        case CocycleKind::Poly: return "poly";
        case CocycleKind::DeltaKM: return "delta_km";
        case CocycleKind::DeltaM0: return "delta_m0";
        case CocycleKind::InvM: return "inv_m";
        case CocycleKind::Mixed: return "mixed";
    }
    return "unknown";
}

bool Cocycle::is_zero() const {
    return poly.is_zero() && invm.is_zero() && invk.is_zero() && dkm.is_zero() &&
           dm0.is_zero();
}

CocycleKind Cocycle::kind() const {
    if (is_zero()) return CocycleKind::Zero;
    if (!invk.is_zero()) return CocycleKind::Mixed;
    if (!invm.is_zero())
        return dkm.is_zero() ? CocycleKind::InvM : CocycleKind::Mixed;
    const bool has_poly = !poly.is_zero();
    const bool has_km = !dkm.is_zero();
    const bool has_m0 = !dm0.is_zero();
    if (has_poly && !has_km && !has_m0) return CocycleKind::Poly;
    if (!has_poly && has_km && !has_m0) return CocycleKind::DeltaKM;
    if (!has_poly && !has_km && has_m0) return CocycleKind::DeltaM0;
    return CocycleKind::Mixed;
}

Cocycle make_poly_cocycle(ExtensionParams p, MPoly tau) {
    require_km_only(tau, "polynomial structure function");
    Cocycle c(std::move(p));
    c.poly = std::move(tau);
    return c;
}

Cocycle make_delta_km(ExtensionParams p, UPoly f) {
    Cocycle c(std::move(p));
    c.dkm = std::move(f);
    return c;
}

Cocycle make_delta_m0(ExtensionParams p, UPoly f) {
    Cocycle c(std::move(p));
    c.dm0 = std::move(f);
    return c;
}

Cocycle make_inv_m(ExtensionParams p, const MPoly& mu, const UPoly& at_zero) {
    require_km_only(mu, "inverse-index numerator");
    Cocycle c(std::move(p));
    const MPoly mu0 = mu.substitute({{Var::M, MPoly(0)}});
    c.invm = to_upoly(mu0, Var::K);
    c.poly = divexact(mu - mu0, MPoly::var(Var::M));
    const UPoly q0 = to_upoly(c.poly.substitute({{Var::M, MPoly(0)}}), Var::K);
    c.dm0 = at_zero - q0;
    return c;
}

Scalar cocycle_eval(const Cocycle& c, long k, const Scalar& m) {
    if (!(m - c.params.gamma).is_integer())
        throw DegenerateInput("index m must lie in gamma + Z");
    const Scalar kk(k);
    Scalar val = c.poly.eval({{Var::K, kk}, {Var::M, m}});
    const Scalar mk = m + kk;
    if (!m.is_zero() && !c.invm.is_zero()) val += c.invm.eval(kk) / m;
    if (!mk.is_zero() && !c.invk.is_zero()) val += c.invk.eval(kk) / mk;
    if (mk.is_zero() && !c.dkm.is_zero()) val += c.dkm.eval(kk);
    if (m.is_zero() && !c.dm0.is_zero()) val += c.dm0.eval(kk);
    return val;
}

MPoly residual_poly(const MPoly& tau, const MPoly& alpha, const MPoly& beta) {
    if (tau.degree(Var::S) > 0 || tau.degree(Var::X) > 0)
        throw DegenerateInput("structure function may involve only k, m and weights");
    const MPoly k = MPoly::var(Var::K);
    const MPoly s = MPoly::var(Var::S);
    const MPoly m = MPoly::var(Var::M);
    const MPoly t_ks_m = tau.substitute({{Var::K, k + s}});
    const MPoly t_k_ms = tau.substitute({{Var::M, m + s}});
    const MPoly t_s_mk = tau.substitute({{Var::K, s}, {Var::M, m + k}});
    const MPoly t_s_m = tau.substitute({{Var::K, s}});
    return (s - k) * t_ks_m - (m + beta * s) * t_k_ms + (m + beta * k) * t_s_mk -
           (m + s + alpha * k) * t_s_m + (m + k + alpha * s) * tau;
}

std::vector<ResidualViolation> residual_window(const Cocycle& c, long window) {
    if (window < 1) throw WindowTooSmall("residual window must be at least 1");
    std::vector<ResidualViolation> out;
    const Scalar& al = c.params.alpha;
    const Scalar& be = c.params.beta;
    for (long k = -window; k <= window; ++k) {
        const Scalar kk(k);
        for (long s = -window; s <= window; ++s) {
            const Scalar ss(s);
            for (long t = -window; t <= window; ++t) {
                const Scalar m = c.params.gamma + Scalar(t);
                const Scalar r = (ss - kk) * cocycle_eval(c, k + s, m) -
                                 (m + be * ss) * cocycle_eval(c, k, m + ss) +
                                 (m + be * kk) * cocycle_eval(c, s, m + kk) -
                                 (m + ss + al * kk) * cocycle_eval(c, s, m) +
                                 (m + kk + al * ss) * cocycle_eval(c, k, m);
                if (!r.is_zero()) out.push_back({k, s, t, r});
            }
        }
    }
    return out;
}

Cocycle coboundary(const ExtensionParams& p, const CoboundaryGen& gen) {
    Cocycle c(p);
    if (!gen.poly_g.is_zero()) {
        const MPoly k = MPoly::var(Var::K);
        const MPoly m = MPoly::var(Var::M);
        const MPoly g_m = to_mpoly(gen.poly_g, Var::M);
        const MPoly g_mk = g_m.substitute({{Var::M, m + k}});
        c.poly = (m + MPoly(p.alpha) * k) * g_m - (m + MPoly(p.beta) * k) * g_mk;
    }
    if (!gen.delta_g.is_zero()) {
        if (!p.alpha.is_zero() || !p.beta.is_one() || !p.gamma_integral())
            throw InvalidCoboundary(
                "point-mass generator exists only at weights (0, 1) with integral "
                "indices");
        c.dkm += UPoly(gen.delta_g);
        c.dm0 -= UPoly(gen.delta_g);
    }
    return c;
}

namespace {

// Image of the generator m -> 1/m (value 0 at m = 0) under the coboundary
// map:  alpha*k/m - (beta-1)*k/(m+k), plus point corrections on the integral
// index lattice where the poles are hit.
Cocycle inverse_gen_image(const ExtensionParams& p) {
    Cocycle c(p);
    c.invm = UPoly::monomial(p.alpha, 1);
    c.invk = UPoly::monomial(Scalar(1) - p.beta, 1);
    if (p.gamma_integral()) {
        c.dkm = UPoly(Scalar(1));
        c.dm0 = UPoly(Scalar(-1));
    }
    return c;
}

// Image of the generator m -> delta_{m,0} under the coboundary map; only
// meaningful on the integral index lattice.
Cocycle mass_gen_image(const ExtensionParams& p) {
    Cocycle c(p);
    c.dm0 = UPoly::monomial(p.alpha, 1);
    c.dkm = UPoly::monomial(Scalar(1) - p.beta, 1);
    return c;
}

}  // namespace

bool equivalent(const Cocycle& c1, const Cocycle& c2) {
    if (c1.params != c2.params)
        throw DegenerateInput("equivalence requires matching extension parameters");
    const ExtensionParams& p = c1.params;
    const bool integral = p.gamma_integral();

    // Unknowns: the scale c applied to c2, then one coefficient per trivial
    // generator (monomials up to the degree that can still reach the
    // polynomial parts, the inverse-index generator, and on the integral
    // lattice the point-mass generator).
    std::vector<Cocycle> cols;
    cols.push_back(c2);
    const int cap = std::max(c1.poly.total_degree(), c2.poly.total_degree()) - 1;
    for (int j = 0; j <= cap; ++j) {
        CoboundaryGen gen;
        gen.poly_g = UPoly::monomial(Scalar(1), static_cast<unsigned>(j));
        cols.push_back(coboundary(p, gen));
    }
    cols.push_back(inverse_gen_image(p));
    if (integral) cols.push_back(mass_gen_image(p));

    std::set<Expo> poly_support;
    auto collect = [&poly_support](const MPoly& q) {
        for (const auto& [e, v] : q.terms()) {
            (void)v;
            poly_support.insert(e);
        }
    };
    collect(c1.poly);
    for (const auto& col : cols) collect(col.poly);

    auto max_deg = [&cols](const UPoly Cocycle::* comp, const UPoly& own) {
        int d = own.degree();
        for (const auto& col : cols) d = std::max(d, (col.*comp).degree());
        return d;
    };
    const int invm_deg = max_deg(&Cocycle::invm, c1.invm);
    const int invk_deg = max_deg(&Cocycle::invk, c1.invk);
    const int dkm_deg = integral ? max_deg(&Cocycle::dkm, c1.dkm) : -1;
    const int dm0_deg = integral ? max_deg(&Cocycle::dm0, c1.dm0) : -1;

    Mat a;
    std::vector<Scalar> b;
    auto add_row = [&](auto coord) {
        std::vector<Scalar> row;
        row.reserve(cols.size());
        for (const auto& col : cols) row.push_back(coord(col));
        a.append_row(row);
        b.push_back(coord(c1));
    };
    for (const Expo& e : poly_support)
        add_row([&e](const Cocycle& c) { return poly_coeff(c.poly, e); });
    for (int d = 0; d <= invm_deg; ++d)
        add_row([d](const Cocycle& c) { return c.invm.coeff(static_cast<unsigned>(d)); });
    for (int d = 0; d <= invk_deg; ++d)
        add_row([d](const Cocycle& c) { return c.invk.coeff(static_cast<unsigned>(d)); });
    for (int d = 0; d <= dkm_deg; ++d)
        add_row([d](const Cocycle& c) { return c.dkm.coeff(static_cast<unsigned>(d)); });
    for (int d = 0; d <= dm0_deg; ++d)
        add_row([d](const Cocycle& c) { return c.dm0.coeff(static_cast<unsigned>(d)); });

    if (a.rows() == 0) return true;  // both sides vanish identically

    const auto sol = solve(a, b);
    if (!sol) return false;
    if (!(*sol)[0].is_zero()) return true;
    // The particular solution uses scale 0; see whether the solution space
    // still reaches a nonzero scale.
    for (const auto& v : nullspace(a))
        if (!v[0].is_zero()) return true;
    return false;
}

bool is_trivial(const Cocycle& c) { return equivalent(c, Cocycle(c.params)); }

Cocycle dualize(const Cocycle& c) {
    ExtensionParams q(Scalar(1) - c.params.beta, Scalar(1) - c.params.alpha,
                      -c.params.gamma);
    Cocycle d(std::move(q));
    const MPoly k = MPoly::var(Var::K);
    const MPoly m = MPoly::var(Var::M);
    d.poly = c.poly.substitute({{Var::M, -m - k}});
    d.invm = -c.invk;
    d.invk = -c.invm;
    d.dkm = c.dm0;
    d.dm0 = c.dkm;
    return d;
}

MPoly theta_to_poly(const std::vector<Scalar>& coeffs) {
    if (coeffs.empty()) throw DegenerateInput("empty graded coefficient vector");
    const unsigned n = static_cast<unsigned>(coeffs.size());
    const MPoly k = MPoly::var(Var::K);
    const MPoly mk = MPoly::var(Var::M) + k;
    MPoly out;
    for (unsigned i = 0; i < n; ++i) {
        if (coeffs[i].is_zero()) continue;
        out += (coeffs[i] / factorial(i)) * (k.pow(n - i) * mk.pow(i));
    }
    return out;
}

std::vector<MPoly> poly_to_theta(const MPoly& tau, unsigned n) {
    require_km_only(tau, "graded structure function");
    const MPoly sub =
        tau.substitute({{Var::M, MPoly::var(Var::X) - MPoly::var(Var::K)}});
    std::vector<MPoly> out;
    out.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i)
        out.push_back(factorial(i) * sub.coeff_of(Var::X, i));
    return out;
}

}  // namespace wittex
