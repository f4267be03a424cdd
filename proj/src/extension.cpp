#include "wittex/extension.hpp"

#include <utility>

#include "wittex/error.hpp"

namespace wittex {

namespace {

Scalar map_at(const std::map<long, Scalar>& g, long offset) {
    auto it = g.find(offset);
    return it == g.end() ? Scalar(0) : it->second;
}

void prune(std::map<long, Scalar>& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second.is_zero())
            it = m.erase(it);
        else
            ++it;
    }
}

void add_term(std::map<long, Scalar>& m, long n, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

// Bracket of two generators; type 'L' or 'W' with an integer index.
CAElement gen_bracket(const CurrentAlgebra& ca, char tx, long ix, char ty, long iy) {
    CAElement out;
    if (tx == 'L' && ty == 'L') {
        add_term(out.L, ix + iy, Scalar(iy - ix));
        if (ix + iy == 0)
            out.c1 = Scalar(ix * ix * ix - ix) * Scalar(Rat(1, 12));
        return out;
    }
    if (tx == 'L' && ty == 'W') {
        add_term(out.W, ix + iy, Scalar(iy) + ca.beta * Scalar(ix));
        if (ix + iy == 0) out.c2 = ca.mu.eval(Scalar(ix));
        return out;
    }
    if (tx == 'W' && ty == 'L') {
        out = gen_bracket(ca, ty, iy, tx, ix);
        return ca_scale(Scalar(-1), out);
    }
    // W with W
    if (!ca.abelian && ix + iy == 0) out.c3 = Scalar(ix);
    return out;
}

}  // namespace

ModuleWindow::ModuleWindow(const Cocycle& tau, long radius)
    : tau_(tau), radius_(radius) {
    if (radius < 1)
        throw DegenerateInput("module window radius must be at least 1");
}

Scalar ModuleWindow::index(long offset) const {
    return tau_.params.gamma + Scalar(offset);
}

Scalar ModuleWindow::act_v(long k, long offset) const {
    return index(offset) + tau_.params.alpha * Scalar(k);
}

Scalar ModuleWindow::act_w(long k, long offset) const {
    return index(offset) + tau_.params.beta * Scalar(k);
}

Scalar ModuleWindow::act_mixed(long k, long offset) const {
    Scalar value = cocycle_eval(tau_, k, index(offset));
    // coboundary of the accumulated basis shift
    value += act_v(k, offset) * map_at(shift_, offset);
    value -= act_w(k, offset) * map_at(shift_, offset + k);
    return value;
}

std::vector<BracketViolation> bracket_check(const ModuleWindow& mw, long K) {
    if (K < 1) throw DegenerateInput("bracket check needs K >= 1");
    if (2 * K > mw.radius())
        throw WindowTooSmall("bracket check needs 2K <= window radius");

    std::vector<BracketViolation> out;
    const auto record = [&](long k, long s, long j, char layer, char component,
                            const Scalar& defect) {
        if (!defect.is_zero()) out.push_back({k, s, j, layer, component, defect});
    };

    for (long k = -K; k <= K; ++k)
        for (long s = -K; s <= K; ++s)
            for (long j = -mw.radius(); j <= mw.radius(); ++j) {
                if (!mw.in_window(j + k) || !mw.in_window(j + s) ||
                    !mw.in_window(j + k + s))
                    continue;
                const Scalar target_v = Scalar(s - k) * mw.act_v(k + s, j);
                const Scalar comm_v =
                    mw.act_v(s, j) * mw.act_v(k, j + s) - mw.act_v(k, j) * mw.act_v(s, j + k);
                record(k, s, j, 'v', 'v', comm_v - target_v);

                const Scalar target_w = Scalar(s - k) * mw.act_w(k + s, j);
                const Scalar comm_w =
                    mw.act_w(s, j) * mw.act_w(k, j + s) - mw.act_w(k, j) * mw.act_w(s, j + k);
                record(k, s, j, 'w', 'w', comm_w - target_w);

                const Scalar target_m = Scalar(s - k) * mw.act_mixed(k + s, j);
                const Scalar comm_m = mw.act_w(s, j) * mw.act_mixed(k, j + s) +
                                      mw.act_mixed(s, j) * mw.act_v(k, j + s) -
                                      mw.act_w(k, j) * mw.act_mixed(s, j + k) -
                                      mw.act_mixed(k, j) * mw.act_v(s, j + k);
                record(k, s, j, 'w', 'v', comm_m - target_m);
            }
    return out;
}

ModuleWindow change_basis(const ModuleWindow& mw, const std::map<long, Scalar>& g) {
    ModuleWindow out = mw;
    for (const auto& [offset, value] : g) add_term(out.shift_, offset, value);
    return out;
}

bool CAElement::is_zero() const {
    return L.empty() && W.empty() && c1.is_zero() && c2.is_zero() && c3.is_zero();
}

CAElement& CAElement::operator+=(const CAElement& o) {
    for (const auto& [n, c] : o.L) add_term(L, n, c);
    for (const auto& [n, c] : o.W) add_term(W, n, c);
    c1 += o.c1;
    c2 += o.c2;
    c3 += o.c3;
    return *this;
}

CAElement ca_scale(const Scalar& c, const CAElement& x) {
    CAElement out;
    if (c.is_zero()) return out;
    out = x;
    for (auto& kv : out.L) kv.second *= c;
    for (auto& kv : out.W) kv.second *= c;
    prune(out.L);
    prune(out.W);
    out.c1 *= c;
    out.c2 *= c;
    out.c3 *= c;
    return out;
}

CAElement ca_L(long n) {
    CAElement out;
    out.L.emplace(n, Scalar(1));
    return out;
}

CAElement ca_W(long n) {
    CAElement out;
    out.W.emplace(n, Scalar(1));
    return out;
}

CAElement ca_bracket(const CurrentAlgebra& ca, const CAElement& x, const CAElement& y) {
    CAElement out;
    // central components of x and y contribute nothing
    for (const auto& [ix, cx] : x.L) {
        for (const auto& [iy, cy] : y.L)
            out += ca_scale(cx * cy, gen_bracket(ca, 'L', ix, 'L', iy));
        for (const auto& [iy, cy] : y.W)
            out += ca_scale(cx * cy, gen_bracket(ca, 'L', ix, 'W', iy));
    }
    for (const auto& [ix, cx] : x.W) {
        for (const auto& [iy, cy] : y.L)
            out += ca_scale(cx * cy, gen_bracket(ca, 'W', ix, 'L', iy));
        for (const auto& [iy, cy] : y.W)
            out += ca_scale(cx * cy, gen_bracket(ca, 'W', ix, 'W', iy));
    }
    return out;
}

std::vector<JacobiViolation> jacobi_check(const CurrentAlgebra& ca, long K) {
    if (K < 2) throw DegenerateInput("Jacobi check needs K >= 2");

    std::vector<GenRef> gens;
    for (long i = -K; i <= K; ++i) gens.push_back({'L', i});
    for (long i = -K; i <= K; ++i) gens.push_back({'W', i});

    const auto elem = [](const GenRef& g) {
        return g.type == 'L' ? ca_L(g.index) : ca_W(g.index);
    };

    std::vector<JacobiViolation> out;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b)
            for (std::size_t c = b; c < gens.size(); ++c) {
                const CAElement x = elem(gens[a]), y = elem(gens[b]), z = elem(gens[c]);
                CAElement defect = ca_bracket(ca, x, ca_bracket(ca, y, z));
                defect += ca_bracket(ca, y, ca_bracket(ca, z, x));
                defect += ca_bracket(ca, z, ca_bracket(ca, x, y));
                if (!defect.is_zero())
                    out.push_back({gens[a], gens[b], gens[c], std::move(defect)});
            }
    return out;
}

std::vector<RescaleViolation> index_rescale_check(const CurrentAlgebra& ca, long K) {
    if (ca.beta != Scalar(1))
        throw DegenerateInput("index rescaling requires beta = 1");

    // target algebra carrying the rescaled basis
    CurrentAlgebra target;
    target.beta = Scalar(0);
    target.mu = UPoly::monomial(Scalar(-1), 1) * ca.mu;
    target.abelian = ca.abelian;
    target.radius = ca.radius;

    std::vector<RescaleViolation> out;
    for (long k = -K; k <= K; ++k)
        for (long m = -K; m <= K; ++m) {
            // [L(k), I(m)] in ca, with I(m) = m W(m), expanded over the W(n)
            const CAElement lhs =
                ca_scale(Scalar(m), ca_bracket(ca, ca_L(k), ca_W(m)));
            // the target bracket [L(k), I(m)], its I(k+m) term expanded as
            // (k+m) W(k+m) through the same identification
            CAElement rhs = ca_bracket(target, ca_L(k), ca_W(m));
            const Scalar w_coeff = map_at(rhs.W, k + m);
            rhs.W.clear();
            add_term(rhs.W, k + m, w_coeff * Scalar(k + m));
            CAElement defect = lhs;
            defect += ca_scale(Scalar(-1), rhs);
            if (!defect.is_zero()) out.push_back({k, m, std::move(defect)});
        }
    return out;
}

}  // namespace wittex
