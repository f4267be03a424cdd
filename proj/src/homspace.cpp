#include "wittex/homspace.hpp"

#include <map>
#include <utility>

namespace wittex {

WeightOp act_witt(long k, const WeightOp& op, const Scalar& alpha) {
    WeightOp r;
    r.weight = op.weight + k;
    UPoly x = UPoly::x();
    UPoly lead = x + UPoly(Scalar(op.weight) + alpha * Scalar(k));
    r.poly = lead * op.poly - x * upoly_shift(op.poly, Scalar(k));
    if (!op.delta.is_zero()) {
        if (k != 0 && !alpha.is_zero())
            throw DegenerateInput(
                "delta mass does not transform within the weight-operator family "
                "unless the target weight is zero");
        r.delta = Scalar(r.weight) * op.delta;
    }
    return r;
}

WeightOp act_shift(long l, const WeightOp& op) {
    WeightOp r;
    r.weight = op.weight + l;
    r.poly = upoly_shift(op.poly, Scalar(l));
    r.delta = op.delta;
    return r;
}

WeightOp theta_op(unsigned p, long j) {
    WeightOp r;
    r.weight = j;
    UPoly base = UPoly::x() + UPoly(Scalar(j));
    UPoly pw(Scalar(1));
    for (unsigned i = 0; i < p; ++i) pw *= base;
    r.poly = pw * factorial(p).inv();
    return r;
}

std::vector<Scalar> theta_act_closed(long k, unsigned p, long j, const Scalar& alpha) {
    std::vector<Scalar> coeff(p + 1, Scalar(0));
    for (unsigned i = 0; i < p; ++i) {
        unsigned e = p + 1 - i;
        Scalar sign = (p - i) % 2 == 0 ? Scalar(1) : Scalar(-1);
        coeff[i] = sign * factorial(e).inv() * (Scalar(long(e)) * alpha - Scalar(long(p) + 1)) *
                   scalar_pow(Scalar(k), long(e));
    }
    coeff[p] = Scalar(j) + (alpha - Scalar(long(p))) * Scalar(k);
    return coeff;
}

bool combo_equal(const DiffOpCombo& x, const DiffOpCombo& y) {
    std::map<std::pair<long, long>, Scalar> acc;
    for (const auto& t : x.terms) acc[{t.a_power, t.e_index}] += t.coeff;
    for (const auto& t : y.terms) acc[{t.a_power, t.e_index}] -= t.coeff;
    for (const auto& [key, c] : acc)
        if (!c.is_zero()) return false;
    return true;
}

DiffOpCombo z_op(unsigned n) {
    DiffOpCombo c;
    for (unsigned i = 0; i <= n + 1; ++i) {
        Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
        c.terms.push_back({sign * binomial(n + 1, i), long(i) - 1, 1 - long(i)});
    }
    return c;
}

DiffOpCombo y_op(unsigned n) {
    DiffOpCombo c;
    for (unsigned i = 0; i <= n; ++i) {
        Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
        c.terms.push_back({sign * binomial(n, i), long(i), -long(i)});
    }
    return c;
}

WeightOp apply_combo(const DiffOpCombo& c, const WeightOp& op, const Scalar& alpha) {
    if (c.terms.empty()) return WeightOp{op.weight, UPoly(), Scalar(0)};
    long shift = c.terms.front().a_power + c.terms.front().e_index;
    WeightOp total{op.weight + shift, UPoly(), Scalar(0)};
    for (const auto& t : c.terms) {
        if (t.a_power + t.e_index != shift)
            throw DegenerateInput("combo terms shift the weight inconsistently");
        WeightOp part = act_shift(t.a_power, act_witt(t.e_index, op, alpha));
        total.poly += t.coeff * part.poly;
        total.delta += t.coeff * part.delta;
    }
    return total;
}

EpsEtaElem act_eps_eta(long k, const EpsEtaElem& x, const Scalar& beta) {
    EpsEtaElem r;
    r.index = x.index + k;
    Scalar j(x.index), kk(k);
    r.eps = x.eps * (j + beta * kk) - x.eta * (beta - Scalar(1)) * kk * kk;
    r.eta = x.eta * (j + (beta - Scalar(1)) * kk);
    return r;
}

EpsEtaElem phi_pairing(long k, long j, const Scalar& beta) {
    EpsEtaElem r;
    r.index = j + k;
    r.eta = beta;
    r.eps = (Scalar(1) - beta) * Scalar(j);
    return r;
}

namespace {

// The operator A_i on the basis (theta^(0) .. theta^(n-1), eps); columns are
// images of basis elements.
Mat rho_matrix(unsigned i, const std::vector<Scalar>& c, const Scalar& alpha,
               const Scalar& beta) {
    const std::size_t n = c.size();
    Mat A(n + 1, n + 1);
    if (i == 1) {
        for (std::size_t p = 0; p < n; ++p) A.at(p, p) = alpha - Scalar(long(p));
        A.at(n, n) = beta;
        if (n >= 1) A.at(n - 1, n) = c[n - 1];
        return A;
    }
    for (std::size_t p = 0; p < n; ++p) {
        long target = long(p) + 1 - long(i);
        if (target < 0) continue;
        Scalar sign = (i - 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
        A.at(std::size_t(target), p) =
            sign * (Scalar(long(i)) * alpha - Scalar(long(p) + 1));
    }
    if (i <= n) A.at(n - i, n) = factorial(i) * c[n - i];
    return A;
}

}  // namespace

std::vector<RhoViolation> rho_check(const std::vector<Scalar>& c, const Scalar& alpha,
                                    const Scalar& beta) {
    const unsigned n = unsigned(c.size());
    if (n == 0) throw DegenerateInput("empty coefficient vector");
    std::vector<Mat> A(2 * n + 3);
    for (unsigned i = 1; i <= 2 * n + 2; ++i) A[i] = rho_matrix(i, c, alpha, beta);
    std::vector<RhoViolation> bad;
    for (unsigned i = 1; i <= n + 1; ++i)
        for (unsigned j = i + 1; j <= n + 1; ++j) {
            Mat lhs = mat_sub(mat_mul(A[i], A[j]), mat_mul(A[j], A[i]));
            Mat rhs = A[i + j - 1];
            for (std::size_t r = 0; r < rhs.rows(); ++r)
                for (std::size_t cc = 0; cc < rhs.cols(); ++cc)
                    rhs.at(r, cc) *= Scalar(long(j) - long(i));
            if (!mat_is_zero(mat_sub(lhs, rhs))) bad.push_back({i, j});
        }
    return bad;
}

}  // namespace wittex
