#include "wittex/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>

#include "wittex/error.hpp"

namespace wittex {

namespace {

MPoly basis_monomial(unsigned n, unsigned a) {
    Expo e{};
    e[static_cast<int>(Var::K)] = static_cast<std::uint16_t>(n - a);
    e[static_cast<int>(Var::M)] = static_cast<std::uint16_t>(a);
    return MPoly::monomial(Scalar(1), e);
}

// Every exponent key k^i s^j m^l with i + j + l == d, pre-inserted so the
// assembled system has one row per monomial in the deterministic term order
// even where a coefficient vanishes identically.
std::map<Expo, std::vector<MPoly>> empty_rows(unsigned d, std::size_t cols) {
    std::map<Expo, std::vector<MPoly>> rows;
    for (unsigned i = 0; i <= d; ++i)
        for (unsigned j = 0; i + j <= d; ++j) {
            Expo e{};
            e[static_cast<int>(Var::K)] = static_cast<std::uint16_t>(i);
            e[static_cast<int>(Var::S)] = static_cast<std::uint16_t>(j);
            e[static_cast<int>(Var::M)] = static_cast<std::uint16_t>(d - i - j);
            rows.emplace(e, std::vector<MPoly>(cols));
        }
    return rows;
}

// Coefficient vector of a homogeneous degree-n polynomial in k, m over the
// monomial basis k^(n-a) m^a.
std::vector<Scalar> column_coords(const MPoly& tau, unsigned n) {
    std::vector<Scalar> v(n + 1, Scalar(0));
    for (const auto& [e, c] : tau.terms()) {
        const unsigned dk = e[static_cast<int>(Var::K)];
        const unsigned dm = e[static_cast<int>(Var::M)];
        if (dk + dm != n || e[static_cast<int>(Var::S)] != 0 ||
            e[static_cast<int>(Var::ALPHA)] != 0 || e[static_cast<int>(Var::BETA)] != 0 ||
            e[static_cast<int>(Var::X)] != 0)
            throw ConsistencyError("inhomogeneous term in a degree-graded computation");
        v[dm] = c;
    }
    return v;
}

MPoly from_column_coords(const std::vector<Scalar>& v, unsigned n) {
    MPoly tau;
    for (unsigned a = 0; a <= n; ++a)
        if (!v[a].is_zero()) tau += v[a] * basis_monomial(n, a);
    return tau;
}

std::vector<Scalar> normalize_first_one(std::vector<Scalar> v) {
    for (const auto& c : v)
        if (!c.is_zero()) {
            const Scalar inv = c.inv();
            for (auto& x : v) x = x * inv;
            return v;
        }
    throw ConsistencyError("attempted to normalize a zero vector");
}

}  // namespace

LinSystem residual_system(unsigned n) {
    LinSystem sys;
    const MPoly al = MPoly::var(Var::ALPHA), be = MPoly::var(Var::BETA);
    auto rows = empty_rows(n + 1, n + 1);
    for (unsigned a = 0; a <= n; ++a) {
        const MPoly r = residual_poly(basis_monomial(n, a), al, be);
        for (const auto& [mono, coeff] : group_by_vars(r, {Var::K, Var::S, Var::M})) {
            auto it = rows.find(mono);
            if (it == rows.end())
                throw ConsistencyError("residual monomial outside the expected degree");
            it->second[a] = coeff;
        }
    }
    for (auto& [mono, row] : rows) sys.matrix.append_row(std::move(row));
    for (unsigned a = 0; a <= n; ++a) sys.unknowns.push_back("c" + std::to_string(a));
    return sys;
}

LinSystem lemmaAB_system(unsigned n) {
    if (n < 2) throw DegenerateInput("reduced relation system needs degree >= 2");
    LinSystem sys;
    const MPoly al = MPoly::var(Var::ALPHA), be = MPoly::var(Var::BETA);
    const long N = static_cast<long>(n);
    // triangular family
    for (long i = 2; i <= N; ++i) {
        std::vector<MPoly> row(n);
        const Scalar sign(i % 2 == 0 ? 1 : -1);
        row[n - i] = factorial(i) * (al - be - MPoly(N - 1));
        row[n - 1] = sign * (MPoly(i) * al - MPoly(N));
        sys.matrix.append_row(std::move(row));
    }
    // chain family
    for (long i = 2; i + 1 <= N; ++i)
        for (long j = i + 1; i + j <= N + 1; ++j) {
            std::vector<MPoly> row(n);
            const Scalar si(i % 2 == 0 ? -1 : 1);  // (-1)^(i-1)
            const Scalar sj(j % 2 == 0 ? -1 : 1);  // (-1)^(j-1)
            row[n - i - j + 1] = MPoly(factorial(i + j - 1) * Scalar(j - i));
            row[n - j] = (-si * factorial(j)) * (MPoly(i) * al - MPoly(N - j + 1));
            row[n - i] = (sj * factorial(i)) * (MPoly(j) * al - MPoly(N - i + 1));
            sys.matrix.append_row(std::move(row));
        }
    for (unsigned a = 0; a < n; ++a) sys.unknowns.push_back("c" + std::to_string(a));
    return sys;
}

std::vector<Cocycle> poly_cocycle_space(unsigned n, const ExtensionParams& params) {
    const LinSystem sys = residual_system(n);
    const Mat m = eval_matrix(sys.matrix,
                              {{Var::ALPHA, params.alpha}, {Var::BETA, params.beta}});
    std::vector<Cocycle> basis;
    for (const auto& v : nullspace(m))
        basis.push_back(make_poly_cocycle(params, from_column_coords(v, n)));
    return basis;
}

H1Report h1_poly(unsigned n, const ExtensionParams& params) {
    H1Report rep;
    rep.n = n;
    rep.params = params;

    const LinSystem sys = residual_system(n);
    const Mat m = eval_matrix(sys.matrix,
                              {{Var::ALPHA, params.alpha}, {Var::BETA, params.beta}});
    const auto zbasis = nullspace(m);
    rep.cocycle_space_dim = static_cast<unsigned>(zbasis.size());

    // Image of the degree-(n-1) polynomial generator: the only trivial
    // function homogeneous of degree n.
    std::vector<Scalar> bvec;
    if (n >= 1) {
        CoboundaryGen gen;
        gen.poly_g = UPoly::monomial(Scalar(1), n - 1);
        const Cocycle cb = coboundary(params, gen);
        std::vector<Scalar> v = column_coords(cb.poly, n);
        if (std::any_of(v.begin(), v.end(), [](const Scalar& c) { return !c.is_zero(); }))
            bvec = std::move(v);
    }
    rep.coboundary_space_dim = bvec.empty() ? 0u : 1u;
    if (rep.cocycle_space_dim < rep.coboundary_space_dim)
        throw ConsistencyError("coboundary image escaped the cocycle space");
    rep.h1_dim = rep.cocycle_space_dim - rep.coboundary_space_dim;

    // Greedy complement of the coboundary line inside the cocycle space.
    Mat acc;
    std::size_t acc_rank = 0;
    if (!bvec.empty()) {
        acc.append_row(bvec);
        acc_rank = 1;
    }
    for (const auto& v : zbasis) {
        if (rep.representatives.size() == rep.h1_dim) break;
        Mat trial = acc;
        trial.append_row(v);
        if (rank(trial) > acc_rank) {
            acc = std::move(trial);
            ++acc_rank;
            rep.representatives.push_back(
                make_poly_cocycle(params, from_column_coords(normalize_first_one(v), n)));
        }
    }
    if (rep.representatives.size() != rep.h1_dim)
        throw ConsistencyError("quotient complement has the wrong dimension");
    return rep;
}

namespace {

// Bareiss echelon form that remembers which original rows carry the pivots.
struct Echelon {
    std::vector<std::size_t> pivot_rows;  // original row indices
    std::vector<std::size_t> pivot_cols;
    UPoly last_pivot = UPoly(1);
    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon echelon_form(PolyMat<UPoly> m) {
    Echelon e;
    std::vector<std::size_t> orig(m.rows());
    std::iota(orig.begin(), orig.end(), std::size_t{0});
    UPoly prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            m.swap_rows(p, row);
            std::swap(orig[p], orig[row]);
        }
        const UPoly pivot = m.at(row, col);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m.at(i, j) =
                    divexact(pivot * m.at(i, j) - m.at(i, col) * m.at(row, j), prev);
            m.at(i, col) = UPoly(0);
        }
        e.pivot_rows.push_back(orig[row]);
        e.pivot_cols.push_back(col);
        e.last_pivot = pivot;
        prev = pivot;
        ++row;
    }
    return e;
}

// Exact determinant by fraction-free elimination with swap-parity tracking.
UPoly poly_det(PolyMat<UPoly> m) {
    if (m.rows() != m.cols()) throw DegenerateInput("determinant of a non-square matrix");
    const std::size_t s = m.rows();
    if (s == 0) return UPoly(1);
    int parity = 1;
    UPoly prev(1), pivot(1);
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t p = col;
        while (p < s && m.at(p, col).is_zero()) ++p;
        if (p == s) return UPoly(0);
        if (p != col) {
            m.swap_rows(p, col);
            parity = -parity;
        }
        pivot = m.at(col, col);
        for (std::size_t i = col + 1; i < s; ++i) {
            for (std::size_t j = col + 1; j < s; ++j)
                m.at(i, j) =
                    divexact(pivot * m.at(i, j) - m.at(i, col) * m.at(col, j), prev);
            m.at(i, col) = UPoly(0);
        }
        prev = pivot;
    }
    return parity > 0 ? pivot : -pivot;
}

// Polynomial null-space basis: one vector per free column, built from signed
// minors over the pivot rows (so entries stay in the polynomial ring).
std::vector<std::vector<UPoly>> symbolic_nullspace(const PolyMat<UPoly>& m,
                                                   const Echelon& ech) {
    const std::size_t r = ech.rank();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    PolyMat<UPoly> base(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            base.at(i, j) = m.at(ech.pivot_rows[i], ech.pivot_cols[j]);
    const UPoly d0 = poly_det(base);
    if (r > 0 && d0.is_zero())
        throw ConsistencyError("pivot minor of an echelon form vanished");

    std::vector<std::vector<UPoly>> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<UPoly> v(m.cols(), UPoly(0));
        v[f] = d0;
        for (std::size_t i = 0; i < r; ++i) {
            PolyMat<UPoly> rep = base;
            for (std::size_t row = 0; row < r; ++row)
                rep.at(row, i) = m.at(ech.pivot_rows[row], f);
            v[ech.pivot_cols[i]] = -poly_det(std::move(rep));
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Divides out the polynomial content and the common rational factor of all
// coefficients, then makes the leading coefficient of the first nonzero
// entry positive.
void make_primitive(std::vector<UPoly>& v) {
    UPoly content(0);
    for (const auto& e : v) content = upoly_gcd(content, e);
    if (content.is_zero()) throw ConsistencyError("primitive part of a zero vector");
    for (auto& e : v) e = divexact(e, content);
    bool rational = true;
    Rat num(0);
    mpz_class den(1);
    for (const auto& e : v)
        for (const auto& c : e.coeffs()) {
            if (!c.is_rational()) {
                rational = false;
                break;
            }
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_num().get_mpz_t(), c.a().get_num().get_mpz_t());
            num.get_num() = g;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.a().get_den().get_mpz_t());
        }
    if (rational && num.get_num() != 0) {
        const Scalar scale = Scalar(Rat(den, num.get_num()));
        for (auto& e : v) e *= scale;
    }
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        if (e.leading().sign() < 0)
            for (auto& x : v) x = -x;
        break;
    }
}

// Symbolic identities behind the single-line reduction for n >= 3: away from
// alpha - beta = n-1 the degree-n quotient vanishes at every weight pair.
//
// (i) The index-zero slice of the residual couples only the pure m^n
//     coefficient, through (m + beta k)(m+k)^n - (m + alpha k) m^n, whose
//     k^(n+1), k m^n and k^2 m^(n-1) coefficient rows have no common zero in
//     (alpha, beta) for n >= 2: every polynomial cocycle is divisible by k.
//
// (ii) The s-linear part of the residual of each ansatz monomial satisfies
//       [s] R(mono_a) = (1 + alpha - beta - n) mono_a
//                       + [a == n-1] ((m+beta k)(m+k)^(n-1) - (m+alpha k) m^(n-1))
//                       - [a == n] m^n
//     hence for every cocycle tau,
//       (alpha - beta - (n-1)) tau = a_{n-1} * generator image + a_n * m^n,
//     and with (i) the quotient away from the line is spanned by the
//     generator image alone, i.e. zero.
void verify_single_line_reduction(unsigned n) {
    if (n < 2) throw DegenerateInput("single-line reduction starts at degree 2");
    const MPoly al = MPoly::var(Var::ALPHA), be = MPoly::var(Var::BETA);
    const MPoly k = MPoly::var(Var::K), mm = MPoly::var(Var::M);
    const long N = static_cast<long>(n);

    const MPoly slice = (mm + be * k) * (mm + k).pow(n) - (mm + al * k) * mm.pow(n);
    const MPoly r1 = slice.coeff_of(Var::K, n + 1);
    const MPoly r2 = slice.coeff_of(Var::K, 1).coeff_of(Var::M, n);
    const MPoly r3 = slice.coeff_of(Var::K, 2).coeff_of(Var::M, n - 1);
    const std::map<Var, MPoly> beta0 = {{Var::BETA, MPoly(0)}};
    const std::map<Var, MPoly> alpha_n = {{Var::ALPHA, MPoly(N)}};
    if (r1 != be || r2.substitute(beta0) != MPoly(N) - al ||
        r3.substitute(beta0).substitute(alpha_n) != MPoly(binomial(n, 2)))
        throw ConsistencyError("index-zero slice lost its forcing shape");

    for (unsigned a = 0; a <= n; ++a) {
        const MPoly r = residual_poly(basis_monomial(n, a), al, be);
        MPoly expect = (MPoly(1) + al - be - MPoly(N)) * basis_monomial(n, a);
        if (a == n - 1)
            expect += (mm + be * k) * (mm + k).pow(n - 1) - (mm + al * k) * mm.pow(n - 1);
        if (a == n) expect -= mm.pow(n);
        if (r.coeff_of(Var::S, 1) != expect)
            throw ConsistencyError("s-linear reduction identity failed");
    }
}

LineScan scan_line(unsigned n, long offset, std::uint64_t seed) {
    LineScan scan;
    scan.n = n;
    scan.offset = offset;

    const LinSystem sys = residual_system(n);
    const std::map<Var, MPoly> on_line = {
        {Var::BETA, MPoly::var(Var::ALPHA) - MPoly(offset)}};
    PolyMat<UPoly> lm;
    for (std::size_t i = 0; i < sys.matrix.rows(); ++i) {
        std::vector<UPoly> row(n + 1);
        for (std::size_t j = 0; j <= n; ++j)
            row[j] = to_upoly(sys.matrix.at(i, j).substitute(on_line), Var::ALPHA);
        lm.append_row(std::move(row));
    }

    // Polynomial-generator image along the line, one column coefficient per
    // unknown, univariate in alpha.
    std::vector<UPoly> bvec(n + 1, UPoly(0));
    bool b_nonzero = false;
    if (n >= 1) {
        const MPoly k = MPoly::var(Var::K), mm = MPoly::var(Var::M);
        const MPoly al = MPoly::var(Var::ALPHA);
        const MPoly img = (mm + al * k) * mm.pow(n - 1) -
                          (mm + (al - MPoly(offset)) * k) * (mm + k).pow(n - 1);
        for (unsigned a = 0; a <= n; ++a) {
            bvec[a] = to_upoly(img.coeff_of(Var::K, n - a).coeff_of(Var::M, a), Var::ALPHA);
            b_nonzero = b_nonzero || !bvec[a].is_zero();
        }
    }

    const Echelon ech = echelon_form(lm);
    const std::size_t r = ech.rank();
    const unsigned nullity = static_cast<unsigned>(n + 1 - r);
    if (nullity < (b_nonzero ? 1u : 0u))
        throw ConsistencyError("coboundary image escaped the cocycle space on a line");
    scan.generic_h1_dim = nullity - (b_nonzero ? 1u : 0u);

    // Candidate special weights: roots shared by the deterministic pivot
    // minor and several reshuffled ones (a rank drop annihilates every
    // maximal minor), plus roots of the generator-image content (where the
    // quotient can grow by the coboundary degenerating instead).
    UPoly minor = r > 0 ? ech.last_pivot : UPoly(1);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 5 && minor.degree() > 0; ++trial) {
        std::vector<std::size_t> rp(lm.rows()), cp(lm.cols());
        std::iota(rp.begin(), rp.end(), std::size_t{0});
        std::iota(cp.begin(), cp.end(), std::size_t{0});
        for (std::size_t i = rp.size(); i > 1; --i)
            std::swap(rp[i - 1], rp[rng() % i]);
        for (std::size_t i = cp.size(); i > 1; --i)
            std::swap(cp[i - 1], cp[rng() % i]);
        PolyMat<UPoly> shuffled;
        for (std::size_t i = 0; i < lm.rows(); ++i) {
            std::vector<UPoly> row(lm.cols());
            for (std::size_t j = 0; j < lm.cols(); ++j) row[j] = lm.at(rp[i], cp[j]);
            shuffled.append_row(std::move(row));
        }
        const auto res = bareiss_eliminate(shuffled);
        if (res.rank != r)
            throw ConsistencyError("rank changed under a row/column permutation");
        minor = upoly_gcd(minor, res.last_pivot);
    }

    std::vector<Scalar> candidates;
    const auto add_roots = [&](const UPoly& p) {
        if (p.is_zero() || p.degree() < 1) return;
        const RootSet rs = solve_upoly(squarefree_part(p));
        for (const auto& root : rs.roots)
            if (std::find(candidates.begin(), candidates.end(), root) == candidates.end())
                candidates.push_back(root);
        for (const auto& f : rs.unresolved)
            if (std::find(scan.unresolved.begin(), scan.unresolved.end(), f) ==
                scan.unresolved.end())
                scan.unresolved.push_back(f);
    };
    add_roots(minor);
    if (b_nonzero) {
        UPoly bcont(0);
        for (const auto& e : bvec) bcont = upoly_gcd(bcont, e);
        add_roots(bcont);
    }

    for (const auto& a0 : candidates) {
        H1Report rep = h1_poly(n, ExtensionParams(a0, a0 - Scalar(offset)));
        if (rep.h1_dim > scan.generic_h1_dim)
            scan.special.push_back({a0, rep.h1_dim, std::move(rep.representatives)});
    }

    if (scan.generic_h1_dim > 0) {
        std::vector<std::vector<UPoly>> nulls = symbolic_nullspace(lm, ech);
        std::vector<std::vector<UPoly>> reduced;
        if (b_nonzero) {
            std::size_t jstar = 0;
            while (bvec[jstar].is_zero()) ++jstar;
            for (const auto& v : nulls) {
                std::vector<UPoly> w(n + 1);
                bool nz = false;
                for (unsigned a = 0; a <= n; ++a) {
                    w[a] = bvec[jstar] * v[a] - v[jstar] * bvec[a];
                    nz = nz || !w[a].is_zero();
                }
                if (nz) reduced.push_back(std::move(w));
            }
        } else {
            reduced = std::move(nulls);
        }
        PolyMat<UPoly> acc;
        std::size_t acc_rank = 0;
        for (auto& w : reduced) {
            if (scan.generic_classes.size() == scan.generic_h1_dim) break;
            PolyMat<UPoly> trial = acc;
            trial.append_row(w);
            if (bareiss_eliminate(trial).rank > acc_rank) {
                acc = std::move(trial);
                ++acc_rank;
                make_primitive(w);
                MPoly cls;
                for (unsigned a = 0; a <= n; ++a)
                    cls += to_mpoly(w[a], Var::ALPHA) * basis_monomial(n, a);
                scan.generic_classes.push_back(std::move(cls));
            }
        }
        if (scan.generic_classes.size() != scan.generic_h1_dim)
            throw ConsistencyError("generic quotient basis has the wrong size");
    }
    return scan;
}

}  // namespace

std::vector<LineScan> parametric_scan(unsigned n, std::uint64_t seed) {
    if (n < 1 || n > 14) throw DegenerateInput("scan degree out of range");
    std::vector<LineScan> out;
    if (n <= 2) {
        for (long off = 0; off < static_cast<long>(n); ++off)
            out.push_back(scan_line(n, off, seed));
    } else {
        verify_single_line_reduction(n);
        out.push_back(scan_line(n, static_cast<long>(n) - 1, seed));
    }
    return out;
}

std::vector<ObstructionRow> obstruction_rows(unsigned n) {
    if (n < 6) throw DegenerateInput("chain reduction needs degree >= 6");
    const UPoly x = UPoly::x();
    const long N = static_cast<long>(n);

    // Chain rows on the line, over columns c_0 .. c_{n-2}.  First family
    // (indexed 1 .. n-3) couples c_{n-3-i}, c_{n-2-i}, c_{n-2}; second
    // family (indexed 1 .. n-5) couples c_{n-5-i}, c_{n-3-i}, c_{n-3}.
    const auto arow = [&](long i) {
        std::vector<UPoly> row(n - 1, UPoly(0));
        const Scalar sign(i % 2 == 0 ? 1 : -1);
        row[n - 3 - i] = UPoly(Scalar(-i) * factorial(i + 3));
        row[n - 2 - i] = (-factorial(i + 2)) * (Scalar(2) * x - Scalar(N - i - 1));
        row[n - 2] = (sign * Scalar(2)) * (Scalar(i + 2) * x - Scalar(N - 1));
        return row;
    };
    const auto brow = [&](long i) {
        std::vector<UPoly> row(n - 1, UPoly(0));
        const Scalar sign(i % 2 == 0 ? -1 : 1);  // (-1)^(i+3)
        row[n - 5 - i] = UPoly(Scalar(-i) * factorial(i + 5));
        row[n - 3 - i] = factorial(i + 3) * (Scalar(3) * x - Scalar(N - i - 2));
        row[n - 3] = (sign * Scalar(6)) * (Scalar(i + 3) * x - Scalar(N - 2));
        return row;
    };
    const auto subtract = [](std::vector<UPoly>& row, const UPoly& mult,
                             const std::vector<UPoly>& from) {
        for (std::size_t c = 0; c < row.size(); ++c) row[c] -= mult * from[c];
    };

    // Sequential reduction of the first family: row i keeps its leading
    // column c_{n-3-i} and otherwise couples only c_{n-3} and c_{n-2}.
    std::vector<std::vector<UPoly>> ra;
    ra.push_back(arow(1));
    for (long i = 2; i <= N - 3; ++i) {
        std::vector<UPoly> row = arow(i);
        subtract(row, divexact(row[n - 2 - i], ra[i - 2][n - 2 - i]), ra[i - 2]);
        for (std::size_t c = 0; c + 1 < row.size(); ++c)
            if (c != static_cast<std::size_t>(n - 3 - i) &&
                c != static_cast<std::size_t>(n - 3) && !row[c].is_zero())
                throw ConsistencyError("first-family reduction left an unexpected entry");
        ra.push_back(std::move(row));
    }

    std::vector<ObstructionRow> out;
    for (long i = 1; i <= N - 5; ++i) {
        std::vector<UPoly> row = brow(i);
        subtract(row, divexact(row[n - 5 - i], ra[i + 1][n - 5 - i]), ra[i + 1]);
        subtract(row, divexact(row[n - 3 - i], ra[i - 1][n - 3 - i]), ra[i - 1]);
        for (std::size_t c = 0; c < row.size(); ++c)
            if (c != static_cast<std::size_t>(n - 3) &&
                c != static_cast<std::size_t>(n - 2) && !row[c].is_zero())
                throw ConsistencyError("second-family reduction left an unexpected entry");
        out.push_back({std::move(row[n - 3]), std::move(row[n - 2])});
    }
    return out;
}

namespace {

// Defining identity for delta_{k+m,0} f on the integral lattice at
// alpha = 0, as a polynomial in k, s with beta symbolic: the residual at the
// only contributing index triples reduces to
//   (s-k) f(k+s) + (k+s - beta s) f(k) - (k+s - beta k) f(s) = 0.
MPoly delta_km_condition(unsigned d) {
    const MPoly k = MPoly::var(Var::K), s = MPoly::var(Var::S);
    const MPoly be = MPoly::var(Var::BETA);
    const auto f = [&](const MPoly& arg) { return arg.pow(d); };
    return (s - k) * f(k + s) + (k + s - be * s) * f(k) - (k + s - be * k) * f(s);
}

// Mirror identity for delta_{m,0} f at beta = 1 with alpha symbolic:
//   (s-k) f(k+s) + (k + alpha s) f(k) - (s + alpha k) f(s) = 0.
MPoly delta_m0_condition(unsigned d) {
    const MPoly k = MPoly::var(Var::K), s = MPoly::var(Var::S);
    const MPoly al = MPoly::var(Var::ALPHA);
    const auto f = [&](const MPoly& arg) { return arg.pow(d); };
    return (s - k) * f(k + s) + (k + al * s) * f(k) - (s + al * k) * f(s);
}

// Shared driver: solves the identity per degree in the remaining weight and
// emits the nontrivial classes.  `degenerate` is the weight at which the
// matching point-mass coboundary generator vanishes, the only place an
// identically-satisfied identity yields a new class.
std::vector<Cocycle> point_mass_scan(unsigned max_deg, bool km_kind,
                                     const Scalar& degenerate) {
    std::vector<Cocycle> out;
    const Var weight_var = km_kind ? Var::BETA : Var::ALPHA;
    for (unsigned d = 0; d <= max_deg; ++d) {
        const MPoly cond = km_kind ? delta_km_condition(d) : delta_m0_condition(d);
        std::vector<Scalar> weights;
        if (cond.is_zero()) {
            weights.push_back(degenerate);
        } else {
            UPoly g(0);
            for (const auto& [mono, coeff] : group_by_vars(cond, {Var::K, Var::S}))
                g = upoly_gcd(g, to_upoly(coeff, weight_var));
            if (!g.is_zero() && g.degree() >= 1) {
                const RootSet rs = solve_upoly(squarefree_part(g));
                if (!rs.unresolved.empty())
                    throw ConsistencyError("point-mass condition with unresolved roots");
                weights = rs.roots;
            }
        }
        for (const auto& w : weights) {
            const ExtensionParams p = km_kind ? ExtensionParams(Scalar(0), w)
                                              : ExtensionParams(w, Scalar(1));
            const UPoly f = UPoly::monomial(Scalar(1), d);
            const Cocycle c = km_kind ? make_delta_km(p, f) : make_delta_m0(p, f);
            if (!residual_window(c, 5).empty())
                throw ConsistencyError("point-mass identity disagrees with the residual");
            if (!is_trivial(c)) out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::vector<Cocycle> delta_km_scan(unsigned max_deg) {
    return point_mass_scan(max_deg, true, Scalar(1));
}

std::vector<Cocycle> delta_m0_scan(unsigned max_deg) {
    return point_mass_scan(max_deg, false, Scalar(0));
}

RecurrenceReport recurrence_check(const Scalar& alpha, unsigned upto) {
    if (upto < 5)
        throw DegenerateInput("recurrence window needs at least five points");
    RecurrenceReport rep;
    rep.alpha = alpha;
    rep.upto = upto;

    // Direct window solve of the defining identity over mu(1 .. upto).
    Mat m;
    for (long k = 1; 2 * k + 1 <= static_cast<long>(upto); ++k)
        for (long s = k + 1; k + s <= static_cast<long>(upto); ++s) {
            std::vector<Scalar> row(upto, Scalar(0));
            row[k + s - 1] = row[k + s - 1] + Scalar(s - k);
            row[k - 1] = row[k - 1] + Scalar(k) + alpha * Scalar(s);
            row[s - 1] = row[s - 1] - (Scalar(s) + alpha * Scalar(k));
            m.append_row(row);
        }
    const auto basis = nullspace(m);
    rep.solution_dim = static_cast<unsigned>(basis.size());

    // Regenerate each solution from its first two values.
    rep.recurrence_matches = true;
    for (const auto& v : basis) {
        std::vector<Scalar> w(upto, Scalar(0));
        w[0] = v[0];
        w[1] = v[1];
        for (unsigned q = 2; q < upto; ++q)
            w[q] = ((Scalar(static_cast<long>(q)) + alpha) * w[q - 1] -
                    (Scalar(1) + Scalar(static_cast<long>(q)) * alpha) * w[0]) *
                   Scalar(Rat(1, q - 1));
        if (w != v) rep.recurrence_matches = false;
    }

    // Least polynomial degree fitting every solution.
    if (!basis.empty()) {
        for (unsigned d = 0; d < upto && rep.max_poly_degree < 0; ++d) {
            Mat vand;
            for (unsigned q = 1; q <= upto; ++q) {
                std::vector<Scalar> row(d + 1);
                for (unsigned e = 0; e <= d; ++e)
                    row[e] = scalar_pow(Scalar(static_cast<long>(q)), e);
                vand.append_row(row);
            }
            bool all = true;
            for (const auto& v : basis)
                if (!solve(vand, v)) {
                    all = false;
                    break;
                }
            if (all) rep.max_poly_degree = static_cast<int>(d);
        }
    }
    return rep;
}

std::vector<Cocycle> invm_classes() {
    std::vector<Cocycle> out;
    for (unsigned n = 1; n <= 8; ++n) {
        const Scalar alpha = Scalar(static_cast<long>(n) - 1);
        const H1Report source = h1_poly(n, ExtensionParams(alpha, Scalar(0)));
        const ExtensionParams lifted(alpha, Scalar(1), Scalar(Rat(1, 2)));
        for (const auto& rep : source.representatives) {
            Cocycle lift = make_inv_m(lifted, rep.poly, UPoly(0));
            if (lift.kind() != CocycleKind::InvM) continue;  // purely polynomial lift
            if (!residual_window(lift, 6).empty()) continue;
            if (is_trivial(lift)) continue;
            const Scalar lead = lift.invm.leading();
            if (!lead.is_one()) {
                const Scalar inv = lead.inv();
                lift.poly *= inv;
                lift.invm *= inv;
                lift.invk *= inv;
                lift.dkm *= inv;
                lift.dm0 *= inv;
            }
            out.push_back(std::move(lift));
        }
    }
    return out;
}

}  // namespace wittex
