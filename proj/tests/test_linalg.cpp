#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittex/linalg.hpp"

using namespace wittex;

namespace {

std::mt19937_64 rng(0x11A15EEDuLL);

Mat random_mat(std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> val(-5, 5);
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(val(rng));
    return m;
}

bool is_zero_vec(const std::vector<Scalar>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> mat_apply(const Mat& m, const std::vector<Scalar>& x) {
    std::vector<Scalar> y(m.rows(), Scalar(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
    return y;
}

}  // namespace

TEST_CASE("rref, rank, identity") {
    Mat m(2, 3);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(2);
    m.at(0, 2) = Scalar(3);
    m.at(1, 0) = Scalar(2);
    m.at(1, 1) = Scalar(4);
    m.at(1, 2) = Scalar(6);
    CHECK(rank(m) == 1);
    CHECK(rank(Mat::identity(4)) == 4);
    CHECK(rank(Mat(3, 3)) == 0);

    Mat id = Mat::identity(3);
    auto piv = rref(id);
    CHECK(piv == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        Mat m = random_mat(dim(rng), dim(rng));
        auto basis = nullspace(m);
        CHECK(rank(m) + basis.size() == m.cols());
        for (const auto& v : basis) {
            CHECK_FALSE(is_zero_vec(v));
            CHECK(is_zero_vec(mat_apply(m, v)));
        }
    }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        Mat m = random_mat(dim(rng), dim(rng));
        std::uniform_int_distribution<long> val(-4, 4);
        std::vector<Scalar> x0(m.cols());
        for (auto& v : x0) v = Scalar(val(rng));
        std::vector<Scalar> b = mat_apply(m, x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(mat_apply(m, *x) == b);
    }
    Mat m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(1, 0) = Scalar(1);
    CHECK_FALSE(solve(m, {Scalar(1), Scalar(2)}).has_value());
    CHECK(solve(m, {Scalar(1), Scalar(1)}).has_value());
    CHECK_THROWS_AS(solve(m, {Scalar(1)}), DegenerateInput);
}

TEST_CASE("quadratic-extension entries") {
    Mat m(2, 2);
    m.at(0, 0) = Scalar(Rat(0), Rat(1), 2);  // sqrt(2)
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(1);
    m.at(1, 1) = Scalar(Rat(0), Rat(1, 2), 2);  // sqrt(2)/2 = 1/sqrt(2)
    CHECK(rank(m) == 1);  // det = sqrt(2)*sqrt(2)/2 - 1 = 0
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(is_zero_vec(mat_apply(m, basis[0])));
}

TEST_CASE("fraction-free elimination over univariate entries") {
    PolyMat<UPoly> m(2, 2);
    m.at(0, 0) = UPoly::x();
    m.at(0, 1) = UPoly(1);
    m.at(1, 0) = UPoly(1);
    m.at(1, 1) = UPoly::x();
    auto res = bareiss_eliminate(m);
    CHECK(res.rank == 2);
    // last pivot is +-(x^2 - 1)
    UPoly expect = UPoly::x() * UPoly::x() - UPoly(1);
    CHECK((res.last_pivot == expect || res.last_pivot == -expect));
    // rank drops exactly at the roots of the final minor
    CHECK(rank(eval_matrix(m, Scalar(1))) == 1);
    CHECK(rank(eval_matrix(m, Scalar(-1))) == 1);
    CHECK(rank(eval_matrix(m, Scalar(3))) == 2);

    PolyMat<UPoly> deficient(2, 2);
    deficient.at(0, 0) = UPoly::x();
    deficient.at(0, 1) = UPoly::x();
    deficient.at(1, 0) = UPoly::x();
    deficient.at(1, 1) = UPoly::x();
    auto res2 = bareiss_eliminate(deficient);
    CHECK(res2.rank == 1);
    CHECK(res2.last_pivot == UPoly::x());

    PolyMat<UPoly> skip(2, 2);
    skip.at(0, 1) = UPoly::x();
    skip.at(1, 1) = UPoly(1);
    auto res3 = bareiss_eliminate(skip);
    CHECK(res3.rank == 1);

    CHECK(bareiss_eliminate(PolyMat<UPoly>(3, 3)).rank == 0);
}

TEST_CASE("fraction-free elimination over multivariate entries") {
    const MPoly K = MPoly::var(Var::K), M = MPoly::var(Var::M);
    PolyMat<MPoly> m(2, 2);
    m.at(0, 0) = K;
    m.at(0, 1) = M;
    m.at(1, 0) = M;
    m.at(1, 1) = K;
    auto res = bareiss_eliminate(m);
    CHECK(res.rank == 2);
    MPoly expect = K * K - M * M;
    CHECK((res.last_pivot == expect || res.last_pivot == -expect));
    CHECK(rank(eval_matrix(m, {{Var::K, Scalar(2)}, {Var::M, Scalar(2)}})) == 1);
    CHECK(rank(eval_matrix(m, {{Var::K, Scalar(2)}, {Var::M, Scalar(5)}})) == 2);
}

TEST_CASE("generic elimination rank agrees with specialization off the minor roots") {
    std::uniform_int_distribution<int> cdist(-3, 3), ddist(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        PolyMat<UPoly> m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                std::vector<Scalar> cs;
                for (int d = ddist(rng); d >= 0; --d) cs.push_back(Scalar(cdist(rng)));
                m.at(i, j) = UPoly(cs);
            }
        auto res = bareiss_eliminate(m);
        // Evaluate well away from any root of the reported minor.
        Scalar far(1000003);
        if (!res.last_pivot.is_zero() && res.last_pivot.eval(far).is_zero()) continue;
        CHECK(rank(eval_matrix(m, far)) == res.rank);
    }
}
