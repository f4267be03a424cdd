#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wittex/poly.hpp"

namespace wittex {

// Dense matrix over exact scalars, row-major.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    // Appends a row; fixes the column count on first use.
    void append_row(const std::vector<Scalar>& row);

    static Mat identity(std::size_t n);

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
bool mat_is_zero(const Mat& m);

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

// Basis of {x : m x = 0}.  Deterministic: one vector per free column in
// ascending order, with that free coordinate set to 1.
std::vector<std::vector<Scalar>> nullspace(const Mat& m);

// A particular solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b);

// Dense matrix with entries in a polynomial ring R (UPoly or MPoly).
template <typename R>
class PolyMat {
  public:
    PolyMat() = default;
    PolyMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    R& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const R& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    void append_row(std::vector<R> row) {
        if (c_ == 0 && r_ == 0) c_ = row.size();
        if (row.size() != c_)
            throw DegenerateInput("appended row of wrong length");
        for (auto& v : row) a_.push_back(std::move(v));
        ++r_;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < c_; ++c) std::swap(at(i, c), at(j, c));
    }

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<R> a_;
};

template <typename R>
struct BareissResult {
    std::size_t rank = 0;
    // Pivot positions (row, column) in the row-swapped matrix, columns
    // strictly increasing.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    // Up to sign, the rank-sized minor spanned by the pivot rows/columns;
    // its zeros contain every specialization where the rank drops.  1 for
    // the zero matrix.
    R last_pivot = R(1);
};

// Fraction-free Gaussian elimination over an integral domain.  Pivots are
// chosen deterministically: leftmost column with a nonzero entry, topmost
// such row.
template <typename R>
BareissResult<R> bareiss_eliminate(PolyMat<R> m) {
    BareissResult<R> res;
    R prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) m.swap_rows(p, row);
        const R pivot = m.at(row, col);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = divexact(pivot * m.at(i, j) - m.at(i, col) * m.at(row, j),
                                      prev);
            m.at(i, col) = R(0);
        }
        res.pivots.emplace_back(row, col);
        res.last_pivot = pivot;
        prev = pivot;
        ++row;
    }
    res.rank = res.pivots.size();
    return res;
}

// Specializations of polynomial matrices at a point.
Mat eval_matrix(const PolyMat<UPoly>& m, const Scalar& x);
Mat eval_matrix(const PolyMat<MPoly>& m, const std::map<Var, Scalar>& point);

}  // namespace wittex
