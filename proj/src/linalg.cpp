#include "wittex/linalg.hpp"

namespace wittex {

void Mat::append_row(const std::vector<Scalar>& row) {
    if (c_ == 0 && r_ == 0) c_ = row.size();
    if (row.size() != c_) throw DegenerateInput("appended row of wrong length");
    a_.insert(a_.end(), row.begin(), row.end());
    ++r_;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols() != y.rows()) throw DegenerateInput("matrix size mismatch in product");
    Mat r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DegenerateInput("matrix size mismatch in difference");
    Mat r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
    return r;
}

bool mat_is_zero(const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Scalar inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

std::vector<std::vector<Scalar>> nullspace(const Mat& m_in) {
    Mat m = m_in;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<std::vector<Scalar>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[col] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw DegenerateInput("right-hand side of wrong length");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

Mat eval_matrix(const PolyMat<UPoly>& m, const Scalar& x) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).eval(x);
    return out;
}

Mat eval_matrix(const PolyMat<MPoly>& m, const std::map<Var, Scalar>& point) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).eval(point);
    return out;
}

}  // namespace wittex
