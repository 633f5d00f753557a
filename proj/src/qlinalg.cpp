#include "rdim/qlinalg.hpp"

#include <cassert>

namespace rdim {

QMatrix QMatrix::identity(size_t n)
{
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
    assert(cols_ == o.rows_);
    QMatrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0)
                continue;
            for (size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const
{
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    QMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] + o.data_[i];
    return out;
}

QMatrix QMatrix::augment(const QMatrix& o) const
{
    assert(rows_ == o.rows_);
    QMatrix out(rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j);
        for (size_t j = 0; j < o.cols_; ++j)
            out.at(i, cols_ + j) = o.at(i, j);
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMatrix& m)
{
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            Rational f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t rank(QMatrix m) { return rref(m).size(); }

QMatrix kernel_basis(QMatrix m)
{
    size_t n = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    QMatrix basis(n, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            basis.at(pivots[r], k) = -m.at(r, fc);
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(QMatrix m, std::vector<Rational> b)
{
    assert(b.size() == m.rows());
    QMatrix rhs(m.rows(), 1);
    for (size_t i = 0; i < b.size(); ++i)
        rhs.at(i, 0) = b[i];
    QMatrix aug = m.augment(rhs);
    std::vector<size_t> pivots = rref(aug);
    // inconsistent iff a pivot lands in the rhs column
    for (size_t c : pivots)
        if (c == m.cols())
            return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

} // namespace rdim
