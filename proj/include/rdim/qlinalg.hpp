#ifndef RDIM_QLINALG_HPP
#define RDIM_QLINALG_HPP

#include <optional>
#include <vector>

#include "rdim/rational.hpp"

namespace rdim {

/// Dense matrix over the rationals, row major. Small sizes only; everything
/// here is exact Gauss elimination.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
    {
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    static QMatrix identity(size_t n);
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// Horizontal concatenation [this | o].
    QMatrix augment(const QMatrix& o) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

size_t rank(QMatrix m);

/// Basis of the right kernel {v : M v = 0}, one column per basis vector.
QMatrix kernel_basis(QMatrix m);

/// One solution of M x = b, if any.
std::optional<std::vector<Rational>> solve(QMatrix m, std::vector<Rational> b);

/// Rank of the composite map represented by images: given a list of column
/// spaces, rank of [A | B] minus rank of B etc. are left to callers; this
/// header stays minimal on purpose.

} // namespace rdim

#endif
