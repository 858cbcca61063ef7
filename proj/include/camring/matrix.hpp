#ifndef CAMRING_MATRIX_HPP
#define CAMRING_MATRIX_HPP

#include <optional>
#include <vector>

#include "camring/rational.hpp"

namespace camring {

/// Dense matrix over the rationals.  Dimensions are fixed at construction;
/// entries are exact.  Zero-row and zero-column matrices are legal (they
/// show up as bases of the zero subspace and in dimension-0 quotients).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static QMatrix vstack(const QMatrix& top, const QMatrix& bottom);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Rat> row(int i) const;

    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    QMatrix transposed() const;

    bool operator==(const QMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_; }
    bool operator!=(const QMatrix& rhs) const { return !(*this == rhs); }
    bool operator<(const QMatrix& rhs) const { return cmp(*this, rhs) < 0; }

    /// Total order: by shape, then entries lexicographically.
    static int cmp(const QMatrix& a, const QMatrix& b);

    bool is_zero() const;

    /// Unique reduced row echelon form with zero rows dropped.  The row
    /// space is preserved; pivot entries are 1 and pivot columns strictly
    /// increase.
    QMatrix rref() const;

    int rank() const;

    /// Canonical row basis of { x : M x = 0 } (x a column vector), returned
    /// as an rref matrix with cols() columns.
    QMatrix kernel() const;

    /// Inverse of a square matrix, or nullopt when singular.
    std::optional<QMatrix> inverse() const;

    /// One solution x of M x = rhs, or nullopt when inconsistent.  Free
    /// variables are set to zero, which makes the result deterministic.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> e_;
};

} // namespace camring

#endif
