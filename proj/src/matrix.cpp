#include "camring/matrix.hpp"

#include "camring/errors.hpp"

namespace camring {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty())
        return QMatrix(0, 0);
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw ValidationError("ragged row lengths in matrix literal");
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::vstack(const QMatrix& top, const QMatrix& bottom) {
    if (top.rows() == 0)
        return bottom;
    if (bottom.rows() == 0)
        return top;
    if (top.cols() != bottom.cols())
        throw ValidationError("vstack: column count mismatch");
    QMatrix m(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j)
            m.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j)
            m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

std::vector<Rat> QMatrix::row(int i) const {
    std::vector<Rat> r(cols_);
    for (int j = 0; j < cols_; ++j)
        r[j] = at(i, j);
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("matrix product: dimension mismatch");
    QMatrix m(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                m.at(i, j) += a * rhs.at(k, j);
        }
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("matrix difference: shape mismatch");
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        m.e_[i] = e_[i] - rhs.e_[i];
    return m;
}

QMatrix QMatrix::transposed() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

int QMatrix::cmp(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_)
        return a.rows_ < b.rows_ ? -1 : 1;
    if (a.cols_ != b.cols_)
        return a.cols_ < b.cols_ ? -1 : 1;
    for (size_t i = 0; i < a.e_.size(); ++i) {
        int c = ::cmp(a.e_[i], b.e_[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

bool QMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0)
            return false;
    return true;
}

QMatrix QMatrix::rref() const {
    QMatrix m = *this;
    int pivot_row = 0;
    for (int col = 0; col < m.cols_ && pivot_row < m.rows_; ++col) {
        int found = -1;
        for (int i = pivot_row; i < m.rows_; ++i)
            if (m.at(i, col) != 0) {
                found = i;
                break;
            }
        if (found < 0)
            continue;
        if (found != pivot_row)
            for (int j = 0; j < m.cols_; ++j)
                swap(m.at(found, j), m.at(pivot_row, j));
        Rat inv = 1 / m.at(pivot_row, col);
        for (int j = col; j < m.cols_; ++j)
            m.at(pivot_row, j) *= inv;
        for (int i = 0; i < m.rows_; ++i) {
            if (i == pivot_row)
                continue;
            Rat f = m.at(i, col);
            if (f == 0)
                continue;
            for (int j = col; j < m.cols_; ++j)
                m.at(i, j) -= f * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    QMatrix out(pivot_row, m.cols_);
    for (int i = 0; i < pivot_row; ++i)
        for (int j = 0; j < m.cols_; ++j)
            out.at(i, j) = m.at(i, j);
    return out;
}

int QMatrix::rank() const { return rref().rows(); }

QMatrix QMatrix::kernel() const {
    QMatrix r = rref();
    std::vector<int> pivot_col(r.rows());
    std::vector<bool> is_pivot(cols_, false);
    for (int i = 0; i < r.rows(); ++i) {
        int j = 0;
        while (r.at(i, j) == 0)
            ++j;
        pivot_col[i] = j;
        is_pivot[j] = true;
    }
    QMatrix basis(cols_ - r.rows(), cols_);
    int k = 0;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        basis.at(k, f) = 1;
        for (int i = 0; i < r.rows(); ++i)
            basis.at(k, pivot_col[i]) = -r.at(i, f);
        ++k;
    }
    return basis.rref();
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_)
        return std::nullopt;
    int n = rows_;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    QMatrix r = aug.rref();
    if (r.rows() != n)
        return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.at(i, j) != (i == j ? 1 : 0))
                return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = r.at(i, n + j);
    return inv;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& rhs) const {
    if (static_cast<int>(rhs.size()) != rows_)
        throw ValidationError("solve: right-hand side length mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    QMatrix r = aug.rref();
    std::vector<Rat> x(cols_);
    for (int i = 0; i < r.rows(); ++i) {
        int j = 0;
        while (j < cols_ && r.at(i, j) == 0)
            ++j;
        if (j == cols_)
            return std::nullopt; // inconsistent: 0 = 1 row
        // free variables are 0 and rref clears other pivot columns
        x[j] = r.at(i, cols_);
    }
    for (int i = 0; i < rows_; ++i) {
        Rat acc;
        for (int j = 0; j < cols_; ++j)
            acc += at(i, j) * x[j];
        if (acc != rhs[i])
            return std::nullopt;
    }
    return x;
}

} // namespace camring
