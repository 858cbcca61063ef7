#include "camring/subspace.hpp"

#include "camring/errors.hpp"

namespace camring {

Subspace Subspace::span_rows(int ambient, const QMatrix& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw ValidationError("subspace basis width does not match ambient dimension");
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = rows.rows() > 0 ? rows.rref() : QMatrix(0, ambient);
    return s;
}

Subspace Subspace::zero(int ambient) { return span_rows(ambient, QMatrix(0, ambient)); }

Subspace Subspace::full(int ambient) { return span_rows(ambient, QMatrix::identity(ambient)); }

void Subspace::check_same_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw ValidationError("ambient-dimension mismatch between subspaces");
}

bool Subspace::contains(const Subspace& other) const {
    check_same_ambient(other);
    if (other.dim() > dim())
        return false;
    return QMatrix::vstack(basis_, other.basis_).rank() == dim();
}

bool Subspace::contains_vector(const std::vector<Rat>& v) const {
    QMatrix row(1, ambient_);
    for (int j = 0; j < ambient_; ++j)
        row.at(0, j) = v[j];
    if (row.is_zero())
        return true;
    return QMatrix::vstack(basis_, row).rank() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
    check_same_ambient(other);
    return span_rows(ambient_, QMatrix::vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    check_same_ambient(other);
    // u ∩ v = ann(ann u + ann v)
    return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::annihilator() const {
    if (dim() == 0)
        return full(ambient_);
    return span_rows(ambient_, basis_.kernel());
}

Subspace Subspace::apply(const QMatrix& m) const {
    if (m.cols() != ambient_)
        throw ValidationError("apply: matrix does not act on this ambient space");
    // rows are vectors; image row v ↦ v mᵀ, i.e. (m vᵀ)ᵀ
    return span_rows(m.rows(), basis_.rows() > 0 ? basis_ * m.transposed() : QMatrix(0, m.rows()));
}

int Subspace::cmp(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        return a.ambient_ < b.ambient_ ? -1 : 1;
    if (a.codim() != b.codim())
        return a.codim() < b.codim() ? -1 : 1;
    return QMatrix::cmp(a.basis_, b.basis_);
}

} // namespace camring
