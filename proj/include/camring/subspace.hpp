#ifndef CAMRING_SUBSPACE_HPP
#define CAMRING_SUBSPACE_HPP

#include "camring/matrix.hpp"

namespace camring {

/// Linear subspace of Q^n in canonical form: the basis is the unique rref of
/// any spanning set, so two subspaces are equal exactly when their bases are
/// entry-wise equal.  This is what makes flats hashable and orderable.
class Subspace {
public:
    Subspace() = default;

    /// Span of the rows of `rows` inside Q^ambient.
    static Subspace span_rows(int ambient, const QMatrix& rows);
    static Subspace zero(int ambient);
    static Subspace full(int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    int codim() const { return ambient_ - basis_.rows(); }

    const QMatrix& basis() const { return basis_; }

    /// this ⊇ other
    bool contains(const Subspace& other) const;
    bool contains_vector(const std::vector<Rat>& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// { f in the dual space : f|_this = 0 }, in dual coordinates.
    /// An inclusion-reversing involution.
    Subspace annihilator() const;

    /// Image under the linear map with matrix m (columns act on coordinates).
    Subspace apply(const QMatrix& m) const;

    bool operator==(const Subspace& rhs) const { return ambient_ == rhs.ambient_ && basis_ == rhs.basis_; }
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

    /// Deterministic total order: codimension first, then lexicographic
    /// comparison of rref entries.  Used for all downstream tie-breaking.
    static int cmp(const Subspace& a, const Subspace& b);
    bool operator<(const Subspace& rhs) const { return cmp(*this, rhs) < 0; }

private:
    int ambient_ = 0;
    QMatrix basis_; // rref, zero rows dropped

    void check_same_ambient(const Subspace& other) const;
};

} // namespace camring

#endif
