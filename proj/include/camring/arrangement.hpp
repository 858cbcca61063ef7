#ifndef CAMRING_ARRANGEMENT_HPP
#define CAMRING_ARRANGEMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "camring/subspace.hpp"

namespace camring {

/// Finite central hyperplane arrangement in Q^n.  Hyperplanes are given by
/// normal covectors and stored as codimension-1 subspaces (their kernels).
struct Arrangement {
    int ambient_dim = 0;
    std::vector<Subspace> hyperplanes;
    std::vector<std::vector<Rat>> normals; // canonical: leading coefficient 1
    std::vector<std::string> labels;

    /// Validates: nonzero normals, codimension exactly 1, no duplicates.
    static Arrangement from_normals(int ambient_dim, std::vector<std::vector<Rat>> normals,
                                    std::vector<std::string> labels = {});

    size_t size() const { return hyperplanes.size(); }

    /// Intersection of all hyperplanes (the whole space for an empty
    /// arrangement).
    Subspace center() const;

    /// codim A = codimension of the center.
    int codim() const { return center().codim(); }

    bool essential() const { return codim() == ambient_dim; }

    /// Indices of the hyperplanes containing x (the sub-arrangement A_X).
    std::vector<int> subarrangement_at(const Subspace& x) const;
};

/// Partition of `subset` into the connected components of the linear matroid
/// of its normals, computed from the fundamental circuits of one fixed basis.
/// Blocks are sorted; an empty subset has no components.
std::vector<std::vector<int>> matroid_components(const Arrangement& arr, const std::vector<int>& subset);

/// One block and nonempty.
bool is_irreducible(const Arrangement& arr);

/// Induced essential arrangement in t / center, together with the quotient
/// map (a (dim - dim center) × dim matrix).
std::pair<Arrangement, QMatrix> essentialize(const Arrangement& arr);

/// A flat X of L(A): canonical subspace, its sub-arrangement A_X and the
/// irreducible decomposition of A_X.
struct Flat {
    Subspace subspace;
    int codim = 0;
    std::vector<int> hyperplanes;            // A_X, ascending
    std::vector<std::vector<int>> components; // partition of A_X
    bool irreducible = false;

    /// Block index within `components` of a hyperplane of A_X.
    int block_of(int hyperplane) const;
};

/// The intersection poset L(A): every intersection of hyperplanes, ordered
/// X ≤ Y iff X ⊇ Y (reverse inclusion).  Flats are listed in deterministic
/// order (codimension, then subspace order) so flat 0 is always t.
/// Immutable after construction; the full join table is precomputed, so
/// queries are safe to share across threads.
class IntersectionPoset {
public:
    IntersectionPoset() : IntersectionPoset(Arrangement{}) {}
    explicit IntersectionPoset(Arrangement arr);

    const Arrangement& arrangement() const { return arr_; }
    int size() const { return static_cast<int>(flats_.size()); }
    const Flat& flat(int i) const { return flats_[i]; }

    std::optional<int> find(const Subspace& s) const;

    /// X ≤ Y iff X ⊇ Y.
    bool leq(int i, int j) const { return flats_[i].subspace.contains(flats_[j].subspace); }

    /// Flat of the subspace intersection (the poset join).
    int join(int i, int j) const { return join_[static_cast<size_t>(i) * flats_.size() + j]; }

private:
    Arrangement arr_;
    std::vector<Flat> flats_;
    std::map<Subspace, int> index_;
    std::vector<int> join_;
};

} // namespace camring

#endif
