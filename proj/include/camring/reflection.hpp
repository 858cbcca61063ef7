#ifndef CAMRING_REFLECTION_HPP
#define CAMRING_REFLECTION_HPP

#include <map>
#include <vector>

#include "camring/arrangement.hpp"

namespace camring {

/// Stabilizer data of a flat X: the pointwise stabilizer W_X, the setwise
/// stabilizer stab(X) and the order of the component group stab(X)/W_X.
struct SubgroupData {
    int flat = -1;
    std::vector<int> pointwise; // W_X, element indices
    std::vector<int> setwise;   // stab(X)
    unsigned long component_group_order = 1;
};

/// Finite rational matrix group stored by its full element list, together
/// with its reflections and their mirror arrangement.  Elements are listed
/// in breadth-first closure order from the identity, so the indexing is
/// deterministic for fixed generators.
class ReflectionGroup {
public:
    /// Closure of the generators; throws BoundExceeded past `bound` elements
    /// and ValidationError for singular generators.  Groups that are not
    /// generated by their reflections are allowed but flagged.
    static ReflectionGroup generate(int dim, const std::vector<QMatrix>& gens, size_t bound = default_bound());

    /// Σn permuting the coordinates of Q^n (non-essential; the mirrors are
    /// the n(n-1)/2 hyperplanes x_i = x_j).
    static ReflectionGroup symmetric(int n);
    /// Signed permutations of Q^n (type B).
    static ReflectionGroup signed_permutation(int n);
    /// Signed permutations with an even number of sign changes (type D, n ≥ 2).
    static ReflectionGroup even_signed(int n);

    static size_t default_bound();

    int dim() const { return dim_; }
    size_t order() const { return elems_.size(); }
    const QMatrix& element(int i) const { return elems_[i]; }
    int identity() const { return 0; }
    int mul(int i, int j) const;
    int inverse(int i) const { return inv_[i]; }
    int index_of(const QMatrix& m) const;

    const std::vector<int>& generators() const { return gens_; }
    const std::vector<int>& reflections() const { return refl_; }
    bool reflection_generated() const { return reflection_generated_; }

    const Arrangement& mirror_arrangement() const { return mirrors_; }
    /// Hyperplane index of the k-th reflection's mirror.
    int mirror_of_reflection(int k) const { return mirror_of_[k]; }

    /// Image flat of w · X.  Throws if the group does not permute L(A).
    int act_flat(const IntersectionPoset& poset, int w, int flat) const;

    /// Elements fixing X pointwise.  Asserts the Steinberg property (W_X is
    /// generated by the reflections whose mirror contains X) and that the
    /// fixed space of W_X is exactly X; failure signals a non-reflection
    /// input.
    std::vector<int> pointwise_stabilizer(const IntersectionPoset& poset, int flat) const;

    /// Elements with w · X = X.
    std::vector<int> setwise_stabilizer(const IntersectionPoset& poset, int flat) const;

    SubgroupData subgroup_data(const IntersectionPoset& poset, int flat) const;

    /// Orbit partition of the poset, each orbit sorted, orbits ordered by
    /// least member.
    std::vector<std::vector<int>> orbits_on_flats(const IntersectionPoset& poset) const;

    /// Closure of a subset of elements inside this group.
    std::vector<int> subgroup_closure(const std::vector<int>& members) const;

private:
    int dim_ = 0;
    std::vector<QMatrix> elems_;
    std::map<QMatrix, int> index_;
    std::vector<int> gens_;
    std::vector<int> refl_;
    std::vector<int> inv_;
    std::vector<int> mirror_of_;
    Arrangement mirrors_;
    bool reflection_generated_ = true;
};

} // namespace camring

#endif
