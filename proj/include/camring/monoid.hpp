#ifndef CAMRING_MONOID_HPP
#define CAMRING_MONOID_HPP

#include <compare>
#include <vector>

#include "camring/reflection.hpp"

namespace camring {

/// One letter (X, μ): an irreducible flat X ≠ t with an integer weight
/// μ ≥ codim X.
struct Letter {
    int flat = -1;
    unsigned long mu = 0;
    auto operator<=>(const Letter&) const = default;
};

/// A normal-form word of the graded monoid on weighted irreducible flats:
/// a multiset of letters, sorted, with no sub-multiset whose flats intersect
/// in an irreducible flat.  The empty word is the identity.  Normal forms
/// never repeat a flat (a repeated flat always merges with itself).
struct MonoidElement {
    std::vector<Letter> letters;

    unsigned long weight() const;
    int degree() const { return static_cast<int>(2 * weight()); }

    bool operator==(const MonoidElement&) const = default;
    /// Total order: by degree, then letters lexicographically.
    bool operator<(const MonoidElement& rhs) const;
};

/// Validated single-letter element.
MonoidElement make_letter(const IntersectionPoset& poset, int flat, unsigned long mu);

/// Merges to a fixpoint of the defining relation: any sub-multiset of
/// letters whose flats intersect in an irreducible flat collapses to
/// (intersection, weight sum).  Pairs are merged first in canonical order;
/// larger sub-multisets are swept afterwards.
MonoidElement normalize(const IntersectionPoset& poset, std::vector<Letter> letters);

MonoidElement multiply(const IntersectionPoset& poset, const MonoidElement& a, const MonoidElement& b);

/// Intersection of all letter flats; t for the identity.
int support(const IntersectionPoset& poset, const MonoidElement& e);

/// Relabels every letter flat by w⁻¹·X and renormalizes (a right action).
MonoidElement w_act(const IntersectionPoset& poset, const ReflectionGroup& group, int w,
                    const MonoidElement& e);

/// All normal forms of degree 2k for k = 0..max_degree/2, each list in
/// canonical order.
std::vector<std::vector<MonoidElement>> enumerate_by_degree(const IntersectionPoset& poset, int max_degree);

/// W-orbits of normal forms per degree; orbits sorted by least member.
std::vector<std::vector<std::vector<MonoidElement>>>
orbit_enumerate(const IntersectionPoset& poset, const ReflectionGroup& group, int max_degree);

/// Word in the alternative presentation on all flats of L(A): multiset of
/// (flat, multiplicity); t is excluded (it acts as the identity).
struct LchWord {
    std::vector<std::pair<int, unsigned long>> letters; // sorted by flat
    bool operator==(const LchWord&) const = default;
};

/// φ(X, μ) = a^(μ - codim X) · X with a the least hyperplane of A_X.
LchWord to_lch(const IntersectionPoset& poset, const MonoidElement& e);

/// ψ: each flat factors into (X_i, codim X_i) over the irreducible
/// components of its sub-arrangement; the results are monoid-multiplied.
MonoidElement from_lch(const IntersectionPoset& poset, const LchWord& word);

} // namespace camring

#endif
