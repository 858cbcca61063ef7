#ifndef CAMRING_STRATA_HPP
#define CAMRING_STRATA_HPP

#include "camring/monoid.hpp"

namespace camring {

/// Exponent vector of a monomial in the component variables u_B of one
/// stratum; length = number of irreducible components of A_X.
using Exponents = std::vector<unsigned>;

/// Polynomial in the component variables of a single stratum ring.
struct StratumPoly {
    std::map<Exponents, Rat> terms; // zero coefficients never stored

    bool is_zero() const { return terms.empty(); }
    bool operator==(const StratumPoly&) const = default;

    void add_term(const Exponents& e, const Rat& c);
    StratumPoly operator+(const StratumPoly& rhs) const;
    StratumPoly operator*(const StratumPoly& rhs) const;
    StratumPoly scaled(const Rat& c) const;
};

enum class Coeff { Q, Z };

/// Element of the graded ring: a finite linear combination of monoid normal
/// forms.  Equality is equality of restriction vectors (which coincides with
/// combo equality; the acceptance suite checks the model's faithfulness).
struct RingElement {
    Coeff coeff = Coeff::Q;
    std::map<MonoidElement, Rat> combo;

    bool is_zero() const { return combo.empty(); }
};

/// Restriction of a basis monoid element to the stratum of a flat: zero
/// unless the flat lies inside every letter flat, else the monomial with
/// each letter contributing its weight to the component variable absorbing
/// its sub-arrangement.
StratumPoly restrict_basis_element(const IntersectionPoset& poset, const MonoidElement& e, int flat);

/// Images in every stratum ring, indexed by flat.  Faithful by the model:
/// two elements are equal exactly when their vectors agree.
std::vector<StratumPoly> restriction_vector(const IntersectionPoset& poset, const RingElement& x);

RingElement ring_zero(Coeff c = Coeff::Q);
RingElement ring_one(Coeff c = Coeff::Q);
RingElement ring_basis(const MonoidElement& e, Coeff c = Coeff::Q);
RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement scalar_multiply(const Rat& c, const RingElement& x);
/// Multiplies through the monoid and verifies the result against the
/// stratum-wise product of the operands' restriction vectors.
RingElement ring_multiply(const IntersectionPoset& poset, const RingElement& x, const RingElement& y);
bool ring_equal(const IntersectionPoset& poset, const RingElement& x, const RingElement& y);
RingElement ring_w_act(const IntersectionPoset& poset, const ReflectionGroup& group, int w,
                       const RingElement& x);

/// c(a): restricts to the component variable absorbing a on strata with
/// a ∈ A_X, to zero elsewhere.
RingElement class_of_hyperplane(const IntersectionPoset& poset, int hyperplane, Coeff c = Coeff::Q);

/// c(X, μ) for X irreducible, μ ≥ codim X; c(X) = c(X, codim X).
RingElement class_of(const IntersectionPoset& poset, int flat, unsigned long mu, Coeff c = Coeff::Q);

/// Fundamental class of an arbitrary flat: the product of c over the
/// irreducible components of its sub-arrangement.
RingElement class_of_closed_stratum(const IntersectionPoset& poset, int flat, Coeff c = Coeff::Q);

/// Betti numbers of the pointed stack: dims[k] = dim H^{2k}, from the
/// stratum formula (monomial counts per flat).
std::vector<unsigned long long> betti_C(const IntersectionPoset& poset, int max_degree);

/// Betti numbers of the unpointed stack via the orbit/invariant formula:
/// monomial-orbit counts of the component-permutation action of
/// stab(X)/W_X, one term per flat orbit.
std::vector<unsigned long long> betti_M(const IntersectionPoset& poset, const ReflectionGroup& group,
                                        int max_degree);

/// Orbit sums spanning the degree-d invariants.  Integer coefficients are
/// refused: the invariant ring needs #W invertible.
std::vector<RingElement> invariant_basis(const IntersectionPoset& poset, const ReflectionGroup& group,
                                         int degree, Coeff c = Coeff::Q);

/// The restriction map onto the ring of the sub-arrangement A_X, realized
/// as its own arrangement.  Kills every basis element whose support flat
/// does not contain X; the rest transport letter-by-letter.
struct InducedRestriction {
    int base_flat = -1;
    IntersectionPoset sub;
    std::vector<int> sub_to_parent;          // sub flat id -> parent flat id
    std::vector<int> parent_to_sub;          // -1 where undefined
    std::vector<int> hyperplane_to_parent;   // sub hyperplane -> parent hyperplane

    RingElement apply(const IntersectionPoset& parent, const RingElement& x) const;
    bool kills(const IntersectionPoset& parent, const MonoidElement& e) const;
};

InducedRestriction restriction_to_induced(const IntersectionPoset& poset, int flat);

/// Transports an element between posets of the same ambient space by
/// subspace identity of the letter flats.
MonoidElement transport(const IntersectionPoset& from, const IntersectionPoset& to, const MonoidElement& e);

/// Coefficients of p(r) = ∏_a (1 + c(a) r), index = power of r.
std::vector<RingElement> whitney_polynomial(const IntersectionPoset& poset);

/// For flats Y, Z with A_{Y∩Z} = A_Y ⊔ A_Z and additive codimension:
/// restricts p to the ring of A_{Y∩Z} and checks it against the product of
/// the factors' polynomials.  Throws when the hypothesis fails.
bool whitney_check(const IntersectionPoset& poset, int flat_y, int flat_z);

struct StratumInfo {
    int flat = -1;
    int torus_rank = 0;
    unsigned long component_group_order = 1;
    int codim = 0;
};

StratumInfo stratum_info(const IntersectionPoset& poset, const ReflectionGroup& group, int flat);

struct PointClass {
    std::vector<int> orbit;
    StratumInfo info;
};

/// Isomorphism classes of cameral covers of a point: one per flat orbit.
std::vector<PointClass> point_classification(const IntersectionPoset& poset, const ReflectionGroup& group);

unsigned long smoothing_obstruction_order(const IntersectionPoset& poset, const ReflectionGroup& group,
                                          int flat);

} // namespace camring

#endif
