#ifndef CAMRING_HIGGS_HPP
#define CAMRING_HIGGS_HPP

#include "camring/strata.hpp"

namespace camring {

/// Root datum over Q: roots as covectors on t = Q^rank, coroots as vectors,
/// the Weyl group generated by the simple reflections, and its mirror
/// arrangement.  The character space cha T is coordinatized by fundamental
/// weights (duals of the coroots) completed to a basis by central
/// characters.
struct RootDatum {
    int rank = 0;
    std::vector<std::vector<Rat>> roots;   // covectors; closed under negation
    std::vector<std::vector<Rat>> coroots; // aligned with roots
    std::vector<int> positive;             // indices into roots
    std::vector<int> simple;               // indices into roots
    std::vector<std::vector<Rat>> char_basis;

    /// ⟨α̌, χ⟩ inside χ̃ is multiplied by this scale.  The default 1 takes
    /// the pairing at face value; the "paper-sl2" convention scales by 2.
    Rat pairing_scale = Rat(1);
    /// Global sign s of χ̃: stratum relations read χ - χ^w + s·χ̃^X_w and
    /// the twisted action reads χ·w = -s·χ̃_w + χ^w.  The two occurrences
    /// are sign-coupled; flipping s flips both coherently and leaves every
    /// graded dimension unchanged.
    int chi_sign = 1;

    ReflectionGroup weyl;
    IntersectionPoset poset;
    std::vector<int> mirror_of_positive;    // position in `positive` -> hyperplane
    std::map<std::vector<Rat>, int> root_index;
    std::vector<bool> root_positive;        // aligned with roots

    static RootDatum sl2(const Rat& pairing_scale = Rat(1), int chi_sign = 1);
    static RootDatum sl3(const Rat& pairing_scale = Rat(1), int chi_sign = 1);
    static RootDatum custom(const std::vector<std::vector<Rat>>& simple_roots,
                            const std::vector<std::vector<Rat>>& simple_coroots,
                            const Rat& pairing_scale = Rat(1), int chi_sign = 1);

    /// Pairing of the coroot of positive root p with the covector chi.
    Rat pair(int p, const std::vector<Rat>& chi) const;
    /// χ^w = χ ∘ w as a covector.
    std::vector<Rat> chi_action(int w, const std::vector<Rat>& chi) const;
    /// Coordinates of a covector over char_basis.
    std::vector<Rat> char_coords(const std::vector<Rat>& chi) const;
};

/// Positions within `positive` of the roots made negative by w.
std::vector<int> inversion_set(const RootDatum& datum, int w);
/// Additionally requires the mirror to contain the flat.
std::vector<int> inversion_set_at(const RootDatum& datum, int w, int flat);

/// χ̃_w = Σ_{α ∈ Φ_w} scale·⟨α̌, χ⟩ c(a_α), a degree-2 class.
RingElement tilde_chi(const RootDatum& datum, int w, const std::vector<Rat>& chi);

/// Restriction of χ̃_w to one stratum: mirrors outside A_X drop out, the
/// rest land on their component variables.
StratumPoly tilde_chi_at(const RootDatum& datum, int flat, int w, const std::vector<Rat>& chi);

/// Presentation ring of one stratum of the pointed Higgs stack: polynomial
/// ring on the component variables of A_X and the character basis, modulo
/// the degree-1 relations (χ - χ^w + s·χ̃^X_w)|_X over w ∈ W_X.  The
/// eliminated (pivot) variables and the free complement are chosen by rref
/// in canonical variable order.
struct HiggsStratumRing {
    int flat = -1;
    int nu = 0;   // component variables, listed first
    int nchi = 0; // character variables
    QMatrix relations; // one row per (w, basis character), over nu+nchi vars
    QMatrix reduced;   // rref of relations
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot;

    int var_count() const { return nu + nchi; }
    /// Substitutes the pivot variables out; the result involves free
    /// variables only.
    StratumPoly reduce(const StratumPoly& p) const;
};

HiggsStratumRing stratum_relations(const RootDatum& datum, int flat);

/// Element of H*(C) ⊗ Sym(cha T): monoid elements paired with character
/// monomials (exponents over char_basis).
struct HiggsClass {
    std::map<std::pair<MonoidElement, Exponents>, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const; // cohomological; terms must be homogeneous
};

HiggsClass higgs_basis(const MonoidElement& e, const Exponents& chi_exp, const Rat& c = Rat(1));
HiggsClass higgs_add(const HiggsClass& a, const HiggsClass& b);
HiggsClass higgs_scale(const Rat& c, const HiggsClass& a);
HiggsClass higgs_multiply(const RootDatum& datum, const HiggsClass& a, const HiggsClass& b);

/// Image of the class in the stratum ring of a flat, reduced modulo the
/// stratum relations.
StratumPoly higgs_restrict(const RootDatum& datum, const HiggsStratumRing& ring, const HiggsClass& h);

/// Equality of images across all strata (the computational model of
/// equality in H*(H_C)).
bool higgs_equal(const RootDatum& datum, const HiggsClass& a, const HiggsClass& b);

/// The ideal generator X ⊗ (χ_i - χ_i^w + s·χ̃_w) for a flat X and w ∈ W_X.
HiggsClass ideal_generator(const RootDatum& datum, int flat, int w, int chi_index);

/// Twisted right action: (a ⊗ 1)·w = (a·w) ⊗ 1 and
/// (1 ⊗ χ)·w = -s·χ̃_w ⊗ 1 + 1 ⊗ χ^w, extended multiplicatively.
HiggsClass twisted_action(const RootDatum& datum, int w, const HiggsClass& h);

/// dims[k] = dim H^{2k} of the pointed Higgs stack: the rank of the span of
/// all basis-class images in the direct sum of the stratum rings.
std::vector<unsigned long long> hc_betti(const RootDatum& datum, int max_degree);

/// dims[k] = dim of the W-invariants of the degree-2k image space under the
/// twisted action.  Verifies the group law of the induced action matrices.
std::vector<unsigned long long> h_betti(const RootDatum& datum, int max_degree);

} // namespace camring

#endif
