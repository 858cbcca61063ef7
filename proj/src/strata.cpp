#include "camring/strata.hpp"

#include <algorithm>
#include <numeric>

#include "camring/errors.hpp"
#include "camring/threading.hpp"

namespace camring {

void StratumPoly::add_term(const Exponents& e, const Rat& c) {
    if (c == 0)
        return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms.erase(it);
}

StratumPoly StratumPoly::operator+(const StratumPoly& rhs) const {
    StratumPoly out = *this;
    for (const auto& [e, c] : rhs.terms)
        out.add_term(e, c);
    return out;
}

StratumPoly StratumPoly::operator*(const StratumPoly& rhs) const {
    StratumPoly out;
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : rhs.terms) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

StratumPoly StratumPoly::scaled(const Rat& c) const {
    StratumPoly out;
    if (c == 0)
        return out;
    for (const auto& [e, v] : terms)
        out.terms.emplace(e, v * c);
    return out;
}

StratumPoly restrict_basis_element(const IntersectionPoset& poset, const MonoidElement& e, int flat) {
    const Flat& fy = poset.flat(flat);
    Exponents exp(fy.components.size(), 0);
    for (const Letter& l : e.letters) {
        const Flat& fx = poset.flat(l.flat);
        if (!fx.subspace.contains(fy.subspace))
            return StratumPoly{};
        // all of A_X sits in one irreducible component of A_Y
        exp[fy.block_of(fx.hyperplanes.front())] += static_cast<unsigned>(l.mu);
    }
    StratumPoly p;
    p.terms.emplace(std::move(exp), Rat(1));
    return p;
}

std::vector<StratumPoly> restriction_vector(const IntersectionPoset& poset, const RingElement& x) {
    std::vector<StratumPoly> out(poset.size());
    for (const auto& [e, c] : x.combo)
        for (int f = 0; f < poset.size(); ++f)
            out[f] = out[f] + restrict_basis_element(poset, e, f).scaled(c);
    return out;
}

RingElement ring_zero(Coeff c) { return RingElement{c, {}}; }

RingElement ring_one(Coeff c) { return RingElement{c, {{MonoidElement{}, Rat(1)}}}; }

RingElement ring_basis(const MonoidElement& e, Coeff c) { return RingElement{c, {{e, Rat(1)}}}; }

namespace {

void check_same_coeff(const RingElement& x, const RingElement& y) {
    if (x.coeff != y.coeff)
        throw ValidationError("coefficient ring mismatch");
}

void check_coeff_value(Coeff ring, const Rat& c) {
    if (ring == Coeff::Z && !rat_is_integer(c))
        throw ValidationError("non-integer coefficient in an integer-coefficient ring element");
}

void add_to_combo(RingElement& x, const MonoidElement& e, const Rat& c) {
    if (c == 0)
        return;
    auto it = x.combo.find(e);
    if (it == x.combo.end()) {
        x.combo.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        x.combo.erase(it);
}

} // namespace

RingElement ring_add(const RingElement& x, const RingElement& y) {
    check_same_coeff(x, y);
    RingElement out = x;
    for (const auto& [e, c] : y.combo)
        add_to_combo(out, e, c);
    return out;
}

RingElement scalar_multiply(const Rat& c, const RingElement& x) {
    check_coeff_value(x.coeff, c);
    RingElement out{x.coeff, {}};
    if (c == 0)
        return out;
    for (const auto& [e, v] : x.combo)
        out.combo.emplace(e, v * c);
    return out;
}

RingElement ring_multiply(const IntersectionPoset& poset, const RingElement& x, const RingElement& y) {
    check_same_coeff(x, y);
    RingElement out{x.coeff, {}};
    for (const auto& [ea, ca] : x.combo)
        for (const auto& [eb, cb] : y.combo)
            add_to_combo(out, multiply(poset, ea, eb), ca * cb);

    // the restriction model is the ring's definition: the monoid route must
    // reproduce the stratum-wise product
    std::vector<StratumPoly> vx = restriction_vector(poset, x);
    std::vector<StratumPoly> vy = restriction_vector(poset, y);
    std::vector<StratumPoly> vout = restriction_vector(poset, out);
    for (int f = 0; f < poset.size(); ++f)
        if (!(vx[f] * vy[f] == vout[f]))
            throw std::logic_error("monoid product disagrees with the stratum-wise product");
    return out;
}

bool ring_equal(const IntersectionPoset& poset, const RingElement& x, const RingElement& y) {
    return restriction_vector(poset, x) == restriction_vector(poset, y);
}

RingElement ring_w_act(const IntersectionPoset& poset, const ReflectionGroup& group, int w,
                       const RingElement& x) {
    RingElement out{x.coeff, {}};
    for (const auto& [e, c] : x.combo)
        add_to_combo(out, w_act(poset, group, w, e), c);
    return out;
}

RingElement class_of_hyperplane(const IntersectionPoset& poset, int hyperplane, Coeff c) {
    if (hyperplane < 0 || hyperplane >= static_cast<int>(poset.arrangement().size()))
        throw ValidationError("hyperplane index out of range");
    auto flat = poset.find(poset.arrangement().hyperplanes[hyperplane]);
    return ring_basis(make_letter(poset, *flat, 1), c);
}

RingElement class_of(const IntersectionPoset& poset, int flat, unsigned long mu, Coeff c) {
    return ring_basis(make_letter(poset, flat, mu), c);
}

RingElement class_of_closed_stratum(const IntersectionPoset& poset, int flat, Coeff c) {
    const Flat& f = poset.flat(flat);
    RingElement out = ring_one(c);
    for (const std::vector<int>& block : f.components) {
        Subspace x = poset.arrangement().hyperplanes[block.front()];
        for (size_t i = 1; i < block.size(); ++i)
            x = x.intersect(poset.arrangement().hyperplanes[block[i]]);
        auto id = poset.find(x);
        out = ring_multiply(poset, out,
                            class_of(poset, *id, static_cast<unsigned long>(poset.flat(*id).codim), c));
    }
    return out;
}

namespace {

unsigned long long monomial_count(long degree, int nvars) {
    if (degree < 0)
        return 0;
    if (nvars == 0)
        return degree == 0 ? 1 : 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(degree + nvars - 1),
                 static_cast<unsigned long>(nvars - 1));
    if (!b.fits_ulong_p())
        throw BoundExceeded("Betti number exceeds the machine word");
    return b.get_ui();
}

// Distinct permutations of the irreducible components of A_X induced by the
// setwise stabilizer.
std::vector<std::vector<int>> block_permutations(const IntersectionPoset& poset,
                                                 const ReflectionGroup& group, int flat,
                                                 const std::vector<int>& setwise) {
    const Flat& f = poset.flat(flat);
    const int nb = static_cast<int>(f.components.size());

    std::vector<int> hyp_flat(poset.arrangement().size(), -1);
    for (size_t h = 0; h < poset.arrangement().size(); ++h)
        hyp_flat[h] = *poset.find(poset.arrangement().hyperplanes[h]);
    std::map<int, int> flat_hyp;
    for (size_t h = 0; h < poset.arrangement().size(); ++h)
        flat_hyp[hyp_flat[h]] = static_cast<int>(h);

    std::vector<std::vector<int>> perms;
    for (int w : setwise) {
        std::vector<int> perm(nb, -1);
        for (int b = 0; b < nb; ++b) {
            int target = -1;
            for (int h : f.components[b]) {
                int img = flat_hyp.at(group.act_flat(poset, w, hyp_flat[h]));
                int tb = f.block_of(img);
                if (target < 0)
                    target = tb;
                else if (target != tb)
                    throw std::logic_error("stabilizer does not permute the components");
            }
            perm[b] = target;
        }
        if (std::find(perms.begin(), perms.end(), perm) == perms.end())
            perms.push_back(perm);
    }
    return perms;
}

// number of degree-d monomials fixed by a permutation of the variables =
// number of exponent assignments constant on cycles
unsigned long long fixed_monomials(const std::vector<int>& perm, long degree) {
    std::vector<int> cycle_lengths;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
            ++len;
        }
        cycle_lengths.push_back(len);
    }
    if (degree < 0)
        return 0;
    std::vector<unsigned long long> ways(static_cast<size_t>(degree) + 1, 0);
    ways[0] = 1;
    for (int len : cycle_lengths)
        for (long d = len; d <= degree; ++d)
            ways[d] += ways[d - len];
    return ways[degree];
}

} // namespace

std::vector<unsigned long long> betti_C(const IntersectionPoset& poset, int max_degree) {
    std::vector<unsigned long long> dims(static_cast<size_t>(max_degree / 2) + 1, 0);
    for (int f = 0; f < poset.size(); ++f) {
        const Flat& fl = poset.flat(f);
        for (size_t k = 0; k < dims.size(); ++k)
            dims[k] += monomial_count(static_cast<long>(k) - fl.codim,
                                      static_cast<int>(fl.components.size()));
    }
    return dims;
}

std::vector<unsigned long long> betti_M(const IntersectionPoset& poset, const ReflectionGroup& group,
                                        int max_degree) {
    std::vector<std::vector<int>> orbits = group.orbits_on_flats(poset);
    std::vector<std::vector<unsigned long long>> per_orbit(
        orbits.size(), std::vector<unsigned long long>(static_cast<size_t>(max_degree / 2) + 1, 0));
    parallel_for(static_cast<int>(orbits.size()), [&](int o) {
        int rep = orbits[static_cast<size_t>(o)].front();
        const Flat& fl = poset.flat(rep);
        std::vector<int> setwise = group.setwise_stabilizer(poset, rep);
        std::vector<std::vector<int>> perms = block_permutations(poset, group, rep, setwise);
        for (size_t k = 0; k < per_orbit[static_cast<size_t>(o)].size(); ++k) {
            long d = static_cast<long>(k) - fl.codim;
            if (d < 0)
                continue;
            // Burnside over the component-permutation image of stab(X)
            mpz_class total = 0;
            for (const auto& p : perms)
                total += static_cast<unsigned long>(fixed_monomials(p, d));
            mpz_class q, r;
            mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), perms.size());
            if (r != 0)
                throw std::logic_error("Burnside count is not integral");
            per_orbit[static_cast<size_t>(o)][k] += q.get_ui();
        }
    });
    std::vector<unsigned long long> dims(static_cast<size_t>(max_degree / 2) + 1, 0);
    for (const auto& contribution : per_orbit)
        for (size_t k = 0; k < dims.size(); ++k)
            dims[k] += contribution[k];
    return dims;
}

std::vector<RingElement> invariant_basis(const IntersectionPoset& poset, const ReflectionGroup& group,
                                         int degree, Coeff c) {
    if (c == Coeff::Z)
        throw ValidationError("invariants need the group order invertible: integer coefficients refused");
    if (degree % 2 != 0 || degree < 0)
        throw ValidationError("degree must be even and nonnegative");
    auto orbits = orbit_enumerate(poset, group, degree);
    std::vector<RingElement> out;
    for (const auto& orbit : orbits[static_cast<size_t>(degree / 2)]) {
        RingElement sum = ring_zero(c);
        for (const MonoidElement& e : orbit)
            sum = ring_add(sum, ring_basis(e, c));
        out.push_back(std::move(sum));
    }
    return out;
}

bool InducedRestriction::kills(const IntersectionPoset& parent, const MonoidElement& e) const {
    return !parent.flat(support(parent, e)).subspace.contains(parent.flat(base_flat).subspace);
}

RingElement InducedRestriction::apply(const IntersectionPoset& parent, const RingElement& x) const {
    RingElement out{x.coeff, {}};
    for (const auto& [e, c] : x.combo) {
        if (kills(parent, e))
            continue;
        std::vector<Letter> letters;
        for (const Letter& l : e.letters) {
            auto id = sub.find(parent.flat(l.flat).subspace);
            if (!id)
                throw std::logic_error("letter flat missing from the sub-arrangement poset");
            letters.push_back(Letter{*id, l.mu});
        }
        MonoidElement mapped = normalize(sub, std::move(letters));
        auto it = out.combo.find(mapped);
        if (it == out.combo.end())
            out.combo.emplace(std::move(mapped), c);
        else {
            it->second += c;
            if (it->second == 0)
                out.combo.erase(it);
        }
    }
    return out;
}

InducedRestriction restriction_to_induced(const IntersectionPoset& poset, int flat) {
    const Flat& f = poset.flat(flat);
    std::vector<std::vector<Rat>> normals;
    std::vector<std::string> labels;
    InducedRestriction ind{flat,
                           IntersectionPoset(Arrangement{}),
                           {},
                           {},
                           {}};
    for (int h : f.hyperplanes) {
        normals.push_back(poset.arrangement().normals[h]);
        labels.push_back(poset.arrangement().labels[h]);
        ind.hyperplane_to_parent.push_back(h);
    }
    ind.sub = IntersectionPoset(
        Arrangement::from_normals(poset.arrangement().ambient_dim, std::move(normals), std::move(labels)));
    ind.sub_to_parent.assign(static_cast<size_t>(ind.sub.size()), -1);
    ind.parent_to_sub.assign(static_cast<size_t>(poset.size()), -1);
    for (int s = 0; s < ind.sub.size(); ++s) {
        auto p = poset.find(ind.sub.flat(s).subspace);
        if (!p)
            throw std::logic_error("sub-arrangement flat missing from the parent poset");
        ind.sub_to_parent[static_cast<size_t>(s)] = *p;
        ind.parent_to_sub[static_cast<size_t>(*p)] = s;
    }
    return ind;
}

MonoidElement transport(const IntersectionPoset& from, const IntersectionPoset& to, const MonoidElement& e) {
    std::vector<Letter> letters;
    for (const Letter& l : e.letters) {
        auto id = to.find(from.flat(l.flat).subspace);
        if (!id)
            throw ValidationError("element does not transport: letter flat missing from the target poset");
        letters.push_back(Letter{*id, l.mu});
    }
    return normalize(to, std::move(letters));
}

std::vector<RingElement> whitney_polynomial(const IntersectionPoset& poset) {
    std::vector<RingElement> coeffs{ring_one()};
    for (size_t a = 0; a < poset.arrangement().size(); ++a) {
        RingElement ca = class_of_hyperplane(poset, static_cast<int>(a));
        std::vector<RingElement> next(coeffs.size() + 1, ring_zero());
        for (size_t k = 0; k < coeffs.size(); ++k) {
            next[k] = ring_add(next[k], coeffs[k]);
            next[k + 1] = ring_add(next[k + 1], ring_multiply(poset, coeffs[k], ca));
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

bool whitney_check(const IntersectionPoset& poset, int flat_y, int flat_z) {
    int flat_x = poset.join(flat_y, flat_z);
    const Flat& fy = poset.flat(flat_y);
    const Flat& fz = poset.flat(flat_z);
    const Flat& fx = poset.flat(flat_x);

    std::vector<int> merged = fy.hyperplanes;
    merged.insert(merged.end(), fz.hyperplanes.begin(), fz.hyperplanes.end());
    std::sort(merged.begin(), merged.end());
    bool disjoint = std::adjacent_find(merged.begin(), merged.end()) == merged.end();
    if (!disjoint || merged != fx.hyperplanes || fy.codim + fz.codim != fx.codim)
        throw ValidationError("decomposition hypothesis fails: A_{Y∩Z} is not A_Y ⊕ A_Z");

    InducedRestriction at_x = restriction_to_induced(poset, flat_x);
    InducedRestriction at_y = restriction_to_induced(poset, flat_y);
    InducedRestriction at_z = restriction_to_induced(poset, flat_z);

    std::vector<RingElement> p = whitney_polynomial(poset);
    std::vector<RingElement> lhs;
    for (const RingElement& ck : p)
        lhs.push_back(at_x.apply(poset, ck));

    auto lift = [&](const InducedRestriction& factor) {
        std::vector<RingElement> out;
        for (const RingElement& ck : whitney_polynomial(factor.sub)) {
            RingElement lifted = ring_zero();
            for (const auto& [e, c] : ck.combo)
                lifted = ring_add(lifted, scalar_multiply(c, ring_basis(transport(factor.sub, at_x.sub, e))));
            out.push_back(std::move(lifted));
        }
        return out;
    };
    std::vector<RingElement> py = lift(at_y);
    std::vector<RingElement> pz = lift(at_z);

    std::vector<RingElement> rhs(lhs.size(), ring_zero());
    for (size_t i = 0; i < py.size(); ++i)
        for (size_t j = 0; j < pz.size(); ++j)
            rhs[i + j] = ring_add(rhs[i + j], ring_multiply(at_x.sub, py[i], pz[j]));

    for (size_t k = 0; k < lhs.size(); ++k)
        if (!ring_equal(at_x.sub, lhs[k], rhs[k]))
            return false;
    return true;
}

StratumInfo stratum_info(const IntersectionPoset& poset, const ReflectionGroup& group, int flat) {
    SubgroupData d = group.subgroup_data(poset, flat);
    StratumInfo info;
    info.flat = flat;
    info.torus_rank = static_cast<int>(poset.flat(flat).components.size());
    info.component_group_order = d.component_group_order;
    info.codim = poset.flat(flat).codim;
    return info;
}

std::vector<PointClass> point_classification(const IntersectionPoset& poset, const ReflectionGroup& group) {
    std::vector<PointClass> out;
    for (const std::vector<int>& orbit : group.orbits_on_flats(poset)) {
        PointClass pc;
        pc.orbit = orbit;
        pc.info = stratum_info(poset, group, orbit.front());
        out.push_back(std::move(pc));
    }
    return out;
}

unsigned long smoothing_obstruction_order(const IntersectionPoset& poset, const ReflectionGroup& group,
                                          int flat) {
    return group.subgroup_data(poset, flat).component_group_order;
}

} // namespace camring
