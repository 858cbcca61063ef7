#include "camring/higgs.hpp"

#include <algorithm>
#include <functional>

#include "camring/errors.hpp"
#include "camring/threading.hpp"

namespace camring {

namespace {

constexpr size_t kRootBound = 10000;

std::vector<Rat> row_times_matrix(const std::vector<Rat>& row, const QMatrix& m) {
    std::vector<Rat> out(static_cast<size_t>(m.cols()), Rat(0));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0)
                out[static_cast<size_t>(j)] += row[static_cast<size_t>(i)] * m.at(i, j);
    return out;
}

Rat dot(const std::vector<Rat>& covector, const std::vector<Rat>& vector) {
    Rat acc;
    for (size_t i = 0; i < covector.size(); ++i)
        acc += covector[i] * vector[i];
    return acc;
}

} // namespace

Rat RootDatum::pair(int p, const std::vector<Rat>& chi) const {
    return dot(chi, coroots[static_cast<size_t>(positive[static_cast<size_t>(p)])]);
}

std::vector<Rat> RootDatum::chi_action(int w, const std::vector<Rat>& chi) const {
    return row_times_matrix(chi, weyl.element(w));
}

std::vector<Rat> RootDatum::char_coords(const std::vector<Rat>& chi) const {
    // char_basis rows form the inverse of the completed coroot matrix, so
    // coordinates are evaluations against its columns
    std::vector<Rat> coords(static_cast<size_t>(rank), Rat(0));
    // solve coords · char_basis = chi
    QMatrix b(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            b.at(i, j) = char_basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
    auto sol = b.transposed().solve(chi);
    if (!sol)
        throw std::logic_error("character basis does not span the dual space");
    return *sol;
}

RootDatum RootDatum::custom(const std::vector<std::vector<Rat>>& simple_roots,
                            const std::vector<std::vector<Rat>>& simple_coroots,
                            const Rat& pairing_scale, int chi_sign) {
    if (simple_roots.size() != simple_coroots.size())
        throw ValidationError("simple root and coroot counts differ");
    if (simple_roots.empty())
        throw ValidationError("a root datum needs at least one simple root");
    const int rank = static_cast<int>(simple_roots[0].size());
    const size_t m = simple_roots.size();
    if (m > static_cast<size_t>(rank))
        throw ValidationError("more simple roots than the rank allows");
    for (size_t i = 0; i < m; ++i)
        if (static_cast<int>(simple_roots[i].size()) != rank ||
            static_cast<int>(simple_coroots[i].size()) != rank)
            throw ValidationError("root and coroot vectors must have length rank");

    // integrality of the Cartan pairing, with 2 on the diagonal
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Rat p = dot(simple_roots[j], simple_coroots[i]);
            if (!rat_is_integer(p))
                throw ValidationError("Cartan pairing must be integral");
            if (i == j && p != 2)
                throw ValidationError("⟨α̌, α⟩ must be 2 on the diagonal");
        }

    RootDatum d;
    d.rank = rank;
    d.pairing_scale = pairing_scale;
    d.chi_sign = chi_sign;

    // reflection closure of the (root, coroot) pairs
    std::map<std::vector<Rat>, int> index;
    std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> pairs;
    auto push = [&](const std::vector<Rat>& root, const std::vector<Rat>& coroot) {
        if (index.count(root))
            return;
        if (pairs.size() >= kRootBound)
            throw BoundExceeded("infinite Weyl closure: root bound exceeded");
        index[root] = static_cast<int>(pairs.size());
        pairs.emplace_back(root, coroot);
    };
    for (size_t i = 0; i < m; ++i) {
        push(simple_roots[i], simple_coroots[i]);
        std::vector<Rat> neg_r(simple_roots[i]), neg_c(simple_coroots[i]);
        for (auto& x : neg_r)
            x = -x;
        for (auto& x : neg_c)
            x = -x;
        push(neg_r, neg_c);
    }
    for (size_t at = 0; at < pairs.size(); ++at)
        for (size_t i = 0; i < m; ++i) {
            auto [root, coroot] = pairs[at];
            Rat a = dot(root, simple_coroots[i]);       // ⟨α̌_i, root⟩
            Rat b = dot(simple_roots[i], coroot);       // ⟨coroot, α_i⟩
            std::vector<Rat> new_root(root), new_coroot(coroot);
            for (int k = 0; k < rank; ++k) {
                new_root[static_cast<size_t>(k)] -= a * simple_roots[i][static_cast<size_t>(k)];
                new_coroot[static_cast<size_t>(k)] -= b * simple_coroots[i][static_cast<size_t>(k)];
            }
            push(new_root, new_coroot);
        }

    // canonical root order
    std::vector<int> order(pairs.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pairs[static_cast<size_t>(a)].first < pairs[static_cast<size_t>(b)].first; });
    for (int i : order) {
        d.roots.push_back(pairs[static_cast<size_t>(i)].first);
        d.coroots.push_back(pairs[static_cast<size_t>(i)].second);
    }

    // positivity: nonnegative coordinates over the simple roots
    QMatrix simple_mat(static_cast<int>(m), rank);
    for (size_t i = 0; i < m; ++i)
        for (int k = 0; k < rank; ++k)
            simple_mat.at(static_cast<int>(i), k) = simple_roots[i][static_cast<size_t>(k)];
    QMatrix simple_t = simple_mat.transposed();
    for (size_t r = 0; r < d.roots.size(); ++r) {
        auto coeffs = simple_t.solve(d.roots[r]);
        if (!coeffs)
            throw std::logic_error("root outside the span of the simple roots");
        bool nonneg = true;
        for (const Rat& c : *coeffs)
            if (c < 0)
                nonneg = false;
        if (nonneg)
            d.positive.push_back(static_cast<int>(r));
        for (size_t i = 0; i < m; ++i)
            if (d.roots[r] == simple_roots[i])
                d.simple.push_back(static_cast<int>(r));
    }

    // Weyl group from the simple reflections on t
    std::vector<QMatrix> gens;
    for (size_t i = 0; i < m; ++i) {
        QMatrix s = QMatrix::identity(rank);
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < rank; ++c)
                s.at(r, c) -= simple_coroots[i][static_cast<size_t>(r)] * simple_roots[i][static_cast<size_t>(c)];
        gens.push_back(std::move(s));
    }
    d.weyl = ReflectionGroup::generate(rank, gens);
    d.poset = IntersectionPoset(d.weyl.mirror_arrangement());

    // mirrors must be exactly the kernels of the positive roots
    d.mirror_of_positive.resize(d.positive.size());
    std::vector<bool> hit(d.weyl.mirror_arrangement().size(), false);
    for (size_t p = 0; p < d.positive.size(); ++p) {
        QMatrix row(1, rank);
        for (int k = 0; k < rank; ++k)
            row.at(0, k) = d.roots[static_cast<size_t>(d.positive[p])][static_cast<size_t>(k)];
        Subspace mirror = Subspace::span_rows(rank, row.kernel());
        int found = -1;
        for (size_t h = 0; h < d.weyl.mirror_arrangement().size(); ++h)
            if (d.weyl.mirror_arrangement().hyperplanes[h] == mirror) {
                found = static_cast<int>(h);
                break;
            }
        if (found < 0)
            throw std::logic_error("positive root kernel is not a mirror");
        d.mirror_of_positive[p] = found;
        hit[static_cast<size_t>(found)] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw std::logic_error("mirror without a positive root");

    // character basis: duals of the coroots, completed by central characters
    QMatrix completed(0, rank);
    std::vector<std::vector<Rat>> basis_vectors;
    for (size_t i = 0; i < m; ++i) {
        QMatrix row(1, rank);
        for (int k = 0; k < rank; ++k)
            row.at(0, k) = simple_coroots[i][static_cast<size_t>(k)];
        completed = QMatrix::vstack(completed, row);
        basis_vectors.push_back(simple_coroots[i]);
    }
    if (completed.rank() != static_cast<int>(m))
        throw ValidationError("simple coroots must be linearly independent");
    for (int j = 0; j < rank && completed.rank() < rank; ++j) {
        QMatrix e(1, rank);
        e.at(0, j) = 1;
        QMatrix cand = QMatrix::vstack(completed, e);
        if (cand.rank() > completed.rank()) {
            completed = cand;
            std::vector<Rat> v(static_cast<size_t>(rank), Rat(0));
            v[static_cast<size_t>(j)] = 1;
            basis_vectors.push_back(std::move(v));
        }
    }
    QMatrix cols(rank, rank);
    for (int j = 0; j < rank; ++j)
        for (int k = 0; k < rank; ++k)
            cols.at(k, j) = basis_vectors[static_cast<size_t>(j)][static_cast<size_t>(k)];
    auto inv = cols.inverse();
    if (!inv)
        throw std::logic_error("completed coroot basis not invertible");
    for (int i = 0; i < rank; ++i)
        d.char_basis.push_back(inv->row(i));

    for (size_t r = 0; r < d.roots.size(); ++r)
        d.root_index[d.roots[r]] = static_cast<int>(r);
    d.root_positive.assign(d.roots.size(), false);
    for (int p : d.positive)
        d.root_positive[static_cast<size_t>(p)] = true;

    return d;
}

RootDatum RootDatum::sl2(const Rat& pairing_scale, int chi_sign) {
    return custom({{Rat(2)}}, {{Rat(1)}}, pairing_scale, chi_sign);
}

RootDatum RootDatum::sl3(const Rat& pairing_scale, int chi_sign) {
    return custom({{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}},
                  {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, pairing_scale, chi_sign);
}

std::vector<int> inversion_set(const RootDatum& datum, int w) {
    const QMatrix& m = datum.weyl.element(w);
    std::vector<int> out;
    for (size_t p = 0; p < datum.positive.size(); ++p) {
        // roots made negative by w: Φ_w = Φ⁺ ∩ wΦ⁻, i.e. α ∘ w negative.
        // This is the orientation under which the stratum relation matrices
        // of W_X close up (rank #irr A_X at the deepest stratum) and the
        // twisted action satisfies the group law; the reflection-only case
        // cannot tell the two orientations apart.
        std::vector<Rat> image = row_times_matrix(datum.roots[static_cast<size_t>(datum.positive[p])], m);
        auto it = datum.root_index.find(image);
        if (it == datum.root_index.end())
            throw std::logic_error("Weyl image of a root is not a root");
        if (!datum.root_positive[static_cast<size_t>(it->second)])
            out.push_back(static_cast<int>(p));
    }
    return out;
}

std::vector<int> inversion_set_at(const RootDatum& datum, int w, int flat) {
    const std::vector<int>& ax = datum.poset.flat(flat).hyperplanes;
    std::vector<int> out;
    for (int p : inversion_set(datum, w))
        if (std::find(ax.begin(), ax.end(), datum.mirror_of_positive[static_cast<size_t>(p)]) != ax.end())
            out.push_back(p);
    return out;
}

RingElement tilde_chi(const RootDatum& datum, int w, const std::vector<Rat>& chi) {
    RingElement out = ring_zero();
    for (int p : inversion_set(datum, w)) {
        Rat c = datum.pairing_scale * datum.pair(p, chi);
        if (c == 0)
            continue;
        out = ring_add(out, scalar_multiply(c, class_of_hyperplane(
                                                   datum.poset, datum.mirror_of_positive[static_cast<size_t>(p)])));
    }
    return out;
}

StratumPoly tilde_chi_at(const RootDatum& datum, int flat, int w, const std::vector<Rat>& chi) {
    const Flat& fl = datum.poset.flat(flat);
    StratumPoly out;
    for (int p : inversion_set_at(datum, w, flat)) {
        Rat c = datum.pairing_scale * datum.pair(p, chi);
        if (c == 0)
            continue;
        Exponents e(fl.components.size(), 0);
        e[static_cast<size_t>(fl.block_of(datum.mirror_of_positive[static_cast<size_t>(p)]))] = 1;
        out.add_term(e, c);
    }
    return out;
}

HiggsStratumRing stratum_relations(const RootDatum& datum, int flat) {
    HiggsStratumRing ring;
    ring.flat = flat;
    ring.nu = static_cast<int>(datum.poset.flat(flat).components.size());
    ring.nchi = datum.rank;

    std::vector<int> wx = datum.weyl.pointwise_stabilizer(datum.poset, flat);
    std::vector<std::vector<Rat>> rows;
    for (int w : wx)
        for (int i = 0; i < datum.rank; ++i) {
            const std::vector<Rat>& chi = datum.char_basis[static_cast<size_t>(i)];
            std::vector<Rat> row(static_cast<size_t>(ring.var_count()), Rat(0));
            row[static_cast<size_t>(ring.nu + i)] += 1; // χ
            std::vector<Rat> cw = datum.char_coords(datum.chi_action(w, chi)); // χ^w
            for (int j = 0; j < datum.rank; ++j)
                row[static_cast<size_t>(ring.nu + j)] -= cw[static_cast<size_t>(j)];
            for (int p : inversion_set_at(datum, w, flat)) {
                int h = datum.mirror_of_positive[static_cast<size_t>(p)];
                int block = datum.poset.flat(flat).block_of(h);
                row[static_cast<size_t>(block)] += Rat(datum.chi_sign) * datum.pairing_scale * datum.pair(p, chi);
            }
            bool zero = std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
            if (!zero)
                rows.push_back(std::move(row));
        }

    ring.relations = rows.empty() ? QMatrix(0, ring.var_count()) : QMatrix::from_rows(rows);
    ring.reduced = ring.relations.rref();
    ring.is_pivot.assign(static_cast<size_t>(ring.var_count()), false);
    for (int i = 0; i < ring.reduced.rows(); ++i) {
        int j = 0;
        while (ring.reduced.at(i, j) == 0)
            ++j;
        ring.pivot_col.push_back(j);
        ring.is_pivot[static_cast<size_t>(j)] = true;
    }
    return ring;
}

StratumPoly HiggsStratumRing::reduce(const StratumPoly& p) const {
    StratumPoly out;
    for (const auto& [exps, coeff] : p.terms) {
        StratumPoly acc;
        Exponents free(exps);
        for (size_t r = 0; r < pivot_col.size(); ++r)
            free[static_cast<size_t>(pivot_col[r])] = 0;
        acc.terms.emplace(std::move(free), coeff);
        for (size_t r = 0; r < pivot_col.size(); ++r) {
            int v = pivot_col[r];
            unsigned e = exps[static_cast<size_t>(v)];
            if (e == 0)
                continue;
            StratumPoly subst; // v = -Σ (free coefficients)
            for (int j = 0; j < var_count(); ++j) {
                if (j == v || reduced.at(static_cast<int>(r), j) == 0)
                    continue;
                Exponents unit(static_cast<size_t>(var_count()), 0);
                unit[static_cast<size_t>(j)] = 1;
                subst.add_term(unit, -reduced.at(static_cast<int>(r), j));
            }
            for (unsigned k = 0; k < e; ++k)
                acc = acc * subst;
        }
        for (const auto& [e2, c2] : acc.terms)
            out.add_term(e2, c2);
    }
    return out;
}

int HiggsClass::degree() const {
    if (terms.empty())
        return 0;
    int deg = -1;
    for (const auto& [key, c] : terms) {
        unsigned long total = key.first.weight();
        for (unsigned e : key.second)
            total += e;
        int d = static_cast<int>(2 * total);
        if (deg < 0)
            deg = d;
        else if (deg != d)
            throw ValidationError("inhomogeneous class has no degree");
    }
    return deg;
}

HiggsClass higgs_basis(const MonoidElement& e, const Exponents& chi_exp, const Rat& c) {
    HiggsClass h;
    if (c != 0)
        h.terms.emplace(std::make_pair(e, chi_exp), c);
    return h;
}

HiggsClass higgs_add(const HiggsClass& a, const HiggsClass& b) {
    HiggsClass out = a;
    for (const auto& [key, c] : b.terms) {
        auto it = out.terms.find(key);
        if (it == out.terms.end()) {
            out.terms.emplace(key, c);
            continue;
        }
        it->second += c;
        if (it->second == 0)
            out.terms.erase(it);
    }
    return out;
}

HiggsClass higgs_scale(const Rat& c, const HiggsClass& a) {
    HiggsClass out;
    if (c == 0)
        return out;
    for (const auto& [key, v] : a.terms)
        out.terms.emplace(key, v * c);
    return out;
}

HiggsClass higgs_multiply(const RootDatum& datum, const HiggsClass& a, const HiggsClass& b) {
    HiggsClass out;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            MonoidElement e = multiply(datum.poset, ka.first, kb.first);
            Exponents chi(ka.second);
            for (size_t i = 0; i < chi.size(); ++i)
                chi[i] += kb.second[i];
            out = higgs_add(out, higgs_basis(e, chi, ca * cb));
        }
    return out;
}

StratumPoly higgs_restrict(const RootDatum& datum, const HiggsStratumRing& ring, const HiggsClass& h) {
    StratumPoly out;
    for (const auto& [key, c] : h.terms) {
        StratumPoly monoid_part = restrict_basis_element(datum.poset, key.first, ring.flat);
        for (const auto& [ue, uc] : monoid_part.terms) {
            Exponents full(static_cast<size_t>(ring.var_count()), 0);
            for (int i = 0; i < ring.nu; ++i)
                full[static_cast<size_t>(i)] = ue[static_cast<size_t>(i)];
            for (int i = 0; i < ring.nchi; ++i)
                full[static_cast<size_t>(ring.nu + i)] = key.second[static_cast<size_t>(i)];
            StratumPoly term;
            term.terms.emplace(std::move(full), uc * c);
            out = out + term;
        }
    }
    return ring.reduce(out);
}

bool higgs_equal(const RootDatum& datum, const HiggsClass& a, const HiggsClass& b) {
    for (int f = 0; f < datum.poset.size(); ++f) {
        HiggsStratumRing ring = stratum_relations(datum, f);
        if (!(higgs_restrict(datum, ring, a) == higgs_restrict(datum, ring, b)))
            return false;
    }
    return true;
}

HiggsClass ideal_generator(const RootDatum& datum, int flat, int w, int chi_index) {
    const std::vector<Rat>& chi = datum.char_basis[static_cast<size_t>(chi_index)];
    // relation χ - χ^w + s·χ̃_w, multiplied by the flat's fundamental class
    Exponents unit(static_cast<size_t>(datum.rank), 0);
    unit[static_cast<size_t>(chi_index)] = 1;
    HiggsClass rel = higgs_basis(MonoidElement{}, unit, Rat(1));
    std::vector<Rat> cw = datum.char_coords(datum.chi_action(w, chi));
    for (int j = 0; j < datum.rank; ++j) {
        Exponents u(static_cast<size_t>(datum.rank), 0);
        u[static_cast<size_t>(j)] = 1;
        rel = higgs_add(rel, higgs_basis(MonoidElement{}, u, -cw[static_cast<size_t>(j)]));
    }
    RingElement tc = tilde_chi(datum, w, chi);
    for (const auto& [e, c] : tc.combo)
        rel = higgs_add(rel, higgs_basis(e, Exponents(static_cast<size_t>(datum.rank), 0),
                                         Rat(datum.chi_sign) * c));

    LchWord word;
    word.letters.emplace_back(flat, 1);
    HiggsClass xclass = higgs_basis(from_lch(datum.poset, word), Exponents(static_cast<size_t>(datum.rank), 0), Rat(1));
    return higgs_multiply(datum, xclass, rel);
}

HiggsClass twisted_action(const RootDatum& datum, int w, const HiggsClass& h) {
    HiggsClass out;
    // (1 ⊗ χ_i)·w, cached per character.  The degree-2 correction that makes
    // the multiplicative extension compose as a right action is the
    // w-relabeled class R_w(χ̃_w(χ)) = -χ̃_{w⁻¹}(χ^w); the relation span is
    // unchanged under this relabeling, so the strata quotients do not care.
    std::vector<HiggsClass> chi_images;
    for (int i = 0; i < datum.rank; ++i) {
        const std::vector<Rat>& chi = datum.char_basis[static_cast<size_t>(i)];
        HiggsClass img;
        std::vector<Rat> chi_w = datum.chi_action(w, chi);
        std::vector<Rat> cw = datum.char_coords(chi_w);
        for (int j = 0; j < datum.rank; ++j) {
            Exponents u(static_cast<size_t>(datum.rank), 0);
            u[static_cast<size_t>(j)] = 1;
            img = higgs_add(img, higgs_basis(MonoidElement{}, u, cw[static_cast<size_t>(j)]));
        }
        RingElement tc = tilde_chi(datum, datum.weyl.inverse(w), chi_w);
        for (const auto& [e, c] : tc.combo)
            img = higgs_add(img, higgs_basis(e, Exponents(static_cast<size_t>(datum.rank), 0),
                                             Rat(datum.chi_sign) * c));
        chi_images.push_back(std::move(img));
    }

    for (const auto& [key, c] : h.terms) {
        HiggsClass acc = higgs_basis(w_act(datum.poset, datum.weyl, w, key.first),
                                     Exponents(static_cast<size_t>(datum.rank), 0), c);
        for (int i = 0; i < datum.rank; ++i)
            for (unsigned k = 0; k < key.second[static_cast<size_t>(i)]; ++k)
                acc = higgs_multiply(datum, acc, chi_images[static_cast<size_t>(i)]);
        out = higgs_add(out, acc);
    }
    return out;
}

namespace {

void char_monomials(int rank, int degree, Exponents& acc, std::vector<Exponents>& out) {
    if (static_cast<int>(acc.size()) == rank - 1) {
        acc.push_back(static_cast<unsigned>(degree));
        out.push_back(acc);
        acc.pop_back();
        return;
    }
    for (int v = 0; v <= degree; ++v) {
        acc.push_back(static_cast<unsigned>(v));
        char_monomials(rank, degree - v, acc, out);
        acc.pop_back();
    }
}

/// Degree-2k generators, their stratum images as dense coordinate rows, and
/// a maximal independent subset.
struct DegreeSpace {
    std::vector<HiggsClass> gens;
    std::map<std::pair<int, Exponents>, int> coord_of; // (flat, free monomial)
    std::vector<std::vector<Rat>> images;
    std::vector<int> basis;        // indices of independent generators
    QMatrix basis_rref;            // rref of their image rows
    QMatrix transform;             // basis_rref = transform · basis rows
    std::vector<int> rref_pivots;
};

DegreeSpace build_degree_space(const RootDatum& datum, const std::vector<HiggsStratumRing>& rings, int k) {
    DegreeSpace sp;
    auto monoid = enumerate_by_degree(datum.poset, 2 * k);
    for (int m = 0; m <= k; ++m)
        for (const MonoidElement& e : monoid[static_cast<size_t>(m)]) {
            std::vector<Exponents> chis;
            Exponents acc;
            char_monomials(datum.rank, k - m, acc, chis);
            for (const Exponents& chi : chis)
                sp.gens.push_back(higgs_basis(e, chi, Rat(1)));
        }

    // sparse restriction images, densified over the monomials seen
    std::vector<std::map<std::pair<int, Exponents>, Rat>> sparse(sp.gens.size());
    for (size_t g = 0; g < sp.gens.size(); ++g)
        for (size_t f = 0; f < rings.size(); ++f) {
            StratumPoly p = higgs_restrict(datum, rings[f], sp.gens[g]);
            for (const auto& [e, c] : p.terms) {
                auto key = std::make_pair(static_cast<int>(f), e);
                if (!sp.coord_of.count(key))
                    sp.coord_of.emplace(key, static_cast<int>(sp.coord_of.size()));
                sparse[g][key] = c;
            }
        }
    const size_t ncols = sp.coord_of.size();
    for (size_t g = 0; g < sp.gens.size(); ++g) {
        std::vector<Rat> row(ncols, Rat(0));
        for (const auto& [key, c] : sparse[g])
            row[static_cast<size_t>(sp.coord_of.at(key))] = c;
        sp.images.push_back(std::move(row));
    }

    // greedy maximal independent subset in generator order
    QMatrix echelon(0, static_cast<int>(ncols));
    for (size_t g = 0; g < sp.gens.size(); ++g) {
        QMatrix row(1, static_cast<int>(ncols));
        for (size_t j = 0; j < ncols; ++j)
            row.at(0, static_cast<int>(j)) = sp.images[g][j];
        QMatrix cand = QMatrix::vstack(echelon, row);
        if (cand.rank() > echelon.rows()) {
            echelon = cand.rref();
            sp.basis.push_back(static_cast<int>(g));
        }
    }

    // rref of the basis rows with a recorded transform, for coordinate
    // solving: [B | I] → [R | T]
    const int s = static_cast<int>(sp.basis.size());
    QMatrix aug(s, static_cast<int>(ncols) + s);
    for (int i = 0; i < s; ++i) {
        for (size_t j = 0; j < ncols; ++j)
            aug.at(i, static_cast<int>(j)) = sp.images[static_cast<size_t>(sp.basis[static_cast<size_t>(i)])][j];
        aug.at(i, static_cast<int>(ncols) + i) = 1;
    }
    QMatrix r = aug.rref();
    sp.basis_rref = QMatrix(s, static_cast<int>(ncols));
    sp.transform = QMatrix(s, s);
    for (int i = 0; i < s; ++i) {
        for (size_t j = 0; j < ncols; ++j)
            sp.basis_rref.at(i, static_cast<int>(j)) = r.at(i, static_cast<int>(j));
        for (int j = 0; j < s; ++j)
            sp.transform.at(i, j) = r.at(i, static_cast<int>(ncols) + j);
        int p = 0;
        while (p < static_cast<int>(ncols) && sp.basis_rref.at(i, p) == 0)
            ++p;
        sp.rref_pivots.push_back(p);
    }
    return sp;
}

std::vector<Rat> coords_in_basis(const DegreeSpace& sp, const std::vector<Rat>& v) {
    const int s = static_cast<int>(sp.basis.size());
    std::vector<Rat> y(static_cast<size_t>(s), Rat(0));
    for (int i = 0; i < s; ++i)
        y[static_cast<size_t>(i)] = v[static_cast<size_t>(sp.rref_pivots[static_cast<size_t>(i)])];
    // consistency: v must equal y · basis_rref
    for (size_t j = 0; j < v.size(); ++j) {
        Rat acc;
        for (int i = 0; i < s; ++i)
            if (y[static_cast<size_t>(i)] != 0)
                acc += y[static_cast<size_t>(i)] * sp.basis_rref.at(i, static_cast<int>(j));
        if (acc != v[j])
            throw std::logic_error("vector outside the image space");
    }
    // x · B = v with B the basis rows: x = y · T
    std::vector<Rat> x(static_cast<size_t>(s), Rat(0));
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < s; ++i)
            if (y[static_cast<size_t>(i)] != 0)
                x[static_cast<size_t>(j)] += y[static_cast<size_t>(i)] * sp.transform.at(i, j);
    return x;
}

std::vector<Rat> image_row(const RootDatum& datum, const std::vector<HiggsStratumRing>& rings,
                           const DegreeSpace& sp, const HiggsClass& h) {
    std::vector<Rat> row(sp.coord_of.size(), Rat(0));
    for (size_t f = 0; f < rings.size(); ++f) {
        StratumPoly p = higgs_restrict(datum, rings[f], h);
        for (const auto& [e, c] : p.terms) {
            auto it = sp.coord_of.find(std::make_pair(static_cast<int>(f), e));
            if (it == sp.coord_of.end())
                throw std::logic_error("image involves an unseen monomial");
            row[static_cast<size_t>(it->second)] = c;
        }
    }
    return row;
}

/// Matrix of the twisted action of w on the image space, rows over the
/// chosen basis.
QMatrix action_matrix(const RootDatum& datum, const std::vector<HiggsStratumRing>& rings,
                      const DegreeSpace& sp, int w) {
    const int s = static_cast<int>(sp.basis.size());
    QMatrix m(s, s);
    for (int i = 0; i < s; ++i) {
        HiggsClass moved = twisted_action(datum, w, sp.gens[static_cast<size_t>(sp.basis[static_cast<size_t>(i)])]);
        std::vector<Rat> x = coords_in_basis(sp, image_row(datum, rings, sp, moved));
        for (int j = 0; j < s; ++j)
            m.at(i, j) = x[static_cast<size_t>(j)];
    }
    return m;
}

} // namespace

std::vector<unsigned long long> hc_betti(const RootDatum& datum, int max_degree) {
    std::vector<HiggsStratumRing> rings;
    for (int f = 0; f < datum.poset.size(); ++f)
        rings.push_back(stratum_relations(datum, f));
    std::vector<unsigned long long> dims(static_cast<size_t>(max_degree / 2) + 1, 0);
    parallel_for(static_cast<int>(dims.size()), [&](int k) {
        DegreeSpace sp = build_degree_space(datum, rings, k);
        dims[static_cast<size_t>(k)] = sp.basis.size();
    });
    return dims;
}

std::vector<unsigned long long> h_betti(const RootDatum& datum, int max_degree) {
    std::vector<HiggsStratumRing> rings;
    for (int f = 0; f < datum.poset.size(); ++f)
        rings.push_back(stratum_relations(datum, f));
    std::vector<unsigned long long> dims(static_cast<size_t>(max_degree / 2) + 1, 0);
    parallel_for(static_cast<int>(dims.size()), [&](int k) {
        DegreeSpace sp = build_degree_space(datum, rings, k);
        const int s = static_cast<int>(sp.basis.size());
        if (s == 0) {
            dims[static_cast<size_t>(k)] = 0;
            return;
        }
        std::vector<QMatrix> all_m;
        for (size_t w = 0; w < datum.weyl.order(); ++w)
            all_m.push_back(action_matrix(datum, rings, sp, static_cast<int>(w)));

        // M_{w·g} = M_w · M_g over all w and generating g pins the whole
        // group law by induction on word length
        if (!(all_m[static_cast<size_t>(datum.weyl.identity())] == QMatrix::identity(s)))
            throw std::logic_error("twisted action: identity does not act trivially");
        for (size_t w = 0; w < datum.weyl.order(); ++w)
            for (int g : datum.weyl.generators()) {
                int wg = datum.weyl.mul(static_cast<int>(w), g);
                if (!(all_m[static_cast<size_t>(wg)] == all_m[w] * all_m[static_cast<size_t>(g)]))
                    throw std::logic_error("twisted action fails the group law");
            }

        std::vector<QMatrix> gens_m;
        for (int g : datum.weyl.generators())
            gens_m.push_back(all_m[static_cast<size_t>(g)]);

        // invariants: c with c·(M_w - I) = 0 for all generators
        QMatrix stacked(s, 0);
        for (const QMatrix& m : gens_m) {
            QMatrix diff = m - QMatrix::identity(s);
            QMatrix wide(s, stacked.cols() + s);
            for (int i = 0; i < s; ++i) {
                for (int j = 0; j < stacked.cols(); ++j)
                    wide.at(i, j) = stacked.at(i, j);
                for (int j = 0; j < s; ++j)
                    wide.at(i, stacked.cols() + j) = diff.at(i, j);
            }
            stacked = std::move(wide);
        }
        dims[static_cast<size_t>(k)] = static_cast<unsigned long long>(s - stacked.rank());
    });
    return dims;
}

} // namespace camring
