#include "camring/reflection.hpp"

#include <algorithm>
#include <cstdlib>

#include "camring/errors.hpp"

namespace camring {

size_t ReflectionGroup::default_bound() {
    if (const char* env = std::getenv("CAMRING_MAX_GROUP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<size_t>(v);
    }
    return 1000000;
}

ReflectionGroup ReflectionGroup::generate(int dim, const std::vector<QMatrix>& gens, size_t bound) {
    ReflectionGroup g;
    g.dim_ = dim;

    for (const QMatrix& m : gens) {
        if (m.rows() != dim || m.cols() != dim)
            throw ValidationError("generator shape does not match ambient dimension");
        if (!m.inverse())
            throw ValidationError("non-invertible generator");
    }

    QMatrix id = QMatrix::identity(dim);
    g.elems_.push_back(id);
    g.index_[id] = 0;
    std::vector<QMatrix> reduced_gens;
    for (const QMatrix& m : gens) {
        if (!g.index_.count(m)) {
            g.index_[m] = static_cast<int>(g.elems_.size());
            g.elems_.push_back(m);
        }
        reduced_gens.push_back(m);
        g.gens_.push_back(g.index_[m]);
    }
    for (size_t i = 0; i < g.elems_.size(); ++i) {
        for (const QMatrix& m : reduced_gens) {
            QMatrix p = g.elems_[i] * m;
            if (!g.index_.count(p)) {
                if (g.elems_.size() >= bound)
                    throw BoundExceeded("group closure exceeded the element bound of " +
                                        std::to_string(bound));
                g.index_[p] = static_cast<int>(g.elems_.size());
                g.elems_.push_back(std::move(p));
            }
        }
    }

    g.inv_.resize(g.elems_.size());
    for (size_t i = 0; i < g.elems_.size(); ++i) {
        auto inv = g.elems_[i].inverse();
        auto it = g.index_.find(*inv);
        if (it == g.index_.end())
            throw std::logic_error("group closure does not contain an inverse");
        g.inv_[i] = it->second;
    }

    // reflections: finite order is automatic in a finite group, so the test
    // is a codimension-1 fixed space
    std::vector<std::vector<Rat>> mirror_normals;
    std::vector<Subspace> mirror_spaces;
    std::vector<int> refl_mirror_space; // per reflection: index into mirror_spaces
    for (size_t i = 1; i < g.elems_.size(); ++i) {
        QMatrix diff = g.elems_[i] - QMatrix::identity(dim);
        if (diff.rank() != 1)
            continue;
        g.refl_.push_back(static_cast<int>(i));
        Subspace fixed = Subspace::span_rows(dim, diff.kernel());
        int found = -1;
        for (size_t k = 0; k < mirror_spaces.size(); ++k)
            if (mirror_spaces[k] == fixed) {
                found = static_cast<int>(k);
                break;
            }
        if (found < 0) {
            found = static_cast<int>(mirror_spaces.size());
            mirror_spaces.push_back(fixed);
            mirror_normals.push_back(fixed.annihilator().basis().row(0));
        }
        refl_mirror_space.push_back(found);
    }

    // canonical hyperplane order: by the mirror subspace order
    std::vector<int> perm(mirror_spaces.size());
    for (size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return mirror_spaces[a] < mirror_spaces[b]; });
    std::vector<int> rank_of(mirror_spaces.size());
    std::vector<std::vector<Rat>> sorted_normals;
    for (size_t r = 0; r < perm.size(); ++r) {
        rank_of[perm[r]] = static_cast<int>(r);
        sorted_normals.push_back(mirror_normals[perm[r]]);
    }
    g.mirrors_ = Arrangement::from_normals(dim, std::move(sorted_normals));
    for (int s : refl_mirror_space)
        g.mirror_of_.push_back(rank_of[s]);

    // is the whole group generated by its reflections?
    g.reflection_generated_ = g.subgroup_closure(g.refl_).size() == g.order();

    return g;
}

int ReflectionGroup::mul(int i, int j) const {
    auto it = index_.find(elems_[i] * elems_[j]);
    if (it == index_.end())
        throw std::logic_error("group not closed under multiplication");
    return it->second;
}

int ReflectionGroup::index_of(const QMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw ValidationError("matrix is not an element of the group");
    return it->second;
}

std::vector<int> ReflectionGroup::subgroup_closure(const std::vector<int>& members) const {
    std::vector<bool> in(order(), false);
    std::vector<int> list{identity()};
    in[identity()] = true;
    for (int m : members)
        if (!in[m]) {
            in[m] = true;
            list.push_back(m);
        }
    for (size_t i = 0; i < list.size(); ++i)
        for (int m : members) {
            int p = mul(list[i], m);
            if (!in[p]) {
                in[p] = true;
                list.push_back(p);
            }
        }
    std::sort(list.begin(), list.end());
    return list;
}

ReflectionGroup ReflectionGroup::symmetric(int n) {
    if (n < 1)
        throw ValidationError("symmetric: rank must be at least 1");
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < n; ++i) {
        QMatrix m = QMatrix::identity(n);
        m.at(i, i) = 0;
        m.at(i + 1, i + 1) = 0;
        m.at(i, i + 1) = 1;
        m.at(i + 1, i) = 1;
        gens.push_back(std::move(m));
    }
    return generate(n, gens);
}

ReflectionGroup ReflectionGroup::signed_permutation(int n) {
    if (n < 1)
        throw ValidationError("signed_permutation: rank must be at least 1");
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < n; ++i) {
        QMatrix m = QMatrix::identity(n);
        m.at(i, i) = 0;
        m.at(i + 1, i + 1) = 0;
        m.at(i, i + 1) = 1;
        m.at(i + 1, i) = 1;
        gens.push_back(std::move(m));
    }
    QMatrix flip = QMatrix::identity(n);
    flip.at(n - 1, n - 1) = -1;
    gens.push_back(std::move(flip));
    return generate(n, gens);
}

ReflectionGroup ReflectionGroup::even_signed(int n) {
    if (n < 2)
        throw ValidationError("even_signed: rank must be at least 2");
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < n; ++i) {
        QMatrix m = QMatrix::identity(n);
        m.at(i, i) = 0;
        m.at(i + 1, i + 1) = 0;
        m.at(i, i + 1) = 1;
        m.at(i + 1, i) = 1;
        gens.push_back(std::move(m));
    }
    QMatrix m = QMatrix::identity(n);
    m.at(n - 2, n - 2) = 0;
    m.at(n - 1, n - 1) = 0;
    m.at(n - 2, n - 1) = -1;
    m.at(n - 1, n - 2) = -1;
    gens.push_back(std::move(m));
    return generate(n, gens);
}

int ReflectionGroup::act_flat(const IntersectionPoset& poset, int w, int flat) const {
    Subspace image = poset.flat(flat).subspace.apply(elems_[w]);
    auto found = poset.find(image);
    if (!found)
        throw ValidationError("group does not preserve the arrangement");
    return *found;
}

std::vector<int> ReflectionGroup::pointwise_stabilizer(const IntersectionPoset& poset, int flat) const {
    const Subspace& x = poset.flat(flat).subspace;
    std::vector<int> fixers;
    for (size_t w = 0; w < order(); ++w) {
        bool fixes = true;
        for (int r = 0; r < x.dim() && fixes; ++r) {
            std::vector<Rat> v = x.basis().row(r);
            std::vector<Rat> img(dim_);
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j)
                    if (elems_[w].at(i, j) != 0)
                        img[i] += elems_[w].at(i, j) * v[j];
            fixes = img == v;
        }
        if (fixes)
            fixers.push_back(static_cast<int>(w));
    }

    // Steinberg consistency: W_X = <reflections with mirror ⊇ X>
    std::vector<int> refl_in;
    for (size_t k = 0; k < refl_.size(); ++k)
        if (mirrors_.hyperplanes[mirror_of_[k]].contains(x))
            refl_in.push_back(refl_[k]);
    if (subgroup_closure(refl_in) != fixers)
        throw ValidationError("Steinberg consistency failed: input is not a reflection group");

    // fixed space of W_X must be exactly X
    Subspace fixed = Subspace::full(dim_);
    for (int w : fixers)
        fixed = fixed.intersect(Subspace::span_rows(dim_, (elems_[w] - QMatrix::identity(dim_)).kernel()));
    if (fixed != x)
        throw ValidationError("fixed space of the pointwise stabilizer is not the flat");

    return fixers;
}

std::vector<int> ReflectionGroup::setwise_stabilizer(const IntersectionPoset& poset, int flat) const {
    std::vector<int> stab;
    for (size_t w = 0; w < order(); ++w)
        if (act_flat(poset, static_cast<int>(w), flat) == flat)
            stab.push_back(static_cast<int>(w));
    return stab;
}

SubgroupData ReflectionGroup::subgroup_data(const IntersectionPoset& poset, int flat) const {
    SubgroupData d;
    d.flat = flat;
    d.pointwise = pointwise_stabilizer(poset, flat);
    d.setwise = setwise_stabilizer(poset, flat);
    d.component_group_order = d.setwise.size() / d.pointwise.size();
    return d;
}

std::vector<std::vector<int>> ReflectionGroup::orbits_on_flats(const IntersectionPoset& poset) const {
    std::vector<int> orbit_of(poset.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (int f = 0; f < poset.size(); ++f) {
        if (orbit_of[f] >= 0)
            continue;
        std::vector<int> orbit{f};
        orbit_of[f] = static_cast<int>(orbits.size());
        for (size_t i = 0; i < orbit.size(); ++i)
            for (int gen : gens_) {
                int img = act_flat(poset, gen, orbit[i]);
                if (orbit_of[img] < 0) {
                    orbit_of[img] = static_cast<int>(orbits.size());
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

} // namespace camring
