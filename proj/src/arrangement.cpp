#include "camring/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "camring/errors.hpp"

namespace camring {

namespace {

std::vector<Rat> canonical_covector(const std::vector<Rat>& v) {
    QMatrix m(1, static_cast<int>(v.size()));
    for (size_t j = 0; j < v.size(); ++j)
        m.at(0, static_cast<int>(j)) = v[j];
    QMatrix r = m.rref();
    if (r.rows() != 1)
        throw ValidationError("zero normal vector");
    return r.row(0);
}

} // namespace

Arrangement Arrangement::from_normals(int ambient_dim, std::vector<std::vector<Rat>> normals,
                                      std::vector<std::string> labels) {
    Arrangement arr;
    arr.ambient_dim = ambient_dim;
    if (!labels.empty() && labels.size() != normals.size())
        throw ValidationError("label count does not match hyperplane count");
    for (size_t i = 0; i < normals.size(); ++i) {
        if (static_cast<int>(normals[i].size()) != ambient_dim)
            throw ValidationError("normal vector length does not match ambient dimension");
        std::vector<Rat> n = canonical_covector(normals[i]);
        for (size_t k = 0; k < arr.normals.size(); ++k)
            if (arr.normals[k] == n)
                throw ValidationError("duplicate hyperplanes at indices " + std::to_string(k) +
                                      " and " + std::to_string(i));
        QMatrix nm(1, ambient_dim);
        for (int j = 0; j < ambient_dim; ++j)
            nm.at(0, j) = n[j];
        arr.normals.push_back(std::move(n));
        arr.hyperplanes.push_back(Subspace::span_rows(ambient_dim, nm.kernel()));
        arr.labels.push_back(labels.empty() ? "a" + std::to_string(i) : labels[i]);
    }
    return arr;
}

Subspace Arrangement::center() const {
    Subspace c = Subspace::full(ambient_dim);
    for (const Subspace& h : hyperplanes)
        c = c.intersect(h);
    return c;
}

std::vector<int> Arrangement::subarrangement_at(const Subspace& x) const {
    std::vector<int> out;
    for (size_t i = 0; i < hyperplanes.size(); ++i)
        if (hyperplanes[i].contains(x))
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<std::vector<int>> matroid_components(const Arrangement& arr, const std::vector<int>& subset) {
    const int m = static_cast<int>(subset.size());
    if (m == 0)
        return {};
    const int n = arr.ambient_dim;

    // greedy basis of the normals, in subset order
    std::vector<int> basis; // positions within subset
    QMatrix basis_rows(0, n);
    for (int p = 0; p < m; ++p) {
        QMatrix row(1, n);
        for (int j = 0; j < n; ++j)
            row.at(0, j) = arr.normals[subset[p]][j];
        QMatrix candidate = QMatrix::vstack(basis_rows, row);
        if (candidate.rank() > basis_rows.rows()) {
            basis_rows = candidate.rref();
            basis.push_back(p);
        }
    }

    // union-find over subset positions
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    // The basis rows were rref'd during the greedy pass, which loses the
    // correspondence to basis members, so rebuild the raw basis matrix.
    QMatrix raw(static_cast<int>(basis.size()), n);
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < n; ++j)
            raw.at(static_cast<int>(i), j) = arr.normals[subset[basis[i]]][j];
    QMatrix raw_t = raw.transposed();

    std::vector<bool> in_basis(m, false);
    for (int b : basis)
        in_basis[b] = true;
    for (int p = 0; p < m; ++p) {
        if (in_basis[p])
            continue;
        // fundamental circuit: p together with the basis members appearing in
        // its (unique) expansion over the basis
        auto coeffs = raw_t.solve(arr.normals[subset[p]]);
        if (!coeffs)
            throw std::logic_error("matroid_components: element not in basis span");
        for (size_t i = 0; i < basis.size(); ++i)
            if ((*coeffs)[i] != 0)
                unite(p, basis[i]);
    }

    std::map<int, std::vector<int>> classes;
    for (int p = 0; p < m; ++p)
        classes[find(p)].push_back(subset[p]);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        blocks.push_back(std::move(members));
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

bool is_irreducible(const Arrangement& arr) {
    std::vector<int> all(arr.size());
    std::iota(all.begin(), all.end(), 0);
    return matroid_components(arr, all).size() == 1;
}

std::pair<Arrangement, QMatrix> essentialize(const Arrangement& arr) {
    Subspace c = arr.center();
    const int n = arr.ambient_dim;
    const int k = c.codim();

    // complete a basis of the center with standard vectors; the quotient is
    // coordinatized by the added vectors
    QMatrix full = c.basis();
    std::vector<int> added;
    for (int j = 0; j < n && full.rows() < n; ++j) {
        QMatrix e(1, n);
        e.at(0, j) = 1;
        QMatrix cand = QMatrix::vstack(full, e);
        if (cand.rank() > full.rows()) {
            full = cand;
            added.push_back(j);
        }
    }
    // v = Σ c_i center_i + Σ d_j e_{added_j}; quotient coordinates are d
    QMatrix cols = full.transposed();
    auto inv = cols.inverse();
    if (!inv)
        throw std::logic_error("essentialize: completed basis not invertible");
    QMatrix proj(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            proj.at(i, j) = inv->at(c.dim() + i, j);

    // normals vanish on the center, so restricting them to the chosen
    // complement coordinates gives the induced normals
    std::vector<std::vector<Rat>> new_normals;
    for (const auto& normal : arr.normals) {
        std::vector<Rat> nn(k);
        for (int i = 0; i < k; ++i)
            nn[i] = normal[added[i]];
        new_normals.push_back(std::move(nn));
    }
    return {Arrangement::from_normals(k, std::move(new_normals), arr.labels), proj};
}

int Flat::block_of(int hyperplane) const {
    for (size_t b = 0; b < components.size(); ++b)
        for (int h : components[b])
            if (h == hyperplane)
                return static_cast<int>(b);
    throw std::logic_error("hyperplane not in this flat's sub-arrangement");
}

IntersectionPoset::IntersectionPoset(Arrangement arr) : arr_(std::move(arr)) {
    std::vector<Subspace> worklist{Subspace::full(arr_.ambient_dim)};
    std::map<Subspace, bool> seen{{worklist[0], true}};
    for (size_t i = 0; i < worklist.size(); ++i) {
        Subspace current = worklist[i];
        for (const Subspace& h : arr_.hyperplanes) {
            Subspace s = current.intersect(h);
            if (!seen.count(s)) {
                seen[s] = true;
                worklist.push_back(s);
            }
        }
    }

    std::sort(worklist.begin(), worklist.end());
    for (const Subspace& s : worklist) {
        Flat f;
        f.subspace = s;
        f.codim = s.codim();
        f.hyperplanes = arr_.subarrangement_at(s);
        f.components = matroid_components(arr_, f.hyperplanes);
        f.irreducible = f.components.size() == 1;
        index_[s] = static_cast<int>(flats_.size());
        flats_.push_back(std::move(f));
    }

    // Joins fold through a flat × hyperplane table: X ∩ Y = X ∩ (∩ A_Y),
    // which keeps the expensive subspace intersections linear in the poset
    // size rather than quadratic.
    const size_t nf = flats_.size();
    const size_t nh = arr_.size();
    std::vector<int> with_hyperplane(nf * (nh == 0 ? 1 : nh), -1);
    for (size_t i = 0; i < nf; ++i)
        for (size_t h = 0; h < nh; ++h) {
            Subspace s = flats_[i].subspace.intersect(arr_.hyperplanes[h]);
            auto it = index_.find(s);
            if (it == index_.end())
                throw std::logic_error("intersection poset not closed under joins");
            with_hyperplane[i * nh + h] = it->second;
        }
    join_.assign(nf * nf, -1);
    for (size_t i = 0; i < nf; ++i) {
        join_[i * nf + i] = static_cast<int>(i);
        for (size_t j = i + 1; j < nf; ++j) {
            int acc = static_cast<int>(i);
            for (int h : flats_[j].hyperplanes)
                acc = with_hyperplane[static_cast<size_t>(acc) * nh + static_cast<size_t>(h)];
            join_[i * nf + j] = join_[j * nf + i] = acc;
        }
    }
}

std::optional<int> IntersectionPoset::find(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

} // namespace camring
