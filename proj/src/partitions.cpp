#include "camring/partitions.hpp"

#include <algorithm>
#include <set>

#include "camring/errors.hpp"

namespace camring {

int WeightedPartition::total_size() const {
    int s = 0;
    for (const auto& [size, weight] : parts)
        s += size;
    return s;
}

unsigned long WeightedPartition::total_weight() const {
    unsigned long w = 0;
    for (const auto& [size, weight] : parts)
        w += weight;
    return w;
}

WeightedPartition WeightedPartition::make(std::vector<std::pair<int, unsigned long>> parts) {
    for (const auto& [size, weight] : parts) {
        if (size < 1)
            throw ValidationError("partition part sizes must be positive");
        if (size == 1 && weight != 0)
            throw ValidationError("singleton blocks carry weight 0");
        if (weight + 1 < static_cast<unsigned long>(size))
            throw ValidationError("block weight must be at least size - 1");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return WeightedPartition{std::move(parts)};
}

void WeightedDecomposition::validate() const {
    if (blocks.size() != weights.size())
        throw ValidationError("weight count does not match block count");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    int covered = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw ValidationError("empty block");
        for (int x : blocks[b]) {
            if (x < 1 || x > n || seen[static_cast<size_t>(x)])
                throw ValidationError("blocks must partition {1..n}");
            seen[static_cast<size_t>(x)] = true;
            ++covered;
        }
        if (blocks[b].size() == 1 && weights[b] != 0)
            throw ValidationError("singleton blocks carry weight 0");
        if (weights[b] + 1 < blocks[b].size())
            throw ValidationError("block weight must be at least size - 1");
    }
    if (covered != n)
        throw ValidationError("blocks must cover {1..n}");
}

WeightedPartition WeightedDecomposition::shape() const {
    std::vector<std::pair<int, unsigned long>> parts;
    for (size_t b = 0; b < blocks.size(); ++b)
        parts.emplace_back(static_cast<int>(blocks[b].size()), weights[b]);
    return WeightedPartition::make(std::move(parts));
}

namespace {

// hyperplane x_i = x_j of the Σn mirror arrangement, as a poset flat
int pair_flat(const IntersectionPoset& poset, int n, int i, int j) {
    std::vector<Rat> normal(static_cast<size_t>(n), Rat(0));
    normal[static_cast<size_t>(i - 1)] = 1;
    normal[static_cast<size_t>(j - 1)] = -1;
    QMatrix m(1, n);
    for (int k = 0; k < n; ++k)
        m.at(0, k) = normal[static_cast<size_t>(k)];
    auto id = poset.find(Subspace::span_rows(n, m.kernel()));
    if (!id)
        throw ValidationError("poset is not the Σn mirror poset");
    return *id;
}

} // namespace

MonoidElement decomposition_to_monoid(const IntersectionPoset& poset, const WeightedDecomposition& d) {
    d.validate();
    std::vector<Letter> letters;
    for (size_t b = 0; b < d.blocks.size(); ++b) {
        if (d.blocks[b].size() < 2)
            continue;
        int flat = pair_flat(poset, d.n, d.blocks[b][0], d.blocks[b][1]);
        for (size_t k = 2; k < d.blocks[b].size(); ++k)
            flat = poset.join(flat, pair_flat(poset, d.n, d.blocks[b][0], d.blocks[b][k]));
        letters.push_back(Letter{flat, d.weights[b]});
    }
    return normalize(poset, std::move(letters));
}

WeightedDecomposition monoid_to_decomposition(const IntersectionPoset& poset, int n, const MonoidElement& e) {
    WeightedDecomposition d;
    d.n = n;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (const Letter& l : e.letters) {
        const Subspace& s = poset.flat(l.flat).subspace;
        // an irreducible flat of the Σn arrangement identifies exactly one
        // subset of coordinates: i is in it when x_i = x_j on the flat for
        // some j
        std::vector<int> block;
        for (int i = 1; i <= n; ++i) {
            bool in_block = false;
            for (int j = 1; j <= n && !in_block; ++j)
                if (j != i)
                    in_block = poset.flat(pair_flat(poset, n, i, j)).subspace.contains(s);
            if (in_block)
                block.push_back(i);
        }
        for (int i : block) {
            if (used[static_cast<size_t>(i)])
                throw ValidationError("letters of a normal form must have disjoint blocks");
            used[static_cast<size_t>(i)] = true;
        }
        d.blocks.push_back(std::move(block));
        d.weights.push_back(l.mu);
    }
    for (int i = 1; i <= n; ++i)
        if (!used[static_cast<size_t>(i)]) {
            d.blocks.push_back({i});
            d.weights.push_back(0);
        }
    d.validate();
    return d;
}

WeightedPartition orbit_to_partition(const IntersectionPoset& poset, int n,
                                     const std::vector<MonoidElement>& orbit) {
    if (orbit.empty())
        throw ValidationError("empty orbit");
    return monoid_to_decomposition(poset, n, orbit.front()).shape();
}

WeightedDecomposition partition_to_decomposition(const WeightedPartition& p, int n) {
    if (p.total_size() != n)
        throw ValidationError("partition does not cover {1..n}");
    WeightedDecomposition d;
    d.n = n;
    int next = 1;
    for (const auto& [size, weight] : p.parts) {
        std::vector<int> block;
        for (int k = 0; k < size; ++k)
            block.push_back(next++);
        d.blocks.push_back(std::move(block));
        d.weights.push_back(weight);
    }
    d.validate();
    return d;
}

namespace {

// Parts are emitted in the canonical descending (size, weight) order, so
// each partition shows up exactly once.
void enumerate_partitions(int remaining, unsigned long weight_left, int max_size,
                          unsigned long max_weight_at_max_size,
                          std::vector<std::pair<int, unsigned long>>& acc,
                          std::vector<WeightedPartition>& out) {
    if (remaining == 0) {
        if (weight_left == 0)
            out.push_back(WeightedPartition{acc});
        return;
    }
    for (int size = std::min(remaining, max_size); size >= 2; --size) {
        unsigned long hi = (size == max_size) ? std::min(weight_left, max_weight_at_max_size) : weight_left;
        for (unsigned long w = static_cast<unsigned long>(size - 1); w <= hi; ++w) {
            acc.emplace_back(size, w);
            enumerate_partitions(remaining - size, weight_left - w, size, w, acc, out);
            acc.pop_back();
        }
    }
    // pad with weight-0 singletons
    if (weight_left == 0) {
        auto with = acc;
        for (int k = 0; k < remaining; ++k)
            with.emplace_back(1, 0);
        out.push_back(WeightedPartition{std::move(with)});
    }
}

} // namespace

std::vector<WeightedPartition> weighted_partitions_of(int n, unsigned long total_weight) {
    std::vector<WeightedPartition> out;
    std::vector<std::pair<int, unsigned long>> acc;
    enumerate_partitions(n, total_weight, n, total_weight, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Component {
    int size;
    unsigned long weight;
};

struct Piece {
    int target;            // component of G
    std::vector<int> verts; // sorted vertex ids within that component
    unsigned long weight;

    auto operator<=>(const Piece&) const = default;
};

// All embeddings of the complete-graph union H into G, counted up to
// automorphisms of H: per source component a (target, vertex subset), with
// subsets of one embedding pairwise disjoint, canonicalized by sorting the
// pieces of isomorphic source components.
std::vector<std::vector<Piece>> embeddings(const std::vector<Component>& h,
                                           const std::vector<Component>& g) {
    std::vector<std::vector<Piece>> out;
    std::vector<Piece> acc;

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == h.size()) {
            out.push_back(acc);
            return;
        }
        for (int t = 0; t < static_cast<int>(g.size()); ++t) {
            if (g[t].size < h[i].size)
                continue;
            // enumerate vertex subsets of size h[i].size
            std::vector<int> idx(static_cast<size_t>(h[i].size));
            for (int k = 0; k < h[i].size; ++k)
                idx[static_cast<size_t>(k)] = k;
            while (true) {
                bool disjoint = true;
                for (const Piece& p : acc)
                    if (p.target == t)
                        for (int v : idx)
                            if (std::find(p.verts.begin(), p.verts.end(), v) != p.verts.end()) {
                                disjoint = false;
                                break;
                            }
                if (disjoint) {
                    acc.push_back(Piece{t, idx, h[i].weight});
                    rec(i + 1);
                    acc.pop_back();
                }
                int pos = h[i].size - 1;
                while (pos >= 0 && idx[static_cast<size_t>(pos)] == g[t].size - h[i].size + pos)
                    --pos;
                if (pos < 0)
                    break;
                ++idx[static_cast<size_t>(pos)];
                for (int k = pos + 1; k < h[i].size; ++k)
                    idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k - 1)] + 1;
            }
        }
    };
    rec(0);

    // canonicalize: sort pieces belonging to isomorphic source components
    std::set<std::vector<Piece>> canon;
    for (auto& e : out) {
        std::vector<Piece> key = e;
        size_t start = 0;
        while (start < h.size()) {
            size_t end = start + 1;
            while (end < h.size() && h[end].size == h[start].size && h[end].weight == h[start].weight)
                ++end;
            std::sort(key.begin() + static_cast<long>(start), key.begin() + static_cast<long>(end));
            start = end;
        }
        canon.insert(std::move(key));
    }
    return {canon.begin(), canon.end()};
}

std::vector<Component> graph_of(const WeightedPartition& p) {
    std::vector<Component> g;
    for (const auto& [size, weight] : p.parts)
        if (size >= 2)
            g.push_back(Component{size, weight});
    return g;
}

bool covering_conditions(const std::vector<Piece>& f1, const std::vector<Piece>& f2,
                         const std::vector<Component>& g) {
    std::vector<std::vector<const Piece*>> per_comp(g.size());
    for (const Piece& p : f1)
        per_comp[static_cast<size_t>(p.target)].push_back(&p);
    for (const Piece& p : f2)
        per_comp[static_cast<size_t>(p.target)].push_back(&p);

    for (size_t c = 0; c < g.size(); ++c) {
        const auto& pieces = per_comp[c];
        // joint surjectivity on vertices
        std::vector<bool> covered(static_cast<size_t>(g[c].size), false);
        for (const Piece* p : pieces)
            for (int v : p->verts)
                covered[static_cast<size_t>(v)] = true;
        if (std::find(covered.begin(), covered.end(), false) != covered.end())
            return false;
        // π0 of the image union maps bijectively to π0 of G: the pieces in
        // one component must have a connected union
        if (pieces.empty())
            return false;
        std::vector<bool> reached(pieces.size(), false);
        std::vector<size_t> stack{0};
        reached[0] = true;
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < pieces.size(); ++j) {
                if (reached[j])
                    continue;
                bool meet = false;
                for (int v : pieces[i]->verts)
                    if (std::find(pieces[j]->verts.begin(), pieces[j]->verts.end(), v) !=
                        pieces[j]->verts.end()) {
                        meet = true;
                        break;
                    }
                if (meet) {
                    reached[j] = true;
                    stack.push_back(j);
                }
            }
        }
        if (std::find(reached.begin(), reached.end(), false) != reached.end())
            return false;
        // component weights add up
        unsigned long total = 0;
        for (const Piece* p : pieces)
            total += p->weight;
        if (total != g[c].weight)
            return false;
    }
    return true;
}

} // namespace

unsigned long long structure_constant(const WeightedPartition& lambda1, const WeightedPartition& lambda2,
                                      const WeightedPartition& lambda, int n) {
    if (lambda.total_size() > n || lambda1.total_size() > n || lambda2.total_size() > n)
        throw ValidationError("partition exceeds n vertices");
    if (lambda1.total_weight() + lambda2.total_weight() != lambda.total_weight())
        return 0;

    std::vector<Component> g = graph_of(lambda);
    std::vector<Component> h1 = graph_of(lambda1);
    std::vector<Component> h2 = graph_of(lambda2);

    auto f1s = embeddings(h1, g);
    auto f2s = embeddings(h2, g);
    unsigned long long count = 0;
    for (const auto& f1 : f1s)
        for (const auto& f2 : f2s)
            if (covering_conditions(f1, f2, g))
                ++count;
    return count;
}

std::vector<std::pair<WeightedPartition, unsigned long long>>
multiply_partitions(const WeightedPartition& lambda1, const WeightedPartition& lambda2, int n) {
    if (lambda1.total_size() != n || lambda2.total_size() != n)
        throw ValidationError("partitions must cover {1..n}");
    std::vector<std::pair<WeightedPartition, unsigned long long>> out;
    for (const WeightedPartition& lambda :
         weighted_partitions_of(n, lambda1.total_weight() + lambda2.total_weight())) {
        unsigned long long c = structure_constant(lambda1, lambda2, lambda, n);
        if (c > 0)
            out.emplace_back(lambda, c);
    }
    return out;
}

} // namespace camring
