#ifndef CAMRING_PARTITIONS_HPP
#define CAMRING_PARTITIONS_HPP

#include "camring/strata.hpp"

namespace camring {

/// Weighted partition: multiset of (block size, weight) pairs covering n,
/// with weight ≥ size - 1 and weight 0 on singletons.  Canonical form is
/// sorted descending by (size, weight).
struct WeightedPartition {
    std::vector<std::pair<int, unsigned long>> parts;

    int total_size() const;
    unsigned long total_weight() const;
    int degree() const { return static_cast<int>(2 * total_weight()); }

    static WeightedPartition make(std::vector<std::pair<int, unsigned long>> parts);

    bool operator==(const WeightedPartition&) const = default;
    bool operator<(const WeightedPartition& rhs) const { return parts < rhs.parts; }
};

/// Weighted decomposition: an actual partition of {1..n} into blocks with
/// weights.
struct WeightedDecomposition {
    int n = 0;
    std::vector<std::vector<int>> blocks; // 1-based members, each sorted
    std::vector<unsigned long> weights;

    void validate() const;
    WeightedPartition shape() const;
};

/// Blocks of size ≥ 2 become letters over the Σn mirror arrangement;
/// singletons are dropped.
MonoidElement decomposition_to_monoid(const IntersectionPoset& poset, const WeightedDecomposition& d);
WeightedDecomposition monoid_to_decomposition(const IntersectionPoset& poset, int n, const MonoidElement& e);

/// Shape of any member of the orbit (all members share it).
WeightedPartition orbit_to_partition(const IntersectionPoset& poset, int n,
                                     const std::vector<MonoidElement>& orbit);

/// Canonical representative: blocks filled with consecutive integers in
/// canonical part order.
WeightedDecomposition partition_to_decomposition(const WeightedPartition& p, int n);

/// All weighted partitions of exactly n with the given total weight.
std::vector<WeightedPartition> weighted_partitions_of(int n, unsigned long total_weight);

/// Number of coverings of the weighted complete-graph union of λ by those
/// of λ1 and λ2: pairs of embeddings, jointly surjective on vertices,
/// inducing a bijection on connected components of the image union, with
/// component weights adding up.  Exhaustive enumeration.
unsigned long long structure_constant(const WeightedPartition& lambda1, const WeightedPartition& lambda2,
                                      const WeightedPartition& lambda, int n);

/// [λ1][λ2] = Σ N^λ [λ], summed over weighted partitions of n of the
/// correct total weight.
std::vector<std::pair<WeightedPartition, unsigned long long>>
multiply_partitions(const WeightedPartition& lambda1, const WeightedPartition& lambda2, int n);

} // namespace camring

#endif
