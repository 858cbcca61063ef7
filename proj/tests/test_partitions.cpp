#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "camring/partitions.hpp"

using namespace camring;

namespace {

struct Sn {
    ReflectionGroup group;
    IntersectionPoset poset;
    explicit Sn(int n) : group(ReflectionGroup::symmetric(n)), poset(group.mirror_arrangement()) {}
};

WeightedPartition wp(std::vector<std::pair<int, unsigned long>> parts) {
    return WeightedPartition::make(std::move(parts));
}

} // namespace

TEST_CASE("validation of weighted data") {
    CHECK_THROWS_AS(wp({{1, 3}}), ValidationError);
    CHECK_THROWS_AS(wp({{3, 1}}), ValidationError);
    CHECK_NOTHROW(wp({{3, 2}, {1, 0}}));

    WeightedDecomposition d;
    d.n = 3;
    d.blocks = {{1, 2}, {3}};
    d.weights = {1, 0};
    CHECK_NOTHROW(d.validate());
    d.weights = {0, 0};
    CHECK_THROWS_AS(d.validate(), ValidationError);
    d.blocks = {{1, 2}, {2}};
    d.weights = {1, 0};
    CHECK_THROWS_AS(d.validate(), ValidationError);
}

TEST_CASE("decomposition to monoid and back") {
    Sn s5(5);
    WeightedDecomposition singletons;
    singletons.n = 5;
    for (int i = 1; i <= 5; ++i) {
        singletons.blocks.push_back({i});
        singletons.weights.push_back(0);
    }
    CHECK(decomposition_to_monoid(s5.poset, singletons) == MonoidElement{});

    WeightedDecomposition pair;
    pair.n = 5;
    pair.blocks = {{1, 2}, {3}, {4}, {5}};
    pair.weights = {1, 0, 0, 0};
    MonoidElement e = decomposition_to_monoid(s5.poset, pair);
    CHECK(e.letters.size() == 1);
    CHECK(e.letters[0].mu == 1);
    CHECK(s5.poset.flat(e.letters[0].flat).codim == 1);

    WeightedDecomposition big;
    big.n = 5;
    big.blocks = {{1, 2, 3, 4}, {5}};
    big.weights = {8, 0};
    MonoidElement f = decomposition_to_monoid(s5.poset, big);
    CHECK(f.letters.size() == 1);
    CHECK(f.letters[0].mu == 8);
    CHECK(s5.poset.flat(f.letters[0].flat).codim == 3);

    for (const WeightedDecomposition& d : {singletons, pair, big}) {
        WeightedDecomposition back =
            monoid_to_decomposition(s5.poset, 5, decomposition_to_monoid(s5.poset, d));
        CHECK(back.shape() == d.shape());
    }
}

TEST_CASE("orbit shapes over the braid arrangement") {
    Sn s3(3);
    auto orbits = orbit_enumerate(s3.poset, s3.group, 4);
    REQUIRE(orbits[2].size() == 2);
    std::vector<WeightedPartition> shapes;
    for (const auto& orbit : orbits[2])
        shapes.push_back(orbit_to_partition(s3.poset, 3, orbit));
    std::sort(shapes.begin(), shapes.end());
    CHECK(shapes[0] == wp({{2, 2}, {1, 0}}));
    CHECK(shapes[1] == wp({{3, 2}}));

    auto orbit0 = orbit_enumerate(s3.poset, s3.group, 0);
    CHECK(orbit_to_partition(s3.poset, 3, orbit0[0][0]) == wp({{1, 0}, {1, 0}, {1, 0}}));
}

TEST_CASE("partition enumeration matches invariant dimensions") {
    // counts of weighted partitions of degree d equal the Betti numbers of
    // the unpointed stack for the symmetric group
    for (int n : {2, 3, 4}) {
        Sn sn(n);
        auto dims = betti_M(sn.poset, sn.group, 8);
        for (unsigned long k = 0; k < dims.size(); ++k)
            CHECK(weighted_partitions_of(n, k).size() == dims[static_cast<size_t>(k)]);
    }
}

TEST_CASE("worked covering counts") {
    CHECK(structure_constant(wp({{2, 1}}), wp({{2, 1}}), wp({{2, 2}}), 2) == 1);
    CHECK(structure_constant(wp({{2, 1}, {1, 0}}), wp({{2, 1}, {1, 0}}), wp({{3, 2}}), 3) == 6);
    CHECK(structure_constant(wp({{2, 1}, {1, 0}, {1, 0}}), wp({{2, 1}, {1, 0}, {1, 0}}),
                             wp({{2, 1}, {2, 1}}), 4) == 2);
}

TEST_CASE("structure constants are symmetric and degree-graded") {
    for (int n : {3, 4}) {
        auto lambdas2 = weighted_partitions_of(n, 2);
        auto lambdas3 = weighted_partitions_of(n, 3);
        for (const auto& l1 : lambdas2)
            for (const auto& l2 : lambdas3)
                for (const auto& target : weighted_partitions_of(n, 5)) {
                    CHECK(structure_constant(l1, l2, target, n) == structure_constant(l2, l1, target, n));
                }
        // weight mismatch forces zero
        CHECK(structure_constant(lambdas2[0], lambdas2[0], lambdas3[0], n) == 0);
    }
}

TEST_CASE("identity class") {
    WeightedPartition ones = wp({{1, 0}, {1, 0}, {1, 0}});
    WeightedPartition x = wp({{2, 1}, {1, 0}});
    auto prod = multiply_partitions(ones, x, 3);
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].first == x);
    CHECK(prod[0].second == 1);
}

TEST_CASE("single-component weights add") {
    auto prod = multiply_partitions(wp({{2, 1}}), wp({{2, 2}}), 2);
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].first == wp({{2, 3}}));
    CHECK(prod[0].second == 1);
}

TEST_CASE("squaring the edge class for n = 3") {
    auto prod = multiply_partitions(wp({{2, 1}, {1, 0}}), wp({{2, 1}, {1, 0}}), 3);
    REQUIRE(prod.size() == 2);
    std::map<WeightedPartition, unsigned long long> as_map(prod.begin(), prod.end());
    CHECK(as_map.at(wp({{2, 2}, {1, 0}})) == 1);
    CHECK(as_map.at(wp({{3, 2}})) == 6);
}

TEST_CASE("cross-module oracle: partition products equal orbit-sum products") {
    for (int n : {2, 3, 4}) {
        Sn sn(n);
        const int max_weight = 4;
        auto orbits = orbit_enumerate(sn.poset, sn.group, 2 * max_weight);

        // basis per weight: orbit sums keyed by shape
        std::map<WeightedPartition, RingElement> orbit_sum;
        std::map<WeightedPartition, std::vector<MonoidElement>> members;
        for (const auto& bucket : orbits)
            for (const auto& orbit : bucket) {
                RingElement sum = ring_zero();
                for (const MonoidElement& e : orbit)
                    sum = ring_add(sum, ring_basis(e));
                WeightedPartition shape = orbit_to_partition(sn.poset, n, orbit);
                orbit_sum[shape] = sum;
                members[shape] = orbit;
            }

        for (const auto& [shape1, sum1] : orbit_sum)
            for (const auto& [shape2, sum2] : orbit_sum) {
                if (shape1.total_weight() + shape2.total_weight() > max_weight)
                    continue;
                RingElement lhs = ring_multiply(sn.poset, sum1, sum2);
                RingElement rhs = ring_zero();
                for (const auto& [target, coeff] : multiply_partitions(shape1, shape2, n))
                    rhs = ring_add(rhs, scalar_multiply(Rat(static_cast<long>(coeff)),
                                                        orbit_sum.at(target)));
                CHECK(ring_equal(sn.poset, lhs, rhs));
            }
    }
}
