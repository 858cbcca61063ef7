#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "camring/reflection.hpp"
#include "oracles.hpp"

using namespace camring;

namespace {

// three hyperplanes in Q^4: x1 = x2, x1 = -x2, x3 = 0
Arrangement nonessential_example() {
    return Arrangement::from_normals(4, {{Rat(1), Rat(-1), Rat(0), Rat(0)},
                                         {Rat(1), Rat(1), Rat(0), Rat(0)},
                                         {Rat(0), Rat(0), Rat(1), Rat(0)}});
}

std::vector<int> all_indices(const Arrangement& arr) {
    std::vector<int> v(arr.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST_CASE("arrangement validation") {
    CHECK_THROWS_AS(Arrangement::from_normals(2, {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}}), ValidationError);
    CHECK_THROWS_AS(Arrangement::from_normals(2, {{Rat(0), Rat(0)}}), ValidationError);
    CHECK_THROWS_AS(Arrangement::from_normals(2, {{Rat(1)}}), ValidationError);
}

TEST_CASE("empty arrangement") {
    IntersectionPoset poset(Arrangement::from_normals(2, {}));
    CHECK(poset.size() == 1);
    CHECK(poset.flat(0).codim == 0);
    CHECK(matroid_components(poset.arrangement(), {}).empty());
}

TEST_CASE("nonessential example: poset, components, subarrangement") {
    Arrangement arr = nonessential_example();
    IntersectionPoset poset(arr);
    CHECK(poset.size() == 8);

    // the three normals are independent, so every hyperplane is its own
    // component (the separator oracle agrees)
    CHECK(matroid_components(arr, all_indices(arr)) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(matroid_components(arr, all_indices(arr)) ==
          oracles::separator_components(arr, all_indices(arr)));
    CHECK_FALSE(is_irreducible(arr));
    CHECK(arr.codim() == 3);
    CHECK_FALSE(arr.essential());

    // X = <e3, e4> is the meet of the first two hyperplanes and is reducible
    Subspace x = arr.hyperplanes[0].intersect(arr.hyperplanes[1]);
    auto fx = poset.find(x);
    REQUIRE(fx.has_value());
    CHECK(poset.flat(*fx).hyperplanes == std::vector<int>{0, 1});
    CHECK(poset.flat(*fx).components.size() == 2);
    CHECK_FALSE(poset.flat(*fx).irreducible);

    CHECK(arr.subarrangement_at(Subspace::full(4)).empty());
    CHECK(arr.subarrangement_at(Subspace::zero(4)) == all_indices(arr));
}

TEST_CASE("essentialize") {
    Arrangement arr = nonessential_example();
    auto [ess, proj] = essentialize(arr);
    CHECK(ess.ambient_dim == 3);
    CHECK(ess.size() == 3);
    CHECK(ess.codim() == 3);
    CHECK(ess.essential());
    CHECK(proj.rows() == 3);
    CHECK(proj.cols() == 4);

    // essential arrangements survive unchanged up to the trivial quotient
    auto [ess2, proj2] = essentialize(ess);
    CHECK(ess2.ambient_dim == ess.ambient_dim);
    CHECK(ess2.normals == ess.normals);

    IntersectionPoset poset(Arrangement::from_normals(2, {}));
    auto [zero_e, zero_p] = essentialize(poset.arrangement());
    CHECK(zero_e.ambient_dim == 0);
}

TEST_CASE("braid mirror arrangement is irreducible") {
    ReflectionGroup s3 = ReflectionGroup::symmetric(3);
    const Arrangement& arr = s3.mirror_arrangement();
    CHECK(arr.size() == 3);
    CHECK(matroid_components(arr, all_indices(arr)).size() == 1);
    CHECK(is_irreducible(arr));
    // matches the exhaustive separator definition
    CHECK(oracles::separator_components(arr, all_indices(arr)) ==
          matroid_components(arr, all_indices(arr)));
}

TEST_CASE("boolean arrangement splits into singletons") {
    Arrangement arr = Arrangement::from_normals(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(matroid_components(arr, all_indices(arr)) ==
          std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("single hyperplane flats are irreducible") {
    IntersectionPoset poset(nonessential_example());
    for (size_t h = 0; h < poset.arrangement().size(); ++h) {
        auto f = poset.find(poset.arrangement().hyperplanes[h]);
        REQUIRE(f.has_value());
        CHECK(poset.flat(*f).irreducible);
    }
}

TEST_CASE("poset flats are exactly the subset intersections") {
    Arrangement arr = nonessential_example();
    IntersectionPoset poset(arr);
    // brute force: every subset, deduplicated
    std::set<std::string> subspaces;
    for (size_t mask = 0; mask < (size_t{1} << arr.size()); ++mask) {
        Subspace s = Subspace::full(arr.ambient_dim);
        for (size_t i = 0; i < arr.size(); ++i)
            if ((mask >> i) & 1)
                s = s.intersect(arr.hyperplanes[i]);
        std::string key;
        for (int i = 0; i < s.basis().rows(); ++i)
            for (int j = 0; j < s.basis().cols(); ++j)
                key += rat_to_string(s.basis().at(i, j)) + ",";
        subspaces.insert(key);
        CHECK(poset.find(s).has_value());
    }
    CHECK(subspaces.size() == static_cast<size_t>(poset.size()));
}

TEST_CASE("codimension criterion for flats") {
    Arrangement arr = nonessential_example();
    IntersectionPoset poset(arr);
    for (int f = 0; f < poset.size(); ++f) {
        const Flat& fl = poset.flat(f);
        CHECK(fl.codim == oracles::normals_rank(arr, fl.hyperplanes));
        CHECK(fl.codim == fl.subspace.codim());
    }
}

TEST_CASE("poset order and joins") {
    IntersectionPoset poset(nonessential_example());
    CHECK(poset.flat(0).codim == 0); // t first
    for (int i = 0; i < poset.size(); ++i) {
        CHECK(poset.leq(0, i));
        for (int j = 0; j < poset.size(); ++j) {
            int k = poset.join(i, j);
            CHECK(poset.leq(i, k));
            CHECK(poset.leq(j, k));
            CHECK(poset.flat(k).subspace == poset.flat(i).subspace.intersect(poset.flat(j).subspace));
        }
    }
}

TEST_CASE("sub-arrangement components refine along the poset order") {
    // for flats Y ⊆ X, the hyperplanes of A_X land in a single component of
    // A_Y; the restriction model relies on this
    std::vector<Arrangement> cases{nonessential_example(),
                                   ReflectionGroup::symmetric(4).mirror_arrangement(),
                                   ReflectionGroup::signed_permutation(2).mirror_arrangement()};
    for (const Arrangement& arr : cases) {
        IntersectionPoset poset(arr);
        for (int x = 0; x < poset.size(); ++x)
            for (int y = 0; y < poset.size(); ++y) {
                const Flat& fx = poset.flat(x);
                const Flat& fy = poset.flat(y);
                if (!fx.subspace.contains(fy.subspace) || fx.hyperplanes.empty())
                    continue;
                for (const auto& block : fx.components) {
                    int target = fy.block_of(block.front());
                    for (int h : block)
                        CHECK(fy.block_of(h) == target);
                }
            }
    }
}

TEST_CASE("rank additivity of the component partition") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        int dim = 2 + trial % 4;
        int nh = 1 + trial % 6;
        Arrangement arr = oracles::random_arrangement(rng, dim, nh);
        auto blocks = matroid_components(arr, all_indices(arr));
        int sum = 0;
        size_t members = 0;
        for (const auto& b : blocks) {
            sum += oracles::normals_rank(arr, b);
            members += b.size();
        }
        CHECK(sum == oracles::normals_rank(arr, all_indices(arr)));
        CHECK(members == arr.size());
    }
}

TEST_CASE("fundamental-circuit partition equals the separator oracle on a random corpus") {
    std::mt19937 rng(42);
    int done = 0;
    while (done < 60) {
        int dim = 2 + static_cast<int>(rng() % 4);     // up to 5
        int nh = 2 + static_cast<int>(rng() % 9);      // up to 10
        Arrangement arr = oracles::random_arrangement(rng, dim, nh);
        CHECK(matroid_components(arr, all_indices(arr)) ==
              oracles::separator_components(arr, all_indices(arr)));
        ++done;
    }
}
