#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "camring/reflection.hpp"

using namespace camring;

namespace {

QMatrix neg1() {
    QMatrix m(1, 1);
    m.at(0, 0) = -1;
    return m;
}

} // namespace

TEST_CASE("order two group on the line") {
    ReflectionGroup g = ReflectionGroup::generate(1, {neg1()});
    CHECK(g.order() == 2);
    CHECK(g.reflections().size() == 1);
    CHECK(g.mirror_arrangement().size() == 1);
    CHECK(g.mirror_arrangement().hyperplanes[0] == Subspace::zero(1));
    CHECK(g.reflection_generated());
}

TEST_CASE("builtin orders and reflection counts") {
    ReflectionGroup s3 = ReflectionGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK(s3.reflections().size() == 3);
    CHECK(s3.mirror_arrangement().size() == 3);

    ReflectionGroup b2 = ReflectionGroup::signed_permutation(2);
    CHECK(b2.order() == 8);
    CHECK(b2.reflections().size() == 4);
    CHECK(b2.mirror_arrangement().size() == 4);

    ReflectionGroup d3 = ReflectionGroup::even_signed(3);
    CHECK(d3.order() == 24);

    ReflectionGroup s1 = ReflectionGroup::symmetric(1);
    CHECK(s1.order() == 1);
    CHECK(s1.mirror_arrangement().size() == 0);

    CHECK(ReflectionGroup::symmetric(4).mirror_arrangement().size() == 6);
    CHECK(ReflectionGroup::symmetric(5).mirror_arrangement().size() == 10);
}

TEST_CASE("group closure sanity") {
    ReflectionGroup g = ReflectionGroup::signed_permutation(2);
    // identity, inverses, associativity spot checks
    for (size_t i = 0; i < g.order(); ++i) {
        CHECK(g.mul(g.identity(), static_cast<int>(i)) == static_cast<int>(i));
        CHECK(g.mul(static_cast<int>(i), g.inverse(static_cast<int>(i))) == g.identity());
    }
    for (size_t i = 0; i < g.order(); i += 3)
        for (size_t j = 0; j < g.order(); j += 2)
            for (size_t k = 0; k < g.order(); k += 3)
                CHECK(g.mul(g.mul(static_cast<int>(i), static_cast<int>(j)), static_cast<int>(k)) ==
                      g.mul(static_cast<int>(i), g.mul(static_cast<int>(j), static_cast<int>(k))));
}

TEST_CASE("generator validation and bounds") {
    QMatrix shear(2, 2);
    shear.at(0, 0) = 1;
    shear.at(0, 1) = 1;
    shear.at(1, 1) = 1;
    CHECK_THROWS_AS(ReflectionGroup::generate(2, {shear}), BoundExceeded);

    QMatrix singular(2, 2);
    singular.at(0, 0) = 1;
    CHECK_THROWS_AS(ReflectionGroup::generate(2, {singular}), ValidationError);

    CHECK_THROWS_AS(ReflectionGroup::generate(2, {QMatrix::identity(3)}), ValidationError);
}

TEST_CASE("non-reflection groups are flagged, not rejected") {
    QMatrix minus = QMatrix::identity(2);
    minus.at(0, 0) = -1;
    minus.at(1, 1) = -1;
    ReflectionGroup g = ReflectionGroup::generate(2, {minus});
    CHECK(g.order() == 2);
    CHECK(g.reflections().empty());
    CHECK_FALSE(g.reflection_generated());
    CHECK(g.mirror_arrangement().size() == 0);
}

TEST_CASE("pointwise stabilizers") {
    ReflectionGroup g2 = ReflectionGroup::generate(1, {neg1()});
    IntersectionPoset p1(g2.mirror_arrangement());
    auto origin = p1.find(Subspace::zero(1));
    REQUIRE(origin.has_value());
    CHECK(g2.pointwise_stabilizer(p1, 0).size() == 1);
    CHECK(g2.pointwise_stabilizer(p1, *origin).size() == 2);

    ReflectionGroup s3 = ReflectionGroup::symmetric(3);
    IntersectionPoset p3(s3.mirror_arrangement());
    for (size_t h = 0; h < s3.mirror_arrangement().size(); ++h) {
        auto f = p3.find(s3.mirror_arrangement().hyperplanes[h]);
        CHECK(s3.pointwise_stabilizer(p3, *f).size() == 2);
    }
}

TEST_CASE("setwise stabilizers and orbits for the symmetric group") {
    ReflectionGroup s3 = ReflectionGroup::symmetric(3);
    IntersectionPoset poset(s3.mirror_arrangement());
    auto orbits = s3.orbits_on_flats(poset);
    CHECK(orbits.size() == 3);
    size_t covered = 0;
    for (const auto& orbit : orbits)
        covered += orbit.size();
    CHECK(covered == static_cast<size_t>(poset.size()));

    for (size_t h = 0; h < 3; ++h) {
        auto f = poset.find(s3.mirror_arrangement().hyperplanes[h]);
        SubgroupData d = s3.subgroup_data(poset, *f);
        CHECK(d.pointwise.size() == 2);
        CHECK(d.setwise.size() == 2);
        CHECK(d.component_group_order == 1);
    }

    // everything stabilizes t; only the identity fixes it pointwise
    SubgroupData dt = s3.subgroup_data(poset, 0);
    CHECK(dt.component_group_order == s3.order());
}

TEST_CASE("fixed space of the pointwise stabilizer is the flat") {
    for (ReflectionGroup g : {ReflectionGroup::symmetric(4), ReflectionGroup::signed_permutation(2)}) {
        IntersectionPoset poset(g.mirror_arrangement());
        for (int f = 0; f < poset.size(); ++f)
            CHECK_NOTHROW(g.pointwise_stabilizer(poset, f)); // asserts Steinberg + fixed space
    }
}

TEST_CASE("setwise stabilizer is the normalizer of the pointwise stabilizer") {
    for (ReflectionGroup g : {ReflectionGroup::symmetric(3), ReflectionGroup::symmetric(4),
                              ReflectionGroup::signed_permutation(2), ReflectionGroup::even_signed(2)}) {
        IntersectionPoset poset(g.mirror_arrangement());
        for (int f = 0; f < poset.size(); ++f) {
            SubgroupData d = g.subgroup_data(poset, f);
            std::set<int> wx(d.pointwise.begin(), d.pointwise.end());
            std::vector<int> normalizer;
            for (size_t w = 0; w < g.order(); ++w) {
                bool normalizes = true;
                for (int x : d.pointwise)
                    if (!wx.count(g.mul(g.mul(static_cast<int>(w), x), g.inverse(static_cast<int>(w))))) {
                        normalizes = false;
                        break;
                    }
                if (normalizes)
                    normalizer.push_back(static_cast<int>(w));
            }
            CHECK(normalizer == d.setwise);
        }
    }
}

TEST_CASE("orbit action is by matrix images") {
    ReflectionGroup s3 = ReflectionGroup::symmetric(3);
    IntersectionPoset poset(s3.mirror_arrangement());
    for (size_t w = 0; w < s3.order(); ++w)
        for (int f = 0; f < poset.size(); ++f) {
            int img = s3.act_flat(poset, static_cast<int>(w), f);
            CHECK(poset.flat(img).subspace == poset.flat(f).subspace.apply(s3.element(static_cast<int>(w))));
        }
}
