#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace camring;

namespace {

struct Sn {
    ReflectionGroup group;
    IntersectionPoset poset;
    explicit Sn(int n) : group(ReflectionGroup::symmetric(n)), poset(group.mirror_arrangement()) {}

    // flat identifying the coordinates of `block`
    int block_flat(const std::vector<int>& block) const {
        Subspace s = Subspace::full(group.dim());
        for (size_t i = 1; i < block.size(); ++i) {
            std::vector<Rat> normal(static_cast<size_t>(group.dim()), Rat(0));
            normal[static_cast<size_t>(block[0] - 1)] = 1;
            normal[static_cast<size_t>(block[i] - 1)] = -1;
            QMatrix m(1, group.dim());
            for (int j = 0; j < group.dim(); ++j)
                m.at(0, j) = normal[static_cast<size_t>(j)];
            s = s.intersect(Subspace::span_rows(group.dim(), m.kernel()));
        }
        return *poset.find(s);
    }

    MonoidElement letter(const std::vector<int>& block, unsigned long mu) const {
        return make_letter(poset, block_flat(block), mu);
    }
};

} // namespace

TEST_CASE("degrees") {
    Sn s5(5);
    CHECK(MonoidElement{}.degree() == 0);
    MonoidElement w = multiply(s5.poset, s5.letter({1, 2}, 1), s5.letter({3, 4, 5}, 7));
    CHECK(w.degree() == 16);
    Sn s3(3);
    CHECK(s3.letter({1, 2, 3}, 2).degree() == 4);
}

TEST_CASE("letter validation") {
    Sn s3(3);
    CHECK_THROWS_AS(make_letter(s3.poset, 0, 1), ValidationError);           // t
    CHECK_THROWS_AS(s3.letter({1, 2, 3}, 1), ValidationError);                // weight below codim
    Sn s4(4);
    // the flat of the decomposition {1,2}{3,4} is reducible
    MonoidElement two = multiply(s4.poset, s4.letter({1, 2}, 1), s4.letter({3, 4}, 1));
    CHECK(two.letters.size() == 2);
    int red = support(s4.poset, two);
    CHECK_FALSE(s4.poset.flat(red).irreducible);
    CHECK_THROWS_AS(make_letter(s4.poset, red, 2), ValidationError);
}

TEST_CASE("overlap merges in the symmetric monoid") {
    Sn s5(5);
    // overlapping blocks merge
    MonoidElement merged = multiply(s5.poset, s5.letter({1, 2}, 1), s5.letter({2, 3, 4}, 7));
    CHECK(merged == s5.letter({1, 2, 3, 4}, 8));
    // disjoint blocks stay a two-letter word
    MonoidElement stays = multiply(s5.poset, s5.letter({1, 2}, 1), s5.letter({3, 4, 5}, 7));
    CHECK(stays.letters.size() == 2);
}

TEST_CASE("the single relation xy = yz = xz for three letters") {
    Sn s3(3);
    MonoidElement x = s3.letter({1, 2}, 1), y = s3.letter({2, 3}, 1), z = s3.letter({1, 3}, 1);
    MonoidElement xy = multiply(s3.poset, x, y);
    MonoidElement yz = multiply(s3.poset, y, z);
    MonoidElement xz = multiply(s3.poset, x, z);
    CHECK(xy == yz);
    CHECK(yz == xz);
    CHECK(xy == s3.letter({1, 2, 3}, 2));
}

TEST_CASE("support") {
    Sn s5(5);
    CHECK(support(s5.poset, MonoidElement{}) == 0);
    MonoidElement w = multiply(s5.poset, s5.letter({1, 2}, 1), s5.letter({3, 4, 5}, 7));
    CHECK(s5.poset.flat(support(s5.poset, w)).codim == 3);
    MonoidElement single = s5.letter({1, 2}, 4);
    CHECK(support(s5.poset, single) == single.letters[0].flat);

    // support is monotone under products
    MonoidElement a = s5.letter({1, 2}, 2), b = s5.letter({2, 3}, 1);
    CHECK(support(s5.poset, multiply(s5.poset, a, b)) ==
          s5.poset.join(support(s5.poset, a), support(s5.poset, b)));
}

TEST_CASE("degree additivity on random products") {
    Sn s4(4);
    auto elems = enumerate_by_degree(s4.poset, 6);
    std::vector<MonoidElement> flat;
    for (const auto& bucket : elems)
        for (const MonoidElement& e : bucket)
            flat.push_back(e);
    for (size_t i = 0; i < flat.size(); i += 3)
        for (size_t j = 0; j < flat.size(); j += 5)
            CHECK(multiply(s4.poset, flat[i], flat[j]).degree() == flat[i].degree() + flat[j].degree());
}

TEST_CASE("the rank-one monoid is the natural numbers") {
    ReflectionGroup w = ReflectionGroup::generate(1, [] {
        QMatrix m(1, 1);
        m.at(0, 0) = -1;
        return std::vector<QMatrix>{m};
    }());
    IntersectionPoset poset(w.mirror_arrangement());
    auto by_degree = enumerate_by_degree(poset, 12);
    CHECK(by_degree[0].size() == 1);
    for (size_t k = 1; k < by_degree.size(); ++k) {
        CHECK(by_degree[k].size() == 1);
        CHECK(by_degree[k][0].letters.size() == 1);
        CHECK(by_degree[k][0].letters[0].mu == k);
    }
}

TEST_CASE("enumerate degree 4 over the braid arrangement") {
    Sn s3(3);
    auto by_degree = enumerate_by_degree(s3.poset, 4);
    CHECK(by_degree[0].size() == 1);
    CHECK(by_degree[1].size() == 3);
    CHECK(by_degree[2].size() == 4); // three (a,2) and one (X,2)
    auto orbits = orbit_enumerate(s3.poset, s3.group, 4);
    CHECK(orbits[2].size() == 2);
}

TEST_CASE("w_act is a monoid automorphism and a right action") {
    Sn s4(4);
    auto elems = enumerate_by_degree(s4.poset, 8);
    std::vector<MonoidElement> sample;
    for (const auto& bucket : elems)
        for (size_t i = 0; i < bucket.size(); i += 2)
            sample.push_back(bucket[i]);
    CHECK(w_act(s4.poset, s4.group, 3, MonoidElement{}) == MonoidElement{});
    for (size_t v = 0; v < s4.group.order(); v += 5)
        for (size_t w = 0; w < s4.group.order(); w += 7) {
            int vw = s4.group.mul(static_cast<int>(v), static_cast<int>(w));
            for (size_t i = 0; i + 1 < sample.size(); i += 4) {
                const MonoidElement &a = sample[i], &b = sample[i + 1];
                CHECK(w_act(s4.poset, s4.group, static_cast<int>(v), multiply(s4.poset, a, b)) ==
                      multiply(s4.poset, w_act(s4.poset, s4.group, static_cast<int>(v), a),
                               w_act(s4.poset, s4.group, static_cast<int>(v), b)));
                CHECK(w_act(s4.poset, s4.group, vw, a) ==
                      w_act(s4.poset, s4.group, static_cast<int>(w),
                            w_act(s4.poset, s4.group, static_cast<int>(v), a)));
            }
        }
}

TEST_CASE("merge confluence: every short word over small built-ins") {
    // exhaustive over all multisets of up to four letters with weights
    // codim or codim + 1
    for (ReflectionGroup group : {ReflectionGroup::symmetric(4), ReflectionGroup::signed_permutation(2)}) {
        IntersectionPoset poset(group.mirror_arrangement());
        std::vector<Letter> alphabet;
        for (int f = 0; f < poset.size(); ++f)
            if (poset.flat(f).irreducible && poset.flat(f).codim > 0) {
                alphabet.push_back(Letter{f, static_cast<unsigned long>(poset.flat(f).codim)});
                alphabet.push_back(Letter{f, static_cast<unsigned long>(poset.flat(f).codim) + 1});
            }
        const size_t n = alphabet.size();
        size_t words = 0;
        std::vector<size_t> pick;
        std::function<void(size_t)> sweep = [&](size_t start) {
            if (pick.size() >= 2) {
                std::vector<Letter> word;
                for (size_t p : pick)
                    word.push_back(alphabet[p]);
                std::set<std::vector<Letter>> results;
                oracles::all_merge_results(poset, word, results);
                REQUIRE(results.size() == 1);
                REQUIRE(normalize(poset, word).letters == *results.begin());
                ++words;
            }
            if (pick.size() == 4)
                return;
            for (size_t p = start; p < n; ++p) {
                pick.push_back(p);
                sweep(p);
                pick.pop_back();
            }
        };
        sweep(0);
        CHECK(words >= 990);
    }

    // random longer words over the ten-hyperplane arrangement
    ReflectionGroup s5 = ReflectionGroup::symmetric(5);
    IntersectionPoset poset(s5.mirror_arrangement());
    std::vector<Letter> alphabet;
    for (int f = 0; f < poset.size(); ++f)
        if (poset.flat(f).irreducible && poset.flat(f).codim > 0)
            alphabet.push_back(Letter{f, static_cast<unsigned long>(poset.flat(f).codim)});
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> word;
        int len = 2 + static_cast<int>(rng() % 3u);
        for (int i = 0; i < len; ++i)
            word.push_back(alphabet[rng() % alphabet.size()]);
        std::set<std::vector<Letter>> results;
        oracles::all_merge_results(poset, word, results);
        CHECK(results.size() == 1);
        CHECK(normalize(poset, word).letters == *results.begin());
    }
}

TEST_CASE("lch translation") {
    Sn s3(3);
    // a hyperplane letter maps to the bare word "a"
    MonoidElement a = s3.letter({1, 2}, 1);
    LchWord wa = to_lch(s3.poset, a);
    CHECK(wa.letters.size() == 1);
    CHECK(wa.letters[0].second == 1);
    CHECK(from_lch(s3.poset, wa) == a);

    // φ(X, 3) picks up one copy of the least hyperplane of A_X
    MonoidElement x3 = s3.letter({1, 2, 3}, 3);
    LchWord wx = to_lch(s3.poset, x3);
    CHECK(wx.letters.size() == 2);
    CHECK(from_lch(s3.poset, wx) == x3);

    // ψ of a reducible flat multiplies out its components
    Sn s4(4);
    MonoidElement pair2 = multiply(s4.poset, s4.letter({1, 2}, 1), s4.letter({3, 4}, 1));
    int red = support(s4.poset, pair2);
    LchWord word;
    word.letters.emplace_back(red, 1);
    CHECK(from_lch(s4.poset, word) == pair2);
}

TEST_CASE("lch round trips through restriction fingerprints") {
    Sn s4(4);
    auto elems = enumerate_by_degree(s4.poset, 8);
    for (const auto& bucket : elems)
        for (const MonoidElement& e : bucket) {
            MonoidElement back = from_lch(s4.poset, to_lch(s4.poset, e));
            CHECK(back == e);
            CHECK(oracles::restriction_fingerprint(s4.poset, back) ==
                  oracles::restriction_fingerprint(s4.poset, e));
        }
}

TEST_CASE("the least-hyperplane choice in φ does not matter") {
    Sn s3(3);
    MonoidElement x3 = s3.letter({1, 2, 3}, 4);
    const Flat& fx = s3.poset.flat(x3.letters[0].flat);
    // substitute each hyperplane of A_X for the canonical choice
    for (int h : fx.hyperplanes) {
        LchWord word;
        word.letters.emplace_back(*s3.poset.find(s3.poset.arrangement().hyperplanes[h]), 2);
        word.letters.emplace_back(x3.letters[0].flat, 1);
        std::sort(word.letters.begin(), word.letters.end());
        CHECK(from_lch(s3.poset, word) == x3);
    }
}
