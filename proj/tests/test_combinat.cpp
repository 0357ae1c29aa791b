#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "schubert/combinat.hpp"

using namespace schubert;

TEST_CASE("permutation basics") {
    const auto w = Permutation::parse("312");
    CHECK(w.code() == Composition{2, 0, 0});
    CHECK(w.length() == 2);
    CHECK(Permutation::identity(4).code() == Composition{0, 0, 0, 0});
    CHECK(Permutation::identity(4).length() == 0);
    CHECK(Permutation::parse("231").inverse() == Permutation::parse("312"));
    CHECK((Permutation::parse("312") * Permutation::parse("231")).is_identity());
    CHECK(Permutation::parse("3,1,2") == w);
    CHECK_THROWS_AS(Permutation::parse("113"), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::parse("1a"), InvalidPermutation);
    CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").str() == "10,2,3,4,5,6,7,8,9,1");
}

TEST_CASE("composition convention") {
    const auto u = Permutation::parse("231"), v = Permutation::parse("213");
    const auto uv = u * v;
    for (int i = 1; i <= 3; ++i) CHECK(uv(i) == u(v(i)));
}

TEST_CASE("reduced words") {
    CHECK(Permutation::identity(3).reduced_word().empty());
    CHECK(Permutation::parse("21").reduced_word() == std::vector<int>{1});
    CHECK(Permutation::parse("321").reduced_word() == std::vector<int>{1, 2, 1});
    for (int n = 1; n <= 5; ++n) {
        const auto w0 = Permutation::longest(n);
        for (const auto& w : Permutation::all(n)) {
            const auto word = w.reduced_word();
            CHECK(from_word(word, n) == w);
            CHECK(static_cast<int>(word.size()) == w.length());
            CHECK(w.length() + (w * w0).length() == n * (n - 1) / 2);
            CHECK(Permutation::from_code(w.code()) == w);
            CHECK(is_sub_staircase(w.code(), n));
        }
        CHECK(w0.length() == n * (n - 1) / 2);
        std::set<Composition> codes;
        for (const auto& w : Permutation::all(n)) codes.insert(w.code());
        const auto sub = sub_staircase(n);
        CHECK(codes == std::set<Composition>(sub.begin(), sub.end()));
    }
    for (const auto& word : all_reduced_words(Permutation::longest(4))) CHECK(from_word(word, 4) == Permutation::longest(4));
    CHECK(all_reduced_words(Permutation::longest(3)).size() == 2);
    CHECK(all_reduced_words(Permutation::longest(4)).size() == 16);
}

TEST_CASE("grassmannian") {
    auto g = grassmannian(Permutation::parse("231"));
    CHECK(g.shape == Partition{1, 1});
    CHECK(g.descent == 2);
    g = grassmannian(Permutation::parse("312"));
    CHECK(g.shape == Partition{2});
    CHECK(g.descent == 1);
    CHECK_THROWS_AS(grassmannian(Permutation::parse("321")), NotGrassmannian);
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : Permutation::all(n)) {
            if (!is_grassmannian(w)) continue;
            const auto gw = grassmannian(w);
            CHECK(grassmannian_perm(gw.shape, gw.descent, n) == w);
            Composition code = w.code();
            CHECK(normalize(code) == gw.shape);
        }
}

TEST_CASE("partitions") {
    CHECK(conjugate({2, 1}) == Partition{2, 1});
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(complement({1, 0}, 2, 1) == Partition{1, 0});
    CHECK_THROWS_AS(complement({3}, 2, 2), ShapeTooBig);
    CHECK(frobenius({2, 1}) == Frobenius{{1}, {1}});
    CHECK(frobenius({4, 3, 1}) == Frobenius{{3, 1}, {2, 0}});
    CHECK(contains({2, 1}, {1, 1}));
    CHECK_FALSE(contains({2}, {1, 1}));
    for (const auto& p : partitions_in_box(4, 4)) {
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(size_of(conjugate(p)) == size_of(p));
        CHECK(normalize(complement(complement(p, 4, 4), 4, 4)) == p);
        CHECK(from_frobenius(frobenius(p)) == p);
    }
    CHECK(partitions_in_box(2, 2).size() == 6);
    CHECK(sub_staircase(4).size() == 24);
    CHECK(parse_composition("(2,0,1)") == Composition{2, 0, 1});
    CHECK(parse_partition("2,1") == Partition{2, 1});
    CHECK_THROWS(parse_partition("1,2"));
}
