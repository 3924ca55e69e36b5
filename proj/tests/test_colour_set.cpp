#include <doctest.h>

#include "spc/colour_set.hpp"
#include "spc/errors.hpp"

using namespace spc;

TEST_SUITE_BEGIN("colour_set");

TEST_CASE("construction sorts and deduplicates") {
    ColourSet s{3, 1, 2, 1};
    CHECK(s.size() == 3);
    CHECK(s.values() == std::vector<Colour>{1, 2, 3});
}

TEST_CASE("set algebra") {
    ColourSet a{1, 2, 3};
    ColourSet b{3, 4};
    CHECK(a.unite(b).values() == std::vector<Colour>{1, 2, 3, 4});
    CHECK(a.minus(b).values() == std::vector<Colour>{1, 2});
    CHECK(a.intersect(b).values() == std::vector<Colour>{3});
    CHECK(a.intersect_size(b) == 1);
    CHECK_FALSE(a.disjoint_with(b));
    CHECK(a.disjoint_with(ColourSet{4, 5}));
    CHECK(ColourSet{1, 2}.subset_of(a));
    CHECK_FALSE(a.subset_of(ColourSet{1, 2}));
    CHECK(a.take_smallest(2).values() == std::vector<Colour>{1, 2});
}

TEST_CASE("enumerate_m_subsets is lexicographic and complete") {
    ColourSet s{1, 2, 3};
    auto subs = enumerate_m_subsets(s, 2);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0] == ColourSet{1, 2});
    CHECK(subs[1] == ColourSet{1, 3});
    CHECK(subs[2] == ColourSet{2, 3});

    CHECK(enumerate_m_subsets(ColourSet{7, 9}, 0) == std::vector<ColourSet>{ColourSet{}});
    CHECK(enumerate_m_subsets(fresh_colours(5, {}), 2).size() == 10); // C(5,2)
    CHECK_THROWS_AS(enumerate_m_subsets(s, 4), PreconditionError);
}

TEST_CASE("enumeration yields distinct m-sets in strictly increasing order") {
    ColourSet s{0, 2, 4, 6, 8, 10};
    for (int m = 1; m <= 4; ++m) {
        auto subs = enumerate_m_subsets(s, m);
        CHECK(subs.size() == subset_count(s.size(), m));
        for (std::size_t i = 0; i < subs.size(); ++i) {
            CHECK(subs[i].size() == m);
            if (i) CHECK(subs[i - 1] < subs[i]);
        }
    }
}

TEST_CASE("subset_count matches Pascal identities") {
    CHECK(subset_count(5, 2) == 10);
    CHECK(subset_count(7, 3) == 35);
    CHECK(subset_count(0, 0) == 1);
    for (int n = 2; n <= 20; ++n)
        for (int m = 1; m < n; ++m)
            CHECK(subset_count(n, m) == subset_count(n - 1, m - 1) + subset_count(n - 1, m));
}

TEST_CASE("fresh_colours picks the smallest free identifiers") {
    CHECK(fresh_colours(2, ColourSet{0, 1, 2}) == ColourSet{3, 4});
    CHECK(fresh_colours(0, ColourSet{1, 2}) == ColourSet{});
    CHECK(fresh_colours(3, ColourSet{1, 3}) == ColourSet{0, 2, 4});

    ColourSet used{0, 2, 4, 6, 8};
    ColourSet fresh = fresh_colours(4, used);
    CHECK(fresh.size() == 4);
    CHECK(fresh.disjoint_with(used));
}

TEST_SUITE_END();
