#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "untangle/geometry.hpp"
#include "untangle/oracles.hpp"
#include "untangle/worstcase.hpp"

using namespace untangle;

TEST_CASE("sigma is the block-interleaving permutation") {
    CHECK(sigma(1) == std::vector<int>{0});
    CHECK(sigma(2) == std::vector<int>{2, 0, 3, 1});
    for (int q = 1; q <= 8; ++q) {
        auto s = sigma(q);
        REQUIRE(static_cast<int>(s.size()) == q * q);
        std::set<int> seen(s.begin(), s.end());
        CHECK(static_cast<int>(seen.size()) == q * q);  // a permutation
        // Block i lists (q-1)q+i, (q-2)q+i, ..., i.
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) CHECK(s[i * q + j] == (q - 1 - j) * q + i);
    }
}

TEST_CASE("sigma has LIS = LDS = q") {
    for (int q = 1; q <= 12; ++q) {
        auto s = sigma(q);
        std::vector<long long> seq(s.begin(), s.end());
        CHECK(longest_monotone(seq, Direction::Increasing).length == q);
        CHECK(longest_monotone(seq, Direction::Decreasing).length == q);
    }
}

TEST_CASE("worst-case instances have the stated shape") {
    for (int q : {2, 3, 5}) {
        auto w = planar_worstcase(q);
        CHECK(w.g.n == q * q + 2);
        // Path edges + two universal vertices + the ab edge.
        CHECK(w.g.m() == (q * q - 1) + 2 * q * q + 1);
        CHECK(static_cast<int>(w.d.size()) == w.g.n);
        for (int v = 0; v < q * q; ++v) {
            CHECK(w.g.has_edge(v, q * q));
            CHECK(w.g.has_edge(v, q * q + 1));
        }
        CHECK_FALSE(is_plane(w.g, w.d));

        auto o = outerplanar_worstcase(q);
        CHECK(o.g.n == q * q + 1);
        CHECK(o.g.m() == (q * q - 1) + q * q);
        CHECK_FALSE(is_plane(o.g, o.d));
    }
}

TEST_CASE("planar witness fixes exactly the declared q+1 vertices") {
    for (int q = 3; q <= 8; ++q) {
        auto wit = planar_witness(q);
        CHECK(is_plane(wit.g, wit.untangled));
        std::vector<int> expect;
        for (int i = 0; i < q; ++i) expect.push_back(i * q);
        expect.push_back((q - 1) * q + 2);
        std::sort(expect.begin(), expect.end());
        auto fixed = wit.fixed;
        std::sort(fixed.begin(), fixed.end());
        CHECK(fixed == expect);
        // The fixed list is exactly the set of bit-identical positions.
        std::vector<int> actual;
        for (int v = 0; v < wit.g.n; ++v)
            if (wit.untangled[v] == wit.original[v]) actual.push_back(v);
        CHECK(actual == fixed);
        CHECK(static_cast<int>(fixed.size()) == q + 1);
    }
}

TEST_CASE("outerplanar witness fixes exactly 2q-2 vertices") {
    for (int q = 2; q <= 8; ++q) {
        auto wit = outerplanar_witness(q);
        CHECK(is_plane(wit.g, wit.untangled));
        int identical = 0;
        for (int v = 0; v < wit.g.n; ++v)
            if (wit.untangled[v] == wit.original[v]) ++identical;
        CHECK(identical == 2 * q - 2);
        CHECK(static_cast<int>(wit.fixed.size()) == 2 * q - 2);
        for (int v : wit.fixed) CHECK(wit.untangled[v] == wit.original[v]);
    }
}
