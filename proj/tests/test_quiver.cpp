#include <catch2/catch_amalgamated.hpp>

#include "gentle/quiver.hpp"
#include "test_support.hpp"

using namespace gentle;
using namespace testsup;

TEST_CASE("gentleness of the named algebras") {
    CHECK(validate_gentle(kronecker()).gentle);
    CHECK(validate_gentle(ex1()).gentle);
    CHECK(validate_gentle(orpheus()).gentle);
    CHECK(validate_gentle(cyc3()).gentle);
    CHECK(validate_gentle(zigzag3()).gentle);
    CHECK(validate_gentle(vee()).gentle);
    CHECK(validate_gentle(a2()).gentle);
    CHECK(validate_gentle(k1()).gentle);
    CHECK(validate_gentle(loop_algebra()).gentle);
}

TEST_CASE("three parallel arrows fail G1 at vertex 1") {
    BoundQuiver q({"1", "2"},
                  {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "1", "2"}}, {});
    auto r = validate_gentle(q);
    CHECK_FALSE(r.gentle);
    CHECK_FALSE(r.g1);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->condition == "G1");
    CHECK(r.witness->detail == "1");
}

TEST_CASE("G2 failure: two relation-free successors") {
    BoundQuiver q({"1", "2", "3", "4"},
                  {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "4"}}, {});
    auto r = validate_gentle(q);
    CHECK_FALSE(r.gentle);
    CHECK_FALSE(r.g2);
}

TEST_CASE("finite dimensionality") {
    CHECK(is_finite_dimensional(ex1()));
    CHECK(is_finite_dimensional(cyc3()));
    CHECK(is_finite_dimensional(loop_algebra()));
    BoundQuiver free_cycle({"1", "2", "3"},
                           {{"a", "1", "2"}, {"b", "2", "3"}, {"g", "3", "1"}}, {});
    CHECK_FALSE(is_finite_dimensional(free_cycle));
}

TEST_CASE("degrees") {
    auto q = ex1();
    CHECK(degrees(q, "2") == std::pair<int, int>{1, 2});
    CHECK(degrees(q, "3") == std::pair<int, int>{1, 0});
    CHECK(degrees(loop_algebra(), "1") == std::pair<int, int>{1, 1});
    CHECK_THROWS_AS(degrees(q, "99"), Error);
}

TEST_CASE("degree sums equal the arrow count") {
    for (const auto& q : {ex1(), orpheus(), cyc3(), zigzag3(), kronecker()}) {
        int in = 0, out = 0;
        for (const auto& v : q.vertices()) {
            auto [i, o] = degrees(q, v);
            in += i;
            out += o;
        }
        CHECK(in == q.arrow_count());
        CHECK(out == q.arrow_count());
    }
}

TEST_CASE("structural validation errors") {
    CHECK_THROWS_AS(BoundQuiver({"1", "1"}, {}, {}), Error);
    CHECK_THROWS_AS(BoundQuiver({"1"}, {{"a", "1", "2"}}, {}), Error);
    CHECK_THROWS_AS(BoundQuiver({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}, {}), Error);
    // non-composable relation
    CHECK_THROWS_AS(BoundQuiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, {{"a", "b"}}),
                    Error);
    // duplicate relation
    CHECK_THROWS_AS(BoundQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}},
                                {{"a", "b"}, {"a", "b"}}),
                    Error);
}

TEST_CASE("random gentle algebras are gentle, finite dimensional, deterministic") {
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        auto q = random_gentle(seed, 4);
        CAPTURE(seed);
        REQUIRE(validate_gentle(q).gentle);
        REQUIRE(is_finite_dimensional(q));
        REQUIRE(gentle::detail::is_connected(q));
    }
    auto a = random_gentle(1, 4);
    auto b = random_gentle(1, 4);
    REQUIRE(a.vertices() == b.vertices());
    REQUIRE(a.arrow_count() == b.arrow_count());
    for (int i = 0; i < a.arrow_count(); ++i) {
        CHECK(a.arrow(i).name == b.arrow(i).name);
        CHECK(a.arrow(i).source == b.arrow(i).source);
        CHECK(a.arrow(i).target == b.arrow(i).target);
    }
    CHECK(a.relation_pairs() == b.relation_pairs());
    CHECK(is_finite_dimensional(random_gentle(2, 6)));
}
