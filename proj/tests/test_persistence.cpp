#include "quickpath/index_io.hpp"

#include "quickpath/instance_gen.hpp"
#include "support/test_support.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace quickpath;
using quickpath::testing::net_of;
using quickpath::testing::road;

TEST_CASE("fixed index round-trips bit-identically") {
    Network net = random_network(777, {.roads = 6});
    Point t{25, 18};
    FixedDestIndex built = build_fixed(net, t, 0.4);

    std::ostringstream out;
    save_index(built, out);
    std::istringstream in(out.str());
    LoadedIndex loaded = load_index(in);
    REQUIRE(std::holds_alternative<FixedDestIndex>(loaded));
    const FixedDestIndex& re = std::get<FixedDestIndex>(loaded);

    CHECK(re.eps == built.eps);
    CHECK(re.graph.vertex_count() == built.graph.vertex_count());
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        Point s = random_point(rng, 40.0);
        QueryAnswer a = query_fixed(built, s);
        QueryAnswer b = query_fixed(re, s);
        CHECK(a.cost == b.cost); // exact double equality
        CHECK(a.kind_s == b.kind_s);
        REQUIRE(a.witness.has_value());
        REQUIRE(b.witness.has_value());
        CHECK(a.witness->legs.size() == b.witness->legs.size());
    }

    // Saving the reloaded index reproduces the same bytes.
    std::ostringstream again;
    save_index(re, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("two-point indices round-trip bit-identically") {
    Network net = random_network(778, {.roads = 5});
    std::mt19937_64 rng(12);

    TwoPointIndex apsp = build_two_point(net, 0.4, TwoPointMode::exact_apsp);
    std::ostringstream out_a;
    save_index(apsp, out_a);
    std::istringstream in_a(out_a.str());
    LoadedIndex loaded_a = load_index(in_a);
    REQUIRE(std::holds_alternative<TwoPointIndex>(loaded_a));
    const TwoPointIndex& re_a = std::get<TwoPointIndex>(loaded_a);
    for (int i = 0; i < 15; ++i) {
        auto [s, t] = random_query_pair(rng, 40.0, 1.0);
        CHECK(query_two_point(apsp, s, t).cost == query_two_point(re_a, s, t).cost);
    }

    TwoPointIndex wspd = build_two_point(net, 0.4, TwoPointMode::wspd, 0.3);
    std::ostringstream out_w;
    save_index(wspd, out_w);
    std::istringstream in_w(out_w.str());
    LoadedIndex loaded_w = load_index(in_w);
    REQUIRE(std::holds_alternative<TwoPointIndex>(loaded_w));
    const TwoPointIndex& re_w = std::get<TwoPointIndex>(loaded_w);
    CHECK(re_w.tau == wspd.tau);
    CHECK(re_w.pairs.pairs.size() == wspd.pairs.pairs.size());
    for (int i = 0; i < 15; ++i) {
        auto [s, t] = random_query_pair(rng, 40.0, 1.0);
        CHECK(query_two_point(wspd, s, t).cost == query_two_point(re_w, s, t).cost);
    }
}

TEST_CASE("empty-network indices survive the round trip") {
    FixedDestIndex fixed = build_fixed(net_of({}), {1, 2}, 0.5);
    std::ostringstream out;
    save_index(fixed, out);
    std::istringstream in(out.str());
    LoadedIndex loaded = load_index(in);
    CHECK(query_fixed(std::get<FixedDestIndex>(loaded), {4, 6}).cost ==
          query_fixed(fixed, {4, 6}).cost);

    TwoPointIndex wspd = build_two_point(net_of({}), 0.5, TwoPointMode::wspd, 0.5);
    std::ostringstream out_w;
    save_index(wspd, out_w);
    std::istringstream in_w(out_w.str());
    LoadedIndex loaded_w = load_index(in_w);
    CHECK(query_two_point(std::get<TwoPointIndex>(loaded_w), {0, 0}, {3, 4}).cost == 5.0);
}

TEST_CASE("corrupt headers are rejected") {
    std::istringstream bad("qpz v1\nmode fixed\n");
    CHECK_THROWS_AS(load_index(bad), ParseError);
    std::istringstream badmode("qpx v1\nmode sideways\neps 0.5\n");
    CHECK_THROWS_AS(load_index(badmode), ParseError);
}
