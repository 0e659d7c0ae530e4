#include "quickpath/path_graph.hpp"

#include "quickpath/instance_gen.hpp"
#include "quickpath/oracle.hpp"
#include "support/test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace quickpath;
using quickpath::testing::check_path_structure;
using quickpath::testing::net_of;
using quickpath::testing::road;

TEST_CASE("graph over the empty network is the direct edge") {
    PathGraph g = build_graph(net_of({}), Point{0, 0}, Point{3, 4});
    REQUIRE(g.vertex_count() == 2);
    REQUIRE(g.edge_count == 1);
    const GraphEdge& e = g.out[static_cast<std::size_t>(g.source)][0];
    CHECK(e.to == g.target);
    CHECK(e.kind == LegKind::walk);
    CHECK(e.weight == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("coincident projections share one vertex") {
    Network net = net_of({road(0, 0, 10, 0, 0.6)});
    PathGraph g = build_graph(net, Point{2, 4}, Point{8, 4});
    // s, t, u, v and the shared projection point (5,0).
    CHECK(g.vertex_count() == 5);
    int projections_at_5 = 0;
    for (const GraphVertex& v : g.vertices)
        if (distance(v.location, {5, 0}) <= 1e-9) ++projections_at_5;
    CHECK(projections_at_5 == 1);
    // The road chain runs u -> (5,0) -> v.
    REQUIRE(g.road_vertices[0].size() == 3);
    CHECK(g.road_vertices[0][0].param == doctest::Approx(0.0));
    CHECK(g.road_vertices[0][1].param == doctest::Approx(5.0));
    CHECK(g.road_vertices[0][2].param == doctest::Approx(10.0));
}

TEST_CASE("per-road chains are sorted and endpoints always present") {
    Network net = random_network(991, {.roads = 8});
    PathGraph g = build_graph(net, Point{1, 1}, Point{30, 30});
    REQUIRE(g.road_vertices.size() == net.roads.size());
    for (std::size_t r = 0; r < net.roads.size(); ++r) {
        const auto& seq = g.road_vertices[r];
        REQUIRE(seq.size() >= 2);
        CHECK(std::is_sorted(seq.begin(), seq.end(),
                             [](const RoadVertex& a, const RoadVertex& b) { return a.param < b.param; }));
        CHECK(distance(g.vertex(seq.front().vertex).location, net.roads[r].u) <= 1e-9);
        CHECK(distance(g.vertex(seq.back().vertex).location, net.roads[r].v) <= 1e-9);
    }
}

TEST_CASE("vertex count on disjoint parallel roads stays within the pairwise bound") {
    for (int n : {2, 4, 8, 16}) {
        std::vector<Road> roads;
        for (int i = 0; i < n; ++i) roads.push_back(road(0, 3.0 * i, 10, 3.0 * i, 0.5));
        PathGraph g = build_graph(net_of(std::move(roads)), Point{-5, -5}, Point{15, 3.0 * n});
        int bound = 2 + 2 * n + 2 * n + 8 * n * (n - 1) / 2;
        CHECK(g.vertex_count() <= bound);
    }
}

TEST_CASE("sssp basics") {
    PathGraph g;
    for (int i = 0; i < 3; ++i) {
        GraphVertex v;
        v.id = i;
        v.location = {static_cast<double>(i), 0};
        g.vertices.push_back(v);
    }
    g.out.assign(3, {});
    g.out[0].push_back({0, 1, 1.0, LegKind::walk, -1});
    g.out[1].push_back({1, 2, 2.0, LegKind::walk, -1});

    SsspResult forward = sssp(g, 0, false);
    CHECK(forward.dist[0] == 0.0);
    CHECK(forward.dist[1] == 1.0);
    CHECK(forward.dist[2] == 3.0);

    SsspResult backward = sssp(g, 1, true);
    CHECK(backward.dist[0] == 1.0); // cost from 0 to 1 under edge swap
    CHECK(backward.dist[1] == 0.0);
    CHECK(backward.dist[2] == std::numeric_limits<double>::infinity());

    PathGraph single;
    GraphVertex v;
    v.id = 0;
    single.vertices.push_back(v);
    single.out.assign(1, {});
    CHECK(sssp(single, 0, false).dist == std::vector<double>{0.0});
}

TEST_CASE("closed-form single-road instance") {
    Network net = net_of({road(-10, 0, 30, 0, 0.6)});
    QuickestPath qp = quickest_path(net, {0, 4}, {20, 4});
    CHECK(qp.cost == doctest::Approx(18.4).epsilon(1e-12));
    REQUIRE(qp.legs.size() == 3);
    CHECK(qp.legs[0].kind == LegKind::walk);
    CHECK(qp.legs[0].cost == doctest::Approx(5.0));
    CHECK(distance(qp.legs[0].to, {3, 0}) <= 1e-9);
    CHECK(qp.legs[1].kind == LegKind::ride);
    CHECK(qp.legs[1].cost == doctest::Approx(8.4));
    CHECK(distance(qp.legs[1].to, {17, 0}) <= 1e-9);
    CHECK(qp.legs[2].cost == doctest::Approx(5.0));

    auto check = check_path_structure(net, qp, {0, 4}, {20, 4});
    CHECK_MESSAGE(check.ok, check.detail);
}

TEST_CASE("unit-weight roads give no benefit") {
    Network net = net_of({road(-10, 0, 30, 0, 1.0)});
    QuickestPath qp = quickest_path(net, {0, 4}, {20, 4});
    CHECK(qp.cost == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("empty network walks straight") {
    QuickestPath qp = quickest_path(net_of({}), {0, 0}, {3, 4});
    CHECK(qp.cost == doctest::Approx(5.0).epsilon(1e-15));
    REQUIRE(qp.legs.size() == 1);
    CHECK(qp.legs[0].kind == LegKind::walk);
}

TEST_CASE("identical query points cost nothing") {
    Network net = net_of({road(0, 0, 10, 0, 0.5)});
    QuickestPath qp = quickest_path(net, {4, 2}, {4, 2});
    CHECK(qp.cost == 0.0);
    CHECK(qp.legs.empty());
}

TEST_CASE("cost bounds and oracle dominance on random instances") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 12; ++trial) {
        Network net = random_network(1000 + static_cast<std::uint64_t>(trial), {.roads = 6});
        auto [s, t] = random_query_pair(rng, 40.0, 2.0);
        QuickestPath qp = quickest_path(net, s, t);
        double direct = distance(s, t);
        CHECK(qp.cost <= direct + 1e-9);
        CHECK(qp.cost >= net.alpha_min * direct - 1e-9);
        CHECK(qp.cost <= oracle_cost(net, s, t, 91) + 1e-9);
        auto check = check_path_structure(net, qp, s, t);
        CHECK_MESSAGE(check.ok, check.detail);
    }
}

TEST_CASE("adding a road never increases the cost") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        Network net = random_network(2000 + static_cast<std::uint64_t>(trial), {.roads = 5});
        auto [s, t] = random_query_pair(rng, 40.0, 2.0);
        double before = quickest_path(net, s, t).cost;
        Network bigger = random_network(2000 + static_cast<std::uint64_t>(trial), {.roads = 6});
        if (bigger.roads.size() <= net.roads.size()) continue;
        double after = quickest_path(bigger, s, t).cost;
        CHECK(after <= before + 1e-9);
    }
}

TEST_CASE("a query point lying on a road can use it directly") {
    Network net = net_of({road(0, 0, 10, 0, 0.25)});
    QuickestPath qp = quickest_path(net, {1, 0}, {9, 0});
    CHECK(qp.cost == doctest::Approx(0.25 * 8.0).epsilon(1e-9));
}

TEST_CASE("roads are one-way") {
    Network net = net_of({road(0, 0, 10, 0, 0.25)});
    // Against the riding direction the only option is walking.
    QuickestPath qp = quickest_path(net, {9, 0}, {1, 0});
    CHECK(qp.cost == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("rides chain through a shared endpoint") {
    Network net = net_of({road(0, 0, 10, 0, 0.3), road(10, 0, 20, 0, 0.3)});
    PathGraph g = build_graph(net, std::nullopt, std::nullopt);
    // The junction (10,0) is one vertex on both road chains.
    CHECK(g.road_vertices[0].back().vertex == g.road_vertices[1].front().vertex);
    QuickestPath qp = quickest_path(net, {0, 0}, {20, 0});
    CHECK(qp.cost == doctest::Approx(6.0).epsilon(1e-9));
}
