#include "quickpath/oracle.hpp"

#include "quickpath/instance_gen.hpp"
#include "quickpath/path_graph.hpp"
#include "support/test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace quickpath;
using quickpath::testing::net_of;
using quickpath::testing::road;

TEST_CASE("empty network: the straight walk") {
    for (int k : {2, 10, 100})
        CHECK(oracle_cost(net_of({}), {0, 0}, {3, 4}, k) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("single-road instance converges to the closed form") {
    Network net = net_of({road(-10, 0, 30, 0, 0.6)});
    double cost = oracle_cost(net, {0, 4}, {20, 4}, 400);
    CHECK(cost >= 18.4 - 1e-9);
    CHECK(cost <= 18.4 * 1.01);
}

TEST_CASE("unit-weight road: exactly the direct distance") {
    Network net = net_of({road(-10, 0, 30, 0, 1.0)});
    for (int k : {2, 25, 101})
        CHECK(oracle_cost(net, {0, 4}, {20, 4}, k) == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("rejects fewer than two samples") {
    CHECK_THROWS_AS(oracle_cost(net_of({}), {0, 0}, {1, 1}, 1), std::invalid_argument);
}

TEST_CASE("nested refinements are monotone and dominate the exact cost") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 6; ++trial) {
        Network net = random_network(4000 + static_cast<std::uint64_t>(trial), {.roads = 5});
        auto [s, t] = random_query_pair(rng, 40.0, 2.0);
        double exact = quickest_path(net, s, t).cost;
        double prev = std::numeric_limits<double>::infinity();
        for (int k : {25, 49, 97, 193}) { // k -> 2k-1 nests the sample sets
            double c = oracle_cost(net, s, t, k);
            CHECK(c >= exact - 1e-9);
            CHECK(c <= prev + 1e-9);
            prev = c;
        }
        CHECK(prev - exact <= 0.02 * exact);
    }
}
