#pragma once

#include "quickpath/network.hpp"

#include <cstdint>
#include <random>

namespace quickpath {

/// Knobs for random test/benchmark instances.
struct InstanceParams {
    int roads = 5;
    double box = 40.0;        // coordinates drawn from [0, box]^2
    double alpha_min = 0.2;
    double alpha_max = 1.0;
    double min_length = 2.0;
    double max_length = 40.0;
};

/// Random valid network: roads drawn uniformly, rejecting candidates that
/// intersect the interior of an accepted road. Deterministic for a seed.
Network random_network(std::uint64_t seed, const InstanceParams& params);

Point random_point(std::mt19937_64& rng, double box);

/// Two random query points at least `min_gap` apart.
std::pair<Point, Point> random_query_pair(std::mt19937_64& rng, double box, double min_gap);

} // namespace quickpath
