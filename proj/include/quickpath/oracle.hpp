#pragma once

#include "quickpath/network.hpp"

namespace quickpath {

struct OracleConfig {
    int samples_per_road = 2;
};

/// Brute-force upper bound on the transportation distance: k equally spaced
/// sample points per road plus {s, t}, walk edges between every pair of
/// nodes, ride edges between consecutive samples. Non-increasing along the
/// nested refinement k -> 2k-1 and converging to the exact cost from above.
/// Deliberately naive; intended for small instances only.
double oracle_cost(const Network& net, Point s, Point t, int samples_per_road);

} // namespace quickpath
