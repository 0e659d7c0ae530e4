#pragma once

#include "quickpath/candidates.hpp"
#include "quickpath/network.hpp"
#include "quickpath/path_graph.hpp"
#include "quickpath/wspd.hpp"

#include <array>
#include <optional>
#include <vector>

namespace quickpath {

/// Vertex-to-vertex costs in the graph extended with direct straight-line
/// walking between any two vertices. This is the metric the query tables
/// store: table reads compose with walk legs from arbitrary query points,
/// so every vertex must be allowed to leave along a straight line the same
/// way a query point can.
std::vector<double> closure_costs_from(const PathGraph& g, int source);

struct PredStep {
    int next = -1;
    LegKind kind = LegKind::walk;
    int road = -1;
};

struct ClosureToTarget {
    std::vector<double> cost;   // cost[v] = cost from v to the target
    std::vector<PredStep> next; // next hop toward the target
};

ClosureToTarget closure_costs_to(const PathGraph& g, int target);

enum class CandidateKind { direct, type1, type2 };

struct QueryAnswer {
    double cost = 0.0;
    CandidateKind kind_s = CandidateKind::direct;
    CandidateKind kind_t = CandidateKind::direct; // mirrors kind_s for fixed queries
    std::optional<QuickestPath> witness;
};

/// Fixed-destination index: graph over the network plus t, the cost vector M
/// to t from every vertex, and the candidate structures for query points.
struct FixedDestIndex {
    Network net;
    double eps = 0.0;
    Point t;
    PathGraph graph;
    std::vector<double> cost_to_target; // M
    std::vector<PredStep> next_hop;     // reverse shortest-path tree toward t
    ConeIndex cones;                    // over S_C, payload = vertex id
    RoadBuckets buckets;
};

FixedDestIndex build_fixed(const Network& net, Point t, double eps);

/// (1+eps)-approximate cost from s to the fixed destination, with a witness
/// path realizing the reported cost.
QueryAnswer query_fixed(const FixedDestIndex& index, Point s);

enum class TwoPointMode { exact_apsp, wspd };

struct TwoPointIndex {
    Network net;
    double eps = 0.0;
    double tau = 0.0; // wspd mode only
    TwoPointMode mode = TwoPointMode::exact_apsp;
    PathGraph graph;
    ConeIndex cones;
    RoadBuckets buckets;

    // exact_apsp: full cost table, all_pairs[src][dst].
    std::vector<std::vector<double>> all_pairs;

    // wspd: split tree over vertex locations and per-pair representative costs.
    SplitTree tree;
    PairList pairs;
    std::vector<int> vertex_point;                 // vertex id -> tree point
    std::vector<int> point_vertex;                 // tree point -> lowest vertex id
    std::vector<std::array<double, 2>> pair_costs; // {rep_a->rep_b, rep_b->rep_a}
    int sssp_source_count = 0;                     // distinct representative sources
};

TwoPointIndex build_two_point(const Network& net, double eps, TwoPointMode mode,
                              std::optional<double> tau = std::nullopt);

/// Two-point approximate cost: best combination of type-1/type-2 candidates
/// on both sides plus the direct segment.
QueryAnswer query_two_point(const TwoPointIndex& index, Point s, Point t);

/// Vertex-to-vertex estimate through the covering pair's representatives:
/// |p r_A| + M'[r_A, r_B] + |r_B q|. Never below the true cost and at most
/// (1+tau) times it.
double estimate_wspd(const TwoPointIndex& index, int p_vertex, int q_vertex);

} // namespace quickpath
