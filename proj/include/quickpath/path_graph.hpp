#pragma once

#include "quickpath/network.hpp"

#include <optional>
#include <vector>

namespace quickpath {

enum class VertexKind { source, target, road_point };
enum class LegKind { walk, ride };

struct GraphVertex {
    int id = -1;
    Point location;
    VertexKind kind = VertexKind::road_point;
    int road = -1;         // road the point was first placed on (road points)
    double param = 0.0;    // distance from that road's start point
    bool endpoint = false; // member of S_C, may lie on several roads
};

struct GraphEdge {
    int from = -1;
    int to = -1;
    double weight = 0.0;
    LegKind kind = LegKind::walk;
    int road = -1; // riding road for ride edges
};

struct RoadVertex {
    int vertex = -1;
    double param = 0.0;
};

/// The directed graph modelling a transportation network plus optional free
/// query points. Vertices are road endpoints, entry/exit projections and the
/// free points; edges are straight walk legs and along-road ride legs.
struct PathGraph {
    std::vector<GraphVertex> vertices;
    std::vector<std::vector<GraphEdge>> out;
    std::vector<std::vector<RoadVertex>> road_vertices; // per road, sorted from u to v
    std::vector<int> endpoint_vertices;                 // S_C, deduplicated
    int source = -1; // s vertex, -1 when omitted
    int target = -1; // t vertex, -1 when omitted
    std::size_t edge_count = 0;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    const GraphVertex& vertex(int id) const { return vertices[static_cast<std::size_t>(id)]; }
};

/// Builds the quickest-path graph over a validated network. Omitting s or t
/// skips the corresponding construction steps.
PathGraph build_graph(const Network& net, std::optional<Point> s, std::optional<Point> t);

struct SsspResult {
    std::vector<double> dist;     // +infinity for unreachable vertices
    std::vector<GraphEdge> pred;  // tree edge into each vertex; from == -1 when none
};

/// Dijkstra over the explicit edges. With reversed = true, distances are
/// measured from each vertex to `source` (every edge direction swapped).
/// Equal-distance pops resolve by ascending vertex id.
SsspResult sssp(const PathGraph& g, int source, bool reversed);

struct QuickestPath {
    struct Leg {
        LegKind kind = LegKind::walk;
        Point from;
        Point to;
        int road = -1; // ride legs only
        double cost = 0.0;
    };
    double cost = 0.0;
    std::vector<Leg> legs;
};

/// Exact minimum transportation distance between two free points, with a
/// realizing path. Always succeeds: free-space travel exists.
QuickestPath quickest_path(const Network& net, Point s, Point t);

} // namespace quickpath
