#include "quickpath/path_graph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <stdexcept>

namespace quickpath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct StagedPoint {
    double param = 0.0;
    Point location;
    int endpoint_vertex = -1; // >= 0 for road endpoints
    int intent = -1;          // index into the intent list for projections
};

struct EdgeIntent {
    int other = -1;     // the fixed vertex of the edge
    bool into_road = false; // true: other -> projection; false: projection -> other
};

} // namespace

PathGraph build_graph(const Network& net, std::optional<Point> s, std::optional<Point> t) {
    const int n = static_cast<int>(net.roads.size());
    PathGraph g;

    auto add_vertex = [&g](Point loc, VertexKind kind, int road, double param, bool endpoint) {
        GraphVertex v;
        v.id = g.vertex_count();
        v.location = loc;
        v.kind = kind;
        v.road = road;
        v.param = param;
        v.endpoint = endpoint;
        g.vertices.push_back(v);
        return v.id;
    };

    if (s) g.source = add_vertex(*s, VertexKind::source, -1, 0.0, false);
    if (t) g.target = add_vertex(*t, VertexKind::target, -1, 0.0, false);

    // Road endpoints, shared endpoints merged into one vertex.
    std::vector<int> u_vid(static_cast<std::size_t>(n), -1);
    std::vector<int> v_vid(static_cast<std::size_t>(n), -1);
    auto endpoint_vertex = [&](Point p, int road, double param) {
        for (int vid : g.endpoint_vertices)
            if (distance(g.vertex(vid).location, p) <= kGeomEps) return vid;
        int vid = add_vertex(p, VertexKind::road_point, road, param, true);
        g.endpoint_vertices.push_back(vid);
        return vid;
    };
    for (int i = 0; i < n; ++i) {
        const Road& r = net.roads[static_cast<std::size_t>(i)];
        u_vid[static_cast<std::size_t>(i)] = endpoint_vertex(r.u, i, 0.0);
        v_vid[static_cast<std::size_t>(i)] = endpoint_vertex(r.v, i, r.length());
    }

    // Stage projection points per road; vertices are created after per-road
    // deduplication so coincident projections merge.
    std::vector<std::vector<StagedPoint>> staged(static_cast<std::size_t>(n));
    std::vector<EdgeIntent> intents;
    for (int i = 0; i < n; ++i) {
        const Road& r = net.roads[static_cast<std::size_t>(i)];
        staged[static_cast<std::size_t>(i)].push_back({0.0, r.u, u_vid[static_cast<std::size_t>(i)], -1});
        staged[static_cast<std::size_t>(i)].push_back({r.length(), r.v, v_vid[static_cast<std::size_t>(i)], -1});
    }
    auto stage_projection = [&](int road, Point q, int other, bool into_road) {
        const Road& r = net.roads[static_cast<std::size_t>(road)];
        Point e = (1.0 / r.length()) * (r.v - r.u);
        double param = dot(q - r.u, e);
        staged[static_cast<std::size_t>(road)].push_back(
            {param, q, -1, static_cast<int>(intents.size())});
        intents.push_back({other, into_road});
    };

    for (int i = 0; i < n; ++i) {
        const Road& r = net.roads[static_cast<std::size_t>(i)];
        if (s) {
            if (auto q = project_entry(*s, r)) stage_projection(i, *q, g.source, true);
        }
        if (t) {
            if (auto q = project_exit(*t, r)) stage_projection(i, *q, g.target, false);
        }
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int pv : {u_vid[static_cast<std::size_t>(j)], v_vid[static_cast<std::size_t>(j)]}) {
                Point p = g.vertex(pv).location;
                if (auto q = project_entry(p, r)) stage_projection(i, *q, pv, true);
                if (auto q = project_exit(p, r)) stage_projection(i, *q, pv, false);
            }
        }
    }

    // Per-road deduplication: sweep by parameter, merge chains of points
    // within tolerance. A cluster holding a road endpoint keeps the endpoint
    // vertex; otherwise the smallest parameter wins.
    std::vector<int> intent_vertex(intents.size(), -1);
    g.road_vertices.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
        auto& pts = staged[static_cast<std::size_t>(i)];
        std::stable_sort(pts.begin(), pts.end(), [](const StagedPoint& a, const StagedPoint& b) {
            if (a.param != b.param) return a.param < b.param;
            return (a.endpoint_vertex >= 0) > (b.endpoint_vertex >= 0);
        });
        std::size_t k = 0;
        while (k < pts.size()) {
            std::size_t end = k + 1;
            while (end < pts.size() && pts[end].param - pts[end - 1].param <= kGeomEps) ++end;
            int vid = -1;
            double param = pts[k].param;
            for (std::size_t m = k; m < end; ++m) {
                if (pts[m].endpoint_vertex >= 0) {
                    vid = pts[m].endpoint_vertex;
                    param = pts[m].param;
                    break;
                }
            }
            if (vid < 0) vid = add_vertex(pts[k].location, VertexKind::road_point, i, param, false);
            for (std::size_t m = k; m < end; ++m)
                if (pts[m].intent >= 0) intent_vertex[static_cast<std::size_t>(pts[m].intent)] = vid;
            g.road_vertices[static_cast<std::size_t>(i)].push_back({vid, param});
            k = end;
        }
    }

    g.out.assign(g.vertices.size(), {});
    auto add_edge = [&g, &net](int from, int to, LegKind kind, int road) {
        if (from == to) return; // merged projections can degenerate to loops
        double d = distance(g.vertex(from).location, g.vertex(to).location);
        double w = kind == LegKind::ride ? net.roads[static_cast<std::size_t>(road)].alpha * d : d;
        g.out[static_cast<std::size_t>(from)].push_back({from, to, w, kind, road});
        ++g.edge_count;
    };

    for (std::size_t idx = 0; idx < intents.size(); ++idx) {
        int vid = intent_vertex[idx];
        assert(vid >= 0);
        if (intents[idx].into_road)
            add_edge(intents[idx].other, vid, LegKind::walk, -1);
        else
            add_edge(vid, intents[idx].other, LegKind::walk, -1);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) add_edge(v_vid[static_cast<std::size_t>(i)], u_vid[static_cast<std::size_t>(j)], LegKind::walk, -1);
    if (s)
        for (int j = 0; j < n; ++j) add_edge(g.source, u_vid[static_cast<std::size_t>(j)], LegKind::walk, -1);
    if (t)
        for (int i = 0; i < n; ++i) add_edge(v_vid[static_cast<std::size_t>(i)], g.target, LegKind::walk, -1);
    if (s && t) add_edge(g.source, g.target, LegKind::walk, -1);
    for (int i = 0; i < n; ++i) {
        const auto& seq = g.road_vertices[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k + 1 < seq.size(); ++k)
            add_edge(seq[k].vertex, seq[k + 1].vertex, LegKind::ride, i);
    }
    return g;
}

SsspResult sssp(const PathGraph& g, int source, bool reversed) {
    const int V = g.vertex_count();
    if (source < 0 || source >= V) throw std::invalid_argument("sssp: bad source vertex");

    std::vector<std::vector<GraphEdge>> adj;
    const std::vector<std::vector<GraphEdge>>* edges = &g.out;
    if (reversed) {
        adj.assign(static_cast<std::size_t>(V), {});
        for (const auto& list : g.out)
            for (const GraphEdge& e : list) adj[static_cast<std::size_t>(e.to)].push_back(e);
        edges = &adj;
    }

    SsspResult res;
    res.dist.assign(static_cast<std::size_t>(V), kInf);
    res.pred.assign(static_cast<std::size_t>(V), GraphEdge{});
    res.dist[static_cast<std::size_t>(source)] = 0.0;

    using HeapItem = std::pair<double, int>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
    heap.push({0.0, source});
    std::vector<char> done(static_cast<std::size_t>(V), 0);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[static_cast<std::size_t>(u)]) continue;
        done[static_cast<std::size_t>(u)] = 1;
        for (const GraphEdge& e : (*edges)[static_cast<std::size_t>(u)]) {
            int to = reversed ? e.from : e.to;
            double nd = d + e.weight;
            if (nd < res.dist[static_cast<std::size_t>(to)]) {
                res.dist[static_cast<std::size_t>(to)] = nd;
                res.pred[static_cast<std::size_t>(to)] = e;
                heap.push({nd, to});
            }
        }
    }
    return res;
}

namespace {

void append_leg(QuickestPath& qp, LegKind kind, Point from, Point to, int road, double cost) {
    if (kind == LegKind::walk && cost == 0.0) return;
    if (!qp.legs.empty()) {
        QuickestPath::Leg& back = qp.legs.back();
        if (back.kind == LegKind::ride && kind == LegKind::ride && back.road == road) {
            back.to = to;
            back.cost += cost;
            return;
        }
    }
    qp.legs.push_back({kind, from, to, road, cost});
}

} // namespace

QuickestPath quickest_path(const Network& net, Point s, Point t) {
    PathGraph g = build_graph(net, s, t);
    SsspResult res = sssp(g, g.source, false);

    QuickestPath qp;
    qp.cost = res.dist[static_cast<std::size_t>(g.target)];

    std::vector<GraphEdge> chain;
    int cur = g.target;
    while (cur != g.source) {
        const GraphEdge& e = res.pred[static_cast<std::size_t>(cur)];
        assert(e.from >= 0);
        chain.push_back(e);
        cur = e.from;
    }
    std::reverse(chain.begin(), chain.end());
    for (const GraphEdge& e : chain)
        append_leg(qp, e.kind, g.vertex(e.from).location, g.vertex(e.to).location, e.road, e.weight);
    return qp;
}

} // namespace quickpath
