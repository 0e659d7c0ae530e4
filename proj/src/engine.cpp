#include "quickpath/engine.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <stdexcept>

namespace quickpath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int argmin_unfinished(const std::vector<double>& dist, const std::vector<char>& done) {
    int u = -1;
    double best = kInf;
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (!done[v] && dist[v] < best) {
            best = dist[v];
            u = static_cast<int>(v);
        }
    return u;
}

} // namespace

std::vector<double> closure_costs_from(const PathGraph& g, int source) {
    const int V = g.vertex_count();
    std::vector<double> dist(static_cast<std::size_t>(V), kInf);
    std::vector<char> done(static_cast<std::size_t>(V), 0);
    dist[static_cast<std::size_t>(source)] = 0.0;
    for (int iter = 0; iter < V; ++iter) {
        int u = argmin_unfinished(dist, done);
        if (u < 0) break;
        done[static_cast<std::size_t>(u)] = 1;
        double du = dist[static_cast<std::size_t>(u)];
        for (const GraphEdge& e : g.out[static_cast<std::size_t>(u)]) {
            double nd = du + e.weight;
            if (nd < dist[static_cast<std::size_t>(e.to)]) dist[static_cast<std::size_t>(e.to)] = nd;
        }
        Point pu = g.vertex(u).location;
        for (int v = 0; v < V; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            double nd = du + distance(pu, g.vertex(v).location);
            if (nd < dist[static_cast<std::size_t>(v)]) dist[static_cast<std::size_t>(v)] = nd;
        }
    }
    return dist;
}

ClosureToTarget closure_costs_to(const PathGraph& g, int target) {
    const int V = g.vertex_count();
    std::vector<std::vector<GraphEdge>> in(static_cast<std::size_t>(V));
    for (const auto& list : g.out)
        for (const GraphEdge& e : list) in[static_cast<std::size_t>(e.to)].push_back(e);

    ClosureToTarget res;
    res.cost.assign(static_cast<std::size_t>(V), kInf);
    res.next.assign(static_cast<std::size_t>(V), PredStep{});
    std::vector<char> done(static_cast<std::size_t>(V), 0);
    res.cost[static_cast<std::size_t>(target)] = 0.0;
    for (int iter = 0; iter < V; ++iter) {
        int u = argmin_unfinished(res.cost, done);
        if (u < 0) break;
        done[static_cast<std::size_t>(u)] = 1;
        double du = res.cost[static_cast<std::size_t>(u)];
        for (const GraphEdge& e : in[static_cast<std::size_t>(u)]) {
            double nd = du + e.weight;
            if (nd < res.cost[static_cast<std::size_t>(e.from)]) {
                res.cost[static_cast<std::size_t>(e.from)] = nd;
                res.next[static_cast<std::size_t>(e.from)] = {u, e.kind, e.road};
            }
        }
        Point pu = g.vertex(u).location;
        for (int v = 0; v < V; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            double nd = du + distance(pu, g.vertex(v).location);
            if (nd < res.cost[static_cast<std::size_t>(v)]) {
                res.cost[static_cast<std::size_t>(v)] = nd;
                res.next[static_cast<std::size_t>(v)] = {u, LegKind::walk, -1};
            }
        }
    }
    return res;
}

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("eps must be in (0, 1)");
}

ConeIndex endpoint_cone_index(const PathGraph& g, double eps) {
    std::vector<Point> pts;
    std::vector<int> payload;
    pts.reserve(g.endpoint_vertices.size());
    for (int vid : g.endpoint_vertices) {
        pts.push_back(g.vertex(vid).location);
        payload.push_back(vid);
    }
    return build_cone_index(std::move(pts), eps, std::move(payload));
}

void append_step(QuickestPath& qp, LegKind kind, Point from, Point to, int road, double cost) {
    if (kind == LegKind::walk && cost == 0.0) return;
    if (!qp.legs.empty() && qp.legs.back().kind == LegKind::ride && kind == LegKind::ride &&
        qp.legs.back().road == road) {
        qp.legs.back().to = to;
        qp.legs.back().cost += cost;
        return;
    }
    qp.legs.push_back({kind, from, to, road, cost});
}

} // namespace

FixedDestIndex build_fixed(const Network& net, Point t, double eps) {
    check_eps(eps);
    FixedDestIndex index;
    index.net = net;
    index.eps = eps;
    index.t = t;
    index.graph = build_graph(net, std::nullopt, t);
    ClosureToTarget to = closure_costs_to(index.graph, index.graph.target);
    index.cost_to_target = std::move(to.cost);
    index.next_hop = std::move(to.next);
    index.cones = endpoint_cone_index(index.graph, eps);
    index.buckets = build_road_buckets(net, eps);
    return index;
}

QueryAnswer query_fixed(const FixedDestIndex& index, Point s) {
    const PathGraph& g = index.graph;

    struct Choice {
        double cost = kInf;
        CandidateKind kind = CandidateKind::direct;
        int vertex = -1;   // graph vertex the path continues from
        Point hit;         // type-2 ride entry point
        int road = -1;
    };
    Choice best;
    best.cost = distance(s, index.t);

    for (const D1Hit& hit : d1(index.cones, s)) {
        double c = distance(s, hit.point) + index.cost_to_target[static_cast<std::size_t>(hit.payload)];
        if (c < best.cost) best = {c, CandidateKind::type1, hit.payload, {}, -1};
    }
    for (const TupleD2& tup : d2(index.buckets, index.net, g, s, QuerySide::source)) {
        const Road& r = index.net.roads[static_cast<std::size_t>(tup.road)];
        Point s2 = g.vertex(tup.next_vertex).location;
        double c = distance(s, tup.hit) + r.alpha * distance(tup.hit, s2) +
                   index.cost_to_target[static_cast<std::size_t>(tup.next_vertex)];
        if (c < best.cost) best = {c, CandidateKind::type2, tup.next_vertex, tup.hit, tup.road};
    }

    QueryAnswer ans;
    ans.cost = best.cost;
    ans.kind_s = best.kind;
    ans.kind_t = best.kind;

    QuickestPath witness;
    witness.cost = best.cost;
    if (best.kind == CandidateKind::direct) {
        append_step(witness, LegKind::walk, s, index.t, -1, distance(s, index.t));
    } else {
        Point entry = g.vertex(best.vertex).location;
        if (best.kind == CandidateKind::type1) {
            append_step(witness, LegKind::walk, s, entry, -1, distance(s, entry));
        } else {
            const Road& r = index.net.roads[static_cast<std::size_t>(best.road)];
            append_step(witness, LegKind::walk, s, best.hit, -1, distance(s, best.hit));
            append_step(witness, LegKind::ride, best.hit, entry, best.road,
                        r.alpha * distance(best.hit, entry));
        }
        int cur = best.vertex;
        while (cur != g.target) {
            const PredStep& step = index.next_hop[static_cast<std::size_t>(cur)];
            assert(step.next >= 0);
            Point from = g.vertex(cur).location;
            Point to = g.vertex(step.next).location;
            double d = distance(from, to);
            double cost = step.kind == LegKind::ride
                              ? index.net.roads[static_cast<std::size_t>(step.road)].alpha * d
                              : d;
            append_step(witness, step.kind, from, to, step.road, cost);
            cur = step.next;
        }
    }
    ans.witness = std::move(witness);
    return ans;
}

TwoPointIndex build_two_point(const Network& net, double eps, TwoPointMode mode,
                              std::optional<double> tau) {
    check_eps(eps);
    TwoPointIndex index;
    index.net = net;
    index.eps = eps;
    index.mode = mode;
    index.graph = build_graph(net, std::nullopt, std::nullopt);
    index.cones = endpoint_cone_index(index.graph, eps);
    index.buckets = build_road_buckets(net, eps);

    const int V = index.graph.vertex_count();
    if (mode == TwoPointMode::exact_apsp) {
        index.all_pairs.reserve(static_cast<std::size_t>(V));
        for (int v = 0; v < V; ++v) index.all_pairs.push_back(closure_costs_from(index.graph, v));
        return index;
    }

    if (!tau || !(*tau > 0.0 && *tau < 1.0))
        throw std::invalid_argument("wspd mode needs tau in (0, 1)");
    index.tau = *tau;
    if (V == 0) return index;

    std::vector<Point> locations;
    locations.reserve(static_cast<std::size_t>(V));
    for (const GraphVertex& v : index.graph.vertices) locations.push_back(v.location);
    index.tree = build_split_tree(locations);
    index.vertex_point = index.tree.input_to_point;
    index.point_vertex.assign(index.tree.points.size(), -1);
    for (int v = 0; v < V; ++v) {
        int pt = index.vertex_point[static_cast<std::size_t>(v)];
        if (index.point_vertex[static_cast<std::size_t>(pt)] < 0)
            index.point_vertex[static_cast<std::size_t>(pt)] = v;
    }

    double separation = 8.0 / (index.tau * net.alpha_min);
    index.pairs = wspd_pairs(index.tree, separation);

    // One SSSP per distinct representative source, shared across pairs.
    std::map<int, std::vector<double>> rows;
    auto row_from = [&](int point) -> const std::vector<double>& {
        auto it = rows.find(point);
        if (it == rows.end()) {
            int src = index.point_vertex[static_cast<std::size_t>(point)];
            it = rows.emplace(point, closure_costs_from(index.graph, src)).first;
        }
        return it->second;
    };
    index.pair_costs.reserve(index.pairs.pairs.size());
    for (const WspdPair& pair : index.pairs.pairs) {
        int va = index.point_vertex[static_cast<std::size_t>(pair.rep_a)];
        int vb = index.point_vertex[static_cast<std::size_t>(pair.rep_b)];
        index.pair_costs.push_back({row_from(pair.rep_a)[static_cast<std::size_t>(vb)],
                                    row_from(pair.rep_b)[static_cast<std::size_t>(va)]});
    }
    index.sssp_source_count = static_cast<int>(rows.size());
    return index;
}

double estimate_wspd(const TwoPointIndex& index, int p_vertex, int q_vertex) {
    if (index.mode != TwoPointMode::wspd)
        throw std::invalid_argument("estimate_wspd: index is not in wspd mode");
    if (p_vertex == q_vertex) return 0.0;
    Point p = index.graph.vertex(p_vertex).location;
    Point q = index.graph.vertex(q_vertex).location;
    int pp = index.vertex_point[static_cast<std::size_t>(p_vertex)];
    int qq = index.vertex_point[static_cast<std::size_t>(q_vertex)];
    if (pp == qq) return distance(p, q); // merged locations, negligible gap
    PairRef ref = find_pair(index.pairs, index.tree, pp, qq);
    const WspdPair& pair = index.pairs.pairs[static_cast<std::size_t>(ref.pair)];
    Point ra = index.tree.points[static_cast<std::size_t>(pair.rep_a)];
    Point rb = index.tree.points[static_cast<std::size_t>(pair.rep_b)];
    if (!ref.swapped)
        return distance(p, ra) + index.pair_costs[static_cast<std::size_t>(ref.pair)][0] +
               distance(rb, q);
    return distance(p, rb) + index.pair_costs[static_cast<std::size_t>(ref.pair)][1] +
           distance(ra, q);
}

namespace {

struct SideCandidate {
    CandidateKind kind = CandidateKind::type1;
    double pre_cost = 0.0; // cost between the query point and the table vertex
    int vertex = -1;
    int road = -1; // type-2 only
    Point hit;
    double hit_param = 0.0;
};

std::vector<SideCandidate> side_candidates(const TwoPointIndex& index, Point q, QuerySide side) {
    std::vector<SideCandidate> out;
    for (const D1Hit& hit : d1(index.cones, q))
        out.push_back({CandidateKind::type1, distance(q, hit.point), hit.payload, -1, {}, 0.0});
    for (const TupleD2& tup : d2(index.buckets, index.net, index.graph, q, side)) {
        const Road& r = index.net.roads[static_cast<std::size_t>(tup.road)];
        Point v = index.graph.vertex(tup.next_vertex).location;
        Point e = (1.0 / r.length()) * (r.v - r.u);
        out.push_back({CandidateKind::type2,
                       distance(q, tup.hit) + r.alpha * distance(tup.hit, v), tup.next_vertex,
                       tup.road, tup.hit, dot(tup.hit - r.u, e)});
    }
    return out;
}

} // namespace

QueryAnswer query_two_point(const TwoPointIndex& index, Point s, Point t) {
    QueryAnswer ans;
    ans.cost = distance(s, t);
    ans.kind_s = CandidateKind::direct;
    ans.kind_t = CandidateKind::direct;
    if (index.graph.vertex_count() == 0) return ans;

    std::vector<SideCandidate> from_s = side_candidates(index, s, QuerySide::source);
    std::vector<SideCandidate> to_t = side_candidates(index, t, QuerySide::destination);

    for (const SideCandidate& cs : from_s) {
        for (const SideCandidate& ct : to_t) {
            double mid;
            if (cs.vertex == ct.vertex)
                mid = 0.0;
            else if (index.mode == TwoPointMode::exact_apsp)
                mid = index.all_pairs[static_cast<std::size_t>(cs.vertex)]
                                     [static_cast<std::size_t>(ct.vertex)];
            else
                mid = estimate_wspd(index, cs.vertex, ct.vertex);
            double total = cs.pre_cost + mid + ct.pre_cost;
            if (total < ans.cost) {
                ans.cost = total;
                ans.kind_s = cs.kind;
                ans.kind_t = ct.kind;
            }
            // Both rays on one road with the entry hit upstream of the exit
            // hit: ride straight between the hits. The table route cannot
            // express this when no vertex separates them (it would have to
            // run against the road's direction).
            if (cs.road >= 0 && cs.road == ct.road && cs.hit_param <= ct.hit_param) {
                const Road& r = index.net.roads[static_cast<std::size_t>(cs.road)];
                double direct_ride = distance(s, cs.hit) + r.alpha * distance(cs.hit, ct.hit) +
                                     distance(ct.hit, t);
                if (direct_ride < ans.cost) {
                    ans.cost = direct_ride;
                    ans.kind_s = CandidateKind::type2;
                    ans.kind_t = CandidateKind::type2;
                }
            }
        }
    }
    return ans;
}

} // namespace quickpath
