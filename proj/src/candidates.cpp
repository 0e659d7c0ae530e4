#include "quickpath/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quickpath {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ConeIndex build_cone_index(std::vector<Point> points, double eps, std::vector<int> payloads) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("build_cone_index: eps must be in (0, 1)");
    ConeIndex index;
    index.eps = eps;
    index.k = std::max(9, static_cast<int>(std::ceil(36.0 * std::numbers::pi / eps)));
    index.cone_angle = kTwoPi / index.k;
    index.points = std::move(points);
    if (payloads.empty()) {
        index.payloads.resize(index.points.size());
        for (std::size_t i = 0; i < index.points.size(); ++i)
            index.payloads[i] = static_cast<int>(i);
    } else {
        if (payloads.size() != index.points.size())
            throw std::invalid_argument("build_cone_index: payload count mismatch");
        index.payloads = std::move(payloads);
    }
    return index;
}

int cone_of(const ConeIndex& index, Point q, Point r) {
    if (distance(q, r) <= kGeomEps) return 0;
    double a = normalize_angle(std::atan2(r.y - q.y, r.x - q.x));
    int idx = std::min(index.k - 1, static_cast<int>(std::floor(a / index.cone_angle)));
    if (idx > 0 && a == idx * index.cone_angle) --idx; // boundary: lower-indexed cone
    return idx;
}

std::vector<D1Hit> d1(const ConeIndex& index, Point q) {
    struct Best {
        double projection = 0.0;
        std::size_t point = 0;
    };
    std::map<int, Best> best;
    for (std::size_t i = 0; i < index.points.size(); ++i) {
        Point r = index.points[i];
        int cone = cone_of(index, q, r);
        double bisector = (cone + 0.5) * index.cone_angle;
        double proj = dot(r - q, Point{std::cos(bisector), std::sin(bisector)});
        auto it = best.find(cone);
        if (it == best.end() || proj < it->second.projection)
            best[cone] = {proj, i}; // scan order keeps the lowest index on ties
    }
    std::vector<D1Hit> out;
    out.reserve(best.size());
    for (const auto& [cone, b] : best)
        out.push_back({cone, index.points[b.point], index.payloads[b.point]});
    return out;
}

RoadBuckets build_road_buckets(const Network& net, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("build_road_buckets: eps must be in (0, 1)");
    RoadBuckets rb;
    rb.eps = eps;
    rb.theta = eps / 18.0;
    rb.alpha_min = net.alpha_min;
    rb.m = static_cast<int>(std::ceil(kTwoPi / (rb.theta * rb.alpha_min)));
    rb.b = std::max(1, static_cast<int>(std::ceil(
                           std::log(net.alpha_max / net.alpha_min) / std::log1p(eps))));
    for (const Road& r : net.roads)
        rb.buckets[bucket_of(rb, r)].push_back(r.id);
    return rb;
}

std::pair<int, int> bucket_of(const RoadBuckets& rb, const Road& road) {
    double width = rb.theta * rb.alpha_min;
    int i = 1 + static_cast<int>(std::floor(road.orientation() / width));
    i = std::clamp(i, 1, rb.m);
    int j = 1 + static_cast<int>(std::floor(std::log(road.alpha / rb.alpha_min) / std::log1p(rb.eps)));
    j = std::clamp(j, 1, rb.b);
    return {i, j};
}

double bucket_reference_alpha(const RoadBuckets& rb, int j) {
    return rb.alpha_min * std::pow(1.0 + rb.eps, j - 1);
}

std::pair<DirectionAngle, DirectionAngle> gamma_directions(const RoadBuckets& rb, int i, int j) {
    if (i < 1 || i > rb.m || j < 1 || j > rb.b)
        throw std::invalid_argument("gamma_directions: bucket index out of range");
    double psi = (i - 1) * rb.theta * rb.alpha_min;
    double phi = std::acos(std::min(1.0, bucket_reference_alpha(rb, j)));
    return {DirectionAngle::from_radians(psi + phi), DirectionAngle::from_radians(psi - phi)};
}

std::vector<TupleD2> d2(const RoadBuckets& rb, const Network& net, const PathGraph& graph,
                        Point q, QuerySide side) {
    std::vector<TupleD2> out;
    for (const auto& [key, road_ids] : rb.buckets) {
        auto [up, down] = gamma_directions(rb, key.first, key.second);
        if (side == QuerySide::destination) {
            // Exit geometry: the segment from the hit point back to q makes the
            // entry angle with the forward road direction, so the rays flip.
            up = DirectionAngle::from_radians(up.radians + std::numbers::pi);
            down = DirectionAngle::from_radians(down.radians + std::numbers::pi);
        }
        for (DirectionAngle dir : {up, down}) {
            int best_road = -1;
            double best_t = 0.0;
            Point best_hit;
            // TODO: replace the per-bucket scan with the rotated trapezoidal
            // map once bucket sizes matter; the contract stays the same.
            for (int rid : road_ids) {
                const Road& r = net.roads[static_cast<std::size_t>(rid)];
                auto hit = ray_hit(q, dir, r.seg());
                if (!hit) continue;
                double t = distance(q, *hit);
                if (best_road < 0 || t < best_t) {
                    best_road = rid;
                    best_t = t;
                    best_hit = *hit;
                }
            }
            if (best_road < 0) continue;
            const Road& r = net.roads[static_cast<std::size_t>(best_road)];
            Point e = (1.0 / r.length()) * (r.v - r.u);
            double param = std::clamp(dot(best_hit - r.u, e), 0.0, r.length());
            const auto& seq = graph.road_vertices[static_cast<std::size_t>(best_road)];
            int next = -1;
            if (side == QuerySide::source) {
                // First vertex at or after the hit; the end point guarantees one.
                for (const RoadVertex& rv : seq)
                    if (rv.param >= param - kGeomEps) {
                        next = rv.vertex;
                        break;
                    }
            } else {
                // Last vertex at or before the hit; the start point guarantees one.
                for (const RoadVertex& rv : seq) {
                    if (rv.param <= param + kGeomEps) next = rv.vertex;
                    else break;
                }
            }
            out.push_back({best_road, best_hit, next});
        }
    }
    return out;
}

} // namespace quickpath
