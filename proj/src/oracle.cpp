#include "quickpath/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace quickpath {

double oracle_cost(const Network& net, Point s, Point t, int samples_per_road) {
    if (samples_per_road < 2)
        throw std::invalid_argument("oracle_cost: need at least 2 samples per road");

    const int k = samples_per_road;
    std::vector<Point> nodes;
    nodes.reserve(2 + net.roads.size() * static_cast<std::size_t>(k));
    nodes.push_back(s);
    nodes.push_back(t);

    struct RoadRange {
        int first = 0;
        double ride_step = 0.0; // alpha * spacing
    };
    std::vector<RoadRange> ranges;
    ranges.reserve(net.roads.size());
    for (const Road& r : net.roads) {
        RoadRange range;
        range.first = static_cast<int>(nodes.size());
        double step = r.length() / (k - 1);
        range.ride_step = r.alpha * step;
        Point e = (1.0 / r.length()) * (r.v - r.u);
        for (int j = 0; j < k; ++j) nodes.push_back(r.u + (j * step) * e);
        ranges.push_back(range);
    }

    // Dense Dijkstra: the walk edges form a complete graph, so neighbours are
    // enumerated implicitly instead of materialised.
    const int N = static_cast<int>(nodes.size());
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(N), kInf);
    std::vector<char> done(static_cast<std::size_t>(N), 0);
    dist[0] = 0.0;
    for (int iter = 0; iter < N; ++iter) {
        int u = -1;
        double best = kInf;
        for (int v = 0; v < N; ++v)
            if (!done[static_cast<std::size_t>(v)] && dist[static_cast<std::size_t>(v)] < best) {
                best = dist[static_cast<std::size_t>(v)];
                u = v;
            }
        if (u < 0 || u == 1) break; // target finalised
        done[static_cast<std::size_t>(u)] = 1;
        Point pu = nodes[static_cast<std::size_t>(u)];
        for (int v = 0; v < N; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            double nd = best + distance(pu, nodes[static_cast<std::size_t>(v)]);
            if (nd < dist[static_cast<std::size_t>(v)]) dist[static_cast<std::size_t>(v)] = nd;
        }
        for (const RoadRange& range : ranges) {
            int offset = u - range.first;
            if (offset >= 0 && offset < k - 1) {
                double nd = best + range.ride_step;
                if (nd < dist[static_cast<std::size_t>(u + 1)]) dist[static_cast<std::size_t>(u + 1)] = nd;
            }
        }
    }
    return dist[1];
}

} // namespace quickpath
