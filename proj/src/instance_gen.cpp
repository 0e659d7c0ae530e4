#include "quickpath/instance_gen.hpp"

namespace quickpath {

Network random_network(std::uint64_t seed, const InstanceParams& params) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, params.box);
    std::uniform_real_distribution<double> alpha(params.alpha_min, params.alpha_max);

    std::vector<Road> roads;
    int attempts = 0;
    while (static_cast<int>(roads.size()) < params.roads && attempts < params.roads * 1000) {
        ++attempts;
        Road r;
        r.u = {coord(rng), coord(rng)};
        r.v = {coord(rng), coord(rng)};
        double len = r.length();
        if (len < params.min_length || len > params.max_length) continue;
        r.alpha = alpha(rng);
        bool clashes = false;
        for (const Road& other : roads)
            if (interiors_intersect(r.seg(), other.seg())) {
                clashes = true;
                break;
            }
        if (!clashes) roads.push_back(r);
    }
    return make_network(std::move(roads));
}

Point random_point(std::mt19937_64& rng, double box) {
    std::uniform_real_distribution<double> coord(0.0, box);
    return {coord(rng), coord(rng)};
}

std::pair<Point, Point> random_query_pair(std::mt19937_64& rng, double box, double min_gap) {
    for (;;) {
        Point s = random_point(rng, box);
        Point t = random_point(rng, box);
        if (distance(s, t) >= min_gap) return {s, t};
    }
}

} // namespace quickpath
