#pragma once

#include "quickpath/network.hpp"
#include "quickpath/path_graph.hpp"

#include <map>
#include <utility>
#include <vector>

namespace quickpath {

/// Cone index over a point set: k = max{9, ceil(36*pi/eps)} equal cones
/// apexed at the query point. Each cone reports the point whose orthogonal
/// projection onto the cone bisector is nearest the apex.
struct ConeIndex {
    int k = 9;
    double eps = 0.0;
    double cone_angle = 0.0; // 2*pi / k
    std::vector<Point> points;
    std::vector<int> payloads; // caller data per point, defaults to the index
};

ConeIndex build_cone_index(std::vector<Point> points, double eps,
                           std::vector<int> payloads = {});

/// Cone containing the direction from q to r. A direction exactly on a cone
/// boundary belongs to the lower-indexed cone; r within tolerance of q lands
/// in cone 0 (its projection 0 is minimal everywhere).
int cone_of(const ConeIndex& index, Point q, Point r);

struct D1Hit {
    int cone = 0;
    Point point;
    int payload = -1;
};

/// Per-cone minimizers around q, ordered by cone index. At most one hit per
/// cone; projection ties resolve by point index.
std::vector<D1Hit> d1(const ConeIndex& index, Point q);

/// Roads partitioned by orientation (width theta * alpha_min, theta = eps/18)
/// and by weight (geometric buckets with ratio 1+eps). Bucket indices are
/// 1-based to match the interval formulas.
struct RoadBuckets {
    double eps = 0.0;
    double theta = 0.0;
    double alpha_min = 1.0;
    int m = 1; // orientation bucket count
    int b = 1; // weight bucket count
    std::map<std::pair<int, int>, std::vector<int>> buckets; // only non-empty
};

RoadBuckets build_road_buckets(const Network& net, double eps);

std::pair<int, int> bucket_of(const RoadBuckets& rb, const Road& road);

/// Reference weight of weight bucket j: alpha_min * (1+eps)^(j-1).
double bucket_reference_alpha(const RoadBuckets& rb, int j);

/// Ray directions for bucket (i, j): the entry rays that meet a road of the
/// bucket's reference orientation at angle arccos(reference alpha), coming
/// from below (up) and from above (down).
std::pair<DirectionAngle, DirectionAngle> gamma_directions(const RoadBuckets& rb, int i, int j);

enum class QuerySide { source, destination };

struct TupleD2 {
    int road = -1;
    Point hit;           // first in-bucket road point hit by the ray
    int next_vertex = -1; // nearest graph vertex along the road
};

/// Type-2 candidates: for every non-empty bucket shoot both rays from q and
/// report the first in-bucket road hit with its nearest graph vertex. The
/// source side looks toward the road's end point, the destination side uses
/// the mirrored exit rays and looks toward the start point.
std::vector<TupleD2> d2(const RoadBuckets& rb, const Network& net, const PathGraph& graph,
                        Point q, QuerySide side);

} // namespace quickpath
