#include "quickpath/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace quickpath {

double normalize_angle(double radians) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(radians, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0; // fmod rounding at the seam
    return a;
}

double optimal_entry_angle(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("optimal_entry_angle: alpha must be in (0, 1]");
    return std::acos(alpha);
}

namespace {

// Entry projections sit h*cot(phi) ahead of the perpendicular foot along the
// road direction, exit projections the same amount behind it.
std::optional<Point> project_at_angle(Point p, SegmentGeom seg, double alpha, bool entry) {
    if (alpha >= 1.0) return std::nullopt; // cot(phi) unbounded, endpoints suffice
    double len = seg.length();
    Point e = (1.0 / len) * (seg.b - seg.a);
    double along = dot(p - seg.a, e);
    Point foot = seg.a + along * e;
    double h = distance(p, foot);
    if (h <= kGeomEps) {
        // p lies on the supporting line: it can enter/leave the road directly.
        if (along >= -kGeomEps && along <= len + kGeomEps) return p;
        return std::nullopt;
    }
    double offset = h * alpha / std::sqrt(1.0 - alpha * alpha); // h * cot(arccos(alpha))
    double q_along = entry ? along + offset : along - offset;
    if (q_along < -kGeomEps || q_along > len + kGeomEps) return std::nullopt;
    q_along = std::clamp(q_along, 0.0, len);
    return seg.a + q_along * e;
}

double point_segment_distance(Point p, SegmentGeom s) {
    double len = s.length();
    if (len <= kGeomEps) return distance(p, s.a);
    Point e = (1.0 / len) * (s.b - s.a);
    double along = std::clamp(dot(p - s.a, e), 0.0, len);
    return distance(p, s.a + along * e);
}

bool near(Point a, Point b) { return distance(a, b) <= kGeomEps; }

} // namespace

std::optional<Point> project_entry(Point p, SegmentGeom seg, double alpha) {
    return project_at_angle(p, seg, alpha, true);
}

std::optional<Point> project_exit(Point p, SegmentGeom seg, double alpha) {
    return project_at_angle(p, seg, alpha, false);
}

std::optional<Point> ray_hit(Point origin, DirectionAngle dir, SegmentGeom seg) {
    Point d = dir.unit();
    Point m = seg.b - seg.a;
    double len = norm(m);
    Point ao = seg.a - origin;
    double denom = cross(d, m);
    if (std::abs(denom) <= kGeomEps * std::max(len, 1.0)) {
        // Parallel. Only a collinear segment can be hit.
        if (std::abs(cross(ao, d)) > kGeomEps) return std::nullopt;
        double ta = dot(ao, d);
        double tb = dot(seg.b - origin, d);
        double lo = std::min(ta, tb), hi = std::max(ta, tb);
        if (lo <= kGeomEps && hi >= -kGeomEps) return origin; // origin on the segment
        if (hi < -kGeomEps) return std::nullopt;              // segment behind the ray
        return lo == ta ? seg.a : seg.b;                      // nearer endpoint ahead
    }
    double t = cross(ao, m) / denom;
    double w = cross(ao, d) / denom;
    double weps = kGeomEps / std::max(len, kGeomEps);
    if (t < -kGeomEps || w < -weps || w > 1.0 + weps) return std::nullopt;
    w = std::clamp(w, 0.0, 1.0);
    return seg.a + w * m;
}

bool interiors_intersect(SegmentGeom s1, SegmentGeom s2) {
    // An endpoint of one segment strictly inside the other.
    for (Point p : {s1.a, s1.b}) {
        if (point_segment_distance(p, s2) <= kGeomEps && !near(p, s2.a) && !near(p, s2.b))
            return true;
    }
    for (Point p : {s2.a, s2.b}) {
        if (point_segment_distance(p, s1) <= kGeomEps && !near(p, s1.a) && !near(p, s1.b))
            return true;
    }

    double len1 = s1.length();
    Point e1 = (1.0 / std::max(len1, kGeomEps)) * (s1.b - s1.a);
    bool a_on_line = std::abs(cross(e1, s2.a - s1.a)) <= kGeomEps;
    bool b_on_line = std::abs(cross(e1, s2.b - s1.a)) <= kGeomEps;
    if (a_on_line && b_on_line) {
        // Collinear: intersecting iff the parameter intervals overlap in more
        // than a single shared point.
        double ta = dot(s2.a - s1.a, e1);
        double tb = dot(s2.b - s1.a, e1);
        double lo = std::max(0.0, std::min(ta, tb));
        double hi = std::min(len1, std::max(ta, tb));
        return hi - lo > kGeomEps;
    }

    // Proper crossing: strictly opposite orientations on both segments.
    Point m1 = s1.b - s1.a, m2 = s2.b - s2.a;
    double len2 = s2.length();
    double o1 = cross(m1, s2.a - s1.a);
    double o2 = cross(m1, s2.b - s1.a);
    double o3 = cross(m2, s1.a - s2.a);
    double o4 = cross(m2, s1.b - s2.a);
    double t1 = kGeomEps * std::max(len1, 1.0);
    double t2 = kGeomEps * std::max(len2, 1.0);
    bool split1 = (o1 > t1 && o2 < -t1) || (o1 < -t1 && o2 > t1);
    bool split2 = (o3 > t2 && o4 < -t2) || (o3 < -t2 && o4 > t2);
    return split1 && split2;
}

} // namespace quickpath
