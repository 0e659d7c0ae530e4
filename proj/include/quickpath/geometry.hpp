#pragma once

#include <cmath>
#include <optional>

namespace quickpath {

/// Coordinate tolerance for on-segment and intersection predicates.
/// Calibrated for inputs with coordinates up to ~1e4 in magnitude.
inline constexpr double kGeomEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Maps an angle to the canonical range [0, 2*pi).
double normalize_angle(double radians);

struct DirectionAngle {
    double radians = 0.0;

    static DirectionAngle from_radians(double r) { return {normalize_angle(r)}; }
    static DirectionAngle of(Point v) { return from_radians(std::atan2(v.y, v.x)); }
    Point unit() const { return {std::cos(radians), std::sin(radians)}; }
};

struct SegmentGeom {
    Point a;
    Point b;
    double length() const { return distance(a, b); }
};

/// The angle an optimal walk leg makes with a road of weight alpha at an
/// interior entry or exit point: arccos(alpha). Throws std::domain_error
/// unless alpha is in (0, 1].
double optimal_entry_angle(double alpha);

/// Point q on the closed segment where the segment (p, q) meets the road at
/// angle arccos(alpha) measured against the backward direction (toward a).
/// Absent when q falls outside the segment or alpha = 1. A point on the
/// supporting line projects to itself when it lies on the segment.
std::optional<Point> project_entry(Point p, SegmentGeom seg, double alpha);

/// Mirror of project_entry: the angle is measured against the forward
/// direction (toward b).
std::optional<Point> project_exit(Point p, SegmentGeom seg, double alpha);

/// First intersection of the ray (origin, dir) with the closed segment.
/// Returns origin itself when origin lies on the segment.
std::optional<Point> ray_hit(Point origin, DirectionAngle dir, SegmentGeom seg);

/// True iff the relative interiors of the segments intersect, or an endpoint
/// of one lies in the interior of the other. Segments that share endpoints
/// only do not count as intersecting.
bool interiors_intersect(SegmentGeom s1, SegmentGeom s2);

} // namespace quickpath
