#pragma once

#include "quickpath/geometry.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace quickpath {

/// A directed road: riding runs from u to v and costs alpha per unit length.
struct Road {
    int id = -1;
    Point u; // start point
    Point v; // end point
    double alpha = 1.0;

    SegmentGeom seg() const { return {u, v}; }
    double length() const { return distance(u, v); }
    double orientation() const { return normalize_angle(std::atan2(v.y - u.y, v.x - u.x)); }
};

struct Network {
    std::vector<Road> roads;
    double alpha_min = 1.0;
    double alpha_max = 1.0;
};

struct Violation {
    std::string message;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Assigns ids by position and computes the weight range. Does not validate.
Network make_network(std::vector<Road> roads);

/// Checks all Network invariants; an empty result means the network is valid.
/// Pairs of roads with identical geometry (same or swapped endpoints) are the
/// directed expansions of one undirected road and are not reported.
std::vector<Violation> validate(const Network& net);

/// Parses the `qpn v1` text format, expands undirected roads into two
/// directed twins, and validates. Throws ParseError or ValidationError.
Network parse_network(std::istream& in);
Network parse_network_text(const std::string& text);
Network load_network_file(const std::string& path);

/// Canonical form: every road directed, reals with 17 significant digits.
std::string serialize_network(const Network& net);

inline std::optional<Point> project_entry(Point p, const Road& r) {
    return project_entry(p, r.seg(), r.alpha);
}
inline std::optional<Point> project_exit(Point p, const Road& r) {
    return project_exit(p, r.seg(), r.alpha);
}

} // namespace quickpath
