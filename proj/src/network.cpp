#include "quickpath/network.hpp"

#include "quickpath/text_util.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace quickpath {

Network make_network(std::vector<Road> roads) {
    Network net;
    net.roads = std::move(roads);
    for (std::size_t i = 0; i < net.roads.size(); ++i)
        net.roads[i].id = static_cast<int>(i);
    if (!net.roads.empty()) {
        net.alpha_min = net.roads.front().alpha;
        net.alpha_max = net.roads.front().alpha;
        for (const Road& r : net.roads) {
            net.alpha_min = std::min(net.alpha_min, r.alpha);
            net.alpha_max = std::max(net.alpha_max, r.alpha);
        }
    }
    return net;
}

namespace {

bool same_point(Point a, Point b) { return distance(a, b) <= kGeomEps; }

// Same geometry in either direction: the two directed expansions of one
// undirected road overlap by construction and are not a defect.
bool twin_geometry(const Road& a, const Road& b) {
    return (same_point(a.u, b.u) && same_point(a.v, b.v)) ||
           (same_point(a.u, b.v) && same_point(a.v, b.u));
}

} // namespace

std::vector<Violation> validate(const Network& net) {
    std::vector<Violation> out;
    for (const Road& r : net.roads) {
        std::string tag = "road " + std::to_string(r.id);
        if (!is_finite(r.u) || !is_finite(r.v))
            out.push_back({tag + ": non-finite coordinates"});
        else if (r.length() <= kGeomEps)
            out.push_back({tag + ": start and end points coincide"});
        if (!(r.alpha > 0.0 && r.alpha <= 1.0))
            out.push_back({tag + ": weight " + format_real(r.alpha) + " outside (0, 1]"});
    }
    for (std::size_t i = 0; i < net.roads.size(); ++i) {
        for (std::size_t j = i + 1; j < net.roads.size(); ++j) {
            const Road& a = net.roads[i];
            const Road& b = net.roads[j];
            if (twin_geometry(a, b)) continue;
            if (interiors_intersect(a.seg(), b.seg()))
                out.push_back({"roads " + std::to_string(a.id) + " and " +
                               std::to_string(b.id) + " intersect"});
        }
    }
    return out;
}

Network parse_network(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    };

    if (!std::getline(in, line)) {
        line_no = 1;
        fail("empty input, expected 'qpn v1'");
    }
    ++line_no;
    {
        std::istringstream hs(line);
        std::string a, b, extra;
        hs >> a >> b;
        if (a != "qpn" || b != "v1" || (hs >> extra))
            fail("expected header 'qpn v1'");
    }

    std::vector<Road> roads;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;       // blank line
        if (word[0] == '#') continue;      // comment
        if (word != "road") fail("unknown directive '" + word + "'");
        std::string sx1, sy1, sx2, sy2, salpha, sdir, extra;
        if (!(ls >> sx1 >> sy1 >> sx2 >> sy2 >> salpha >> sdir))
            fail("road needs: x1 y1 x2 y2 alpha directed|undirected");
        if (ls >> extra) fail("trailing tokens after road definition");
        Road r;
        try {
            r.u = {parse_real(sx1, "x1"), parse_real(sy1, "y1")};
            r.v = {parse_real(sx2, "x2"), parse_real(sy2, "y2")};
            r.alpha = parse_real(salpha, "alpha");
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        if (sdir == "directed") {
            roads.push_back(r);
        } else if (sdir == "undirected") {
            roads.push_back(r);
            Road twin = r;
            std::swap(twin.u, twin.v);
            roads.push_back(twin); // reversed twin directly after its original
        } else {
            fail("direction must be 'directed' or 'undirected', got '" + sdir + "'");
        }
    }

    Network net = make_network(std::move(roads));
    std::vector<Violation> violations = validate(net);
    if (!violations.empty()) {
        std::string msg = "invalid network:";
        for (const Violation& v : violations) msg += "\n  " + v.message;
        throw ValidationError(msg);
    }
    return net;
}

Network parse_network_text(const std::string& text) {
    std::istringstream in(text);
    return parse_network(in);
}

Network load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open network file: " + path);
    return parse_network(in);
}

std::string serialize_network(const Network& net) {
    std::string out = "qpn v1\n";
    for (const Road& r : net.roads) {
        out += "road " + format_real(r.u.x) + " " + format_real(r.u.y) + " " +
               format_real(r.v.x) + " " + format_real(r.v.y) + " " +
               format_real(r.alpha) + " directed\n";
    }
    return out;
}

} // namespace quickpath
