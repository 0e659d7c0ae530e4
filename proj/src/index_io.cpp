#include "quickpath/index_io.hpp"

#include "quickpath/text_util.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace quickpath {

namespace {

const char* kind_code(VertexKind k) {
    switch (k) {
        case VertexKind::source: return "s";
        case VertexKind::target: return "t";
        default: return "r";
    }
}

VertexKind kind_from_code(const std::string& s) {
    if (s == "s") return VertexKind::source;
    if (s == "t") return VertexKind::target;
    if (s == "r") return VertexKind::road_point;
    throw ParseError("qpx: unknown vertex kind '" + s + "'");
}

void write_network(const Network& net, std::ostream& out) {
    out << "nethash " << fnv1a_hex(serialize_network(net)) << "\n";
    out << "roads " << net.roads.size() << "\n";
    for (const Road& r : net.roads)
        out << "road " << r.id << " " << format_real(r.u.x) << " " << format_real(r.u.y) << " "
            << format_real(r.v.x) << " " << format_real(r.v.y) << " " << format_real(r.alpha)
            << "\n";
}

void write_graph(const PathGraph& g, std::ostream& out) {
    out << "vertices " << g.vertices.size() << "\n";
    for (const GraphVertex& v : g.vertices)
        out << "vertex " << v.id << " " << format_real(v.location.x) << " "
            << format_real(v.location.y) << " " << kind_code(v.kind) << " " << (v.endpoint ? 1 : 0)
            << " " << v.road << " " << format_real(v.param) << "\n";
    for (std::size_t r = 0; r < g.road_vertices.size(); ++r) {
        out << "roadseq " << r << " " << g.road_vertices[r].size();
        for (const RoadVertex& rv : g.road_vertices[r])
            out << " " << rv.vertex << " " << format_real(rv.param);
        out << "\n";
    }
}

// The reader rebuilds only what queries touch: vertex table, per-road chains,
// endpoint list. Adjacency lists stay empty.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    std::vector<std::string> next_line() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::istringstream ls(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty()) continue;
            return tokens;
        }
        fail("unexpected end of file");
        return {};
    }

    std::vector<std::string> expect(const std::string& head, std::size_t min_tokens) {
        auto tokens = next_line();
        if (tokens[0] != head) fail("expected '" + head + "', got '" + tokens[0] + "'");
        if (tokens.size() < min_tokens) fail("'" + head + "' line too short");
        return tokens;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("qpx line " + std::to_string(line_no_) + ": " + msg);
    }

private:
    std::istream& in_;
    int line_no_ = 0;
};

Network read_network(Reader& reader) {
    reader.expect("nethash", 2);
    auto count_line = reader.expect("roads", 2);
    long count = parse_int(count_line[1], "road count");
    std::vector<Road> roads;
    roads.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        auto tok = reader.expect("road", 7);
        Road r;
        r.u = {parse_real(tok[2], "ux"), parse_real(tok[3], "uy")};
        r.v = {parse_real(tok[4], "vx"), parse_real(tok[5], "vy")};
        r.alpha = parse_real(tok[6], "alpha");
        roads.push_back(r);
    }
    return make_network(std::move(roads));
}

PathGraph read_graph(Reader& reader, std::size_t road_count) {
    PathGraph g;
    auto head = reader.expect("vertices", 2);
    long count = parse_int(head[1], "vertex count");
    g.vertices.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        auto tok = reader.expect("vertex", 8);
        GraphVertex v;
        v.id = static_cast<int>(parse_int(tok[1], "vertex id"));
        v.location = {parse_real(tok[2], "x"), parse_real(tok[3], "y")};
        v.kind = kind_from_code(tok[4]);
        v.endpoint = parse_int(tok[5], "endpoint flag") != 0;
        v.road = static_cast<int>(parse_int(tok[6], "road"));
        v.param = parse_real(tok[7], "param");
        if (v.kind == VertexKind::source) g.source = v.id;
        if (v.kind == VertexKind::target) g.target = v.id;
        if (v.endpoint) g.endpoint_vertices.push_back(v.id);
        g.vertices.push_back(v);
    }
    g.out.assign(g.vertices.size(), {});
    g.road_vertices.assign(road_count, {});
    for (std::size_t r = 0; r < road_count; ++r) {
        auto tok = reader.expect("roadseq", 3);
        std::size_t road = static_cast<std::size_t>(parse_int(tok[1], "road id"));
        long n = parse_int(tok[2], "sequence length");
        if (tok.size() != 3 + 2 * static_cast<std::size_t>(n)) reader.fail("roadseq length mismatch");
        for (long k = 0; k < n; ++k) {
            int vid = static_cast<int>(parse_int(tok[3 + 2 * static_cast<std::size_t>(k)], "vid"));
            double param = parse_real(tok[4 + 2 * static_cast<std::size_t>(k)], "param");
            g.road_vertices[road].push_back({vid, param});
        }
    }
    return g;
}

ConeIndex rebuild_cones(const PathGraph& g, double eps) {
    std::vector<Point> pts;
    std::vector<int> payload;
    for (int vid : g.endpoint_vertices) {
        pts.push_back(g.vertex(vid).location);
        payload.push_back(vid);
    }
    return build_cone_index(std::move(pts), eps, std::move(payload));
}

} // namespace

void save_index(const FixedDestIndex& index, std::ostream& out) {
    out << "qpx v1\n";
    out << "mode fixed\n";
    out << "eps " << format_real(index.eps) << "\n";
    out << "target " << format_real(index.t.x) << " " << format_real(index.t.y) << "\n";
    write_network(index.net, out);
    write_graph(index.graph, out);
    out << "m " << index.cost_to_target.size() << "\n";
    for (std::size_t v = 0; v < index.cost_to_target.size(); ++v)
        out << "cost " << v << " " << format_real(index.cost_to_target[v]) << "\n";
    for (std::size_t v = 0; v < index.next_hop.size(); ++v)
        out << "next " << v << " " << index.next_hop[v].next << " "
            << (index.next_hop[v].kind == LegKind::ride ? "ride" : "walk") << " "
            << index.next_hop[v].road << "\n";
    out << "end\n";
}

void save_index(const TwoPointIndex& index, std::ostream& out) {
    out << "qpx v1\n";
    out << "mode " << (index.mode == TwoPointMode::exact_apsp ? "apsp" : "wspd") << "\n";
    out << "eps " << format_real(index.eps) << "\n";
    if (index.mode == TwoPointMode::wspd) out << "tau " << format_real(index.tau) << "\n";
    write_network(index.net, out);
    write_graph(index.graph, out);
    if (index.mode == TwoPointMode::exact_apsp) {
        out << "apsp " << index.all_pairs.size() << "\n";
        for (std::size_t i = 0; i < index.all_pairs.size(); ++i) {
            out << "row " << i;
            for (double v : index.all_pairs[i]) out << " " << format_real(v);
            out << "\n";
        }
    } else {
        out << "points " << index.tree.points.size() << "\n";
        for (std::size_t p = 0; p < index.tree.points.size(); ++p)
            out << "point " << p << " " << format_real(index.tree.points[p].x) << " "
                << format_real(index.tree.points[p].y) << " " << index.point_vertex[p] << "\n";
        out << "vpoints " << index.vertex_point.size() << "\n";
        for (std::size_t v = 0; v < index.vertex_point.size(); ++v)
            out << "vpoint " << v << " " << index.vertex_point[v] << "\n";
        out << "nodes " << index.tree.nodes.size() << "\n";
        for (std::size_t n = 0; n < index.tree.nodes.size(); ++n)
            out << "node " << n << " " << index.tree.nodes[n].parent << "\n";
        out << "leaves " << index.tree.leaf_of.size() << "\n";
        for (std::size_t p = 0; p < index.tree.leaf_of.size(); ++p)
            out << "leaf " << p << " " << index.tree.leaf_of[p] << "\n";
        out << "separation " << format_real(index.pairs.separation) << "\n";
        out << "pairs " << index.pairs.pairs.size() << "\n";
        for (std::size_t i = 0; i < index.pairs.pairs.size(); ++i) {
            const WspdPair& pr = index.pairs.pairs[i];
            out << "pair " << i << " " << pr.node_a << " " << pr.node_b << " " << pr.rep_a << " "
                << pr.rep_b << " " << format_real(index.pair_costs[i][0]) << " "
                << format_real(index.pair_costs[i][1]) << "\n";
        }
    }
    out << "end\n";
}

void save_index_file(const FixedDestIndex& index, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open index file for writing: " + path);
    save_index(index, out);
}

void save_index_file(const TwoPointIndex& index, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open index file for writing: " + path);
    save_index(index, out);
}

LoadedIndex load_index(std::istream& in) {
    Reader reader(in);
    auto header = reader.next_line();
    if (header.size() != 2 || header[0] != "qpx" || header[1] != "v1")
        reader.fail("expected header 'qpx v1'");
    auto mode_line = reader.expect("mode", 2);
    std::string mode = mode_line[1];
    double eps = parse_real(reader.expect("eps", 2)[1], "eps");

    if (mode == "fixed") {
        FixedDestIndex index;
        index.eps = eps;
        auto t_line = reader.expect("target", 3);
        index.t = {parse_real(t_line[1], "tx"), parse_real(t_line[2], "ty")};
        index.net = read_network(reader);
        index.graph = read_graph(reader, index.net.roads.size());
        long count = parse_int(reader.expect("m", 2)[1], "M size");
        index.cost_to_target.resize(static_cast<std::size_t>(count));
        for (long i = 0; i < count; ++i) {
            auto tok = reader.expect("cost", 3);
            index.cost_to_target[static_cast<std::size_t>(parse_int(tok[1], "vertex"))] =
                parse_real(tok[2], "cost");
        }
        index.next_hop.resize(static_cast<std::size_t>(count));
        for (long i = 0; i < count; ++i) {
            auto tok = reader.expect("next", 5);
            PredStep step;
            step.next = static_cast<int>(parse_int(tok[2], "next"));
            step.kind = tok[3] == "ride" ? LegKind::ride : LegKind::walk;
            step.road = static_cast<int>(parse_int(tok[4], "road"));
            index.next_hop[static_cast<std::size_t>(parse_int(tok[1], "vertex"))] = step;
        }
        reader.expect("end", 1);
        index.cones = rebuild_cones(index.graph, eps);
        index.buckets = build_road_buckets(index.net, eps);
        return index;
    }

    TwoPointIndex index;
    index.eps = eps;
    if (mode == "apsp") {
        index.mode = TwoPointMode::exact_apsp;
    } else if (mode == "wspd") {
        index.mode = TwoPointMode::wspd;
        index.tau = parse_real(reader.expect("tau", 2)[1], "tau");
    } else {
        reader.fail("unknown mode '" + mode + "'");
    }
    index.net = read_network(reader);
    index.graph = read_graph(reader, index.net.roads.size());

    if (index.mode == TwoPointMode::exact_apsp) {
        long count = parse_int(reader.expect("apsp", 2)[1], "apsp size");
        index.all_pairs.resize(static_cast<std::size_t>(count));
        for (long i = 0; i < count; ++i) {
            auto tok = reader.expect("row", 2);
            std::size_t row = static_cast<std::size_t>(parse_int(tok[1], "row"));
            if (tok.size() != 2 + static_cast<std::size_t>(count)) reader.fail("row length mismatch");
            index.all_pairs[row].reserve(static_cast<std::size_t>(count));
            for (long j = 0; j < count; ++j)
                index.all_pairs[row].push_back(
                    parse_real(tok[2 + static_cast<std::size_t>(j)], "cost"));
        }
    } else {
        long points = parse_int(reader.expect("points", 2)[1], "point count");
        index.tree.points.resize(static_cast<std::size_t>(points));
        index.point_vertex.resize(static_cast<std::size_t>(points));
        for (long i = 0; i < points; ++i) {
            auto tok = reader.expect("point", 5);
            std::size_t id = static_cast<std::size_t>(parse_int(tok[1], "point id"));
            index.tree.points[id] = {parse_real(tok[2], "x"), parse_real(tok[3], "y")};
            index.point_vertex[id] = static_cast<int>(parse_int(tok[4], "vertex"));
        }
        long vpoints = parse_int(reader.expect("vpoints", 2)[1], "vpoint count");
        index.vertex_point.resize(static_cast<std::size_t>(vpoints));
        for (long i = 0; i < vpoints; ++i) {
            auto tok = reader.expect("vpoint", 3);
            index.vertex_point[static_cast<std::size_t>(parse_int(tok[1], "vertex"))] =
                static_cast<int>(parse_int(tok[2], "point"));
        }
        index.tree.input_to_point = index.vertex_point;
        long nodes = parse_int(reader.expect("nodes", 2)[1], "node count");
        index.tree.nodes.resize(static_cast<std::size_t>(nodes));
        for (long i = 0; i < nodes; ++i) {
            auto tok = reader.expect("node", 3);
            std::size_t id = static_cast<std::size_t>(parse_int(tok[1], "node id"));
            index.tree.nodes[id].parent = static_cast<int>(parse_int(tok[2], "parent"));
            if (index.tree.nodes[id].parent < 0) index.tree.root = static_cast<int>(id);
        }
        long leaves = parse_int(reader.expect("leaves", 2)[1], "leaf count");
        index.tree.leaf_of.resize(static_cast<std::size_t>(leaves));
        for (long i = 0; i < leaves; ++i) {
            auto tok = reader.expect("leaf", 3);
            index.tree.leaf_of[static_cast<std::size_t>(parse_int(tok[1], "point"))] =
                static_cast<int>(parse_int(tok[2], "node"));
        }
        index.pairs.separation = parse_real(reader.expect("separation", 2)[1], "separation");
        long pairs = parse_int(reader.expect("pairs", 2)[1], "pair count");
        index.pairs.pairs.resize(static_cast<std::size_t>(pairs));
        index.pair_costs.resize(static_cast<std::size_t>(pairs));
        for (long i = 0; i < pairs; ++i) {
            auto tok = reader.expect("pair", 8);
            std::size_t id = static_cast<std::size_t>(parse_int(tok[1], "pair id"));
            WspdPair pr;
            pr.node_a = static_cast<int>(parse_int(tok[2], "node a"));
            pr.node_b = static_cast<int>(parse_int(tok[3], "node b"));
            pr.rep_a = static_cast<int>(parse_int(tok[4], "rep a"));
            pr.rep_b = static_cast<int>(parse_int(tok[5], "rep b"));
            index.pairs.pairs[id] = pr;
            index.pair_costs[id] = {parse_real(tok[6], "cost ab"), parse_real(tok[7], "cost ba")};
            index.pairs.pair_of_nodes.emplace(
                (static_cast<std::uint64_t>(static_cast<std::uint32_t>(pr.node_a)) << 32) |
                    static_cast<std::uint32_t>(pr.node_b),
                static_cast<int>(id));
        }
    }
    reader.expect("end", 1);
    index.cones = rebuild_cones(index.graph, eps);
    index.buckets = build_road_buckets(index.net, eps);
    return index;
}

LoadedIndex load_index_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open index file: " + path);
    return load_index(in);
}

} // namespace quickpath
