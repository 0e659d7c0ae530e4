#include "quickpath/wspd.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace quickpath {

namespace {

std::uint64_t node_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

double node_radius(const SplitTreeNode& n) {
    return 0.5 * distance(n.box_lo, n.box_hi);
}

Point node_center(const SplitTreeNode& n) {
    return {0.5 * (n.box_lo.x + n.box_hi.x), 0.5 * (n.box_lo.y + n.box_hi.y)};
}

struct TreeBuilder {
    SplitTree& tree;

    int build(int begin, int end) {
        int id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({});
        Point lo = tree.points[static_cast<std::size_t>(tree.order[static_cast<std::size_t>(begin)])];
        Point hi = lo;
        int rep = tree.order[static_cast<std::size_t>(begin)];
        for (int k = begin; k < end; ++k) {
            Point p = tree.points[static_cast<std::size_t>(tree.order[static_cast<std::size_t>(k)])];
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
            rep = std::min(rep, tree.order[static_cast<std::size_t>(k)]);
        }
        tree.nodes[static_cast<std::size_t>(id)] =
            SplitTreeNode{-1, -1, -1, begin, end, lo, hi, rep};
        if (end - begin == 1) {
            tree.leaf_of[static_cast<std::size_t>(tree.order[static_cast<std::size_t>(begin)])] = id;
            return id;
        }
        // Fair split: halve the longest box side, x before y on ties.
        bool split_x = (hi.x - lo.x) >= (hi.y - lo.y);
        double mid = split_x ? 0.5 * (lo.x + hi.x) : 0.5 * (lo.y + hi.y);
        auto first = tree.order.begin() + begin;
        auto last = tree.order.begin() + end;
        auto pivot = std::stable_partition(first, last, [&](int pt) {
            Point p = tree.points[static_cast<std::size_t>(pt)];
            return (split_x ? p.x : p.y) <= mid;
        });
        int cut = static_cast<int>(pivot - tree.order.begin());
        assert(cut > begin && cut < end);
        int l = build(begin, cut);
        int r = build(cut, end);
        tree.nodes[static_cast<std::size_t>(id)].left = l;
        tree.nodes[static_cast<std::size_t>(id)].right = r;
        tree.nodes[static_cast<std::size_t>(l)].parent = id;
        tree.nodes[static_cast<std::size_t>(r)].parent = id;
        return id;
    }
};

struct PairBuilder {
    const SplitTree& tree;
    double separation;
    PairList& out;

    const SplitTreeNode& node(int id) const {
        return tree.nodes[static_cast<std::size_t>(id)];
    }

    bool well_separated(int a, int b) const {
        double r = std::max(node_radius(node(a)), node_radius(node(b)));
        return distance(node_center(node(a)), node_center(node(b))) >= (separation + 2.0) * r;
    }

    void emit(int a, int b) {
        int id = static_cast<int>(out.pairs.size());
        out.pairs.push_back({a, b, node(a).rep, node(b).rep});
        out.pair_of_nodes.emplace(node_key(a, b), id);
    }

    void find_pairs(int a, int b) {
        if (well_separated(a, b)) {
            emit(a, b);
            return;
        }
        bool split_a;
        if (node(a).left < 0) split_a = false;
        else if (node(b).left < 0) split_a = true;
        else split_a = node_radius(node(a)) >= node_radius(node(b));
        if (split_a) {
            find_pairs(node(a).left, b);
            find_pairs(node(a).right, b);
        } else {
            find_pairs(a, node(b).left);
            find_pairs(a, node(b).right);
        }
    }

    void all_pairs(int n) {
        if (node(n).left < 0) return;
        all_pairs(node(n).left);
        all_pairs(node(n).right);
        find_pairs(node(n).left, node(n).right);
    }
};

} // namespace

SplitTree build_split_tree(const std::vector<Point>& input) {
    if (input.empty()) throw std::invalid_argument("build_split_tree: need at least one point");
    SplitTree tree;
    tree.input_to_point.reserve(input.size());
    for (const Point& p : input) {
        int found = -1;
        for (std::size_t k = 0; k < tree.points.size(); ++k)
            if (distance(tree.points[k], p) <= kGeomEps) {
                found = static_cast<int>(k);
                break;
            }
        if (found < 0) {
            found = static_cast<int>(tree.points.size());
            tree.points.push_back(p);
        }
        tree.input_to_point.push_back(found);
    }
    tree.order.resize(tree.points.size());
    for (std::size_t i = 0; i < tree.order.size(); ++i) tree.order[i] = static_cast<int>(i);
    tree.leaf_of.assign(tree.points.size(), -1);
    TreeBuilder builder{tree};
    tree.root = builder.build(0, tree.point_count());
    return tree;
}

PairList wspd_pairs(const SplitTree& tree, double separation) {
    if (!(separation > 0.0)) throw std::invalid_argument("wspd_pairs: separation must be positive");
    PairList out;
    out.separation = separation;
    PairBuilder builder{tree, separation, out};
    builder.all_pairs(tree.root);
    return out;
}

PairRef find_pair(const PairList& pairs, const SplitTree& tree, int p_point, int q_point) {
    if (p_point == q_point) throw std::invalid_argument("find_pair: points must be distinct");
    std::vector<int> anc_p, anc_q;
    for (int n = tree.leaf_of[static_cast<std::size_t>(p_point)]; n >= 0;
         n = tree.nodes[static_cast<std::size_t>(n)].parent)
        anc_p.push_back(n);
    for (int n = tree.leaf_of[static_cast<std::size_t>(q_point)]; n >= 0;
         n = tree.nodes[static_cast<std::size_t>(n)].parent)
        anc_q.push_back(n);
    for (int a : anc_p) {
        for (int b : anc_q) {
            auto it = pairs.pair_of_nodes.find(node_key(a, b));
            if (it != pairs.pair_of_nodes.end()) return {it->second, false};
            it = pairs.pair_of_nodes.find(node_key(b, a));
            if (it != pairs.pair_of_nodes.end()) return {it->second, true};
        }
    }
    throw std::logic_error("find_pair: no covering pair (corrupt decomposition)");
}

} // namespace quickpath
