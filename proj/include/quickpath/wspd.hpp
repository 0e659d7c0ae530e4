#pragma once

#include "quickpath/geometry.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace quickpath {

struct SplitTreeNode {
    int parent = -1;
    int left = -1;
    int right = -1;
    int begin = 0; // slice of SplitTree::order holding this subtree's points
    int end = 0;
    Point box_lo;
    Point box_hi;
    int rep = -1; // lowest-index point of the subset
};

/// Fair split tree over a planar point set. Input points within kGeomEps of
/// each other are merged before the build.
struct SplitTree {
    std::vector<Point> points;       // deduplicated
    std::vector<int> input_to_point; // original index -> point id
    std::vector<int> order;          // permutation of point ids
    std::vector<SplitTreeNode> nodes;
    std::vector<int> leaf_of; // point id -> leaf node
    int root = -1;

    int point_count() const { return static_cast<int>(points.size()); }
};

SplitTree build_split_tree(const std::vector<Point>& input);

struct WspdPair {
    int node_a = -1;
    int node_b = -1;
    int rep_a = -1; // point ids
    int rep_b = -1;
};

struct PairList {
    double separation = 1.0;
    std::vector<WspdPair> pairs;
    std::unordered_map<std::uint64_t, int> pair_of_nodes; // (a << 32 | b) -> pair id
};

/// Well-separated pair decomposition with separation s. Well-separation is
/// tested with the bounding boxes' enclosing circles (conservative), so every
/// emitted pair satisfies the ball definition.
PairList wspd_pairs(const SplitTree& tree, double separation);

struct PairRef {
    int pair = -1;
    bool swapped = false; // true when p lies in B and q in A
};

/// The unique pair covering two distinct points, found by walking the leaves'
/// ancestor chains. Throws std::invalid_argument when p == q.
PairRef find_pair(const PairList& pairs, const SplitTree& tree, int p_point, int q_point);

} // namespace quickpath
