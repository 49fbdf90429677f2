#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "arrangeops/operad.hpp"

namespace arrangeops {

// Planar rooted tree. A node with no children is a leaf; leaves are indexed
// 1..n in caterpillar traversal order (depth-first through the stored child
// order). The bare leaf is the arity-1 unit.
struct PlanarTree {
    std::vector<PlanarTree> children;

    bool is_leaf() const { return children.empty(); }

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) {
        return a.children == b.children;
    }
};

int leaf_count(const PlanarTree& t);

// Attaches the root of b onto the i-th leaf of a; leaves re-index in
// traversal order. leaf_count(result) = leaf_count(a) + leaf_count(b) - 1.
PlanarTree graft(const PlanarTree& a, int i, const PlanarTree& b);

// n-leaf corolla: a root with n leaf children (n >= 2); corolla(1) is the
// bare leaf.
PlanarTree corolla(int n);

// Nested-bracket form, e.g. "(()()())" for the 3-corolla, "()" for the leaf.
std::string tree_to_string(const PlanarTree& t);
PlanarTree tree_from_string(const std::string& s);

PlanarTree random_tree(std::mt19937_64& rng, int min_leaves, int max_leaves);

struct TreeOperad {
    using Element = PlanarTree;
    int arity(const Element& t) const { return leaf_count(t); }
    Element compose(const Element& a, int i, const Element& b) const {
        return graft(a, i, b);
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string describe(const Element& t) const { return tree_to_string(t); }
};

} // namespace arrangeops
