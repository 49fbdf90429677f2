#include "arrangeops/tree.hpp"

#include "arrangeops/error.hpp"

namespace arrangeops {

int leaf_count(const PlanarTree& t) {
    if (t.is_leaf()) return 1;
    int n = 0;
    for (const auto& child : t.children) n += leaf_count(child);
    return n;
}

namespace {

// Replaces the k-th leaf (1-based, counting down as we pass leaves) by b.
bool graft_at(PlanarTree& node, int& k, const PlanarTree& b) {
    if (node.is_leaf()) {
        if (--k == 0) {
            node = b;
            return true;
        }
        return false;
    }
    for (auto& child : node.children)
        if (graft_at(child, k, b)) return true;
    return false;
}

} // namespace

PlanarTree graft(const PlanarTree& a, int i, const PlanarTree& b) {
    check_slot(i, leaf_count(a));
    PlanarTree out = a;
    int k = i;
    graft_at(out, k, b);
    return out;
}

PlanarTree corolla(int n) {
    require(n >= 1, ErrorCode::Domain, "corolla needs n >= 1");
    PlanarTree t;
    if (n == 1) return t;
    t.children.resize(n);
    return t;
}

static void print_tree(const PlanarTree& t, std::string& out) {
    out += '(';
    for (const auto& child : t.children) print_tree(child, out);
    out += ')';
}

std::string tree_to_string(const PlanarTree& t) {
    std::string out;
    print_tree(t, out);
    return out;
}

static PlanarTree parse_tree(const std::string& s, std::size_t& pos) {
    require(pos < s.size() && s[pos] == '(', ErrorCode::Parse,
            "tree string: expected '(' at position " + std::to_string(pos));
    ++pos;
    PlanarTree node;
    while (pos < s.size() && s[pos] == '(') node.children.push_back(parse_tree(s, pos));
    require(pos < s.size() && s[pos] == ')', ErrorCode::Parse,
            "tree string: expected ')' at position " + std::to_string(pos));
    ++pos;
    return node;
}

PlanarTree tree_from_string(const std::string& s) {
    std::size_t pos = 0;
    PlanarTree t = parse_tree(s, pos);
    require(pos == s.size(), ErrorCode::Parse, "tree string: trailing characters");
    return t;
}

static PlanarTree random_tree_with(std::mt19937_64& rng, int leaves) {
    if (leaves == 1) return corolla(1);
    // Split the leaf budget over 2..leaves children.
    int width = uniform_int(rng, 2, leaves);
    std::vector<int> budget(width, 1);
    for (int extra = leaves - width; extra > 0; --extra) ++budget[uniform_int(rng, 0, width - 1)];
    PlanarTree node;
    for (int share : budget) node.children.push_back(random_tree_with(rng, share));
    return node;
}

PlanarTree random_tree(std::mt19937_64& rng, int min_leaves, int max_leaves) {
    PlanarTree t = random_tree_with(rng, uniform_int(rng, min_leaves, max_leaves));
    if (uniform_int(rng, 0, 7) == 0) {
        // occasionally a unary vertex above the root
        PlanarTree wrapped;
        wrapped.children.push_back(std::move(t));
        return wrapped;
    }
    return t;
}

} // namespace arrangeops
