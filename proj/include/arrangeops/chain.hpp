#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arrangeops/intervals.hpp"
#include "arrangeops/rational.hpp"

namespace arrangeops {

// Monotone polygonal chain in the (q, s) plane with s = -p (negated
// momentum); both coordinates strictly increase along the chain. A chain with
// k+1 vertices has arity k (one slot per segment).
struct PolygonalChain {
    std::vector<std::pair<Rat, Rat>> vertices;

    friend bool operator==(const PolygonalChain& a, const PolygonalChain& b) {
        return a.vertices == b.vertices;
    }
};

PolygonalChain make_chain(std::vector<std::pair<Rat, Rat>> vertices);
int chain_arity(const PolygonalChain& c);

// Replaces segment P_i P_{i+1} by the image of b under the axis-aligned map
// (q, s) |-> (alpha*q + gamma, beta*s + delta), alpha, beta > 0, sending b's
// endpoints onto the segment's.
PolygonalChain chain_compose(const PolygonalChain& a, int i, const PolygonalChain& b);

std::pair<PointConfig, PointConfig> chain_to_product(const PolygonalChain& c);
PolygonalChain product_to_chain(const PointConfig& qc, const PointConfig& sc);

struct ChainOperad {
    using Element = PolygonalChain;
    int arity(const Element& c) const { return chain_arity(c); }
    Element compose(const Element& a, int i, const Element& b) const {
        return chain_compose(a, i, b);
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string describe(const Element& c) const;
};

PolygonalChain random_chain(std::mt19937_64& rng, int min_arity, int max_arity);

} // namespace arrangeops
