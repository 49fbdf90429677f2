#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arrangeops/operad.hpp"
#include "arrangeops/rational.hpp"

namespace arrangeops {

// Little 1-disks element: ordered closed subintervals of [0,1] with pairwise
// disjoint interiors (touching endpoints allowed).
struct IntervalConfig {
    std::vector<std::pair<Rat, Rat>> intervals;

    friend bool operator==(const IntervalConfig& a, const IntervalConfig& b) {
        return a.intervals == b.intervals;
    }
};

IntervalConfig make_interval_config(std::vector<std::pair<Rat, Rat>> intervals);
IntervalConfig d1_compose(const IntervalConfig& a, int i, const IntervalConfig& b);

// Tiling of [0,1]: positive lengths summing to 1. Arity = number of tiles.
struct IntervalTiling {
    std::vector<Rat> lengths;

    friend bool operator==(const IntervalTiling& a, const IntervalTiling& b) {
        return a.lengths == b.lengths;
    }
};

IntervalTiling make_tiling(std::vector<Rat> lengths);
IntervalTiling tiling_from_breakpoints(const std::vector<Rat>& breakpoints);
std::vector<Rat> breakpoints(const IntervalTiling& t);
IntervalTiling tiling_compose(const IntervalTiling& a, int i, const IntervalTiling& b);

// The two-tile generator P_lambda = (lambda, 1-lambda), 0 < lambda < 1.
IntervalTiling tiling_generator(const Rat& lambda);

// P_{a+b} o_1 P_{a/(a+b)} == P_a o_2 P_{b/(1-a)}, evaluated through
// tiling_compose on both sides; preconditions a, b > 0, a + b < 1.
bool check_barycentric(const Rat& alpha, const Rat& beta);

// Configuration of n+1 points on the line; arity n.
struct PointConfig {
    std::vector<Rat> points;

    friend bool operator==(const PointConfig& a, const PointConfig& b) {
        return a.points == b.points;
    }
};

PointConfig make_point_config(std::vector<Rat> points);
int config_arity(const PointConfig& c);

// Splices b affinely onto the i-th gap [a_i, a_{i+1}], endpoints to endpoints.
PointConfig chat_compose(const PointConfig& a, int i, const PointConfig& b);

// Orientation-preserving affine map of the line, x |-> scale*x + offset,
// scale > 0. The 2x2 letters [[lambda, b],[0, 1]] of the word encoding.
struct Affine1 {
    Rat scale;
    Rat offset;

    Rat operator()(const Rat& x) const { return scale * x + offset; }
    Affine1 then(const Affine1& first) const {
        // this after first
        return Affine1{scale * first.scale, scale * first.offset + offset};
    }
    Affine1 inverse() const { return Affine1{Rat(1) / scale, -offset / scale}; }

    friend bool operator==(const Affine1& f, const Affine1& g) {
        return f.scale == g.scale && f.offset == g.offset;
    }
};

// Word of affine letters subject to the matching condition
// scale_i + offset_i = offset_{i+1}.
struct AffineWord1 {
    std::vector<Affine1> letters;

    friend bool operator==(const AffineWord1& a, const AffineWord1& b) {
        return a.letters == b.letters;
    }
};

// Letters carry lengths and partial sums; the result is normalized
// (offset_1 = 0, scale_n + offset_n = 1).
AffineWord1 encode_affine_word(const IntervalTiling& t);
// Points (b_1, ..., b_n, b_n + lambda_n); matching is checked, normalization
// is not required.
PointConfig decode_affine_word(const AffineWord1& w);

struct TilingOperad {
    using Element = IntervalTiling;
    int arity(const Element& t) const { return static_cast<int>(t.lengths.size()); }
    Element compose(const Element& a, int i, const Element& b) const {
        return tiling_compose(a, i, b);
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string describe(const Element& t) const;
};

struct PointConfigOperad {
    using Element = PointConfig;
    int arity(const Element& c) const { return config_arity(c); }
    Element compose(const Element& a, int i, const Element& b) const {
        return chat_compose(a, i, b);
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string describe(const Element& c) const;
};

struct D1Operad {
    using Element = IntervalConfig;
    int arity(const Element& c) const { return static_cast<int>(c.intervals.size()); }
    Element compose(const Element& a, int i, const Element& b) const {
        return d1_compose(a, i, b);
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string describe(const Element& c) const;
};

IntervalTiling random_tiling(std::mt19937_64& rng, int min_arity, int max_arity);
PointConfig random_point_config(std::mt19937_64& rng, int min_arity, int max_arity);
IntervalConfig random_interval_config(std::mt19937_64& rng, int min_arity, int max_arity);

} // namespace arrangeops
