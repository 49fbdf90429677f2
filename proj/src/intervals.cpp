#include "arrangeops/intervals.hpp"

#include <sstream>

#include "arrangeops/error.hpp"
#include "arrangeops/sampling.hpp"

namespace arrangeops {

IntervalConfig make_interval_config(std::vector<std::pair<Rat, Rat>> intervals) {
    require(!intervals.empty(), ErrorCode::Validation, "empty interval configuration");
    const Rat zero(0), one(1);
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        require(zero <= intervals[k].first && intervals[k].first < intervals[k].second &&
                    intervals[k].second <= one,
                ErrorCode::Validation,
                "interval " + std::to_string(k + 1) + " not within [0,1] or empty");
        if (k > 0)
            require(intervals[k - 1].second <= intervals[k].first, ErrorCode::Validation,
                    "intervals " + std::to_string(k) + "," + std::to_string(k + 1) +
                        " overlap or are out of order");
    }
    return IntervalConfig{std::move(intervals)};
}

IntervalConfig d1_compose(const IntervalConfig& a, int i, const IntervalConfig& b) {
    check_slot(i, static_cast<int>(a.intervals.size()));
    const auto& slot = a.intervals[i - 1];
    Rat width = slot.second - slot.first;
    std::vector<std::pair<Rat, Rat>> out;
    out.reserve(a.intervals.size() + b.intervals.size() - 1);
    for (int k = 0; k < i - 1; ++k) out.push_back(a.intervals[k]);
    for (const auto& iv : b.intervals)
        out.emplace_back(slot.first + width * iv.first, slot.first + width * iv.second);
    for (std::size_t k = i; k < a.intervals.size(); ++k) out.push_back(a.intervals[k]);
    return make_interval_config(std::move(out));
}

IntervalTiling make_tiling(std::vector<Rat> lengths) {
    require(!lengths.empty(), ErrorCode::Validation, "empty tiling");
    Rat sum(0);
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        require(lengths[k] > Rat(0), ErrorCode::Validation,
                "tile " + std::to_string(k + 1) + " has non-positive length");
        sum += lengths[k];
    }
    require(sum == Rat(1), ErrorCode::Validation, "tile lengths sum to " + sum.str());
    return IntervalTiling{std::move(lengths)};
}

IntervalTiling tiling_from_breakpoints(const std::vector<Rat>& bps) {
    std::vector<Rat> lengths;
    lengths.reserve(bps.size() + 1);
    Rat prev(0);
    for (const auto& b : bps) {
        lengths.push_back(b - prev);
        prev = b;
    }
    lengths.push_back(Rat(1) - prev);
    return make_tiling(std::move(lengths));
}

std::vector<Rat> breakpoints(const IntervalTiling& t) {
    std::vector<Rat> out;
    Rat acc(0);
    for (std::size_t k = 0; k + 1 < t.lengths.size(); ++k) {
        acc += t.lengths[k];
        out.push_back(acc);
    }
    return out;
}

IntervalTiling tiling_compose(const IntervalTiling& a, int i, const IntervalTiling& b) {
    check_slot(i, static_cast<int>(a.lengths.size()));
    std::vector<Rat> out;
    out.reserve(a.lengths.size() + b.lengths.size() - 1);
    for (int k = 0; k < i - 1; ++k) out.push_back(a.lengths[k]);
    for (const auto& mu : b.lengths) out.push_back(a.lengths[i - 1] * mu);
    for (std::size_t k = i; k < a.lengths.size(); ++k) out.push_back(a.lengths[k]);
    return IntervalTiling{std::move(out)};
}

IntervalTiling tiling_generator(const Rat& lambda) {
    require(Rat(0) < lambda && lambda < Rat(1), ErrorCode::Domain,
            "generator parameter outside (0,1)");
    return IntervalTiling{{lambda, Rat(1) - lambda}};
}

bool check_barycentric(const Rat& alpha, const Rat& beta) {
    require(alpha > Rat(0) && beta > Rat(0) && alpha + beta < Rat(1), ErrorCode::Domain,
            "barycentric parameters need alpha, beta > 0 and alpha + beta < 1");
    IntervalTiling lhs =
        tiling_compose(tiling_generator(alpha + beta), 1, tiling_generator(alpha / (alpha + beta)));
    IntervalTiling rhs =
        tiling_compose(tiling_generator(alpha), 2, tiling_generator(beta / (Rat(1) - alpha)));
    return lhs == rhs;
}

PointConfig make_point_config(std::vector<Rat> points) {
    require(points.size() >= 2, ErrorCode::Validation,
            "point configuration needs at least two points");
    for (std::size_t k = 1; k < points.size(); ++k)
        require(points[k - 1] < points[k], ErrorCode::Validation,
                "points not strictly increasing at position " + std::to_string(k + 1));
    return PointConfig{std::move(points)};
}

int config_arity(const PointConfig& c) { return static_cast<int>(c.points.size()) - 1; }

PointConfig chat_compose(const PointConfig& a, int i, const PointConfig& b) {
    check_slot(i, config_arity(a));
    const Rat& lo = a.points[i - 1];
    const Rat& hi = a.points[i];
    const Rat& first = b.points.front();
    const Rat& last = b.points.back();
    Rat scale = (hi - lo) / (last - first);
    std::vector<Rat> out;
    out.reserve(a.points.size() + b.points.size() - 2);
    for (int k = 0; k < i; ++k) out.push_back(a.points[k]);
    for (std::size_t k = 1; k + 1 < b.points.size(); ++k)
        out.push_back(lo + scale * (b.points[k] - first));
    for (std::size_t k = i; k < a.points.size(); ++k) out.push_back(a.points[k]);
    return PointConfig{std::move(out)};
}

AffineWord1 encode_affine_word(const IntervalTiling& t) {
    AffineWord1 w;
    w.letters.reserve(t.lengths.size());
    Rat acc(0);
    for (const auto& len : t.lengths) {
        w.letters.push_back(Affine1{len, acc});
        acc += len;
    }
    return w;
}

PointConfig decode_affine_word(const AffineWord1& w) {
    require(!w.letters.empty(), ErrorCode::Validation, "empty affine word");
    std::vector<Rat> pts;
    pts.reserve(w.letters.size() + 1);
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        require(w.letters[k].scale > Rat(0), ErrorCode::Validation,
                "letter " + std::to_string(k + 1) + " has non-positive scale");
        if (k + 1 < w.letters.size())
            require(w.letters[k].scale + w.letters[k].offset == w.letters[k + 1].offset,
                    ErrorCode::Validation,
                    "MatchingViolation at letter " + std::to_string(k + 1));
        pts.push_back(w.letters[k].offset);
    }
    pts.push_back(w.letters.back().scale + w.letters.back().offset);
    return make_point_config(std::move(pts));
}

std::string TilingOperad::describe(const Element& t) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < t.lengths.size(); ++k)
        os << (k ? "," : "") << t.lengths[k];
    os << ")";
    return os.str();
}

std::string PointConfigOperad::describe(const Element& c) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < c.points.size(); ++k) os << (k ? "," : "") << c.points[k];
    os << ")";
    return os.str();
}

std::string D1Operad::describe(const Element& c) const {
    std::ostringstream os;
    for (const auto& iv : c.intervals) os << "[" << iv.first << "," << iv.second << "]";
    return os.str();
}

IntervalTiling random_tiling(std::mt19937_64& rng, int min_arity, int max_arity) {
    int n = uniform_int(rng, min_arity, max_arity);
    std::vector<Rat> weights;
    Rat total(0);
    for (int k = 0; k < n; ++k) {
        weights.push_back(random_positive_rat(rng, 8, 4));
        total += weights.back();
    }
    for (auto& w : weights) w /= total;
    return IntervalTiling{std::move(weights)};
}

PointConfig random_point_config(std::mt19937_64& rng, int min_arity, int max_arity) {
    int n = uniform_int(rng, min_arity, max_arity);
    return PointConfig{random_increasing(rng, n + 1)};
}

IntervalConfig random_interval_config(std::mt19937_64& rng, int min_arity, int max_arity) {
    int n = uniform_int(rng, min_arity, max_arity);
    // 2n+1 weights: gap, tile, gap, tile, ..., gap; gaps may be zero.
    std::vector<Rat> weights(2 * n + 1);
    Rat total(0);
    for (int k = 0; k < 2 * n + 1; ++k) {
        bool tile = (k % 2) == 1;
        weights[k] = tile ? random_positive_rat(rng, 8, 4)
                          : Rat(uniform_int(rng, 0, 6), uniform_int(rng, 1, 4));
        total += weights[k];
    }
    std::vector<std::pair<Rat, Rat>> intervals;
    Rat acc(0);
    for (int k = 0; k < 2 * n + 1; ++k) {
        Rat next = acc + weights[k] / total;
        if (k % 2 == 1) intervals.emplace_back(acc, next);
        acc = next;
    }
    return make_interval_config(std::move(intervals));
}

} // namespace arrangeops
