#include "arrangeops/chain.hpp"

#include <sstream>

#include "arrangeops/error.hpp"
#include "arrangeops/sampling.hpp"

namespace arrangeops {

PolygonalChain make_chain(std::vector<std::pair<Rat, Rat>> vertices) {
    require(vertices.size() >= 2, ErrorCode::Validation,
            "chain needs at least two vertices");
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        require(vertices[k - 1].first < vertices[k].first, ErrorCode::Validation,
                "q not strictly increasing at vertex " + std::to_string(k + 1));
        require(vertices[k - 1].second < vertices[k].second, ErrorCode::Validation,
                "s not strictly increasing at vertex " + std::to_string(k + 1));
    }
    return PolygonalChain{std::move(vertices)};
}

int chain_arity(const PolygonalChain& c) { return static_cast<int>(c.vertices.size()) - 1; }

PolygonalChain chain_compose(const PolygonalChain& a, int i, const PolygonalChain& b) {
    check_slot(i, chain_arity(a));
    const auto& lo = a.vertices[i - 1];
    const auto& hi = a.vertices[i];
    const auto& first = b.vertices.front();
    const auto& last = b.vertices.back();
    Rat alpha = (hi.first - lo.first) / (last.first - first.first);
    Rat beta = (hi.second - lo.second) / (last.second - first.second);
    std::vector<std::pair<Rat, Rat>> out;
    out.reserve(a.vertices.size() + b.vertices.size() - 2);
    for (int k = 0; k < i; ++k) out.push_back(a.vertices[k]);
    for (std::size_t k = 1; k + 1 < b.vertices.size(); ++k)
        out.emplace_back(lo.first + alpha * (b.vertices[k].first - first.first),
                         lo.second + beta * (b.vertices[k].second - first.second));
    for (std::size_t k = i; k < a.vertices.size(); ++k) out.push_back(a.vertices[k]);
    return PolygonalChain{std::move(out)};
}

std::pair<PointConfig, PointConfig> chain_to_product(const PolygonalChain& c) {
    std::vector<Rat> qs, ss;
    qs.reserve(c.vertices.size());
    ss.reserve(c.vertices.size());
    for (const auto& v : c.vertices) {
        qs.push_back(v.first);
        ss.push_back(v.second);
    }
    return {PointConfig{std::move(qs)}, PointConfig{std::move(ss)}};
}

PolygonalChain product_to_chain(const PointConfig& qc, const PointConfig& sc) {
    require(qc.points.size() == sc.points.size(), ErrorCode::Validation,
            "LengthMismatch: " + std::to_string(qc.points.size()) + " vs " +
                std::to_string(sc.points.size()) + " points");
    std::vector<std::pair<Rat, Rat>> vs;
    vs.reserve(qc.points.size());
    for (std::size_t k = 0; k < qc.points.size(); ++k)
        vs.emplace_back(qc.points[k], sc.points[k]);
    return make_chain(std::move(vs));
}

std::string ChainOperad::describe(const Element& c) const {
    std::ostringstream os;
    for (const auto& v : c.vertices) os << "(" << v.first << "," << v.second << ")";
    return os.str();
}

PolygonalChain random_chain(std::mt19937_64& rng, int min_arity, int max_arity) {
    int n = uniform_int(rng, min_arity, max_arity);
    auto qs = random_increasing(rng, n + 1);
    auto ss = random_increasing(rng, n + 1);
    std::vector<std::pair<Rat, Rat>> vs;
    for (int k = 0; k <= n; ++k) vs.emplace_back(qs[k], ss[k]);
    return PolygonalChain{std::move(vs)};
}

} // namespace arrangeops
