#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arrangeops/error.hpp"

namespace arrangeops {

// A non-symmetric operad instance: arity grading, 1-based partial
// compositions with arity(a o_i b) = arity(a) + arity(b) - 1, and exact
// equality. Law checking below works against this surface only.
template <typename O>
concept OperadInstance = requires(const O& op, const typename O::Element& x, int i) {
    typename O::Element;
    { op.arity(x) } -> std::convertible_to<int>;
    { op.compose(x, i, x) } -> std::convertible_to<typename O::Element>;
    { op.equal(x, x) } -> std::convertible_to<bool>;
    { op.describe(x) } -> std::convertible_to<std::string>;
};

inline void check_slot(int i, int arity) {
    require(i >= 1 && i <= arity, ErrorCode::IndexOutOfRange,
            "slot " + std::to_string(i) + " outside 1.." + std::to_string(arity));
}

enum class Law { Sequential, Parallel, Morphism };

struct LawFailure {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    Law law{};
    int samples_tested = 0;
    std::vector<LawFailure> failures;

    bool passed() const { return failures.empty(); }
};

inline const char* law_name(Law law) {
    switch (law) {
        case Law::Sequential: return "sequential";
        case Law::Parallel: return "parallel";
        case Law::Morphism: return "morphism";
    }
    return "?";
}

// (a o_i b) o_j c == a o_i (b o_{j-i+1} c), 1 <= i <= ar(a), i <= j <= i+ar(b)-1.
template <OperadInstance O>
bool check_sequential(const O& op, const typename O::Element& a,
                      const typename O::Element& b, const typename O::Element& c,
                      int i, int j, LawReport* report = nullptr) {
    check_slot(i, op.arity(a));
    require(j >= i && j <= i + op.arity(b) - 1, ErrorCode::IndexOutOfRange,
            "inner slot " + std::to_string(j) + " outside " + std::to_string(i) +
                ".." + std::to_string(i + op.arity(b) - 1));
    auto lhs = op.compose(op.compose(a, i, b), j, c);
    auto rhs = op.compose(a, i, op.compose(b, j - i + 1, c));
    bool ok = op.equal(lhs, rhs);
    if (report) {
        ++report->samples_tested;
        if (!ok) {
            std::ostringstream in;
            in << "a=" << op.describe(a) << " b=" << op.describe(b)
               << " c=" << op.describe(c) << " i=" << i << " j=" << j;
            report->failures.push_back({in.str(), op.describe(lhs), op.describe(rhs)});
        }
    }
    return ok;
}

// (a o_i b) o_{j+ar(b)-1} c == (a o_j c) o_i b, 1 <= i < j <= ar(a).
template <OperadInstance O>
bool check_parallel(const O& op, const typename O::Element& a,
                    const typename O::Element& b, const typename O::Element& c,
                    int i, int j, LawReport* report = nullptr) {
    require(i >= 1 && i < j && j <= op.arity(a), ErrorCode::IndexOutOfRange,
            "parallel slots need 1 <= i < j <= arity(a)");
    auto lhs = op.compose(op.compose(a, i, b), j + op.arity(b) - 1, c);
    auto rhs = op.compose(op.compose(a, j, c), i, b);
    bool ok = op.equal(lhs, rhs);
    if (report) {
        ++report->samples_tested;
        if (!ok) {
            std::ostringstream in;
            in << "a=" << op.describe(a) << " b=" << op.describe(b)
               << " c=" << op.describe(c) << " i=" << i << " j=" << j;
            report->failures.push_back({in.str(), op.describe(lhs), op.describe(rhs)});
        }
    }
    return ok;
}

// f(a o_i b) == f(a) o_i f(b) for a map f between two operad instances.
template <OperadInstance S, OperadInstance T, typename F>
bool check_morphism(const S& src, const T& dst, F&& f, const typename S::Element& a,
                    int i, const typename S::Element& b, LawReport* report = nullptr) {
    check_slot(i, src.arity(a));
    auto lhs = f(src.compose(a, i, b));
    auto rhs = dst.compose(f(a), i, f(b));
    bool ok = dst.equal(lhs, rhs);
    if (report) {
        ++report->samples_tested;
        if (!ok) {
            std::ostringstream in;
            in << "a=" << src.describe(a) << " b=" << src.describe(b) << " i=" << i;
            report->failures.push_back({in.str(), dst.describe(lhs), dst.describe(rhs)});
        }
    }
    return ok;
}

// Moving-frame lift: a *_i b = rho(a) . [ (rho(a)^-1 . a) o_i (rho(b)^-1 . b) ].
// rho must be equivariant, rho(g . z) = g . rho(z); the slice composition is
// whatever the cross-section operad provides.
template <typename Elem, typename Group, typename Rho, typename Act, typename Inv,
          typename SliceCompose>
Elem moving_frame_compose(const Elem& a, int i, const Elem& b, Rho&& rho, Act&& act,
                          Inv&& group_inverse, SliceCompose&& slice_compose) {
    Group ga = rho(a);
    Group gb = rho(b);
    Elem normalized = slice_compose(act(group_inverse(ga), a), i, act(group_inverse(gb), b));
    return act(ga, normalized);
}

// Deterministic per-sample stream: sample k under seed s must not depend on
// any other sample, so each draws from its own generator.
inline std::mt19937_64 rng_for_sample(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 scramble of (seed, index)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return std::mt19937_64(z);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Runs n seeded random triples of the requested law. The sampler returns an
// element with arity at least min_arity when asked.
template <OperadInstance O, typename Sampler>
LawReport run_law_suite(const O& op, Law law, Sampler&& sample, int n,
                        std::uint64_t seed) {
    LawReport report;
    report.law = law;
    for (int k = 0; k < n; ++k) {
        auto rng = rng_for_sample(seed, static_cast<std::uint64_t>(k) * 2 +
                                            (law == Law::Parallel ? 1 : 0));
        if (law == Law::Sequential) {
            auto a = sample(rng, 1);
            auto b = sample(rng, 1);
            auto c = sample(rng, 1);
            int i = uniform_int(rng, 1, op.arity(a));
            int j = uniform_int(rng, i, i + op.arity(b) - 1);
            check_sequential(op, a, b, c, i, j, &report);
        } else {
            auto a = sample(rng, 2);
            auto b = sample(rng, 1);
            auto c = sample(rng, 1);
            int i = uniform_int(rng, 1, op.arity(a) - 1);
            int j = uniform_int(rng, i + 1, op.arity(a));
            check_parallel(op, a, b, c, i, j, &report);
        }
    }
    return report;
}

// The associative operad As, reduced to its computational content: arities
// with m o_i n = m + n - 1.
struct AsOperad {
    using Element = int;
    int arity(const Element& e) const { return e; }
    Element compose(const Element& m, int i, const Element& n) const {
        check_slot(i, m);
        return m + n - 1;
    }
    bool equal(const Element& x, const Element& y) const { return x == y; }
    std::string describe(const Element& x) const { return std::to_string(x); }
};

} // namespace arrangeops
