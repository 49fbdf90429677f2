#include "arrangeops/laws_registry.hpp"

#include "arrangeops/arrangement.hpp"
#include "arrangeops/chain.hpp"
#include "arrangeops/error.hpp"
#include "arrangeops/intervals.hpp"
#include "arrangeops/sampling.hpp"
#include "arrangeops/tree.hpp"
#include "arrangeops/word.hpp"

namespace arrangeops {

std::vector<std::string> law_suite_names() {
    return {"tiling", "points", "chain", "word", "tree", "arrangement", "tuple"};
}

namespace {

RationalWord random_word(std::mt19937_64& rng, int min_arity, int max_arity) {
    int n = uniform_int(rng, min_arity, max_arity);
    RationalWord w;
    for (int k = 0; k < n; ++k) w.letters.push_back(random_positive_rat(rng, 9, 5));
    return w;
}

template <typename O, typename Sampler>
LawSuiteResult run_both(const O& op, Sampler&& sample, const std::string& name,
                        int samples, std::uint64_t seed) {
    LawSuiteResult res;
    res.operad = name;
    res.samples = samples;
    res.seed = seed;
    res.sequential = run_law_suite(op, Law::Sequential, sample, samples, seed);
    res.parallel = run_law_suite(op, Law::Parallel, sample, samples, seed);
    return res;
}

} // namespace

LawSuiteResult run_named_law_suite(const std::string& operad, int samples,
                                   std::uint64_t seed) {
    require(samples > 0, ErrorCode::Argument, "sample count must be positive");
    if (operad == "tiling")
        return run_both(
            TilingOperad{},
            [](std::mt19937_64& rng, int min_arity) {
                return random_tiling(rng, min_arity, 5);
            },
            operad, samples, seed);
    if (operad == "points")
        return run_both(
            PointConfigOperad{},
            [](std::mt19937_64& rng, int min_arity) {
                return random_point_config(rng, min_arity, 5);
            },
            operad, samples, seed);
    if (operad == "chain")
        return run_both(
            ChainOperad{},
            [](std::mt19937_64& rng, int min_arity) {
                return random_chain(rng, min_arity, 5);
            },
            operad, samples, seed);
    if (operad == "word")
        return run_both(
            WordOperad<PositiveRationals>{},
            [](std::mt19937_64& rng, int min_arity) {
                return random_word(rng, min_arity, 5);
            },
            operad, samples, seed);
    if (operad == "tree")
        return run_both(
            TreeOperad{},
            [](std::mt19937_64& rng, int min_arity) {
                return random_tree(rng, min_arity, 6);
            },
            operad, samples, seed);
    if (operad == "arrangement")
        return run_both(
            ArrangementOperad{},
            [](std::mt19937_64& rng, int min_arity) {
                return random_arrangement(rng, min_arity + 1, 6);
            },
            operad, samples, seed);
    if (operad == "tuple")
        return run_both(
            TupleOperad{},
            [](std::mt19937_64& rng, int min_arity) {
                return encode_tuple(random_normalized_arrangement(rng, min_arity + 1, 6));
            },
            operad, samples, seed);
    fail(ErrorCode::Argument, "unknown operad \"" + operad + "\"; expected one of "
                                  "tiling|points|chain|word|tree|arrangement|tuple");
}

} // namespace arrangeops
