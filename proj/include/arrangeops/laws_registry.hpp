#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrangeops/operad.hpp"

namespace arrangeops {

// Known suite names: tiling, points, chain, word, tree, arrangement, tuple.
std::vector<std::string> law_suite_names();

struct LawSuiteResult {
    std::string operad;
    int samples = 0;
    std::uint64_t seed = 0;
    LawReport sequential;
    LawReport parallel;

    bool passed() const { return sequential.passed() && parallel.passed(); }
};

LawSuiteResult run_named_law_suite(const std::string& operad, int samples,
                                   std::uint64_t seed);

} // namespace arrangeops
