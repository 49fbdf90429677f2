#pragma once

#include <random>

#include "arrangeops/operad.hpp"
#include "arrangeops/rational.hpp"

namespace arrangeops {

// Small random rationals keep numerators bounded through nested exact
// compositions.
inline Rat random_rat(std::mt19937_64& rng, int max_num = 12, int max_den = 6) {
    int num = uniform_int(rng, -max_num, max_num);
    int den = uniform_int(rng, 1, max_den);
    return Rat(num, den);
}

inline Rat random_positive_rat(std::mt19937_64& rng, int max_num = 12, int max_den = 6) {
    int num = uniform_int(rng, 1, max_num);
    int den = uniform_int(rng, 1, max_den);
    return Rat(num, den);
}

// Strictly increasing list of n rationals starting near `start`.
inline std::vector<Rat> random_increasing(std::mt19937_64& rng, int n, int start_lo = -8,
                                          int start_hi = 8) {
    std::vector<Rat> out;
    out.reserve(n);
    Rat cur = Rat(uniform_int(rng, start_lo, start_hi));
    cur += random_rat(rng, 4, 4);
    out.push_back(cur);
    for (int k = 1; k < n; ++k) {
        cur += random_positive_rat(rng, 6, 4);
        out.push_back(cur);
    }
    return out;
}

} // namespace arrangeops
