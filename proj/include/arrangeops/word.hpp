#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "arrangeops/operad.hpp"
#include "arrangeops/rational.hpp"

namespace arrangeops {

// Word operad over a monoid G: nonempty letter sequences with
// (a_1..a_m) o_i (b_1..b_n) = (a_1.., a_{i-1}, a_i*b_1, .., a_i*b_n, a_{i+1}, ..).
// Monoid is a trait: product(x, y), identity(), str(x).
template <typename Monoid>
struct Word {
    std::vector<typename Monoid::Value> letters;

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

template <typename Monoid>
Word<Monoid> word_compose(const Monoid& g, const Word<Monoid>& a, int i,
                          const Word<Monoid>& b) {
    check_slot(i, static_cast<int>(a.letters.size()));
    Word<Monoid> out;
    out.letters.reserve(a.letters.size() + b.letters.size() - 1);
    for (int k = 0; k < i - 1; ++k) out.letters.push_back(a.letters[k]);
    for (const auto& letter : b.letters)
        out.letters.push_back(g.product(a.letters[i - 1], letter));
    for (std::size_t k = i; k < a.letters.size(); ++k) out.letters.push_back(a.letters[k]);
    return out;
}

template <typename Monoid>
struct WordOperad {
    Monoid g;

    using Element = Word<Monoid>;
    int arity(const Element& w) const { return static_cast<int>(w.letters.size()); }
    Element compose(const Element& a, int i, const Element& b) const {
        return word_compose(g, a, i, b);
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    // JSON array of letter payloads
    std::string describe(const Element& w) const {
        std::ostringstream os;
        os << "[";
        for (std::size_t k = 0; k < w.letters.size(); ++k)
            os << (k ? "," : "") << "\"" << g.str(w.letters[k]) << "\"";
        os << "]";
        return os.str();
    }
};

// Positive rationals under multiplication; the law-suite instance.
struct PositiveRationals {
    using Value = Rat;
    Value product(const Value& x, const Value& y) const { return x * y; }
    Value identity() const { return Rat(1); }
    std::string str(const Value& x) const { return x.str(); }
};

using RationalWord = Word<PositiveRationals>;

} // namespace arrangeops
