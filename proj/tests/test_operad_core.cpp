#include <doctest.h>

#include "arrangeops/error.hpp"
#include "arrangeops/intervals.hpp"
#include "arrangeops/operad.hpp"
#include "arrangeops/sampling.hpp"
#include "arrangeops/tree.hpp"
#include "arrangeops/word.hpp"

using namespace arrangeops;

TEST_CASE("graft basics") {
    // unit: grafting onto a bare leaf returns the other tree
    PlanarTree leaf = corolla(1);
    PlanarTree c3 = corolla(3);
    CHECK(graft(leaf, 1, c3) == c3);
    CHECK(graft(c3, 2, leaf) == c3);

    // 4-corolla o_4 3-corolla: inner corolla in the last slot
    PlanarTree grafted = graft(corolla(4), 4, corolla(3));
    CHECK(leaf_count(grafted) == 6);
    CHECK(tree_to_string(grafted) == "(()()()(()()()))");

    CHECK_THROWS_AS(graft(c3, 4, leaf), Error);
    CHECK_THROWS_AS(graft(c3, 0, leaf), Error);
}

TEST_CASE("graft leaf-count arithmetic") {
    for (int k = 0; k < 200; ++k) {
        auto rng = rng_for_sample(20, k);
        PlanarTree a = random_tree(rng, 1, 7);
        PlanarTree b = random_tree(rng, 1, 7);
        int i = uniform_int(rng, 1, leaf_count(a));
        CHECK(leaf_count(graft(a, i, b)) == leaf_count(a) + leaf_count(b) - 1);
    }
}

TEST_CASE("tree serialization round trip") {
    CHECK(tree_to_string(corolla(3)) == "(()()())");
    CHECK(tree_to_string(corolla(1)) == "()");
    for (int k = 0; k < 100; ++k) {
        auto rng = rng_for_sample(21, k);
        PlanarTree t = random_tree(rng, 1, 8);
        CHECK(tree_from_string(tree_to_string(t)) == t);
    }
    CHECK_THROWS_AS(tree_from_string("(()"), Error);
    CHECK_THROWS_AS(tree_from_string("()()"), Error);
    CHECK_THROWS_AS(tree_from_string(""), Error);
}

TEST_CASE("tree laws: corolla grafts both ways") {
    TreeOperad op;
    // (3-corolla o_2 2-corolla) o_2' ... sequential instance
    LawReport rep;
    rep.law = Law::Sequential;
    CHECK(check_sequential(op, corolla(3), corolla(2), corolla(2), 2, 2, &rep));
    CHECK(rep.passed());
    // parallel: two grafts at slots 1 and 3
    CHECK(check_parallel(op, corolla(3), corolla(2), corolla(2), 1, 3));
}

TEST_CASE("word operad composition formula") {
    PositiveRationals g;
    // (e) o_1 word = word
    RationalWord unit{{Rat(1)}};
    RationalWord w{{Rat(2), Rat(3), Rat(5)}};
    CHECK(word_compose(g, unit, 1, w) == w);
    // (a1,a2) o_1 (b1,b2) = (a1 b1, a1 b2, a2)
    RationalWord a{{Rat(2), Rat(7)}};
    RationalWord b{{Rat(3), Rat(5)}};
    RationalWord expect{{Rat(6), Rat(10), Rat(7)}};
    CHECK(word_compose(g, a, 1, b) == expect);
    CHECK_THROWS_AS(word_compose(g, a, 3, b), Error);
}

TEST_CASE("word length arithmetic and untouched letters") {
    PositiveRationals g;
    for (int k = 0; k < 200; ++k) {
        auto rng = rng_for_sample(22, k);
        auto random_word = [&](int lo) {
            RationalWord w;
            int n = uniform_int(rng, lo, 6);
            for (int i = 0; i < n; ++i) w.letters.push_back(random_positive_rat(rng));
            return w;
        };
        RationalWord a = random_word(1), b = random_word(1);
        int i = uniform_int(rng, 1, static_cast<int>(a.letters.size()));
        RationalWord c = word_compose(g, a, i, b);
        CHECK(c.letters.size() == a.letters.size() + b.letters.size() - 1);
        for (int k2 = 0; k2 < i - 1; ++k2) CHECK(c.letters[k2] == a.letters[k2]);
        for (std::size_t k2 = i; k2 < a.letters.size(); ++k2)
            CHECK(c.letters[k2 + b.letters.size() - 1] == a.letters[k2]);
    }
}

TEST_CASE("monoid associativity degenerates to arity-1 sequential law") {
    WordOperad<PositiveRationals> op;
    RationalWord a{{Rat(2)}}, b{{Rat(3)}}, c{{Rat(5)}};
    CHECK(check_sequential(op, a, b, c, 1, 1));
}

TEST_CASE("As operad is arity arithmetic") {
    AsOperad as;
    CHECK(as.compose(3, 2, 4) == 6);
    CHECK_THROWS_AS(as.compose(3, 5, 4), Error);
    CHECK(check_sequential(as, 2, 3, 4, 1, 2));
    CHECK(check_parallel(as, 3, 2, 2, 1, 3));
    // arity-2 a with arity-1 b = c at slots 1, 2
    CHECK(check_parallel(as, 2, 1, 1, 1, 2));
}

TEST_CASE("law checker index preconditions") {
    AsOperad as;
    CHECK_THROWS_AS(check_sequential(as, 2, 2, 2, 3, 3), Error);
    CHECK_THROWS_AS(check_sequential(as, 2, 2, 2, 1, 3), Error);
    CHECK_THROWS_AS(check_parallel(as, 3, 2, 2, 2, 2), Error);
}

TEST_CASE("law report records failures for a broken operad") {
    // deliberately wrong composition: drops the slot offset
    struct BrokenOperad {
        using Element = std::vector<int>;
        int arity(const Element& e) const { return static_cast<int>(e.size()); }
        Element compose(const Element& a, int /*i*/, const Element& b) const {
            Element out = a;
            out.insert(out.begin(), b.begin(), b.end());  // ignores the slot
            out.pop_back();
            return out;
        }
        bool equal(const Element& x, const Element& y) const { return x == y; }
        std::string describe(const Element& e) const {
            return std::to_string(e.size());
        }
    } broken;
    auto sampler = [](std::mt19937_64& rng, int min_arity) {
        std::vector<int> e(uniform_int(rng, min_arity, 5));
        for (auto& v : e) v = uniform_int(rng, 0, 9);
        return e;
    };
    LawReport rep = run_law_suite(broken, Law::Sequential, sampler, 50, 91);
    CHECK(rep.samples_tested == 50);
    CHECK(!rep.passed());
    CHECK(!rep.failures.front().inputs.empty());
}

TEST_CASE("morphism checker: identity and arity map") {
    TreeOperad trees;
    AsOperad as;
    auto rng = rng_for_sample(23, 0);
    for (int k = 0; k < 100; ++k) {
        PlanarTree a = random_tree(rng, 1, 6);
        PlanarTree b = random_tree(rng, 1, 6);
        int i = uniform_int(rng, 1, leaf_count(a));
        CHECK(check_morphism(trees, trees, [](const PlanarTree& t) { return t; }, a, i, b));
        CHECK(check_morphism(trees, as, [](const PlanarTree& t) { return leaf_count(t); },
                             a, i, b));
    }
}

TEST_CASE("moving_frame_compose on point configurations") {
    // rho(z) = [[span, first],[0,1]]; slice = configs on [0,1]
    auto rho = [](const PointConfig& c) {
        return Affine1{c.points.back() - c.points.front(), c.points.front()};
    };
    auto act = [](const Affine1& g, const PointConfig& c) {
        std::vector<Rat> pts;
        for (const Rat& x : c.points) pts.push_back(g(x));
        return make_point_config(std::move(pts));
    };
    auto inv = [](const Affine1& g) { return g.inverse(); };
    auto slice = [](const PointConfig& a, int i, const PointConfig& b) {
        return chat_compose(a, i, b);
    };

    PointConfig a = make_point_config({Rat(0), Rat(1), Rat(2)});
    PointConfig b = make_point_config({Rat(0), Rat(1), Rat(3)});
    PointConfig out = moving_frame_compose<PointConfig, Affine1>(a, 1, b, rho, act, inv, slice);
    CHECK(out == make_point_config({Rat(0), Rat(1, 3), Rat(1), Rat(2)}));

    // already normalized inputs reduce to the slice composition
    PointConfig na = make_point_config({Rat(0), Rat(1, 2), Rat(1)});
    PointConfig nb = make_point_config({Rat(0), Rat(1, 4), Rat(1)});
    CHECK(moving_frame_compose<PointConfig, Affine1>(na, 2, nb, rho, act, inv, slice) ==
          chat_compose(na, 2, nb));

    // frame preservation rho(a *_i b) = rho(a)
    for (int k = 0; k < 500; ++k) {
        auto rng = rng_for_sample(24, k);
        PointConfig ra = random_point_config(rng, 1, 5);
        PointConfig rb = random_point_config(rng, 1, 5);
        int i = uniform_int(rng, 1, config_arity(ra));
        PointConfig composed =
            moving_frame_compose<PointConfig, Affine1>(ra, i, rb, rho, act, inv, slice);
        CHECK(rho(composed) == rho(ra));
        // and the lift agrees with the direct gap-splice composition
        CHECK(composed == chat_compose(ra, i, rb));
    }
}
