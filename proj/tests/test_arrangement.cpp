#include <doctest.h>

#include "arrangeops/arrangement.hpp"
#include "arrangeops/error.hpp"
#include "arrangeops/operad.hpp"
#include "arrangeops/sampling.hpp"

using namespace arrangeops;

namespace {

Arrangement arr(std::vector<std::pair<int, int>> qp) {
    // small helper for integer-coordinate fixtures
    std::vector<RootedLine> lines;
    for (const auto& [q, p] : qp) lines.push_back(RootedLine{Rat(q), Rat(p)});
    return Arrangement::validate(std::move(lines));
}

const Arrangement kTemplate = arr({{0, 0}, {1, -1}});

} // namespace

TEST_CASE("validation accepts the template and rejects the named failures") {
    CHECK(kTemplate.rank() == 2);
    CHECK(kTemplate.arity() == 1);

    CHECK_THROWS_WITH_AS(
        static_cast<void>(Arrangement::validate({{Rat(0), Rat(1)}, {Rat(1), Rat(1)}})),
        doctest::Contains("ParallelPair(1,2)"), Error);
    CHECK_THROWS_WITH_AS(
        static_cast<void>(Arrangement::validate({{Rat(0), Rat(-1)}, {Rat(1), Rat(1)}})),
        doctest::Contains("LowerHalfIntersection(1,2)"), Error);
    CHECK_THROWS_WITH_AS(
        static_cast<void>(Arrangement::validate({{Rat(1), Rat(1)}, {Rat(0), Rat(0)}})),
        doctest::Contains("NotSorted"), Error);
    CHECK_THROWS_AS(Arrangement::validate({{Rat(0), Rat(0)}}), Error);
}

TEST_CASE("crossing geometry") {
    Arrangement p = arr({{0, 3}, {1, 1}, {2, 0}});
    CHECK(p.crossing_time(1, 2) == Rat(1, 2));
    CHECK(p.crossing(1, 2) == Point2{Rat(3, 2), Rat(1, 2)});
    CHECK(p.crossing(1, 3) == Point2{Rat(2), Rat(2, 3)});
    CHECK(p.crossing(2, 3) == Point2{Rat(2), Rat(1)});
    // line through (q,0) with momentum p in canonical form
    CHECK(p.line_geom(1) == Line2(1, -3, 0));
    CHECK(p.line_geom(3) == Line2(1, 0, 2));
}

TEST_CASE("compose_hat with a rank-2 operand is the identity") {
    Arrangement p = arr({{0, 3}, {1, 1}, {2, 0}});
    Arrangement frame = arr({{-4, 7}, {9, -2}});
    for (int i = 1; i <= p.arity(); ++i) CHECK(compose_hat(p, i, frame) == p);
}

TEST_CASE("compose_hat concurrent worked example") {
    Arrangement p = Arrangement::validate(
        {{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(-1)}});
    Arrangement q = Arrangement::validate(
        {{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(0)}, {Rat(1), Rat(-1, 2)}});
    Arrangement expect = Arrangement::validate(
        {{Rat(-1), Rat(1)}, {Rat(-1, 2), Rat(1, 2)}, {Rat(0), Rat(0)}, {Rat(1), Rat(-1)}});
    Arrangement got = compose_hat(p, 1, q);
    CHECK(got == expect);

    // oracle 1: the concurrent bridge through point configurations
    Point2 a{Rat(0), Rat(1)};
    PointConfig pc = concurrent_to_config(p, a);
    PointConfig qc = concurrent_to_config(q, Point2{Rat(1, 2), Rat(1)});
    PointConfig composed = chat_compose(pc, 1, qc);
    CHECK(config_to_concurrent(composed, a) == got);

    // oracle 2: explicit triple map (q,t) |-> (q - 1 + t/2, t)
    AffineMap2 t(1, Rat(1, 2), -1, 0, 1, 0);
    Triple src{q.root_point(1), q.crossing(1, 3), q.root_point(3)};
    Triple dst{p.root_point(1), p.crossing(1, 2), p.root_point(2)};
    CHECK(affine_from_triples(src, dst) == t);
}

TEST_CASE("compose_hat invariants and subarrangement persistence") {
    for (int k = 0; k < 300; ++k) {
        auto rng = rng_for_sample(51, k);
        Arrangement p = random_arrangement(rng, 2, 6);
        Arrangement q = random_arrangement(rng, 2, 6);
        int i = uniform_int(rng, 1, p.arity());
        Arrangement c = compose_hat(p, i, q);
        CHECK(c.rank() == p.rank() + q.rank() - 2);
        // P's lines persist verbatim
        for (int k2 = 1; k2 <= i; ++k2) CHECK(c.line(k2) == p.line(k2));
        for (int k2 = i + 1; k2 <= p.rank(); ++k2)
            CHECK(c.line(k2 + q.rank() - 2) == p.line(k2));
    }
}

TEST_CASE("moving frame and normalize") {
    // already normalized: rho is the identity
    auto [n0, rho0] = normalize(kTemplate);
    CHECK(rho0 == AffineMap2::identity());
    CHECK(n0.arrangement() == kTemplate);

    Arrangement p = Arrangement::validate(
        {{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(-1)}});
    AffineMap2 rho = moving_frame(p);
    CHECK(apply(rho, Point2{0, 0}) == Point2{-1, 0});
    CHECK(apply(rho, Point2{1, 0}) == Point2{1, 0});
    CHECK(apply(rho, Point2{0, 1}) == Point2{0, 1});
    CHECK(rho == AffineMap2(2, 1, -1, 0, 1, 0));
    auto [n, frame] = normalize(p);
    CHECK(frame == rho);
    CHECK(n.arrangement().line(1) == RootedLine{Rat(0), Rat(0)});
    CHECK(n.arrangement().line(n.rank()) == RootedLine{Rat(1), Rat(-1)});

    // frame preservation under composition
    for (int k = 0; k < 300; ++k) {
        auto rng = rng_for_sample(52, k);
        Arrangement a = random_arrangement(rng, 2, 6);
        Arrangement b = random_arrangement(rng, 2, 6);
        int i = uniform_int(rng, 1, a.arity());
        CHECK(moving_frame(compose_hat(a, i, b)) == moving_frame(a));
    }
}

TEST_CASE("matrix tuple encoding round trips") {
    // rank-2 template: single identity matrix
    MatrixTuple t0 = encode_tuple(NormalizedArrangement(kTemplate));
    REQUIRE(t0.arity() == 1);
    CHECK(t0.matrices[0] == AffineMap2::identity());
    CHECK(decode_tuple(t0).arrangement() == kTemplate);

    // rank-3 with middle line (1/2, -1/2)
    Arrangement n3 = Arrangement::validate(
        {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(-1, 2)}, {Rat(1), Rat(-1)}});
    MatrixTuple t3 = encode_tuple(NormalizedArrangement(n3));
    REQUIRE(t3.arity() == 2);
    CHECK(decode_tuple(t3).arrangement() == n3);
    // first matrix sends the frame onto root points 0, 1/2 and X(1,2)
    Point2 x12 = n3.crossing(1, 2);
    CHECK(apply(t3.matrices[0], Point2{0, 0}) == n3.root_point(1));
    CHECK(apply(t3.matrices[0], Point2{1, 0}) == n3.root_point(2));
    CHECK(apply(t3.matrices[0], Point2{0, 1}) == x12);

    for (int k = 0; k < 200; ++k) {
        auto rng = rng_for_sample(53, k);
        NormalizedArrangement n = random_normalized_arrangement(rng, 2, 7);
        CHECK(decode_tuple(encode_tuple(n)) == n);
    }
}

TEST_CASE("decode_tuple validates matching and normalization") {
    Arrangement n3 = Arrangement::validate(
        {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(-1, 2)}, {Rat(1), Rat(-1)}});
    MatrixTuple t3 = encode_tuple(NormalizedArrangement(n3));

    MatrixTuple broken = t3;
    broken.matrices[1] = AffineMap2(Rat(1, 2), Rat(0), Rat(60), Rat(0), Rat(1), Rat(0));
    CHECK_THROWS_WITH_AS(static_cast<void>(decode_tuple(broken)),
                         doctest::Contains("MatchingViolation"), Error);

    MatrixTuple unnormalized = t3;
    unnormalized.matrices[0] =
        AffineMap2(Rat(1, 2), Rat(1, 4), Rat(-1, 4), Rat(0), Rat(1, 2), Rat(0));
    CHECK_THROWS_WITH_AS(static_cast<void>(decode_tuple(unnormalized)),
                         doctest::Contains("Violation"), Error);

    MatrixTuple notstab = t3;
    notstab.matrices[0] = AffineMap2(Rat(1), Rat(0), Rat(0), Rat(1), Rat(1), Rat(0));
    CHECK_THROWS_WITH_AS(static_cast<void>(decode_tuple(notstab)),
                         doctest::Contains("stabilizer"), Error);
}

TEST_CASE("route equivalence: geometric vs matrix-tuple composition") {
    for (int k = 0; k < 200; ++k) {
        auto rng = rng_for_sample(54, k);
        Arrangement p = random_arrangement(rng, 2, 6);
        Arrangement q = random_arrangement(rng, 2, 6);
        int i = uniform_int(rng, 1, p.arity());

        Arrangement direct = compose_hat(p, i, q);

        auto [np, rp] = normalize(p);
        auto [nq, rq] = normalize(q);
        MatrixTuple composed = compose_normalized(encode_tuple(np), i, encode_tuple(nq));
        Arrangement reframed = gauge_act(rp, decode_tuple(composed).arrangement());
        CHECK(direct == reframed);
    }
}

TEST_CASE("compose_hat equals the generic moving-frame lift of the rest-frame slice") {
    auto rho = [](const Arrangement& x) { return moving_frame(x); };
    auto act = [](const AffineMap2& g, const Arrangement& x) { return gauge_act(g, x); };
    auto inv = [](const AffineMap2& g) { return inverse(g); };
    // the rest-frame slice is closed under the geometric composition
    auto slice = [](const Arrangement& a, int i, const Arrangement& b) {
        return compose_hat(a, i, b);
    };
    for (int k = 0; k < 300; ++k) {
        auto rng = rng_for_sample(66, k);
        Arrangement p = random_arrangement(rng, 2, 6);
        Arrangement q = random_arrangement(rng, 2, 6);
        int i = uniform_int(rng, 1, p.arity());
        Arrangement lifted =
            moving_frame_compose<Arrangement, AffineMap2>(p, i, q, rho, act, inv, slice);
        CHECK(lifted == compose_hat(p, i, q));
    }
}

TEST_CASE("generator decomposition") {
    // rank 2: empty generator list
    GeneratorDecomposition d2 = decompose_generators(kTemplate);
    CHECK(d2.base == kTemplate);
    CHECK(d2.generators.empty());

    // rank 3: the arrangement itself at slot 1
    Arrangement p3 = arr({{0, 3}, {1, 1}, {2, 0}});
    GeneratorDecomposition d3 = decompose_generators(p3);
    REQUIRE(d3.generators.size() == 1);
    CHECK(d3.generators[0].first == 1);
    CHECK(d3.generators[0].second == p3);
    CHECK(compose_hat(d3.base, 1, d3.generators[0].second) == p3);

    for (int k = 0; k < 200; ++k) {
        auto rng = rng_for_sample(55, k);
        Arrangement p = random_arrangement(rng, 2, 8);
        GeneratorDecomposition dec = decompose_generators(p);
        Arrangement rebuilt = dec.base;
        for (const auto& [slot, gen] : dec.generators) {
            CHECK(gen.rank() == 3);
            rebuilt = compose_hat(rebuilt, slot, gen);
        }
        CHECK(rebuilt == p);
    }
}

TEST_CASE("rank-3 classification") {
    CHECK(classify_rank3(arr({{0, 2}, {1, 1}, {2, 0}})) == Rank3Type::Concurrent);
    Rank3Type a = classify_rank3(arr({{0, 3}, {1, 1}, {2, 0}}));
    Rank3Type b = classify_rank3(arr({{0, 3}, {1, 2}, {2, 0}}));
    CHECK(a == Rank3Type::MiddleLeft);
    CHECK(b == Rank3Type::MiddleRight);
    CHECK_THROWS_AS(classify_rank3(kTemplate), Error);

    // p_reverse swaps the generic types and fixes the concurrent one
    for (int k = 0; k < 200; ++k) {
        auto rng = rng_for_sample(56, k);
        Arrangement p = random_arrangement(rng, 3, 3);
        Rank3Type t = classify_rank3(p);
        Rank3Type rt = classify_rank3(p_reverse(p));
        if (t == Rank3Type::Concurrent) {
            CHECK(rt == Rank3Type::Concurrent);
        } else {
            CHECK(rt != t);
            CHECK(rt != Rank3Type::Concurrent);
        }
    }
}

TEST_CASE("p_reverse is an involutive anti-equivariance") {
    CHECK(p_reverse(kTemplate) ==
          Arrangement::validate({{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}}));
    for (int k = 0; k < 300; ++k) {
        auto rng = rng_for_sample(57, k);
        Arrangement p = random_arrangement(rng, 2, 6);
        CHECK(p_reverse(p_reverse(p)) == p);
        Arrangement q = random_arrangement(rng, 2, 5);
        int i = uniform_int(rng, 1, p.arity());
        int flipped = p.arity() - i + 1;
        CHECK(p_reverse(compose_hat(p, i, q)) ==
              compose_hat(p_reverse(p), flipped, p_reverse(q)));
    }
}

TEST_CASE("gauge action") {
    // translation by (3, 0)
    AffineMap2 shift(1, 0, 3, 0, 1, 0);
    Arrangement p = arr({{0, 3}, {1, 1}, {2, 0}});
    Arrangement shifted = gauge_act(shift, p);
    for (int k = 1; k <= 3; ++k) {
        CHECK(shifted.line(k).q == p.line(k).q + Rat(3));
        CHECK(shifted.line(k).p == p.line(k).p);
    }
    CHECK_THROWS_WITH_AS(
        static_cast<void>(gauge_act(AffineMap2(1, 0, 0, 1, 1, 0), p)),
        doctest::Contains("InvalidGaugeElement"), Error);

    for (int k = 0; k < 300; ++k) {
        auto rng = rng_for_sample(58, k);
        Arrangement a = random_arrangement(rng, 2, 5);
        Arrangement b = random_arrangement(rng, 2, 5);
        AffineMap2 g = random_stabilizer_gauge(rng);
        int i = uniform_int(rng, 1, a.arity());
        // equivariance in the left slot, invariance in the right slot
        CHECK(gauge_act(g, compose_hat(a, i, b)) == compose_hat(gauge_act(g, a), i, b));
        CHECK(compose_hat(a, i, gauge_act(g, b)) == compose_hat(a, i, b));
    }
}

TEST_CASE("z-projection") {
    Arrangement p = arr({{0, 3}, {1, 1}, {2, 0}});
    Point2 a{Rat(0), Rat(1)};
    Arrangement proj = z_project(p, a);
    CHECK(proj == Arrangement::validate({{Rat(-3), Rat(3)}, {Rat(-1), Rat(1)}, {Rat(0), Rat(0)}}));
    CHECK(is_concurrent_at(proj, a));
    CHECK(z_project(proj, a) == proj);
    CHECK_THROWS_AS(z_project(p, Point2{Rat(0), Rat(0)}), Error);
    CHECK_THROWS_AS(z_project(p, Point2{Rat(0), Rat(-2)}), Error);

    // operad morphism, and outputs concurrent at the pivot
    for (int k = 0; k < 300; ++k) {
        auto rng = rng_for_sample(59, k);
        Arrangement x = random_arrangement(rng, 2, 5);
        Arrangement y = random_arrangement(rng, 2, 5);
        Point2 pivot{random_rat(rng), random_positive_rat(rng)};
        int i = uniform_int(rng, 1, x.arity());
        Arrangement lhs = z_project(compose_hat(x, i, y), pivot);
        Arrangement rhs = compose_hat(z_project(x, pivot), i, z_project(y, pivot));
        CHECK(lhs == rhs);
        CHECK(is_concurrent_at(lhs, pivot));
    }
}

TEST_CASE("concurrent bridge to point configurations") {
    Point2 a{Rat(0), Rat(1)};
    Arrangement p = Arrangement::validate(
        {{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(-1)}});
    PointConfig c = concurrent_to_config(p, a);
    CHECK(c == make_point_config({Rat(-1), Rat(0), Rat(1)}));
    CHECK(config_to_concurrent(c, a) == p);

    Arrangement generic = arr({{0, 3}, {1, 1}, {2, 0}});
    CHECK_THROWS_WITH_AS(static_cast<void>(concurrent_to_config(generic, a)),
                         doctest::Contains("NotConcurrent"), Error);

    // intertwining with chat_compose on random concurrent pairs
    for (int k = 0; k < 500; ++k) {
        auto rng = rng_for_sample(60, k);
        Point2 pivot{random_rat(rng), random_positive_rat(rng)};
        Arrangement x = z_project(random_arrangement(rng, 2, 5), pivot);
        Arrangement y = z_project(random_arrangement(rng, 2, 5), pivot);
        int i = uniform_int(rng, 1, x.arity());
        Arrangement composed = compose_hat(x, i, y);
        CHECK(is_concurrent_at(composed, pivot));
        CHECK(concurrent_to_config(composed, pivot) ==
              chat_compose(concurrent_to_config(x, pivot), i,
                           concurrent_to_config(y, pivot)));
    }
}

TEST_CASE("z-projection through the generic morphism checker") {
    ArrangementOperad op;
    Point2 a{Rat(1), Rat(3)};
    auto project = [&](const Arrangement& x) { return z_project(x, a); };
    LawReport rep;
    rep.law = Law::Morphism;
    for (int k = 0; k < 100; ++k) {
        auto rng = rng_for_sample(65, k);
        Arrangement x = random_arrangement(rng, 2, 5);
        Arrangement y = random_arrangement(rng, 2, 5);
        int i = uniform_int(rng, 1, x.arity());
        check_morphism(op, op, project, x, i, y, &rep);
    }
    CHECK(rep.samples_tested == 100);
    CHECK(rep.passed());
}

TEST_CASE("common_point finds pencils") {
    Arrangement pencil = arr({{0, 2}, {1, 1}, {2, 0}});
    auto cp = common_point(pencil);
    REQUIRE(cp.has_value());
    CHECK(*cp == Point2{Rat(2), Rat(1)});
    CHECK(!common_point(arr({{0, 3}, {1, 1}, {2, 0}})).has_value());
}
