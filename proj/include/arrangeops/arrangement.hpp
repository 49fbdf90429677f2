#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arrangeops/chain.hpp"
#include "arrangeops/geometry.hpp"
#include "arrangeops/intervals.hpp"
#include "arrangeops/operad.hpp"

namespace arrangeops {

// One non-root line of a scattering diagram: root crossing position q and
// momentum p = cot(theta), theta the angle from the directed root line.
struct RootedLine {
    Rat q;
    Rat p;

    friend bool operator==(const RootedLine& a, const RootedLine& b) {
        return a.q == b.q && a.p == b.p;
    }
};

// Planar rooted line arrangement in the canonical root frame (root line
// t = 0 directed by increasing q). Invariants: q strictly increasing, p
// strictly decreasing, rank >= 2; equivalently no two lines parallel and all
// pairwise intersections strictly above the root. Rank-2 arrangements are
// the arity-1 elements; moving_frame restricted to them is the bijection
// onto the stabilizer group G.
class Arrangement {
public:
    static Arrangement validate(std::vector<RootedLine> lines);

    int rank() const { return static_cast<int>(lines_.size()); }
    int arity() const { return rank() - 1; }
    const std::vector<RootedLine>& lines() const { return lines_; }
    const RootedLine& line(int k) const { return lines_[k - 1]; }  // 1-based

    Line2 line_geom(int k) const;
    Point2 root_point(int k) const { return Point2{lines_[k - 1].q, Rat(0)}; }
    Point2 crossing(int i, int j) const;
    Rat crossing_time(int i, int j) const;

    friend bool operator==(const Arrangement& a, const Arrangement& b) {
        return a.lines_ == b.lines_;
    }
    friend bool operator!=(const Arrangement& a, const Arrangement& b) {
        return !(a == b);
    }

private:
    explicit Arrangement(std::vector<RootedLine> lines) : lines_(std::move(lines)) {}
    std::vector<RootedLine> lines_;
};

// Arrangement framed by q = 0 (first line) and q + t = 1 (last line): the
// rest frame of the first particle.
class NormalizedArrangement {
public:
    explicit NormalizedArrangement(Arrangement arr);

    const Arrangement& arrangement() const { return arr_; }
    int rank() const { return arr_.rank(); }
    int arity() const { return arr_.arity(); }

    friend bool operator==(const NormalizedArrangement& a, const NormalizedArrangement& b) {
        return a.arr_ == b.arr_;
    }

private:
    Arrangement arr_;
};

// Word encoding of a normalized arrangement: stabilizer-form matrices with
// T_i tau_R = T_{i+1} tau_L (matching) and T_1 tau_L = tau_L,
// T_n tau_R = tau_R (normalization).
struct MatrixTuple {
    std::vector<AffineMap2> matrices;

    int arity() const { return static_cast<int>(matrices.size()); }

    friend bool operator==(const MatrixTuple& a, const MatrixTuple& b) {
        return a.matrices == b.matrices;
    }
};

enum class Rank3Type { MiddleLeft, Concurrent, MiddleRight };
const char* rank3_type_name(Rank3Type t);

struct OrderedPartitionChain {
    struct Event {
        Rat time;
        // All blocks, singletons included, ordered left to right by position
        // at the event time; indices within a block ascend (their order just
        // before the collision).
        std::vector<std::vector<int>> blocks;
    };
    std::vector<Event> events;
    // Left-to-right line orders between events; first is (1..n), last (n..1).
    std::vector<std::vector<int>> states;
};

// Template frame lines: tau_L is q = 0, tau_R is q + t = 1, tau_0 is t = 0.
Line2 tau_L();
Line2 tau_R();
Line2 tau_0();

// Geometric partial composition of Construction II: maps Q's frame triple
// onto slot i of P and inserts the images of Q's interior lines.
// rank(P *_i Q) = rank(P) + rank(Q) - 2.
Arrangement compose_hat(const Arrangement& P, int i, const Arrangement& Q);

// rho(P): (0,0) |-> P_1, (1,0) |-> P_last, (0,1) |-> P_{1,last}.
AffineMap2 moving_frame(const Arrangement& P);
std::pair<NormalizedArrangement, AffineMap2> normalize(const Arrangement& P);

bool is_stabilizer_form(const AffineMap2& g);
// Applies a root-line-stabilizing map to every line of P.
Arrangement gauge_act(const AffineMap2& g, const Arrangement& P);

MatrixTuple encode_tuple(const NormalizedArrangement& N);
NormalizedArrangement decode_tuple(const MatrixTuple& w);
MatrixTuple compose_normalized(const MatrixTuple& a, int i, const MatrixTuple& b);

// Peels penultimate lines; replaying compose_hat left-to-right on the rank-2
// base reconstructs P exactly. Every generator has rank 3.
struct GeneratorDecomposition {
    Arrangement base;
    std::vector<std::pair<int, Arrangement>> generators;  // (slot, rank-3 piece)
};
GeneratorDecomposition decompose_generators(const Arrangement& P);

Rank3Type classify_rank3(const Arrangement& P);

// Reversal of the root-line direction, (q, p) |-> (-q, -p) in reverse order.
Arrangement p_reverse(const Arrangement& P);

// Z-symmetry: slides every line parallel to itself through A (momenta kept).
Arrangement z_project(const Arrangement& P, const Point2& A);

bool is_concurrent_at(const Arrangement& P, const Point2& A);
// The common point of a concurrent arrangement, if any.
std::optional<Point2> common_point(const Arrangement& P);

PointConfig concurrent_to_config(const Arrangement& P, const Point2& A);
Arrangement config_to_concurrent(const PointConfig& c, const Point2& A);

// Coordinate bridge to the chain picture: vertex k is (q_k, -p_k), both
// strictly increasing. The two sides carry different compositions (segment
// substitution decouples positions and momenta, the geometric composition
// does not); only the coordinates are identified.
PolygonalChain arrangement_to_chain(const Arrangement& P);
Arrangement chain_to_arrangement(const PolygonalChain& c);

// Outer boundary of the union of bounded faces of the subdivision cut by the
// root line and the arrangement lines, walked from P_1 to P_r; every pairwise
// intersection lies in the closed region bounded by this chain and the root.
// Collinear stations are merged, so each chain segment lies on one line.
std::vector<Point2> upper_envelope(const Arrangement& P);

// Bounded faces of the subdivision induced by the non-root lines, via the
// Euler relation on the exact intersection graph.
long long count_bounded_regions(const Arrangement& P);

OrderedPartitionChain permutahedron_chain(const Arrangement& P);

// Adjacent-transposition word read off the crossing chronology; refuses
// size->=3 blocks (NotGeneric), linearizes disjoint simultaneous 2-blocks
// left to right.
std::vector<int> reduced_word(const Arrangement& P);

struct ArrangementOperad {
    using Element = Arrangement;
    int arity(const Element& a) const { return a.arity(); }
    Element compose(const Element& a, int i, const Element& b) const {
        return compose_hat(a, i, b);
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string describe(const Element& a) const;
};

struct TupleOperad {
    using Element = MatrixTuple;
    int arity(const Element& w) const { return w.arity(); }
    Element compose(const Element& a, int i, const Element& b) const {
        return compose_normalized(a, i, b);
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string describe(const Element& w) const;
};

Arrangement random_arrangement(std::mt19937_64& rng, int min_rank, int max_rank);
NormalizedArrangement random_normalized_arrangement(std::mt19937_64& rng, int min_rank,
                                                    int max_rank);
// All crossing times distinct (hence no concurrencies).
Arrangement random_generic_arrangement(std::mt19937_64& rng, int rank);
AffineMap2 random_stabilizer_gauge(std::mt19937_64& rng);

} // namespace arrangeops
