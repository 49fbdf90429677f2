#include "arrangeops/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "arrangeops/error.hpp"
#include "arrangeops/sampling.hpp"

namespace arrangeops {

Arrangement Arrangement::validate(std::vector<RootedLine> lines) {
    require(lines.size() >= 2, ErrorCode::Validation,
            "arrangement needs rank >= 2, got " + std::to_string(lines.size()));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        require(lines[k - 1].q < lines[k].q, ErrorCode::Validation,
                "NotSorted(" + std::to_string(k + 1) + "): root crossings out of order");
        if (lines[k - 1].p == lines[k].p)
            fail(ErrorCode::Validation, "ParallelPair(" + std::to_string(k) + "," +
                                            std::to_string(k + 1) + "): equal momenta");
        if (lines[k - 1].p < lines[k].p)
            fail(ErrorCode::Validation,
                 "LowerHalfIntersection(" + std::to_string(k) + "," +
                     std::to_string(k + 1) + "): intersection below the root line");
    }
    return Arrangement(std::move(lines));
}

Line2 Arrangement::line_geom(int k) const {
    const RootedLine& l = lines_[k - 1];
    // points (q + p*t, t): q-coordinate minus p times t is constant
    return Line2(Rat(1), -l.p, l.q);
}

Rat Arrangement::crossing_time(int i, int j) const {
    const RootedLine& a = lines_[i - 1];
    const RootedLine& b = lines_[j - 1];
    return (b.q - a.q) / (a.p - b.p);
}

Point2 Arrangement::crossing(int i, int j) const {
    Rat t = crossing_time(i, j);
    const RootedLine& a = lines_[i - 1];
    return Point2{a.q + a.p * t, t};
}

NormalizedArrangement::NormalizedArrangement(Arrangement arr) : arr_(std::move(arr)) {
    const RootedLine& first = arr_.line(1);
    const RootedLine& last = arr_.line(arr_.rank());
    require(first == RootedLine{Rat(0), Rat(0)}, ErrorCode::Validation,
            "normalized arrangement must start with the line q = 0");
    require(last == RootedLine{Rat(1), Rat(-1)}, ErrorCode::Validation,
            "normalized arrangement must end with the line q + t = 1");
}

const char* rank3_type_name(Rank3Type t) {
    switch (t) {
        case Rank3Type::MiddleLeft: return "MiddleLeft";
        case Rank3Type::Concurrent: return "Concurrent";
        case Rank3Type::MiddleRight: return "MiddleRight";
    }
    return "?";
}

Line2 tau_L() { return Line2(Rat(1), Rat(0), Rat(0)); }
Line2 tau_R() { return Line2(Rat(1), Rat(1), Rat(1)); }
Line2 tau_0() { return Line2(Rat(0), Rat(1), Rat(0)); }

namespace {

RootedLine line_to_qp(const Line2& l) {
    require(!l.a().is_zero(), ErrorCode::Domain,
            "line parallel to the root cannot cross it");
    return RootedLine{l.c() / l.a(), -l.b() / l.a()};
}

} // namespace

Arrangement compose_hat(const Arrangement& P, int i, const Arrangement& Q) {
    check_slot(i, P.arity());
    Triple src{Q.root_point(1), Q.crossing(1, Q.rank()), Q.root_point(Q.rank())};
    Triple dst{P.root_point(i), P.crossing(i, i + 1), P.root_point(i + 1)};
    AffineMap2 T = affine_from_triples(src, dst);
    std::vector<RootedLine> lines;
    lines.reserve(P.rank() + Q.rank() - 2);
    for (int k = 1; k <= i; ++k) lines.push_back(P.line(k));
    for (int k = 2; k < Q.rank(); ++k)
        lines.push_back(line_to_qp(apply_line(T, Q.line_geom(k))));
    for (int k = i + 1; k <= P.rank(); ++k) lines.push_back(P.line(k));
    return Arrangement::validate(std::move(lines));
}

AffineMap2 moving_frame(const Arrangement& P) {
    Triple src{Point2{0, 0}, Point2{1, 0}, Point2{0, 1}};
    Triple dst{P.root_point(1), P.root_point(P.rank()), P.crossing(1, P.rank())};
    return affine_from_triples(src, dst);
}

std::pair<NormalizedArrangement, AffineMap2> normalize(const Arrangement& P) {
    AffineMap2 rho = moving_frame(P);
    return {NormalizedArrangement(gauge_act(inverse(rho), P)), rho};
}

bool is_stabilizer_form(const AffineMap2& g) {
    return g.m21().is_zero() && g.m23().is_zero() && g.m22() > Rat(0) && g.m11() > Rat(0);
}

Arrangement gauge_act(const AffineMap2& g, const Arrangement& P) {
    require(is_stabilizer_form(g), ErrorCode::Domain,
            "InvalidGaugeElement: not of root-stabilizer form");
    std::vector<RootedLine> lines;
    lines.reserve(P.rank());
    for (const RootedLine& l : P.lines())
        lines.push_back(RootedLine{g.m11() * l.q + g.m13(),
                                   (g.m11() * l.p + g.m12()) / g.m22()});
    return Arrangement::validate(std::move(lines));
}

MatrixTuple encode_tuple(const NormalizedArrangement& N) {
    const Arrangement& A = N.arrangement();
    MatrixTuple w;
    w.matrices.reserve(A.arity());
    for (int i = 1; i <= A.arity(); ++i) {
        Rat ai = A.line(i).q;
        Rat ai1 = A.line(i + 1).q;
        Point2 x = A.crossing(i, i + 1);
        w.matrices.push_back(AffineMap2(ai1 - ai, x.q - ai, ai, Rat(0), x.t, Rat(0)));
    }
    return w;
}

NormalizedArrangement decode_tuple(const MatrixTuple& w) {
    require(!w.matrices.empty(), ErrorCode::Validation, "empty matrix tuple");
    for (std::size_t k = 0; k < w.matrices.size(); ++k)
        require(is_stabilizer_form(w.matrices[k]), ErrorCode::Validation,
                "matrix " + std::to_string(k + 1) + " is not of stabilizer form");
    for (std::size_t k = 0; k + 1 < w.matrices.size(); ++k)
        require(apply_line(w.matrices[k], tau_R()) == apply_line(w.matrices[k + 1], tau_L()),
                ErrorCode::Validation,
                "MatchingViolation(" + std::to_string(k + 1) + ")");
    require(apply_line(w.matrices.front(), tau_L()) == tau_L(), ErrorCode::Validation,
            "NormalizationViolation(left)");
    require(apply_line(w.matrices.back(), tau_R()) == tau_R(), ErrorCode::Validation,
            "NormalizationViolation(right)");
    std::vector<RootedLine> lines;
    lines.reserve(w.matrices.size() + 1);
    for (const AffineMap2& T : w.matrices)
        lines.push_back(RootedLine{T.m13(), T.m12() / T.m22()});
    const AffineMap2& last = w.matrices.back();
    lines.push_back(RootedLine{last.m11() + last.m13(),
                               (last.m12() - last.m11()) / last.m22()});
    return NormalizedArrangement(Arrangement::validate(std::move(lines)));
}

MatrixTuple compose_normalized(const MatrixTuple& a, int i, const MatrixTuple& b) {
    check_slot(i, a.arity());
    MatrixTuple out;
    out.matrices.reserve(a.arity() + b.arity() - 1);
    for (int k = 0; k < i - 1; ++k) out.matrices.push_back(a.matrices[k]);
    for (const AffineMap2& s : b.matrices)
        out.matrices.push_back(compose_maps(a.matrices[i - 1], s));
    for (std::size_t k = i; k < a.matrices.size(); ++k) out.matrices.push_back(a.matrices[k]);
    return out;
}

GeneratorDecomposition decompose_generators(const Arrangement& P) {
    std::vector<std::pair<int, Arrangement>> gens;
    std::vector<RootedLine> cur = P.lines();
    while (cur.size() > 2) {
        int k = static_cast<int>(cur.size());
        Arrangement gen =
            Arrangement::validate({cur[k - 3], cur[k - 2], cur[k - 1]});
        gens.emplace_back(k - 2, std::move(gen));
        cur.erase(cur.begin() + (k - 2));  // drop the penultimate line
    }
    std::reverse(gens.begin(), gens.end());
    return GeneratorDecomposition{Arrangement::validate(std::move(cur)), std::move(gens)};
}

Rank3Type classify_rank3(const Arrangement& P) {
    require(P.rank() == 3, ErrorCode::Domain,
            "rank-3 classification on rank " + std::to_string(P.rank()));
    Point2 x = P.crossing(1, 3);
    Point2 base = P.root_point(2);
    Point2 ahead{base.q + P.line(2).p, Rat(1)};
    int side = orientation(base, ahead, x);
    if (side == 0) return Rank3Type::Concurrent;
    // x right of the directed middle line means the middle line runs left of x
    return side < 0 ? Rank3Type::MiddleLeft : Rank3Type::MiddleRight;
}

Arrangement p_reverse(const Arrangement& P) {
    std::vector<RootedLine> lines;
    lines.reserve(P.rank());
    for (int k = P.rank(); k >= 1; --k)
        lines.push_back(RootedLine{-P.line(k).q, -P.line(k).p});
    return Arrangement::validate(std::move(lines));
}

Arrangement z_project(const Arrangement& P, const Point2& A) {
    require(A.t > Rat(0), ErrorCode::Domain,
            "projection point must lie strictly above the root line");
    std::vector<RootedLine> lines;
    lines.reserve(P.rank());
    for (const RootedLine& l : P.lines())
        lines.push_back(RootedLine{A.q - l.p * A.t, l.p});
    return Arrangement::validate(std::move(lines));
}

bool is_concurrent_at(const Arrangement& P, const Point2& A) {
    for (int k = 1; k <= P.rank(); ++k)
        if (!P.line_geom(k).contains(A)) return false;
    return true;
}

std::optional<Point2> common_point(const Arrangement& P) {
    Point2 x = P.crossing(1, 2);
    return is_concurrent_at(P, x) ? std::optional<Point2>(x) : std::nullopt;
}

PointConfig concurrent_to_config(const Arrangement& P, const Point2& A) {
    for (int k = 1; k <= P.rank(); ++k)
        require(P.line_geom(k).contains(A), ErrorCode::Domain,
                "NotConcurrent(" + std::to_string(k) + "): line misses the pivot");
    std::vector<Rat> pts;
    pts.reserve(P.rank());
    for (const RootedLine& l : P.lines()) pts.push_back(l.q);
    return make_point_config(std::move(pts));
}

Arrangement config_to_concurrent(const PointConfig& c, const Point2& A) {
    require(A.t > Rat(0), ErrorCode::Domain,
            "pivot must lie strictly above the root line");
    std::vector<RootedLine> lines;
    lines.reserve(c.points.size());
    for (const Rat& q : c.points) lines.push_back(RootedLine{q, (A.q - q) / A.t});
    return Arrangement::validate(std::move(lines));
}

PolygonalChain arrangement_to_chain(const Arrangement& P) {
    std::vector<std::pair<Rat, Rat>> vs;
    vs.reserve(P.rank());
    for (const RootedLine& l : P.lines()) vs.emplace_back(l.q, -l.p);
    return make_chain(std::move(vs));
}

Arrangement chain_to_arrangement(const PolygonalChain& c) {
    std::vector<RootedLine> lines;
    lines.reserve(c.vertices.size());
    for (const auto& v : c.vertices) lines.push_back(RootedLine{v.first, -v.second});
    return Arrangement::validate(std::move(lines));
}

namespace {

struct EnvelopeGraph {
    struct Segment {
        Point2 a, b;  // ordered along the carrier line
        int line;     // 1-based; the root line carries no segments here
        bool boundary = false;
    };
    std::vector<Point2> vertices;
    std::vector<Segment> segments;
    std::vector<std::vector<int>> incident;  // vertex -> boundary segment ids

    int vertex_id(const Point2& p) {
        for (std::size_t k = 0; k < vertices.size(); ++k)
            if (vertices[k] == p) return static_cast<int>(k);
        vertices.push_back(p);
        incident.emplace_back();
        return static_cast<int>(vertices.size()) - 1;
    }
};

Rat eval_line(const Line2& l, const Point2& p) {
    return l.a() * p.q + l.b() * p.t - l.c();
}

// Whether the arrangement face containing the probe is unbounded: the
// recession cone of the active half-planes is nontrivial iff some boundary
// ray of a constraint satisfies all of them.
bool face_unbounded(const std::vector<Line2>& lines, const Point2& probe) {
    std::vector<std::pair<Rat, Rat>> normals;
    normals.reserve(lines.size());
    for (const Line2& l : lines) {
        int s = eval_line(l, probe).sign();
        normals.emplace_back(Rat(s) * l.a(), Rat(s) * l.b());
    }
    auto admissible = [&](const Rat& dq, const Rat& dt) {
        for (const auto& n : normals)
            if ((n.first * dq + n.second * dt).sign() < 0) return false;
        return true;
    };
    for (const auto& n : normals) {
        if (admissible(-n.second, n.first)) return true;
        if (admissible(n.second, -n.first)) return true;
    }
    return false;
}

// A segment lies on the region boundary iff exactly one of its two side
// probes sits in an unbounded face.
bool segment_on_boundary(const std::vector<Line2>& lines, const Point2& a,
                         const Point2& b) {
    Point2 mid{(a.q + b.q) / Rat(2), (a.t + b.t) / Rat(2)};
    Rat nq = a.t - b.t;  // normal to the segment direction
    Rat nt = b.q - a.q;
    Rat safe(0);
    bool found = false;
    for (const Line2& l : lines) {
        Rat num = -eval_line(l, mid);
        if (num.is_zero()) continue;  // the carrier line itself
        Rat den = l.a() * nq + l.b() * nt;
        if (den.is_zero()) continue;  // parallel to the probe direction
        Rat step = (num / den).abs();
        if (!found || step < safe) {
            safe = step;
            found = true;
        }
    }
    Rat off = found ? safe / Rat(2) : Rat(1);
    Point2 left{mid.q + off * nq, mid.t + off * nt};
    Point2 right{mid.q - off * nq, mid.t - off * nt};
    return face_unbounded(lines, left) != face_unbounded(lines, right);
}

// Candidate order around a vertex: first direction counterclockwise from the
// reversed incoming direction keeps the enclosed region on the right.
int ccw_class(const std::pair<Rat, Rat>& ref, const std::pair<Rat, Rat>& d) {
    Rat cross = ref.first * d.second - ref.second * d.first;
    if (cross.sign() > 0) return 1;
    if (cross.sign() < 0) return 3;
    Rat dot = ref.first * d.first + ref.second * d.second;
    return dot.sign() > 0 ? 0 : 2;
}

} // namespace

std::vector<Point2> upper_envelope(const Arrangement& P) {
    const int r = P.rank();
    std::vector<Line2> all_lines;
    all_lines.reserve(r + 1);
    all_lines.push_back(tau_0());
    for (int k = 1; k <= r; ++k) all_lines.push_back(P.line_geom(k));

    EnvelopeGraph g;
    for (int i = 1; i <= r; ++i) {
        std::vector<std::pair<Rat, Point2>> stations;  // (time along the line, point)
        stations.emplace_back(Rat(0), P.root_point(i));
        for (int j = 1; j <= r; ++j) {
            if (j == i) continue;
            stations.emplace_back(P.crossing_time(std::min(i, j), std::max(i, j)),
                                  P.crossing(std::min(i, j), std::max(i, j)));
        }
        std::sort(stations.begin(), stations.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        stations.erase(std::unique(stations.begin(), stations.end(),
                                   [](const auto& x, const auto& y) {
                                       return x.first == y.first;
                                   }),
                       stations.end());
        for (std::size_t k = 0; k + 1 < stations.size(); ++k)
            g.segments.push_back(
                EnvelopeGraph::Segment{stations[k].second, stations[k + 1].second, i});
    }
    for (std::size_t s = 0; s < g.segments.size(); ++s) {
        auto& seg = g.segments[s];
        seg.boundary = segment_on_boundary(all_lines, seg.a, seg.b);
        if (seg.boundary) {
            g.incident[g.vertex_id(seg.a)].push_back(static_cast<int>(s));
            g.incident[g.vertex_id(seg.b)].push_back(static_cast<int>(s));
        }
    }

    int start = g.vertex_id(P.root_point(1));
    int goal = g.vertex_id(P.root_point(r));
    std::vector<Point2> chain;
    chain.push_back(g.vertices[start]);
    int at = start;
    int came_on = -1;
    std::pair<Rat, Rat> incoming{Rat(0), Rat(-1)};  // entered the start from above root
    for (std::size_t steps = 0; steps <= g.segments.size() + 1; ++steps) {
        std::pair<Rat, Rat> ref{-incoming.first, -incoming.second};
        int best = -1;
        std::pair<Rat, Rat> best_dir{Rat(0), Rat(0)};
        int best_class = 4;
        for (int sid : g.incident[at]) {
            if (sid == came_on) continue;
            const auto& seg = g.segments[sid];
            const Point2& other = (g.vertices[at] == seg.a) ? seg.b : seg.a;
            std::pair<Rat, Rat> dir{other.q - g.vertices[at].q, other.t - g.vertices[at].t};
            int cls = ccw_class(ref, dir);
            bool better = cls < best_class;
            if (!better && cls == best_class && (cls == 1 || cls == 3))
                better = (best_dir.first * dir.second - best_dir.second * dir.first)
                             .sign() < 0;
            if (better) {
                best = sid;
                best_dir = dir;
                best_class = cls;
            }
        }
        require(best >= 0, ErrorCode::Domain, "envelope walk dead-ended");
        const auto& seg = g.segments[best];
        const Point2& next = (g.vertices[at] == seg.a) ? seg.b : seg.a;
        incoming = best_dir;
        came_on = best;
        at = g.vertex_id(next);
        // merge stations collinear with the previous direction
        if (chain.size() >= 2) {
            if (orientation(chain[chain.size() - 2], chain.back(), next) == 0)
                chain.pop_back();
        }
        chain.push_back(next);
        if (at == goal) return chain;
    }
    fail(ErrorCode::Domain, "envelope walk did not terminate");
}

long long count_bounded_regions(const Arrangement& P) {
    const int r = P.rank();
    std::vector<std::pair<Rat, Rat>> points;  // (q, t) of all crossings
    long long bounded_edges = 0;
    for (int i = 1; i <= r; ++i) {
        std::vector<Rat> times;
        for (int j = 1; j <= r; ++j) {
            if (j == i) continue;
            times.push_back(P.crossing_time(std::min(i, j), std::max(i, j)));
        }
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
        bounded_edges += static_cast<long long>(times.size()) - 1;
        for (int j = i + 1; j <= r; ++j) {
            Point2 x = P.crossing(i, j);
            points.emplace_back(x.q, x.t);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    // Connected subdivision (every two lines cross): Euler gives
    // bounded faces = bounded edges - vertices + 1.
    return bounded_edges - static_cast<long long>(points.size()) + 1;
}

OrderedPartitionChain permutahedron_chain(const Arrangement& P) {
    const int n = P.rank();
    std::vector<Rat> times;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) times.push_back(P.crossing_time(i, j));
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    auto order_at = [&](const Rat& t) {
        std::vector<std::pair<Rat, int>> pos;
        pos.reserve(n);
        for (int k = 1; k <= n; ++k)
            pos.emplace_back(P.line(k).q + P.line(k).p * t, k);
        std::sort(pos.begin(), pos.end());
        return pos;
    };

    OrderedPartitionChain chain;
    for (const Rat& t : times) {
        auto pos = order_at(t);
        OrderedPartitionChain::Event ev;
        ev.time = t;
        std::size_t k = 0;
        while (k < pos.size()) {
            std::vector<int> block{pos[k].second};
            std::size_t m = k + 1;
            while (m < pos.size() && pos[m].first == pos[k].first)
                block.push_back(pos[m++].second);
            ev.blocks.push_back(std::move(block));
            k = m;
        }
        chain.events.push_back(std::move(ev));
    }

    auto state_at = [&](const Rat& t) {
        auto pos = order_at(t);
        std::vector<int> state;
        state.reserve(n);
        for (const auto& p : pos) state.push_back(p.second);
        return state;
    };
    const Rat two(2);
    chain.states.push_back(state_at(times.front() / two));
    for (std::size_t e = 0; e + 1 < times.size(); ++e)
        chain.states.push_back(state_at((times[e] + times[e + 1]) / two));
    chain.states.push_back(state_at(times.back() + Rat(1)));
    return chain;
}

std::vector<int> reduced_word(const Arrangement& P) {
    OrderedPartitionChain chain = permutahedron_chain(P);
    std::vector<int> state = chain.states.front();
    std::vector<int> word;
    for (const auto& ev : chain.events) {
        for (const auto& block : ev.blocks) {
            if (block.size() < 2) continue;
            if (block.size() >= 3) {
                std::ostringstream os;
                os << "NotGeneric(t=" << ev.time << ", block={";
                for (std::size_t k = 0; k < block.size(); ++k)
                    os << (k ? "," : "") << block[k];
                os << "})";
                fail(ErrorCode::NotGeneric, os.str());
            }
            auto it = std::find(state.begin(), state.end(), block[0]);
            int k = static_cast<int>(it - state.begin());  // 0-based slot
            std::swap(state[k], state[k + 1]);
            word.push_back(k + 1);
        }
    }
    return word;
}

std::string ArrangementOperad::describe(const Element& a) const {
    std::ostringstream os;
    for (const RootedLine& l : a.lines()) os << "(" << l.q << "," << l.p << ")";
    return os.str();
}

std::string TupleOperad::describe(const Element& w) const {
    std::ostringstream os;
    for (const AffineMap2& m : w.matrices) os << m;
    return os.str();
}

Arrangement random_arrangement(std::mt19937_64& rng, int min_rank, int max_rank) {
    int r = uniform_int(rng, min_rank, max_rank);
    auto qs = random_increasing(rng, r);
    auto ps_up = random_increasing(rng, r);
    std::vector<RootedLine> lines;
    lines.reserve(r);
    for (int k = 0; k < r; ++k) lines.push_back(RootedLine{qs[k], -ps_up[k]});
    return Arrangement::validate(std::move(lines));
}

NormalizedArrangement random_normalized_arrangement(std::mt19937_64& rng, int min_rank,
                                                    int max_rank) {
    int r = uniform_int(rng, min_rank, max_rank);
    auto interior = [&](int count) {
        // count strictly increasing values in (0, 1)
        std::vector<Rat> weights;
        Rat total(0);
        for (int k = 0; k < count + 1; ++k) {
            weights.push_back(random_positive_rat(rng, 8, 4));
            total += weights.back();
        }
        std::vector<Rat> out;
        Rat acc(0);
        for (int k = 0; k < count; ++k) {
            acc += weights[k] / total;
            out.push_back(acc);
        }
        return out;
    };
    auto qs = interior(r - 2);
    auto ps = interior(r - 2);
    std::vector<RootedLine> lines;
    lines.push_back(RootedLine{Rat(0), Rat(0)});
    for (int k = 0; k < r - 2; ++k) lines.push_back(RootedLine{qs[k], -ps[k]});
    lines.push_back(RootedLine{Rat(1), Rat(-1)});
    return NormalizedArrangement(Arrangement::validate(std::move(lines)));
}

Arrangement random_generic_arrangement(std::mt19937_64& rng, int rank) {
    for (;;) {
        Arrangement P = random_arrangement(rng, rank, rank);
        std::vector<Rat> times;
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j) times.push_back(P.crossing_time(i, j));
        std::sort(times.begin(), times.end());
        if (std::adjacent_find(times.begin(), times.end()) == times.end()) return P;
    }
}

AffineMap2 random_stabilizer_gauge(std::mt19937_64& rng) {
    return AffineMap2(random_positive_rat(rng, 6, 3), random_rat(rng, 6, 3),
                      random_rat(rng, 8, 3), Rat(0), random_positive_rat(rng, 6, 3),
                      Rat(0));
}

} // namespace arrangeops
