#include "arrangeops/geometry.hpp"

#include <ostream>
#include <sstream>

#include "arrangeops/error.hpp"

namespace arrangeops {

Line2::Line2(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    require(!(a_.is_zero() && b_.is_zero()), ErrorCode::Domain,
            "degenerate line: a = b = 0");
    const Rat lead = a_.is_zero() ? b_ : a_;
    a_ /= lead;
    b_ /= lead;
    c_ /= lead;
}

bool Line2::contains(const Point2& p) const {
    return a_ * p.q + b_ * p.t == c_;
}

std::array<Point2, 2> Line2::two_points() const {
    if (!b_.is_zero()) {
        // q = 0 and q = 1 cuts
        return {Point2{0, c_ / b_}, Point2{1, (c_ - a_) / b_}};
    }
    return {Point2{c_ / a_, 0}, Point2{c_ / a_, 1}};
}

AffineMap2::AffineMap2(Rat m11, Rat m12, Rat m13, Rat m21, Rat m22, Rat m23)
    : m_{std::move(m11), std::move(m12), std::move(m13),
         std::move(m21), std::move(m22), std::move(m23)} {
    require(!det().is_zero(), ErrorCode::Domain, "singular affine map");
}

AffineMap2 AffineMap2::identity() { return AffineMap2(1, 0, 0, 0, 1, 0); }

Line2 line_through(const Point2& p1, const Point2& p2) {
    require(p1 != p2, ErrorCode::Domain,
            "CoincidentPoints: line through a single point");
    // Normal (dt, -dq) to direction (dq, dt).
    Rat a = p2.t - p1.t;
    Rat b = p1.q - p2.q;
    Rat c = a * p1.q + b * p1.t;
    return Line2(std::move(a), std::move(b), std::move(c));
}

bool parallel(const Line2& l1, const Line2& l2) {
    return (l1.a() * l2.b() - l2.a() * l1.b()).is_zero();
}

Point2 intersect(const Line2& l1, const Line2& l2) {
    Rat det = l1.a() * l2.b() - l2.a() * l1.b();
    require(!det.is_zero(), ErrorCode::Domain, "ParallelLines: no intersection");
    Rat q = (l1.c() * l2.b() - l2.c() * l1.b()) / det;
    Rat t = (l1.a() * l2.c() - l2.a() * l1.c()) / det;
    return Point2{std::move(q), std::move(t)};
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    Rat d = (b.q - a.q) * (c.t - a.t) - (b.t - a.t) * (c.q - a.q);
    return d.sign();
}

AffineMap2 affine_from_triples(const Triple& src, const Triple& dst) {
    require(orientation(src[0], src[1], src[2]) != 0, ErrorCode::Domain,
            "CollinearTriple: source triple is collinear");
    require(orientation(dst[0], dst[1], dst[2]) != 0, ErrorCode::Domain,
            "CollinearTriple: destination triple is collinear");
    // Row (r1, r2, r3) with r1*q_k + r2*t_k + r3 = w_k, k = 1..3, solved by
    // Cramer on the common matrix [[q1,t1,1],[q2,t2,1],[q3,t3,1]].
    const Rat det = (src[1].q - src[0].q) * (src[2].t - src[0].t) -
                    (src[1].t - src[0].t) * (src[2].q - src[0].q);
    auto solve_row = [&](const Rat& w1, const Rat& w2, const Rat& w3) {
        Rat d1 = w1 * (src[1].t - src[2].t) - src[0].t * (w2 - w3) +
                 (w2 * src[2].t - w3 * src[1].t);
        Rat d2 = src[0].q * (w2 - w3) - w1 * (src[1].q - src[2].q) +
                 (src[1].q * w3 - src[2].q * w2);
        Rat d3 = src[0].q * (src[1].t * w3 - src[2].t * w2) -
                 src[0].t * (src[1].q * w3 - src[2].q * w2) +
                 w1 * (src[1].q * src[2].t - src[2].q * src[1].t);
        return std::array<Rat, 3>{d1 / det, d2 / det, d3 / det};
    };
    auto top = solve_row(dst[0].q, dst[1].q, dst[2].q);
    auto bot = solve_row(dst[0].t, dst[1].t, dst[2].t);
    return AffineMap2(top[0], top[1], top[2], bot[0], bot[1], bot[2]);
}

Point2 apply(const AffineMap2& m, const Point2& p) {
    return Point2{m.m11() * p.q + m.m12() * p.t + m.m13(),
                  m.m21() * p.q + m.m22() * p.t + m.m23()};
}

Line2 apply_line(const AffineMap2& m, const Line2& l) {
    auto pts = l.two_points();
    return line_through(apply(m, pts[0]), apply(m, pts[1]));
}

AffineMap2 inverse(const AffineMap2& m) {
    Rat det = m.det();
    Rat i11 = m.m22() / det;
    Rat i12 = -m.m12() / det;
    Rat i21 = -m.m21() / det;
    Rat i22 = m.m11() / det;
    Rat i13 = -(i11 * m.m13() + i12 * m.m23());
    Rat i23 = -(i21 * m.m13() + i22 * m.m23());
    return AffineMap2(std::move(i11), std::move(i12), std::move(i13),
                      std::move(i21), std::move(i22), std::move(i23));
}

AffineMap2 compose_maps(const AffineMap2& f, const AffineMap2& g) {
    return AffineMap2(f.m11() * g.m11() + f.m12() * g.m21(),
                      f.m11() * g.m12() + f.m12() * g.m22(),
                      f.m11() * g.m13() + f.m12() * g.m23() + f.m13(),
                      f.m21() * g.m11() + f.m22() * g.m21(),
                      f.m21() * g.m12() + f.m22() * g.m22(),
                      f.m21() * g.m13() + f.m22() * g.m23() + f.m23());
}

std::ostream& operator<<(std::ostream& os, const Point2& p) {
    return os << "(" << p.q << ", " << p.t << ")";
}

std::ostream& operator<<(std::ostream& os, const Line2& l) {
    return os << l.a() << "*q + " << l.b() << "*t = " << l.c();
}

std::ostream& operator<<(std::ostream& os, const AffineMap2& m) {
    return os << "[" << m.m11() << " " << m.m12() << " " << m.m13() << "; "
              << m.m21() << " " << m.m22() << " " << m.m23() << "]";
}

} // namespace arrangeops
