#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "arrangeops/rational.hpp"

namespace arrangeops {

// Point in the qt-plane: q horizontal (space), t vertical (time).
struct Point2 {
    Rat q;
    Rat t;

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.q == b.q && a.t == b.t;
    }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

// Line a*q + b*t = c, stored canonically: the first nonzero coefficient among
// (a, b) equals 1, so structural equality is geometric equality.
class Line2 {
public:
    Line2(Rat a, Rat b, Rat c);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }

    bool contains(const Point2& p) const;

    // Two distinct points spanning the line; used to push lines through maps.
    std::array<Point2, 2> two_points() const;

    friend bool operator==(const Line2& l, const Line2& m) {
        return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
    }
    friend bool operator!=(const Line2& l, const Line2& m) { return !(l == m); }

private:
    Rat a_, b_, c_;
};

// Invertible affine map of the plane as the top two rows of a 3x3 matrix with
// implicit last row (0 0 1).
class AffineMap2 {
public:
    AffineMap2(Rat m11, Rat m12, Rat m13, Rat m21, Rat m22, Rat m23);

    static AffineMap2 identity();

    const Rat& m11() const { return m_[0]; }
    const Rat& m12() const { return m_[1]; }
    const Rat& m13() const { return m_[2]; }
    const Rat& m21() const { return m_[3]; }
    const Rat& m22() const { return m_[4]; }
    const Rat& m23() const { return m_[5]; }

    Rat det() const { return m_[0] * m_[4] - m_[1] * m_[3]; }

    friend bool operator==(const AffineMap2& f, const AffineMap2& g) {
        return f.m_ == g.m_;
    }
    friend bool operator!=(const AffineMap2& f, const AffineMap2& g) { return !(f == g); }

private:
    std::array<Rat, 6> m_;
};

Line2 line_through(const Point2& p1, const Point2& p2);
Point2 intersect(const Line2& l1, const Line2& l2);
bool parallel(const Line2& l1, const Line2& l2);

// Sign of det(b-a, c-a): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point2& a, const Point2& b, const Point2& c);

using Triple = std::array<Point2, 3>;

// The unique affine map with src[k] |-> dst[k]; both triples non-collinear.
AffineMap2 affine_from_triples(const Triple& src, const Triple& dst);

Point2 apply(const AffineMap2& m, const Point2& p);
Line2 apply_line(const AffineMap2& m, const Line2& l);
AffineMap2 inverse(const AffineMap2& m);
// Acts as f after g: apply(compose_maps(f, g), p) == apply(f, apply(g, p)).
AffineMap2 compose_maps(const AffineMap2& f, const AffineMap2& g);

std::ostream& operator<<(std::ostream& os, const Point2& p);
std::ostream& operator<<(std::ostream& os, const Line2& l);
std::ostream& operator<<(std::ostream& os, const AffineMap2& m);

} // namespace arrangeops
