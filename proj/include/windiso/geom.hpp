#pragma once

#include <span>
#include <variant>
#include <vector>

#include "windiso/rational.hpp"

namespace windiso {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

struct Segment {
    Point a;
    Point b;

    friend bool operator==(const Segment& s, const Segment& t) { return s.a == t.a && s.b == t.b; }
};

/// Sign of the cross product (b-a) x (c-a): +1 when c is left of the
/// directed line a->b, -1 when right, 0 when collinear. Exact.
int orient(const Point& a, const Point& b, const Point& c);

/// Squared Euclidean distance, exact.
Rational dist2(const Point& a, const Point& b);

/// Intersection of two closed segments: monostate when disjoint, a Point at
/// a single transversal or endpoint touch, a Segment for a collinear overlap
/// of positive length. Overlap endpoints are ordered lexicographically (x
/// then y). Exact in all branches.
using SegmentIntersection = std::variant<std::monostate, Point, Segment>;
SegmentIntersection segment_intersection(const Segment& s, const Segment& t);

/// Shoelace signed area of the closed polygon with the given vertex loop
/// (last vertex implicitly joins back to the first). Positive when the
/// boundary runs counterclockwise. Exact; self-intersecting input is fine
/// and yields the algebraic (winding-weighted) area.
Rational polygon_signed_area(std::span<const Point> vertices);

/// True iff p lies on the closed segment s, exact.
bool on_segment(const Segment& s, const Point& p);

}  // namespace windiso
