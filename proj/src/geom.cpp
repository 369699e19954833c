#include "windiso/geom.hpp"

namespace windiso {

int orient(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

Rational dist2(const Point& a, const Point& b) {
    Rational dx = b.x - a.x;
    Rational dy = b.y - a.y;
    return dx * dx + dy * dy;
}

bool on_segment(const Segment& s, const Point& p) {
    if (orient(s.a, s.b, p) != 0) return false;
    return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) &&
           min(s.a.y, s.b.y) <= p.y && p.y <= max(s.a.y, s.b.y);
}

namespace {

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Collinear case: project both segments onto the dominant axis and intersect
// the parameter ranges. All four points are known collinear here.
SegmentIntersection collinear_overlap(const Segment& s, const Segment& t) {
    Point s0 = s.a, s1 = s.b, t0 = t.a, t1 = t.b;
    if (lex_less(s1, s0)) std::swap(s0, s1);
    if (lex_less(t1, t0)) std::swap(t0, t1);
    const Point& lo = lex_less(s0, t0) ? t0 : s0;
    const Point& hi = lex_less(s1, t1) ? s1 : t1;
    if (lex_less(hi, lo)) return std::monostate{};
    if (lo == hi) return lo;
    return Segment{lo, hi};
}

}  // namespace

SegmentIntersection segment_intersection(const Segment& s, const Segment& t) {
    int o1 = orient(s.a, s.b, t.a);
    int o2 = orient(s.a, s.b, t.b);
    int o3 = orient(t.a, t.b, s.a);
    int o4 = orient(t.a, t.b, s.b);

    if (o1 == 0 && o2 == 0) {
        // Degenerate (point) segments land here too and reduce correctly.
        if (s.a == s.b) return on_segment(t, s.a) ? SegmentIntersection(s.a) : SegmentIntersection(std::monostate{});
        if (t.a == t.b) return on_segment(s, t.a) ? SegmentIntersection(t.a) : SegmentIntersection(std::monostate{});
        return collinear_overlap(s, t);
    }

    if (o1 * o2 > 0 || o3 * o4 > 0) return std::monostate{};

    // Proper or endpoint-touching crossing: solve the 2x2 system exactly.
    // s.a + u*(s.b - s.a) = t.a + v*(t.b - t.a), u,v in [0,1] guaranteed by
    // the orientation tests above.
    Rational rx = s.b.x - s.a.x, ry = s.b.y - s.a.y;
    Rational qx = t.b.x - t.a.x, qy = t.b.y - t.a.y;
    Rational denom = rx * qy - ry * qx;
    if (denom.is_zero()) {
        // Parallel but not collinear with mixed zero orientations can only
        // mean an endpoint of one lies on the other's line without crossing.
        if (o1 == 0 && on_segment(s, t.a)) return t.a;
        if (o2 == 0 && on_segment(s, t.b)) return t.b;
        if (o3 == 0 && on_segment(t, s.a)) return s.a;
        if (o4 == 0 && on_segment(t, s.b)) return s.b;
        return std::monostate{};
    }
    Rational wx = t.a.x - s.a.x, wy = t.a.y - s.a.y;
    Rational u = (wx * qy - wy * qx) / denom;
    if (u < Rational(0) || u > Rational(1)) return std::monostate{};
    Rational v = (wx * ry - wy * rx) / denom;
    if (v < Rational(0) || v > Rational(1)) return std::monostate{};
    return Point{s.a.x + u * rx, s.a.y + u * ry};
}

Rational polygon_signed_area(std::span<const Point> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) return Rational(0);
    Rational twice(0);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % n];
        twice += p.x * q.y - q.x * p.y;
    }
    return twice / Rational(2);
}

}  // namespace windiso
