#pragma once

#include <cstddef>
#include <vector>

#include "windiso/errors.hpp"
#include "windiso/geom.hpp"

namespace windiso {

struct BBox {
    Rational xmin, xmax, ymin, ymax;
};

/// Closed polygonal loop. The edge from the last vertex back to the first is
/// implicit. Zero-length edges are rejected, including the closing one.
/// Conceptually parameterized over [0,1] with vertex i at parameter i/n.
class ClosedCurve {
public:
    explicit ClosedCurve(std::vector<Point> vertices);

    std::size_t size() const { return verts_.size(); }
    const std::vector<Point>& vertices() const { return verts_; }

    /// i in [0, size()]; index size() is the closing copy of vertex 0.
    const Point& vertex(std::size_t i) const { return verts_[i == verts_.size() ? 0 : i]; }

    std::vector<Segment> edges() const;
    Rational signed_area() const { return polygon_signed_area(verts_); }
    BBox bounding_box() const;

    ClosedCurve reversed() const;
    ClosedCurve scaled(const Rational& s) const;  // about the origin, s != 0
    ClosedCurve translated(const Rational& dx, const Rational& dy) const;

private:
    std::vector<Point> verts_;
};

/// Strictly increasing vertex indices into a ClosedCurve, starting at 0 and
/// ending at the closing index (= curve.size()).
struct Partition {
    std::vector<std::size_t> indices;
};

/// Unrolled vertex index range, 0 <= lo < hi <= curve.size().
struct Interval {
    std::size_t lo;
    std::size_t hi;
};

/// Vertex subsampling: keeps exactly the partition's vertices in order
/// (the closing index contributes nothing new), collapsing consecutive
/// duplicate points. Throws DegenerateCurveError when fewer than 3 distinct
/// vertices remain; callers treat that curve's winding field as zero.
ClosedCurve interpolate(const ClosedCurve& curve, const Partition& partition);

/// sup over vertex subsets S of the interval containing both endpoints of
/// (sum over consecutive pairs in S of |chord|^p)^(1/p), via O(n^2) DP.
/// p in [1,2]; the main bound needs p < 2 but the variation itself is well
/// defined at 2. Chord weights are pow(exact squared length, p/2); the DP
/// and any brute-force enumeration of the same weights agree bit-for-bit
/// because double addition and max are monotone.
double p_variation(const ClosedCurve& curve, double p, Interval interval);
double p_variation(const ClosedCurve& curve, double p);  // whole curve: [0, size()]

/// Same maximum before the final 1/p root, i.e. the p-th power of p_variation.
double p_variation_pow(const ClosedCurve& curve, double p, Interval interval);
double p_variation_pow(const ClosedCurve& curve, double p);

/// Loop concatenation: c2 is translated so its start coincides with c1's
/// start, and the vertex sequences are joined. Winding numbers add pointwise
/// off both images.
ClosedCurve concat(const ClosedCurve& c1, const ClosedCurve& c2);

/// Parameters i/n for i = 0..n rounded to the curve's vertex grid (ties
/// toward the lower index), duplicates removed. n >= 2.
Partition uniform_partition(std::size_t n, const ClosedCurve& curve);

}  // namespace windiso
