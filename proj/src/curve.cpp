#include "windiso/curve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace windiso {

ClosedCurve::ClosedCurve(std::vector<Point> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3)
        throw DegenerateCurveError("ClosedCurve: need at least 3 vertices, got " +
                                   std::to_string(verts_.size()));
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i] == verts_[(i + 1) % verts_.size()])
            throw DegenerateCurveError("ClosedCurve: zero-length edge at vertex " + std::to_string(i));
    }
}

std::vector<Segment> ClosedCurve::edges() const {
    std::vector<Segment> out;
    out.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i)
        out.push_back(Segment{verts_[i], verts_[(i + 1) % verts_.size()]});
    return out;
}

BBox ClosedCurve::bounding_box() const {
    BBox b{verts_[0].x, verts_[0].x, verts_[0].y, verts_[0].y};
    for (const Point& p : verts_) {
        b.xmin = min(b.xmin, p.x);
        b.xmax = max(b.xmax, p.x);
        b.ymin = min(b.ymin, p.y);
        b.ymax = max(b.ymax, p.y);
    }
    return b;
}

ClosedCurve ClosedCurve::reversed() const {
    std::vector<Point> out;
    out.reserve(verts_.size());
    out.push_back(verts_[0]);
    for (std::size_t i = verts_.size(); i-- > 1;) out.push_back(verts_[i]);
    return ClosedCurve(std::move(out));
}

ClosedCurve ClosedCurve::scaled(const Rational& s) const {
    if (s.is_zero()) throw std::domain_error("ClosedCurve::scaled: zero factor");
    std::vector<Point> out;
    out.reserve(verts_.size());
    for (const Point& p : verts_) out.push_back(Point{p.x * s, p.y * s});
    return ClosedCurve(std::move(out));
}

ClosedCurve ClosedCurve::translated(const Rational& dx, const Rational& dy) const {
    std::vector<Point> out;
    out.reserve(verts_.size());
    for (const Point& p : verts_) out.push_back(Point{p.x + dx, p.y + dy});
    return ClosedCurve(std::move(out));
}

namespace {

void validate_partition(const ClosedCurve& curve, const Partition& partition) {
    const auto& idx = partition.indices;
    if (idx.size() < 2 || idx.front() != 0 || idx.back() != curve.size())
        throw std::invalid_argument("Partition: must run from 0 to the closing index");
    for (std::size_t k = 1; k < idx.size(); ++k)
        if (idx[k] <= idx[k - 1]) throw std::invalid_argument("Partition: indices must strictly increase");
}

}  // namespace

ClosedCurve interpolate(const ClosedCurve& curve, const Partition& partition) {
    validate_partition(curve, partition);
    std::vector<Point> out;
    for (std::size_t idx : partition.indices) {
        if (idx == curve.size()) break;  // closing copy adds nothing
        const Point& p = curve.vertex(idx);
        if (!out.empty() && out.back() == p) continue;
        out.push_back(p);
    }
    while (out.size() > 1 && out.back() == out.front()) out.pop_back();
    if (out.size() < 3)
        throw DegenerateCurveError("interpolate: fewer than 3 distinct vertices remain");
    return ClosedCurve(std::move(out));
}

double p_variation_pow(const ClosedCurve& curve, double p, Interval interval) {
    if (!(p >= 1.0 && p <= 2.0)) throw std::domain_error("p_variation: p must be in [1,2]");
    if (interval.lo >= interval.hi || interval.hi > curve.size())
        throw std::invalid_argument("p_variation: bad interval");

    const std::size_t lo = interval.lo, hi = interval.hi, m = hi - lo;
    // Chord weight between unrolled indices, evaluated once; both the DP and
    // brute-force cross-checks consume exactly these doubles.
    auto weight = [&](std::size_t i, std::size_t j) {
        return std::pow(dist2(curve.vertex(i), curve.vertex(j)).to_double(), p * 0.5);
    };

    std::vector<double> best(m + 1, -std::numeric_limits<double>::infinity());
    best[0] = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            double cand = best[i] + weight(lo + i, lo + j);
            if (cand > best[j]) best[j] = cand;
        }
    }
    return best[m];
}

double p_variation_pow(const ClosedCurve& curve, double p) {
    return p_variation_pow(curve, p, Interval{0, curve.size()});
}

double p_variation(const ClosedCurve& curve, double p, Interval interval) {
    return std::pow(p_variation_pow(curve, p, interval), 1.0 / p);
}

double p_variation(const ClosedCurve& curve, double p) {
    return p_variation(curve, p, Interval{0, curve.size()});
}

ClosedCurve concat(const ClosedCurve& c1, const ClosedCurve& c2) {
    Rational dx = c1.vertices()[0].x - c2.vertices()[0].x;
    Rational dy = c1.vertices()[0].y - c2.vertices()[0].y;
    std::vector<Point> out = c1.vertices();
    out.reserve(c1.size() + c2.size());
    for (const Point& p : c2.vertices()) out.push_back(Point{p.x + dx, p.y + dy});
    return ClosedCurve(std::move(out));
}

Partition uniform_partition(std::size_t n, const ClosedCurve& curve) {
    if (n < 2) throw std::invalid_argument("uniform_partition: n must be >= 2");
    const std::size_t N = curve.size();
    Partition part;
    for (std::size_t i = 0; i <= n; ++i) {
        // Nearest vertex to parameter i/n, ties toward the lower index:
        // ceil(i*N/n - 1/2) computed in integers.
        std::size_t idx = (2 * i * N + n - 1) / (2 * n);
        if (part.indices.empty() || part.indices.back() != idx) part.indices.push_back(idx);
    }
    return part;
}

}  // namespace windiso
