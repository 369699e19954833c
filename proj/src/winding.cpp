#include "windiso/winding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "windiso/errors.hpp"
#include "windiso/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace windiso {

namespace {

bool point_on_curve(const ClosedCurve& curve, const Point& p) {
    const auto& v = curve.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        // Cheap bounding-box reject before the exact collinearity test.
        if (p.x < min(a.x, b.x) || p.x > max(a.x, b.x)) continue;
        if (p.y < min(a.y, b.y) || p.y > max(a.y, b.y)) continue;
        if (orient(a, b, p) == 0) return true;
    }
    return false;
}

int crossing_sum_horizontal(const ClosedCurve& curve, const Point& p) {
    const auto& v = curve.vertices();
    const std::size_t n = v.size();
    int w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (a.y <= p.y && p.y < b.y) {
            if (orient(a, b, p) > 0) ++w;  // upward edge, crossing right of p
        } else if (b.y <= p.y && p.y < a.y) {
            if (orient(a, b, p) < 0) --w;  // downward edge, crossing right of p
        }
    }
    return w;
}

}  // namespace

std::optional<int> try_winding_at(const ClosedCurve& curve, const Point& point) {
    if (point_on_curve(curve, point)) return std::nullopt;
    return crossing_sum_horizontal(curve, point);
}

int winding_at(const ClosedCurve& curve, const Point& point) {
    auto w = try_winding_at(curve, point);
    if (!w) throw OnCurveError("winding_at: point lies on the curve image");
    return *w;
}

int winding_at_vertical(const ClosedCurve& curve, const Point& point) {
    if (point_on_curve(curve, point)) throw OnCurveError("winding_at_vertical: point on curve");
    const auto& v = curve.vertices();
    const std::size_t n = v.size();
    int w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (a.x <= point.x && point.x < b.x) {
            if (orient(a, b, point) < 0) --w;  // rightward edge, crossing above p
        } else if (b.x <= point.x && point.x < a.x) {
            if (orient(a, b, point) > 0) ++w;  // leftward edge, crossing above p
        }
    }
    return w;
}

namespace {

// One spanning edge of a slab, with its heights at the slab walls and the
// winding step applied when passing below it.
struct SpanBoundary {
    Rational yl;
    Rational yr;
    int step = 0;  // -1 for a rightward edge, +1 for leftward, 0 for box walls
};

Rational y_at(const Segment& s, const Rational& x) {
    return s.a.y + (s.b.y - s.a.y) * (x - s.a.x) / (s.b.x - s.a.x);
}

void append_corner(std::vector<Point>& poly, Point p) {
    if (!poly.empty() && poly.back() == p) return;
    poly.push_back(std::move(p));
}

std::vector<WindingCell> build_slab(const std::vector<Segment>& edges, const Rational& xl,
                                    const Rational& xr, const BBox& box) {
    std::vector<SpanBoundary> bounds;
    bounds.push_back(SpanBoundary{box.ymax, box.ymax, 0});
    for (const Segment& e : edges) {
        const Rational& exl = min(e.a.x, e.b.x);
        const Rational& exr = max(e.a.x, e.b.x);
        if (exl <= xl && xr <= exr && exl < exr)
            bounds.push_back(SpanBoundary{y_at(e, xl), y_at(e, xr), e.a.x < e.b.x ? -1 : 1});
    }
    bounds.push_back(SpanBoundary{box.ymin, box.ymin, 0});

    // Spanning edges cannot cross strictly inside a slab, so sorting by
    // height at the midpoint (equivalently by yl + yr) is a total order up to
    // full collinear overlaps, whose relative order does not matter.
    std::stable_sort(bounds.begin() + 1, bounds.end() - 1,
                     [](const SpanBoundary& a, const SpanBoundary& b) {
                         return a.yl + a.yr > b.yl + b.yr;
                     });

    std::vector<WindingCell> cells;
    int w = 0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const SpanBoundary& top = bounds[i];
        const SpanBoundary& bot = bounds[i + 1];
        Rational area = (xr - xl) * ((top.yl - bot.yl) + (top.yr - bot.yr)) / Rational(2);
        if (area.sign() > 0) {
            WindingCell cell;
            append_corner(cell.polygon, Point{xl, bot.yl});
            append_corner(cell.polygon, Point{xr, bot.yr});
            append_corner(cell.polygon, Point{xr, top.yr});
            append_corner(cell.polygon, Point{xl, top.yl});
            while (cell.polygon.size() > 1 && cell.polygon.back() == cell.polygon.front())
                cell.polygon.pop_back();
            cell.winding = w;
            cell.area = area;
            cells.push_back(std::move(cell));
        }
        w += bot.step;
    }
    return cells;
}

struct SlabPlan {
    std::vector<Segment> edges;
    std::vector<Rational> xs;  // sorted slab wall x-coordinates, deduped
    BBox box;
};

SlabPlan plan_slabs(const ClosedCurve& curve) {
    SlabPlan plan;
    plan.edges = curve.edges();
    plan.box = curve.bounding_box();

    std::vector<Rational>& xs = plan.xs;
    for (const Point& p : curve.vertices()) xs.push_back(p.x);
    const std::size_t n = plan.edges.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            SegmentIntersection isec = segment_intersection(plan.edges[i], plan.edges[j]);
            if (const Point* pt = std::get_if<Point>(&isec)) {
                xs.push_back(pt->x);
            } else if (const Segment* ov = std::get_if<Segment>(&isec)) {
                xs.push_back(ov->a.x);
                xs.push_back(ov->b.x);
            }
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return plan;
}

}  // namespace

WindingField winding_field_serial(const ClosedCurve& curve) {
    SlabPlan plan = plan_slabs(curve);
    WindingField field;
    field.bbox = plan.box;
    for (std::size_t i = 0; i + 1 < plan.xs.size(); ++i) {
        std::vector<WindingCell> cells = build_slab(plan.edges, plan.xs[i], plan.xs[i + 1], plan.box);
        for (auto& c : cells) field.cells.push_back(std::move(c));
    }
    return field;
}

WindingField winding_field(const ClosedCurve& curve) {
    SlabPlan plan = plan_slabs(curve);
    WindingField field;
    field.bbox = plan.box;
    if (plan.xs.size() < 2) return field;

    const std::size_t nslabs = plan.xs.size() - 1;
    std::vector<std::vector<WindingCell>> per_slab(nslabs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(nslabs); ++i)
        per_slab[i] = build_slab(plan.edges, plan.xs[i], plan.xs[i + 1], plan.box);

    for (auto& slab : per_slab)
        for (auto& c : slab) field.cells.push_back(std::move(c));
    return field;
}

Rational signed_measure(const WindingField& field) {
    Rational total(0);
    for (const WindingCell& c : field.cells) total += Rational(c.winding) * c.area;
    return total;
}

Rational abs_measure(const WindingField& field) {
    Rational total(0);
    for (const WindingCell& c : field.cells) total += Rational(std::abs(c.winding)) * c.area;
    return total;
}

LqNorm lq_norm(const WindingField& field, double q) {
    if (!(q >= 1.0)) throw std::domain_error("lq_norm: q must be >= 1");
    LqNorm out;
    out.q = q;
    if (q == 1.0) {
        out.power_sum = abs_measure(field).to_double();
        out.value = out.power_sum;
        return out;
    }
    double sum = 0.0;
    for (const WindingCell& c : field.cells) {
        if (c.winding == 0) continue;
        sum += std::pow(static_cast<double>(std::abs(c.winding)), q) * c.area.to_double();
    }
    out.power_sum = sum;
    out.value = std::pow(sum, 1.0 / q);
    return out;
}

LqEstimate lq_norm_grid_oracle(const ClosedCurve& curve, double q, std::size_t samples,
                               std::uint64_t seed) {
    if (!(q >= 1.0)) throw std::domain_error("lq_norm_grid_oracle: q must be >= 1");
    if (samples < 100) throw std::invalid_argument("lq_norm_grid_oracle: need >= 100 samples");
    BBox box = curve.bounding_box();
    Rational wx = box.xmax - box.xmin;
    Rational wy = box.ymax - box.ymin;
    if (wx.is_zero() || wy.is_zero()) return {0.0, 0.0};

    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        // Independent per-sample stream: resampling on-curve hits consumes
        // extra draws from this sample's stream only, so the estimate is
        // reproducible independent of evaluation order.
        SplitMix64 stream(seed ^ (0x9E3779B97F4A7C15ull * (i + 1)));
        double f = 0.0;
        bool accepted = false;
        for (int attempt = 0; attempt < 256 && !accepted; ++attempt) {
            std::uint64_t r = stream.next();
            Rational fx(static_cast<long>(r & 0xFFFF), 65536);
            Rational fy(static_cast<long>((r >> 16) & 0xFFFF), 65536);
            Point p{box.xmin + wx * fx, box.ymin + wy * fy};
            if (auto w = try_winding_at(curve, p)) {
                f = *w == 0 ? 0.0 : std::pow(static_cast<double>(std::abs(*w)), q);
                accepted = true;
            }
        }
        if (!accepted) throw std::logic_error("lq_norm_grid_oracle: sample stuck on curve image");
        sum += f;
        sum_sq += f * f;
    }

    const double s = static_cast<double>(samples);
    double mean = sum / s;
    double var = std::max(0.0, sum_sq / s - mean * mean) * (s / (s - 1.0));
    double box_area = wx.to_double() * wy.to_double();
    double integral = box_area * mean;
    double se_integral = box_area * std::sqrt(var / s);
    if (integral <= 0.0) return {0.0, se_integral};
    double value = std::pow(integral, 1.0 / q);
    // Delta method through x -> x^{1/q}.
    double se_value = value / (q * integral) * se_integral;
    return {value, se_value};
}

std::optional<ClosedCurve> collapse_to_curve(std::vector<Point> points) {
    std::vector<Point> out;
    for (Point& p : points) {
        if (!out.empty() && out.back() == p) continue;
        out.push_back(std::move(p));
    }
    while (out.size() > 1 && out.back() == out.front()) out.pop_back();
    if (out.size() < 3) return std::nullopt;
    return ClosedCurve(std::move(out));
}

}  // namespace windiso
