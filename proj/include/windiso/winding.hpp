#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "windiso/curve.hpp"
#include "windiso/geom.hpp"

namespace windiso {

/// One trapezoid of the slab decomposition. polygon lists 3 or 4 corners,
/// counterclockwise; area is its exact unsigned area.
struct WindingCell {
    std::vector<Point> polygon;
    int winding = 0;
    Rational area;
};

/// Piecewise-constant winding number over the curve's bounding box. Cells
/// have pairwise disjoint interiors and cover the box minus the curve image;
/// winding-0 cells are kept so areas total the box.
struct WindingField {
    std::vector<WindingCell> cells;
    BBox bbox;
};

/// Winding number via signed crossings of the horizontal ray from the point
/// toward +x. Half-open vertex rule: an edge counts iff exactly one endpoint
/// is strictly above the ray. All predicates exact. Throws OnCurveError when
/// the point lies on the curve image.
int winding_at(const ClosedCurve& curve, const Point& point);

/// Same, but nullopt instead of a throw for on-curve points.
std::optional<int> try_winding_at(const ClosedCurve& curve, const Point& point);

/// Same winding number from a vertical ray toward +y. Exists to cross-check
/// ray-direction invariance; not used by the field builder.
int winding_at_vertical(const ClosedCurve& curve, const Point& point);

/// Slab decomposition of the curve's self-intersection arrangement. Slab
/// boundaries are the x-coordinates of vertices and pairwise edge
/// intersections; inside a slab the spanning edges are totally ordered by
/// height and consecutive pairs bound trapezoid cells. Zero-area cells are
/// dropped. Deterministic; the parallel builder returns bit-identical cells.
WindingField winding_field(const ClosedCurve& curve);
WindingField winding_field_serial(const ClosedCurve& curve);

/// Exact total signed measure: sum of winding * area over cells. Equals the
/// curve's shoelace signed area.
Rational signed_measure(const WindingField& field);

/// Exact total |winding| * area (the q = 1 integral).
Rational abs_measure(const WindingField& field);

struct LqNorm {
    double q = 1.0;
    double value = 0.0;
    double power_sum = 0.0;  // sum of |winding|^q * area before the 1/q root
};

/// (sum |winding|^q * area)^(1/q). Areas exact; the power and accumulation
/// are double, summed in cell order. The q = 1 path sums exactly and
/// converts once.
LqNorm lq_norm(const WindingField& field, double q);

/// Monte Carlo estimate of lq_norm directly from point queries, bypassing
/// the field builder. Uniform samples on a 2^16 x 2^16 grid over the
/// bounding box; on-curve hits are resampled from the same per-sample
/// stream. Returns the estimate and its delta-method standard error.
/// Deterministic for a fixed seed, independent of thread count.
struct LqEstimate {
    double value = 0.0;
    double stderr_value = 0.0;
};
LqEstimate lq_norm_grid_oracle(const ClosedCurve& curve, double q, std::size_t samples,
                               std::uint64_t seed);

/// Collapse consecutive duplicate points (wrap included); nullopt when fewer
/// than 3 distinct vertices remain, whose winding field is identically zero.
std::optional<ClosedCurve> collapse_to_curve(std::vector<Point> points);

}  // namespace windiso
