#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "windiso/curve.hpp"
#include "windiso/geom.hpp"

namespace windiso {

/// One stage of the point-removal cascade. The triangle is spanned by the
/// removed vertex and its two neighbors in the pre-removal reduced loop; the
/// difference between the fields before and after the removal is +-1 inside
/// that triangle and 0 elsewhere.
struct RemovalStep {
    std::size_t removed_index = 0;  // index into the pre-removal loop
    std::array<Point, 3> triangle;
    Rational area;              // |signed area| of the triangle, exact
    double local_pvar = 0.0;    // two-edge window variation at the removed vertex
    double lemma_bound = 0.0;   // local_pvar^2 / (2 * 2^(2/p)); area never exceeds it
    std::size_t points_before = 0;
};

struct BoundParams {
    double p = 1.0;
    double q = 1.0;

    /// Requires 1 <= p < 2 and 1 <= q < 2/p; throws std::domain_error.
    void validate() const;
};

/// Full audit trail of a reduction: exactly (initial vertex count - 2) steps,
/// ending at a loop with 2 distinct points whose winding field is zero.
/// points_before decreases by exactly 1 per step, from n down to 3.
struct ReductionCertificate {
    std::vector<RemovalStep> steps;
    double initial_pvar = 0.0;
    double p = 1.0;
    double q = 1.0;
};

struct InequalityReport {
    BoundParams params;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double telescoping_sum = 0.0;
    bool pass = false;
    ReductionCertificate certificate;
};

/// p-variation of the two-edge window around vertex j of the loop:
/// (max(|a|^p + |b|^p, |a+b|^p))^(1/p) with a, b the incoming and outgoing
/// edge vectors. j in [1, size): the basepoint 0 is never a window center.
double local_pvar_after_removal_window(const ClosedCurve& curve, std::size_t j, double p);

/// Argmin of the window variation over j in [1, size), ties to the smallest
/// index. Asserts the removability bound
///   window^p <= (2 / (size - 1)) * pvar(curve)^p
/// at the returned index and throws TheoremViolationError if it fails
/// (it never should; a throw is a bug, not an input condition).
std::size_t find_removal_point(const ClosedCurve& curve, double p);

/// Runs the cascade to the terminal 2-distinct-point loop, recording every
/// step. Each stage's removability is asserted against the original curve's
/// p-variation (reduced loops only ever have smaller variation, so the
/// stage-wise bound with the original value is the stronger check).
ReductionCertificate reduce(const ClosedCurve& curve, const BoundParams& params);

/// RHS of the main inequality: (1/2)^(1/q) * (zeta(2/(pq)) - 1) * pvar^(2/q).
double rhs_bound(const BoundParams& params, double pvar);

/// Builds the winding field, the certificate, and both sides of the bound.
/// lhs = L^q norm of the field; telescoping_sum = sum of step area^(1/q);
/// pass = (lhs <= rhs * (1 + 1e-9)).
InequalityReport check_inequality(const ClosedCurve& curve, const BoundParams& params);

namespace detail {

/// Window variation on a raw loop (basepoint at index 0, closing implicit).
/// Cascade states can hold consecutive duplicate points, which ClosedCurve
/// rejects, so the internals work on spans.
double window_pvar(std::span<const Point> loop, std::size_t j, double p);

/// Argmin window over j in [1, size) with the window value; no bound check.
struct WindowArgmin {
    std::size_t index;
    double value;
};
WindowArgmin min_window(std::span<const Point> loop, double p);

}  // namespace detail

}  // namespace windiso
