#include "windiso/young.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "windiso/errors.hpp"
#include "windiso/winding.hpp"
#include "windiso/zeta.hpp"

namespace windiso {

void BoundParams::validate() const {
    if (!(p >= 1.0 && p < 2.0)) throw std::domain_error("BoundParams: p must be in [1,2)");
    if (!(q >= 1.0)) throw std::domain_error("BoundParams: q must be >= 1");
    if (!(q < 2.0 / p)) throw std::domain_error("BoundParams: q must be < 2/p");
}

namespace detail {

double window_pvar(std::span<const Point> loop, std::size_t j, double p) {
    const std::size_t m = loop.size();
    if (j == 0 || j >= m) throw std::invalid_argument("window_pvar: j must be interior");
    const Point& prev = loop[j - 1];
    const Point& mid = loop[j];
    const Point& next = loop[(j + 1) % m];
    double a = dist2(prev, mid).to_double();
    double b = dist2(mid, next).to_double();
    double chord = dist2(prev, next).to_double();
    double half_p = p * 0.5;
    double two_edges = std::pow(a, half_p) + std::pow(b, half_p);
    double wp = std::max(two_edges, std::pow(chord, half_p));
    return std::pow(wp, 1.0 / p);
}

WindowArgmin min_window(std::span<const Point> loop, double p) {
    WindowArgmin best{1, window_pvar(loop, 1, p)};
    for (std::size_t j = 2; j < loop.size(); ++j) {
        double w = window_pvar(loop, j, p);
        if (w < best.value) best = WindowArgmin{j, w};
    }
    return best;
}

}  // namespace detail

double local_pvar_after_removal_window(const ClosedCurve& curve, std::size_t j, double p) {
    return detail::window_pvar(curve.vertices(), j, p);
}

namespace {

// Slack for assertions on quantities that are exact up to floating powers.
constexpr double kNeverFire = 1.0 + 1e-12;

void assert_removable(double window, double pvar_pow_p, std::size_t m, double p,
                      const char* where) {
    double bound = (2.0 / static_cast<double>(m - 1)) * pvar_pow_p;
    if (std::pow(window, p) > bound * kNeverFire)
        throw TheoremViolationError(std::string(where) +
                                    ": no removable point within the stage bound (window " +
                                    std::to_string(window) + ", points " + std::to_string(m) + ")");
}

}  // namespace

std::size_t find_removal_point(const ClosedCurve& curve, double p) {
    if (curve.size() < 4)
        throw std::invalid_argument("find_removal_point: need at least 4 vertices");
    detail::WindowArgmin best = detail::min_window(curve.vertices(), p);
    assert_removable(best.value, p_variation_pow(curve, p), curve.size(), p, "find_removal_point");
    return best.index;
}

ReductionCertificate reduce(const ClosedCurve& curve, const BoundParams& params) {
    params.validate();
    ReductionCertificate cert;
    cert.p = params.p;
    cert.q = params.q;
    cert.initial_pvar = p_variation(curve, params.p);
    const double initial_pow_p = std::pow(cert.initial_pvar, params.p);
    const double lemma_denom = 2.0 * std::pow(2.0, 2.0 / params.p);

    std::vector<Point> loop = curve.vertices();
    cert.steps.reserve(loop.size() - 2);
    while (loop.size() >= 3) {
        const std::size_t m = loop.size();
        detail::WindowArgmin best = detail::min_window(loop, params.p);
        assert_removable(best.value, initial_pow_p, m, params.p, "reduce");

        RemovalStep step;
        step.removed_index = best.index;
        step.triangle = {loop[best.index - 1], loop[best.index], loop[(best.index + 1) % m]};
        step.area = polygon_signed_area(step.triangle).abs();
        step.local_pvar = best.value;
        step.lemma_bound = best.value * best.value / lemma_denom;
        step.points_before = m;
        if (step.area.to_double() > step.lemma_bound * kNeverFire)
            throw TheoremViolationError("reduce: triangle area exceeds the window bound");
        cert.steps.push_back(std::move(step));

        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(best.index));
    }
    return cert;
}

double rhs_bound(const BoundParams& params, double pvar) {
    params.validate();
    if (!(pvar >= 0.0)) throw std::domain_error("rhs_bound: pvar must be >= 0");
    double s = 2.0 / (params.p * params.q);
    double zeta_term = zeta(s).value - 1.0;
    return std::pow(0.5, 1.0 / params.q) * zeta_term * std::pow(pvar, 2.0 / params.q);
}

InequalityReport check_inequality(const ClosedCurve& curve, const BoundParams& params) {
    InequalityReport report;
    report.params = params;
    report.certificate = reduce(curve, params);
    report.lhs = lq_norm(winding_field(curve), params.q).value;
    report.rhs = rhs_bound(params, report.certificate.initial_pvar);
    report.ratio = report.rhs > 0.0 ? report.lhs / report.rhs
                                    : std::numeric_limits<double>::infinity();
    double tele = 0.0;
    for (const RemovalStep& step : report.certificate.steps)
        tele += std::pow(step.area.to_double(), 1.0 / params.q);
    report.telescoping_sum = tele;
    report.pass = report.lhs <= report.rhs * (1.0 + 1e-9);
    return report;
}

}  // namespace windiso
