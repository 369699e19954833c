#include "windiso/families.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "windiso/errors.hpp"
#include "windiso/polygon_table.hpp"
#include "windiso/rng.hpp"
#include "windiso/winding.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace windiso {

const char* family_name(Family f) {
    switch (f) {
        case Family::regular_polygon: return "regular_polygon";
        case Family::closed_random_walk: return "closed_random_walk";
        case Family::star_polygon: return "star_polygon";
        case Family::figure_eight: return "figure_eight";
        case Family::perturbed_polygon: return "perturbed_polygon";
    }
    return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
    std::string flat;
    for (char c : name) flat.push_back(c == '-' ? '_' : c);
    if (flat == "regular_polygon" || flat == "regular") return Family::regular_polygon;
    if (flat == "closed_random_walk" || flat == "walk") return Family::closed_random_walk;
    if (flat == "star_polygon" || flat == "star") return Family::star_polygon;
    if (flat == "figure_eight" || flat == "eight" || flat == "bowtie") return Family::figure_eight;
    if (flat == "perturbed_polygon" || flat == "perturbed") return Family::perturbed_polygon;
    return std::nullopt;
}

std::size_t star_step_for(std::size_t n, std::size_t step) {
    if (step != 0) return step;
    for (std::size_t k = n / 2; k >= 1; --k)
        if (std::gcd(n, k) == 1) return k;
    return 1;
}

namespace {

constexpr long kTableDenom = 1 << 20;

void check_table_n(std::size_t n) {
    if (n < detail::kPolygonTableMinN || n > detail::kPolygonTableMaxN)
        throw std::invalid_argument("generate: n must be in [3, 64] for table-backed families");
}

ClosedCurve make_regular(const FamilySpec& spec) {
    check_table_n(spec.n);
    auto row = detail::regular_polygon_row(static_cast<int>(spec.n));
    std::vector<Point> pts;
    pts.reserve(spec.n);
    for (const auto& v : row)
        pts.push_back(Point{Rational(v.cx, kTableDenom) * spec.scale,
                            Rational(v.sy, kTableDenom) * spec.scale});
    return ClosedCurve(std::move(pts));
}

ClosedCurve make_star(const FamilySpec& spec) {
    check_table_n(spec.n);
    std::size_t step = star_step_for(spec.n, spec.step);
    if (std::gcd(spec.n, step) != 1)
        throw std::invalid_argument("generate: star requires gcd(n, step) = 1");
    auto row = detail::regular_polygon_row(static_cast<int>(spec.n));
    std::vector<Point> pts;
    pts.reserve(spec.n);
    for (std::size_t k = 0; k < spec.n; ++k) {
        const auto& v = row[(k * step) % spec.n];
        pts.push_back(Point{Rational(v.cx, kTableDenom) * spec.scale,
                            Rational(v.sy, kTableDenom) * spec.scale});
    }
    return ClosedCurve(std::move(pts));
}

ClosedCurve make_figure_eight(const FamilySpec& spec) {
    const Rational& s = spec.scale;
    std::vector<Point> pts = {
        Point{Rational(0), Rational(0)},
        Point{s, s},
        Point{s, Rational(0)},
        Point{Rational(0), s},
    };
    return ClosedCurve(std::move(pts));
}

ClosedCurve make_walk(const FamilySpec& spec) {
    if (spec.n < 3) throw std::invalid_argument("generate: walk needs n >= 3");
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        SplitMix64 rng(spec.seed + attempt);
        std::vector<Point> pts;
        pts.reserve(spec.n);
        long ix = 0, iy = 0;
        pts.push_back(Point{Rational(0), Rational(0)});
        for (std::size_t k = 1; k < spec.n; ++k) {
            std::uint64_t r = rng.next();
            ix += static_cast<long>(r & 0xFFFF) - 32768;
            iy += static_cast<long>((r >> 16) & 0xFFFF) - 32768;
            pts.push_back(Point{Rational(ix, 65536) * spec.scale,
                                Rational(iy, 65536) * spec.scale});
        }
        if (auto curve = collapse_to_curve(std::move(pts))) return *std::move(curve);
    }
    throw DegenerateCurveError("generate: walk degenerate after 16 attempts");
}

ClosedCurve make_perturbed(const FamilySpec& spec) {
    check_table_n(spec.n);
    auto row = detail::regular_polygon_row(static_cast<int>(spec.n));
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        SplitMix64 rng(spec.seed + attempt);
        std::vector<Point> pts;
        pts.reserve(spec.n);
        for (const auto& v : row) {
            std::uint64_t r = rng.next();
            long dx = static_cast<long>(r & 0xFFFF) - 32768;
            long dy = static_cast<long>((r >> 16) & 0xFFFF) - 32768;
            pts.push_back(Point{Rational(v.cx + dx, kTableDenom) * spec.scale,
                                Rational(v.sy + dy, kTableDenom) * spec.scale});
        }
        if (auto curve = collapse_to_curve(std::move(pts))) return *std::move(curve);
    }
    throw DegenerateCurveError("generate: perturbed polygon degenerate after 16 attempts");
}

}  // namespace

ClosedCurve generate(const FamilySpec& spec) {
    if (spec.scale.is_zero()) throw std::invalid_argument("generate: scale must be nonzero");
    switch (spec.family) {
        case Family::regular_polygon: return make_regular(spec);
        case Family::closed_random_walk: return make_walk(spec);
        case Family::star_polygon: return make_star(spec);
        case Family::figure_eight: return make_figure_eight(spec);
        case Family::perturbed_polygon: return make_perturbed(spec);
    }
    throw std::invalid_argument("generate: unknown family");
}

namespace {

std::vector<double> q_grid_for(double p, std::size_t q_count, double guard) {
    double q_max = 2.0 / p - guard;
    if (!(q_max >= 1.0))
        throw std::domain_error("sweep: q grid empty, p too close to 2 for the guard");
    std::vector<double> qs;
    qs.reserve(q_count);
    if (q_count == 1) {
        qs.push_back(1.0);
        return qs;
    }
    for (std::size_t i = 0; i < q_count; ++i)
        qs.push_back(1.0 + (q_max - 1.0) * static_cast<double>(i) /
                               static_cast<double>(q_count - 1));
    return qs;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepConfig& config, double rhs_scale, int threads) {
    if (config.q_count < 1) throw std::invalid_argument("sweep: q_count must be >= 1");
    for (double p : config.p_grid)
        if (!(p >= 1.0 && p < 2.0)) throw std::domain_error("sweep: p grid values must be in [1,2)");
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif

    const std::size_t n_curves = config.families.size();
    std::vector<std::vector<SweepRow>> per_curve(n_curves);
    std::vector<std::exception_ptr> failures(n_curves);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long ci = 0; ci < static_cast<long long>(n_curves); ++ci) {
        try {
            const FamilySpec& spec = config.families[ci];
            ClosedCurve curve = generate(spec);
            WindingField field = winding_field(curve);
            for (double p : config.p_grid) {
                ReductionCertificate cert = reduce(curve, BoundParams{p, 1.0});
                for (double q : q_grid_for(p, config.q_count, config.guard)) {
                    BoundParams params{p, q};
                    InequalityReport rep;
                    rep.params = params;
                    rep.certificate = cert;
                    rep.certificate.q = q;
                    rep.lhs = lq_norm(field, q).value;
                    rep.rhs = rhs_bound(params, cert.initial_pvar) * rhs_scale;
                    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs
                                              : std::numeric_limits<double>::infinity();
                    double tele = 0.0;
                    for (const RemovalStep& s : cert.steps)
                        tele += std::pow(s.area.to_double(), 1.0 / q);
                    rep.telescoping_sum = tele;
                    rep.pass = rep.lhs <= rep.rhs * (1.0 + 1e-9);
                    per_curve[ci].push_back(SweepRow{spec, std::move(rep)});
                }
            }
        } catch (...) {
            failures[ci] = std::current_exception();
        }
    }

    for (std::size_t ci = 0; ci < n_curves; ++ci)
        if (failures[ci]) std::rethrow_exception(failures[ci]);

    std::vector<SweepRow> rows;
    for (auto& group : per_curve)
        for (auto& row : group) rows.push_back(std::move(row));
    return rows;
}

SweepConfig acceptance_config() {
    SweepConfig cfg;
    cfg.p_grid = {1.0, 1.25, 1.5, 1.75, 1.9};
    cfg.q_count = 4;
    cfg.guard = 0.05;
    const std::size_t sizes[] = {8, 16, 32, 64};
    for (Family fam : {Family::regular_polygon, Family::closed_random_walk, Family::star_polygon,
                       Family::figure_eight, Family::perturbed_polygon}) {
        for (std::size_t n : sizes) {
            FamilySpec spec;
            spec.family = fam;
            spec.n = n;
            if (fam == Family::closed_random_walk) spec.seed = 1000 + n;
            if (fam == Family::perturbed_polygon) spec.seed = 2000 + n;
            cfg.families.push_back(spec);
        }
    }
    return cfg;
}

}  // namespace windiso
