#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "test_support.hpp"
#include "windiso/curve.hpp"
#include "windiso/errors.hpp"
#include "windiso/families.hpp"
#include "windiso/io.hpp"

using namespace windiso;
namespace ts = windiso::testsupport;

namespace {

FamilySpec spec_of(Family f, std::size_t n, std::uint64_t seed = 0) {
    FamilySpec s;
    s.family = f;
    s.n = n;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("family names round-trip") {
    for (Family f : {Family::regular_polygon, Family::closed_random_walk, Family::star_polygon,
                     Family::figure_eight, Family::perturbed_polygon}) {
        CHECK(family_from_name(family_name(f)) == f);
    }
    CHECK(family_from_name("star-polygon") == Family::star_polygon);
    CHECK(family_from_name("star") == Family::star_polygon);
    CHECK(family_from_name("walk") == Family::closed_random_walk);
    CHECK_FALSE(family_from_name("pentagram").has_value());
}

TEST_CASE("generation is deterministic") {
    for (Family f : {Family::closed_random_walk, Family::perturbed_polygon}) {
        FamilySpec s = spec_of(f, 12, 99);
        CHECK(generate(s).vertices() == generate(s).vertices());
    }
}

TEST_CASE("walk matches the golden vertex list") {
    ClosedCurve c = generate(spec_of(Family::closed_random_walk, 10, 42));
    ClosedCurve golden = curve_from_json(read_file(std::string(GOLDEN_DIR) + "/walk_n10_seed42.json"));
    CHECK(c.vertices() == golden.vertices());
}

TEST_CASE("regular polygon exact vertices at n = 4") {
    ClosedCurve c = generate(spec_of(Family::regular_polygon, 4));
    REQUIRE(c.size() == 4);
    CHECK(c.vertices()[0] == (Point{Rational(1), Rational(0)}));
    CHECK(c.vertices()[1] == (Point{Rational(0), Rational(1)}));
    CHECK(c.vertices()[2] == (Point{Rational(-1), Rational(0)}));
    CHECK(c.vertices()[3] == (Point{Rational(0), Rational(-1)}));
    CHECK(c.signed_area() == Rational(2));
}

TEST_CASE("star stride selection") {
    CHECK(star_step_for(8, 0) == 3);
    CHECK(star_step_for(16, 0) == 7);
    CHECK(star_step_for(32, 0) == 15);
    CHECK(star_step_for(64, 0) == 31);
    CHECK(star_step_for(5, 0) == 2);
    CHECK(star_step_for(7, 2) == 2);
    // Even strides share a factor with even n.
    FamilySpec bad = spec_of(Family::star_polygon, 4);
    bad.step = 2;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("star visits every vertex once in stride order") {
    FamilySpec s = spec_of(Family::star_polygon, 8);
    ClosedCurve star = generate(s);
    ClosedCurve ring = generate(spec_of(Family::regular_polygon, 8));
    REQUIRE(star.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(star.vertices()[i] == ring.vertices()[(3 * i) % 8]);
    }
}

TEST_CASE("figure eight is the fixed bowtie") {
    ClosedCurve c = generate(spec_of(Family::figure_eight, 99, 7));
    REQUIRE(c.size() == 4);
    CHECK(c.signed_area() == Rational(0));
    FamilySpec scaled = spec_of(Family::figure_eight, 4);
    scaled.scale = Rational(3);
    CHECK(generate(scaled).bounding_box().xmax == Rational(3));
}

TEST_CASE("perturbed polygon stays near the ring") {
    ClosedCurve base = generate(spec_of(Family::regular_polygon, 12));
    ClosedCurve pert = generate(spec_of(Family::perturbed_polygon, 12, 5));
    REQUIRE(pert.size() == 12);
    bool moved = false;
    Rational radius(1, 32);
    for (std::size_t i = 0; i < 12; ++i) {
        Rational dx = (pert.vertices()[i].x - base.vertices()[i].x).abs();
        Rational dy = (pert.vertices()[i].y - base.vertices()[i].y).abs();
        CHECK(dx <= radius);
        CHECK(dy <= radius);
        if (!dx.is_zero() || !dy.is_zero()) moved = true;
    }
    CHECK(moved);
}

TEST_CASE("walk coordinates live on the 1/65536 grid") {
    ClosedCurve c = generate(spec_of(Family::closed_random_walk, 20, 123));
    for (const Point& p : c.vertices()) {
        CHECK((Rational(65536) * p.x).denominator() == 1);
        CHECK((Rational(65536) * p.y).denominator() == 1);
    }
}

TEST_CASE("generation argument errors") {
    CHECK_THROWS_AS(generate(spec_of(Family::closed_random_walk, 2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(generate(spec_of(Family::regular_polygon, 2)), std::invalid_argument);
    CHECK_THROWS_AS(generate(spec_of(Family::regular_polygon, 65)), std::invalid_argument);
    CHECK_THROWS_AS(generate(spec_of(Family::perturbed_polygon, 65, 1)), std::invalid_argument);
    FamilySpec zero = spec_of(Family::regular_polygon, 8);
    zero.scale = Rational(0);
    CHECK_THROWS_AS(generate(zero), std::invalid_argument);
}

TEST_CASE("sweep basics") {
    SweepConfig empty;
    empty.p_grid = {1.0};
    CHECK(sweep(empty).empty());

    SweepConfig one;
    one.families.push_back(spec_of(Family::regular_polygon, 4));
    one.p_grid = {1.0};
    one.q_count = 1;
    auto rows = sweep(one);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].report.pass);
    CHECK(rows[0].report.params.p == 1.0);
    CHECK(rows[0].report.params.q == 1.0);
    CHECK(rows[0].spec.n == 4);
}

TEST_CASE("sweep row ordering is family-major then p then q") {
    SweepConfig cfg;
    cfg.families.push_back(spec_of(Family::regular_polygon, 4));
    cfg.families.push_back(spec_of(Family::figure_eight, 4));
    cfg.p_grid = {1.0, 1.5};
    cfg.q_count = 2;
    auto rows = sweep(cfg);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].spec.family == Family::regular_polygon);
    CHECK(rows[3].spec.family == Family::regular_polygon);
    CHECK(rows[4].spec.family == Family::figure_eight);
    CHECK(rows[0].report.params.p == 1.0);
    CHECK(rows[2].report.params.p == 1.5);
    CHECK(rows[0].report.params.q == 1.0);
    CHECK(rows[1].report.params.q > 1.0);
    // q grids end below 2/p by the guard.
    CHECK(rows[1].report.params.q <= 2.0 / 1.0 - 0.05 + 1e-12);
    CHECK(rows[3].report.params.q <= 2.0 / 1.5 - 0.05 + 1e-12);
}

TEST_CASE("sweep flags artificial violations") {
    SweepConfig cfg;
    cfg.families.push_back(spec_of(Family::star_polygon, 8));
    cfg.p_grid = {1.0};
    cfg.q_count = 2;
    // Any positive norm beats a near-zero rhs, whatever the true margin.
    auto rows = sweep(cfg, 1e-9);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) CHECK_FALSE(row.report.pass);
}

TEST_CASE("sweep output is independent of thread count") {
    SweepConfig cfg;
    cfg.families.push_back(spec_of(Family::closed_random_walk, 10, 3));
    cfg.families.push_back(spec_of(Family::star_polygon, 8));
    cfg.families.push_back(spec_of(Family::perturbed_polygon, 8, 9));
    cfg.p_grid = {1.0, 1.5};
    cfg.q_count = 2;
    std::string csv1 = sweep_csv(sweep(cfg, 1.0, 1));
    std::string csv4 = sweep_csv(sweep(cfg, 1.0, 4));
    CHECK(csv1 == csv4);
}

TEST_CASE("sweep validates its grids") {
    SweepConfig cfg;
    cfg.families.push_back(spec_of(Family::regular_polygon, 4));
    cfg.p_grid = {2.0};
    CHECK_THROWS_AS(sweep(cfg), std::domain_error);
    cfg.p_grid = {1.0};
    cfg.q_count = 0;
    CHECK_THROWS_AS(sweep(cfg), std::invalid_argument);
}

TEST_CASE("acceptance corpus shape") {
    SweepConfig cfg = acceptance_config();
    REQUIRE(cfg.families.size() == 20);
    CHECK(cfg.p_grid == std::vector<double>{1.0, 1.25, 1.5, 1.75, 1.9});
    CHECK(cfg.q_count == 4);
    CHECK(cfg.guard == 0.05);
    // Family-major ordering with n in {8, 16, 32, 64} inside each family.
    CHECK(cfg.families[0].family == Family::regular_polygon);
    CHECK(cfg.families[0].n == 8);
    CHECK(cfg.families[3].n == 64);
    CHECK(cfg.families[4].family == Family::closed_random_walk);
    CHECK(cfg.families[4].seed == 1008);
    CHECK(cfg.families[19].family == Family::perturbed_polygon);
    CHECK(cfg.families[19].seed == 2064);
}
