#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "windiso/zeta.hpp"

using namespace windiso;

TEST_CASE("zeta hits the classical closed forms") {
    const double pi = 3.14159265358979323846;
    CHECK(std::abs(zeta(2.0).value - pi * pi / 6.0) < 1e-12);
    CHECK(std::abs(zeta(4.0).value - pi * pi * pi * pi / 90.0) < 1e-12);
    CHECK(std::abs(zeta(3.0).value - 1.2020569031595942854) < 1e-12);
}

TEST_CASE("zeta near the left end of the working range") {
    // 4/3 is the exponent 2/(p*q) at p = 1.5, q = 1: deep in the slow zone.
    CHECK(std::abs(zeta(4.0 / 3.0).value - 3.6009377504588624213) < 1e-10);
    CHECK(std::abs(zeta(1.01).value - 100.57794333849687249) < 1e-8);
}

TEST_CASE("zeta rejects the pole neighborhood") {
    CHECK_THROWS_AS(zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(zeta(1.0000005), std::domain_error);
    CHECK_THROWS_AS(zeta(0.5), std::domain_error);
    CHECK_NOTHROW(zeta(1.000002));
}

TEST_CASE("zeta reports a tight error bound and sane values") {
    for (double s = 1.05; s < 12.0; s += 0.35) {
        ZetaResult r = zeta(s);
        CHECK(r.s == s);
        CHECK(r.abs_error_bound <= 1e-12);
        // zeta(s) > 1 + 2^-s term by term.
        CHECK(r.value > 1.0 + std::pow(2.0, -s));
    }
}

TEST_CASE("zeta decreases strictly on a grid") {
    double prev = zeta(1.01).value;
    for (int i = 1; i < 50; ++i) {
        double s = 1.01 + (10.0 - 1.01) * i / 49.0;
        double v = zeta(s).value;
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("partial sums bracket zeta") {
    for (double s : {1.2, 1.5, 2.0, 3.7}) {
        const long N = 1000;
        double partial = 0.0;
        for (long n = 1; n <= N; ++n) partial += std::pow(static_cast<double>(n), -s);
        double tail_cap = std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
        double v = zeta(s).value;
        CHECK(v >= partial - 1e-12);
        CHECK(v <= partial + tail_cap + 1e-12);
    }
}
