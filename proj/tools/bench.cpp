// Timing harness: parallel winding-field kernel vs the serial reference,
// plus the Monte Carlo point-query oracle. Verifies agreement while timing.
#include <chrono>
#include <cstdio>
#include <string>

#include "windiso/families.hpp"
#include "windiso/io.hpp"
#include "windiso/winding.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool fields_equal(const windiso::WindingField& a, const windiso::WindingField& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i].winding != b.cells[i].winding) return false;
        if (!(a.cells[i].area == b.cells[i].area)) return false;
    }
    return true;
}

void bench_field(const char* label, const windiso::FamilySpec& spec) {
    windiso::ClosedCurve curve = windiso::generate(spec);

    auto t0 = Clock::now();
    windiso::WindingField serial = windiso::winding_field_serial(curve);
    double t_serial = seconds_since(t0);

    t0 = Clock::now();
    windiso::WindingField parallel = windiso::winding_field(curve);
    double t_parallel = seconds_since(t0);

    std::printf("%-24s %6zu cells  serial %8.3f ms  parallel %8.3f ms  x%.2f  %s\n", label,
                serial.cells.size(), t_serial * 1e3, t_parallel * 1e3,
                t_parallel > 0 ? t_serial / t_parallel : 0.0,
                fields_equal(serial, parallel) ? "identical" : "MISMATCH");
}

void bench_oracle(const char* label, const windiso::FamilySpec& spec, std::size_t samples) {
    windiso::ClosedCurve curve = windiso::generate(spec);
    windiso::WindingField field = windiso::winding_field(curve);
    double exact = windiso::lq_norm(field, 1.0).value;

    auto t0 = Clock::now();
    windiso::LqEstimate est = windiso::lq_norm_grid_oracle(curve, 1.0, samples, 99);
    double t = seconds_since(t0);

    std::printf("%-24s %zu samples in %8.3f ms  exact %.6f  mc %.6f +- %.6f\n", label, samples,
                t * 1e3, exact, est.value, est.stderr_value);
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    (void)threads;
    std::printf("OpenMP not available, parallel kernel runs serially\n");
#endif

    windiso::FamilySpec star;
    star.family = windiso::Family::star_polygon;
    star.n = 64;
    bench_field("star n=64 (dense)", star);

    windiso::FamilySpec walk;
    walk.family = windiso::Family::closed_random_walk;
    walk.n = 200;
    walk.seed = 7;
    bench_field("walk n=200", walk);

    windiso::FamilySpec small_walk;
    small_walk.family = windiso::Family::closed_random_walk;
    small_walk.n = 16;
    small_walk.seed = 12;
    bench_oracle("walk n=16 oracle", small_walk, 100000);

    return 0;
}
