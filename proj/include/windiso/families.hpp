#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "windiso/curve.hpp"
#include "windiso/young.hpp"

namespace windiso {

enum class Family {
    regular_polygon,
    closed_random_walk,
    star_polygon,
    figure_eight,
    perturbed_polygon,
};

const char* family_name(Family f);
/// Accepts snake_case and kebab-case spellings ("star" works too).
std::optional<Family> family_from_name(std::string_view name);

struct FamilySpec {
    Family family = Family::regular_polygon;
    std::size_t n = 4;
    std::uint64_t seed = 0;
    Rational scale = Rational(1);
    /// star_polygon only: vertex stride; 0 picks the largest stride <= n/2
    /// coprime with n. Must satisfy gcd(n, step) = 1.
    std::size_t step = 0;
};

/// Deterministic curve construction. Table-backed families (regular, star,
/// perturbed) support n in [3, 64]; figure_eight ignores n and seed. Walks
/// and perturbations that collapse below 3 distinct vertices retry with an
/// incremented sub-seed, at most 16 times.
ClosedCurve generate(const FamilySpec& spec);

/// Resolved star stride for the spec (the value 0 expands to).
std::size_t star_step_for(std::size_t n, std::size_t step);

struct SweepConfig {
    std::vector<FamilySpec> families;
    std::vector<double> p_grid;
    std::size_t q_count = 4;  // per-p uniform grid over [1, 2/p - guard]
    double guard = 0.05;
};

struct SweepRow {
    FamilySpec spec;
    InequalityReport report;
};

/// One report per (curve, p, q) triple, ordered by config position, then p,
/// then q. Curves are processed in parallel; the output is bit-identical to
/// a sequential run because each triple's arithmetic is self-contained.
/// rhs_scale multiplies every rhs (debug harness self-test; 1 in real use).
/// threads > 0 pins the OpenMP thread count for this call.
std::vector<SweepRow> sweep(const SweepConfig& config, double rhs_scale = 1.0, int threads = 0);

/// The pinned verification corpus: {regular, walk, star, eight, perturbed}
/// x n in {8, 16, 32, 64}, p in {1, 1.25, 1.5, 1.75, 1.9}, 4 q-points per p.
SweepConfig acceptance_config();

}  // namespace windiso
