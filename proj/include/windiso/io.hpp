#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windiso/curve.hpp"
#include "windiso/families.hpp"
#include "windiso/winding.hpp"
#include "windiso/young.hpp"

namespace windiso {

inline constexpr int kDocumentVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Versioned curve document: {"version": 1, "vertices": [["x","y"], ...]}
/// with coordinates as exact "num/den" strings. Parsing accepts "num",
/// "num/den", and plain decimal literals; round-trips are exact.
std::string curve_to_json(const ClosedCurve& curve);
ClosedCurve curve_from_json(const std::string& text);

/// Report document with the full certificate audit trail: per-step area,
/// window variation, bound, and margin.
std::string report_to_json(const InequalityReport& report);

/// Field document: bounding box plus every cell's polygon, winding, and
/// exact area.
std::string field_to_json(const WindingField& field);

/// Sweep configuration document:
/// {"families": [{"family": "...", "n": 8, "seed": 0, "scale": "1", "step": 0}, ...],
///  "p_grid": [1.0, ...], "q_count": 4, "guard": 0.05}
/// scale and step are optional per family entry.
SweepConfig sweep_config_from_json(const std::string& text);
std::string sweep_config_to_json(const SweepConfig& config);

/// CSV rows for sweep results. Header:
/// family,n,seed,p,q,pvar,lhs,rhs,ratio,steps,pass
/// Reals are printed with %.17g, pass as 1/0. Byte-stable across runs and
/// thread counts.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Binary PPM (P6, maxval 255), row-major top to bottom. Winding 0 renders
/// white, positive blue ramp, negative red ramp, saturating at |w| = 5;
/// pixel centers exactly on the curve render black. Pixel centers are exact
/// rationals, so images are bit-identical across runs.
std::vector<std::uint8_t> render_heatmap(const ClosedCurve& curve, int width, int height);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);
void write_file(const std::string& path, const std::vector<std::uint8_t>& data);

/// FNV-1a 64-bit digest, for pinning binary artifacts in tests.
std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t size);

}  // namespace windiso
