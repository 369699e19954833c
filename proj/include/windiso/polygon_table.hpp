#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

namespace windiso::detail {

/// One pinned vertex of a unit-circumradius regular polygon: coordinates are
/// round(cos(2*pi*k/n) * 2^20) and round(sin(2*pi*k/n) * 2^20).
struct PolyVertex {
    std::int32_t cx;
    std::int32_t sy;
};

inline constexpr int kPolygonTableMinN = 3;
inline constexpr int kPolygonTableMaxN = 64;

/// Rows for n = 3..64 concatenated; row n starts at offset n*(n-1)/2 - 3.
extern const PolyVertex kRegularPolygonTable[2077];

/// Vertices of the pinned regular n-gon, n in [3, 64].
inline std::span<const PolyVertex> regular_polygon_row(int n) {
    if (n < kPolygonTableMinN || n > kPolygonTableMaxN)
        throw std::out_of_range("regular_polygon_row: n must be in [3, 64]");
    return {kRegularPolygonTable + (n * (n - 1) / 2 - 3), static_cast<std::size_t>(n)};
}

}  // namespace windiso::detail
