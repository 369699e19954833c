#!/usr/bin/env python3
"""Regenerate src/polygon_table.cpp.

Vertices of the unit-circumradius regular n-gon, n in [3, 64], as dyadic
rationals k/2^20 (nearest integer, error <= 2^-21). Keeping the table in
source instead of calling trig at runtime makes curve generation exact and
bit-identical everywhere.
"""

import mpmath

SHIFT = 20
N_MIN, N_MAX = 3, 64

mpmath.mp.dps = 50


def rows():
    for n in range(N_MIN, N_MAX + 1):
        for k in range(n):
            ang = 2 * mpmath.mpf(k) * mpmath.pi / n
            cx = int(mpmath.nint(mpmath.cos(ang) * (1 << SHIFT)))
            sy = int(mpmath.nint(mpmath.sin(ang) * (1 << SHIFT)))
            yield n, k, cx, sy


def main():
    entries = list(rows())
    total = len(entries)
    out = []
    out.append("// Generated by tools/gen_polygon_table.py. Do not edit by hand.")
    out.append('#include "windiso/polygon_table.hpp"')
    out.append("")
    out.append("namespace windiso::detail {")
    out.append("")
    out.append(f"const PolyVertex kRegularPolygonTable[{total}] = {{")
    cur = None
    line = []
    for n, k, cx, sy in entries:
        if n != cur:
            if line:
                out.append("    " + " ".join(line))
                line = []
            out.append(f"    // n = {n}")
            cur = n
        line.append(f"{{{cx}, {sy}}},")
        if len(line) == 6:
            out.append("    " + " ".join(line))
            line = []
    if line:
        out.append("    " + " ".join(line))
    out.append("};")
    out.append("")
    out.append("}  // namespace windiso::detail")
    out.append("")
    with open("src/polygon_table.cpp", "w") as f:
        f.write("\n".join(out))
    print(f"wrote src/polygon_table.cpp ({total} vertices)")


if __name__ == "__main__":
    main()
