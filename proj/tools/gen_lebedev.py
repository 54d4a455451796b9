#!/usr/bin/env python3
"""Writes src/lebedev_tables.cpp from scipy's Lebedev rules (weights scaled to 4 pi)."""
import math
import sys

from scipy.integrate import lebedev_rule

DEGREES = [3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25]


def main(path):
    out = []
    out.append("// Generated by tools/gen_lebedev.py. Do not edit.")
    out.append('#include "lebedev_tables.hpp"')
    out.append("")
    out.append("namespace mcboltz::detail {")
    out.append("")
    out.append("namespace {")
    names = []
    for deg in DEGREES:
        x, w = lebedev_rule(deg)
        n = x.shape[1]
        w = w * (4.0 * math.pi / w.sum())
        name = f"lebedev_{n}"
        names.append((deg, n, name))
        out.append(f"constexpr double {name}[{n}][4] = {{")
        for i in range(n):
            out.append("    {%.17g, %.17g, %.17g, %.17g}," % (x[0, i], x[1, i], x[2, i], w[i]))
        out.append("};")
    out.append("} // namespace")
    out.append("")
    out.append("const std::array<LebedevTable, %d>& lebedev_tables() {" % len(names))
    out.append("    static const std::array<LebedevTable, %d> tables{{" % len(names))
    for deg, n, name in names:
        out.append(f"        {{{n}, {deg}, &{name}[0][0]}},")
    out.append("    }};")
    out.append("    return tables;")
    out.append("}")
    out.append("")
    out.append("} // namespace mcboltz::detail")
    with open(path, "w") as fh:
        fh.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/lebedev_tables.cpp")
