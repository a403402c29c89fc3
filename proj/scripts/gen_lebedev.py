"""Regenerate core/src/lebedev_tables.cpp from SciPy's Lebedev-Laikov rule."""
import sys
from scipy.integrate import lebedev_rule

PRECISIONS = [3, 5, 7, 9, 11, 13, 15, 17, 19, 23, 29]

out = []
out.append("// Generated by scripts/gen_lebedev.py. Do not edit by hand.")
out.append("// Lebedev-Laikov nodes on the unit sphere; weights normalized to sum 1.")
out.append("")
out.append('#include "symprobe/lebedev.hpp"')
out.append("")
out.append("namespace symprobe::detail {")
out.append("namespace {")
out.append("")
for p in PRECISIONS:
    x, w = lebedev_rule(p)
    w = w / w.sum()
    out.append(f"constexpr LebedevNode kLebedev{p}[] = {{")
    for i in range(x.shape[1]):
        out.append("    {%.17g, %.17g, %.17g, %.17g}," % (x[0, i], x[1, i], x[2, i], w[i]))
    out.append("};")
    out.append("")
out.append("}  // namespace")
out.append("")
out.append("const std::vector<LebedevTable>& lebedev_tables() {")
out.append("  static const std::vector<LebedevTable> tables = {")
for p in PRECISIONS:
    out.append(f"      {{{p}, std::span<const LebedevNode>(kLebedev{p})}},")
out.append("  };")
out.append("  return tables;")
out.append("}")
out.append("")
out.append("}  // namespace symprobe::detail")
sys.stdout.write("\n".join(out) + "\n")
