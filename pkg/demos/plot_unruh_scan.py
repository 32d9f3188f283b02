"""
Bounds under the Unruh effect
=============================

Sweep the acceleration parameter r over [0, pi/4] for three choices of the
left-wedge weight q_L and write the curves to CSV and SVG.
"""

import math
import pathlib

from fgur import ScanMode, ScanSpec, emit_csv, emit_svg, run_unruh_scan

out = pathlib.Path("demo_output")
out.mkdir(exist_ok=True)

spec = ScanSpec(ScanMode.UNRUH, ranges={"r": (0.0, math.pi / 4, 200)}, fixed={"ql": (0.0, 0.6, 1.0)})
table = run_unruh_scan(spec)
emit_csv(table, out / "unruh_scan.csv")
emit_svg(table, out / "unruh_scan.svg")

# zeta_00 falls with acceleration when q_L = 0, zeta_11 rises when q_L = 1
for ql in (0.0, 0.6, 1.0):
    rows = [row for row in table.rows if row[1] == ql]
    first, last = rows[0], rows[-1]
    print(f"q_L={ql}: zeta_00 {first[2]:.6f} -> {last[2]:.6f}, zeta_11 {first[3]:.6f} -> {last[3]:.6f}")
print(f"wrote {out / 'unruh_scan.csv'} and {out / 'unruh_scan.svg'}")
