"""
Bounds in an accelerated cavity
===============================

The cavity bound oscillates in the acceleration duration u with period one,
returning to the inertial value at every integer u.  The curves are written
to CSV and SVG for three values of the boundary parameter s.
"""

import pathlib

from fgur import CavityGeometry, ScanMode, ScanSpec, emit_csv, emit_svg, period, run_cavity_scan

out = pathlib.Path("demo_output")
out.mkdir(exist_ok=True)

spec = ScanSpec(ScanMode.CAVITY, ranges={"u": (0.0, 2.0, 400)}, fixed={"h": 0.1, "k": 1, "s": (0.0, 0.3, 0.6)})
table = run_cavity_scan(spec)
emit_csv(table, out / "cavity_scan.csv")
emit_svg(table, out / "cavity_scan.svg")

z00 = table.column("zeta_00")
print(f"zeta_00 range over two periods: {min(z00):.6f} .. {max(z00):.6f}")

# proper time of one period for a cavity of length 1 with its near wall at x1 = 1
print(f"period for L=1, x1=1: {period(CavityGeometry(L=1.0, x1=1.0)):.6f}")
print(f"wrote {out / 'cavity_scan.csv'} and {out / 'cavity_scan.svg'}")
