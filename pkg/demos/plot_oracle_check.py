"""
Closed forms versus the Fock-space pipeline
===========================================

Build the four-mode Rindler state, trace out wedge II, and compare with the
closed-form reduced matrix, probabilities and bounds.  Skipping the
reordering sign before the partial trace (``Ordering.SLOT``) serves as a
negative control and should fail.
"""

from fgur import ScanMode, ScanSpec, run_oracle_check
from fgur.fock import Ordering

for ordering in (Ordering.PHYSICAL, Ordering.SLOT):
    report = run_oracle_check(ScanSpec(ScanMode.ORACLE, options={"grid": 5, "ordering": ordering}))
    print(f"ordering={ordering.value}: {'pass' if report.passed else 'fail'}")
    print("\n".join(report.lines()))
