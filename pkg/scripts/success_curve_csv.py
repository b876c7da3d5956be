#!/usr/bin/env python3
"""Write the plot-ready success-probability curve (both strategies) to a
CSV file. Thin wrapper over `triarc noise-curve`; edit the parameter block
to explore other error rates."""
import sys

from triarc.cli import main

MAX_TOFFOLI = 50
P1 = 1e-4
P2 = 1e-2
T1_QUBIT = 100.0
T1_QUTRIT = 30.0
TAU = 0.0

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "success_curve.csv"
    code = main([
        "noise-curve", "--strategy", "both",
        "--max-toffoli", str(MAX_TOFFOLI),
        "--p1", str(P1), "--p2", str(P2),
        "--t1a", str(T1_QUBIT), "--t1b", str(T1_QUTRIT),
        "--tau", str(TAU), "--out", out,
    ])
    if code == 0:
        print(f"wrote {out}")
    raise SystemExit(code)
