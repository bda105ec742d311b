"""
Mermin violation through the four-qubit QFT
===========================================

For a few periodic inputs, optimize all 24 observable parameters at every
captured step of the QFT circuit. Runs with two restarts per step to stay
quick; the CLI uses five.
"""

from qmermin.qft import PeriodicSpec, periodic_state
from qmermin.scans import qft_scan

for l, r in [(0, 15), (2, 4), (2, 2), (1, 3)]:
    spec = PeriodicSpec(l, r)
    support = [i for i, a in enumerate(periodic_state(spec)) if a != 0]
    res = qft_scan(l, r, restarts=2)
    print(f"(l,r)=({l},{r}) support {support}")
    print("   ", " ".join(f"{v:.2f}" for v in res.values))

# steps 0-1, 4-5, 7-8 and 9-11 differ only by a Hadamard or the final swap,
# which are local (or a relabelling), so the optimum should not move there
