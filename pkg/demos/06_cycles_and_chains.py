"""Cyclic actions on the representation systems, and interlocking chains.

The mod-2 cycle alternates doubling with spin increments, converting
fermionic labels into bosonic ones and back.  The mod-8 cycle runs
through the real classes R0 -> H6 -> H4 -> R2 and returns with the spin
index raised by 2, matching the octave periodicity.
"""

from fractions import Fraction as F

from cliffrep import (
    ComplexRepLabel,
    RealRepClass,
    RealRepLabel,
    bw_complex_step,
    chain_neighbors,
    classify_real_rep,
    interlocking_chain,
    real_period_step,
)
from cliffrep.repsys import complex_step_hour, run_real_cycle

print("mod-2 cycle on the complex ladder:")
rep = ComplexRepLabel(0)
for _ in range(6):
    h = complex_step_hour(rep)
    nxt = bw_complex_step(rep)
    spin = f"spin {rep.spin}" if not rep.doubled else "doubled"
    print(f"  {rep}  --h={h}-->  {nxt}   ({spin})")
    rep = nxt

print("\nmod-8 cycle on the real classes:")
states = run_real_cycle(RealRepLabel(RealRepClass.R02_DOUBLE, F(0)), 9)
for h, (a, b) in enumerate(zip(states, states[1:])):
    print(f"  hour {h % 8}: {a}  ->  {b}")

print("\none full cycle equals the octave period step:",
      states[8] == real_period_step(states[0]))

print("\nreal class of Cl(1,q) along the clock walk:")
for q in range(9):
    print(f"  Cl(1,{q}) -> {classify_real_rep((1, q))}")

print("\ninterlocking chains (wave-equation schemes):")
for two_s, name in [(1, "electron-positron"), (2, "photon"), (3, "spin-3/2 pair")]:
    chain = " <-> ".join(str(c) for c in interlocking_chain(two_s))
    print(f"  2s = {two_s} ({name}): {chain}")

print("\nneighbours of C^{1,-1} in the interlocking wedge:",
      ", ".join(str(c) for c in chain_neighbors(ComplexRepLabel(1, -1))))
