"""The eightfold periodic table of real Clifford algebras.

Cl(p,q) is a full matrix algebra over R, C or H, or a double of one,
with the ring decided by (p-q) mod 8 alone.  The table below is computed
from dimension bookkeeping; the embedded reference transcription is used
by the test suite as an independent cross-check.
"""

from cliffrep import classify, classify_complex, clock_hour, even_subalgebra
from cliffrep.table_data import format_entry

print("p ->", "".join(f"{p:>9}" for p in range(8)))
for q in range(8):
    row = []
    for p in range(8):
        c = classify((p, q))
        row.append(format_entry(c.ring, c.matrix_size))
    print(f"q={q}", "".join(f"{x:>9}" for x in row))

print("\nSpacetime algebra Cl(1,3):", classify((1, 3)))
print("Majorana algebra  Cl(3,1):", classify((3, 1)))
print("They share the dimension but not the ring.")

# the clock hour h solves q - p = h + 8r
for sig in [(1, 3), (1, 9), (8, 0)]:
    h, r = clock_hour(sig)
    print(f"Cl{sig}: hour {h}, octave {r}")

# even subalgebras step down the clock
print("\nCl+(1,3) =", "Cl" + str(tuple(even_subalgebra((1, 3)))), "=", classify(even_subalgebra((1, 3))))
print("Cl+(2,0) =", "Cl" + str(tuple(even_subalgebra((2, 0)))), "=", classify(even_subalgebra((2, 0))))

# over C only the parity of n matters
for n in range(6):
    print(f"C_{n} =", classify_complex(n))
