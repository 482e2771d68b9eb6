"""Peeling Clifford algebras into two-generator tensor factors.

Every even-dimensional Cl(p,q) is an ordinary tensor product of copies
of Cl(1,1), Cl(2,0) and Cl(0,2).  Peeling a definite factor negates the
remaining quadratic form, which is why the factor list for Cl(4,0) is
not Cl(2,0) twice: Mat_2(R) (x) Mat_2(R) would be Mat_4(R), but
Cl(4,0) = Mat_2(H).
"""

from cliffrep import classify, complex_factorize, factorize, periodicity_reduce
from cliffrep.classify import tensor_compose
from cliffrep.factorize import compose_factor_shapes

for sig in [(1, 3), (3, 1), (4, 0), (8, 0), (2, 2)]:
    f = factorize(sig)
    chain = " (x) ".join(f"Cl{tuple(x)}" for x in f.factors)
    print(f"Cl{sig} = {chain}")
    print(f"   flips after factors {list(f.flip_steps)};"
          f" composes to {compose_factor_shapes(f)} = {classify(sig)}")

# odd dimension: factor the even part, double the semi-simple types
for sig in [(1, 0), (3, 0), (1, 4)]:
    f = factorize(sig)
    chain = " (x) ".join(f"Cl{tuple(x)}" for x in f.factors) or "Cl(0,0)"
    marker = "doubled" if f.doubled else "single"
    print(f"Cl{sig}: even part = {chain} ({marker}); full algebra {classify(sig)}")

# the quaternion identity that makes the octave factor list consistent
h = classify((0, 2)).shape
print("\nH (x) H =", tensor_compose(h, h))

# spinspace accounting: r factors act on a 2^r spinspace
f = factorize((8, 0))
print(f"Cl(8,0): {len(f.factors)} factors, spinspace dim {f.spinspace_dim}, spin index {f.spin_index}")

# complex algebras factor into Pauli blocks: C_2m = C_2 (x) ... (x) C_2
for n in (0, 4, 8):
    print(f"C_{n} needs {complex_factorize(n)} Pauli factors")

# mod-8 reduction strips full octaves
for sig in [(9, 0), (1, 9), (2, 2)]:
    base, octaves = periodicity_reduce(sig)
    print(f"Cl{sig} -> base Cl{tuple(base)} after {octaves} octave(s)")
