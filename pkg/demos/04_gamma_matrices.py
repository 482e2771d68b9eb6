"""Synthesizing gamma matrices for any signature.

Even p+q uses a Kronecker chain over the two-generator factor list; odd
p+q doubles the even-truncated module on the block diagonal, with the
last generator taking opposite signs in the two blocks.
"""

import numpy as np

from cliffrep import (
    blade_images,
    build_generators,
    faithfulness_rank,
    omega_square_mod8,
    verify_anticommutation,
)
from cliffrep.gamma import omega_image

np.set_printoptions(precision=0, suppress=True, linewidth=100)

gen = build_generators((1, 3))
print(f"Cl(1,3): {len(gen.gammas)} generators of dim {gen.dim}, metric {gen.metric}")
for i, g in enumerate(gen.gammas, start=1):
    print(f"gamma_{i} =\n{g}")

print("anticommutation relations hold:", verify_anticommutation(gen))
print("faithful: rank of blade-image span =", faithfulness_rank(gen), "= 2^4")

om = omega_image(gen)
print("volume image squares to", int((om @ om)[0, 0].real), "* I;",
      "mod-8 law predicts", omega_square_mod8((1, 3)))

# the double-number algebra splits into two 1x1 blocks
gen2 = build_generators((1, 0))
print("\nCl(1,0) generator (reducible block pair):")
print(gen2.gammas[0].real)

# blade images multiply like the blades themselves
gen3 = build_generators((2, 0))
images = blade_images(gen3)
print("\nCl(2,0) blade images (e0, e1, e2, e12):")
for mask in sorted(images):
    print(images[mask].real if not images[mask].imag.any() else images[mask])
