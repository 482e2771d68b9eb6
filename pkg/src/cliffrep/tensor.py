"""Graded tensor products of Clifford algebras.

Cl(V, Q) graded-tensor Cl(V', Q') multiplies homogeneous pure tensors
with the Koszul sign:

    (a (x) b)(a' (x) b') = (-1)^{deg b * deg a'} (a a') (x) (b b')

and is naturally isomorphic to Cl(V + V', Q + Q').  The two mutually
inverse homomorphisms are

* ``theta``: a (x) b -> image(a) * image(b) inside the combined algebra,
* ``psi``: combined generators -> e_i (x) 1 or 1 (x) e_j.

On basis blades both maps are monomial -> signed monomial, so checking
that they invert each other is exact integer arithmetic.
"""

from __future__ import annotations

from .algebra import Multivector, Signature, as_signature, blade_product, grade


class GradedTensorProduct:
    """The graded tensor product of Cl(a_sig) and Cl(b_sig)."""

    def __init__(self, a_sig, b_sig):
        self.a_sig = as_signature(a_sig)
        self.b_sig = as_signature(b_sig)
        self.combined = as_signature(
            Signature(self.a_sig.p + self.b_sig.p, self.a_sig.q + self.b_sig.q)
        )

    # -- generator index maps (1-based) ---------------------------------

    def embed_a_index(self, i: int) -> int:
        if not 1 <= i <= self.a_sig.n:
            raise ValueError(f"no generator {i} in {self.a_sig}")
        if i <= self.a_sig.p:
            return i
        return self.combined.p + (i - self.a_sig.p)

    def embed_b_index(self, j: int) -> int:
        if not 1 <= j <= self.b_sig.n:
            raise ValueError(f"no generator {j} in {self.b_sig}")
        if j <= self.b_sig.p:
            return self.a_sig.p + j
        return self.combined.p + self.a_sig.q + (j - self.b_sig.p)

    def _embed_mask(self, mask: int, index_map) -> int:
        out = 0
        for i in range(mask.bit_length()):
            if mask >> i & 1:
                out |= 1 << (index_map(i + 1) - 1)
        return out

    def embed_a(self, mask: int) -> int:
        """Combined-algebra mask of an A-side blade (order preserving)."""
        return self._embed_mask(mask, self.embed_a_index)

    def embed_b(self, mask: int) -> int:
        return self._embed_mask(mask, self.embed_b_index)

    # -- the two homomorphisms ------------------------------------------

    def theta_blade(self, mask_a: int, mask_b: int) -> tuple[int, int]:
        """theta(e_A (x) e_B) as ``(sign, combined mask)``."""
        return blade_product(self.embed_a(mask_a), self.embed_b(mask_b), self.combined)

    def psi_blade(self, mask: int) -> tuple[int, int, int]:
        """psi(combined blade) as ``(sign, mask_a, mask_b)``.

        Generator images are multiplied left to right in ascending
        combined order; each A-side generator passes the B-side factor
        accumulated so far, picking up one Koszul sign per odd crossing.
        """
        sig = self.combined
        if mask >> sig.n or mask < 0:
            raise ValueError(f"blade {mask:#x} invalid for {sig}")
        sign = 1
        mask_a = mask_b = 0
        for g0 in range(mask.bit_length()):
            if not mask >> g0 & 1:
                continue
            g = g0 + 1
            if g <= self.a_sig.p:
                a_index = g
            elif g <= sig.p:
                a_index = None
                b_index = g - self.a_sig.p
            elif g <= sig.p + self.a_sig.q:
                a_index = self.a_sig.p + (g - sig.p)
            else:
                a_index = None
                b_index = self.b_sig.p + (g - sig.p - self.a_sig.q)
            if a_index is not None:
                if grade(mask_b) & 1:
                    sign = -sign
                mask_a |= 1 << (a_index - 1)
            else:
                mask_b |= 1 << (b_index - 1)
        return sign, mask_a, mask_b

    def tensor_blade_product(
        self, left: tuple[int, int], right: tuple[int, int]
    ) -> tuple[int, int, int]:
        """Koszul-signed product of pure tensor blades: ``(sign, mask_a, mask_b)``."""
        ma, mb = left
        na, nb = right
        sign = -1 if (grade(mb) & 1) and (grade(na) & 1) else 1
        sa, ra = blade_product(ma, na, self.a_sig)
        sb, rb = blade_product(mb, nb, self.b_sig)
        return sign * sa * sb, ra, rb

    def theta(self, tensor_terms: dict[tuple[int, int], object]) -> Multivector:
        """theta on a sparse tensor element {(mask_a, mask_b): coeff}."""
        terms: dict[int, object] = {}
        for (ma, mb), coeff in tensor_terms.items():
            sign, mask = self.theta_blade(ma, mb)
            terms[mask] = terms.get(mask, 0) + sign * coeff
        return Multivector(self.combined, terms)

    def psi(self, x: Multivector) -> dict[tuple[int, int], object]:
        """psi on a combined-algebra element, as a sparse tensor element."""
        if x.sig != self.combined:
            raise ValueError(f"expected an element of {self.combined}")
        out: dict[tuple[int, int], object] = {}
        for mask, coeff in x.terms.items():
            sign, ma, mb = self.psi_blade(mask)
            key = (ma, mb)
            out[key] = out.get(key, 0) + sign * coeff
        return {k: c for k, c in out.items() if c != 0}

    def mutually_inverse(self) -> bool:
        """Exact check that psi . theta = id and theta . psi = id on all blades."""
        for mask in range(1 << self.combined.n):
            s, ma, mb = self.psi_blade(mask)
            s2, back = self.theta_blade(ma, mb)
            if back != mask or s * s2 != 1:
                return False
        for ma in range(1 << self.a_sig.n):
            for mb in range(1 << self.b_sig.n):
                s, mask = self.theta_blade(ma, mb)
                s2, ra, rb = self.psi_blade(mask)
                if (ra, rb) != (ma, mb) or s * s2 != 1:
                    return False
        return True


def graded_tensor(a_sig, b_sig) -> GradedTensorProduct:
    """Combined algebra Cl(pa+pb, qa+qb) with its embedding maps."""
    return GradedTensorProduct(a_sig, b_sig)


def theta_psi_check(a_sig, b_sig) -> bool:
    """True iff the two canonical homomorphisms invert each other exactly."""
    return GradedTensorProduct(a_sig, b_sig).mutually_inverse()
