"""Gamma-matrix synthesis: defining relations, faithfulness, volume image."""

import numpy as np
import pytest

from cliffrep.algebra import Multivector, Signature, all_blades, omega_square_mod8
from cliffrep.factorize import karoubi_factorize
from cliffrep.gamma import (
    GeneratorSet,
    blade_images,
    build_generators,
    check_omega_square,
    faithfulness_rank,
    omega_image,
    verify_anticommutation,
)

all_signatures = [Signature(p, n - p) for n in range(0, 8) for p in range(n + 1)]


class TestBuildGenerators:
    def test_hyperbolic_plane(self):
        g = build_generators((1, 1))
        assert g.dim == 2 and len(g.gammas) == 2
        assert np.array_equal(g.gammas[0] @ g.gammas[0], np.eye(2))
        assert np.array_equal(g.gammas[1] @ g.gammas[1], -np.eye(2))
        anti = g.gammas[0] @ g.gammas[1] + g.gammas[1] @ g.gammas[0]
        assert np.array_equal(anti, np.zeros((2, 2)))

    def test_spacetime_dimensions(self):
        g = build_generators((1, 3))
        assert g.dim == 4 and len(g.gammas) == 4 and not g.reducible

    def test_double_numbers_blocks(self):
        g = build_generators((1, 0))
        assert g.dim == 2 and g.reducible
        assert np.array_equal(g.gammas[0], np.diag([1.0, -1.0]))

    def test_trivial_signature(self):
        g = build_generators((0, 0))
        assert g.dim == 1 and g.gammas == ()
        assert verify_anticommutation(g)

    @pytest.mark.parametrize("sig", all_signatures)
    def test_representation_dimension(self, sig):
        g = build_generators(sig)
        assert g.dim == 1 << ((sig.n + 1) // 2)
        assert g.reducible == (sig.n % 2 == 1)

    def test_size_overflow(self):
        with pytest.raises(ValueError):
            build_generators((13, 0))


class TestAnticommutation:
    @pytest.mark.parametrize("sig", all_signatures)
    def test_defining_relations(self, sig):
        assert verify_anticommutation(build_generators(sig))

    @pytest.mark.parametrize("n", [9, 10])
    def test_defining_relations_larger(self, n):
        for p in range(n + 1):
            assert verify_anticommutation(build_generators((p, n - p)))

    def test_mutation_detected(self):
        g = build_generators((1, 3))
        broken = list(g.gammas)
        bad = broken[2].copy()
        bad[0, -1] = -bad[0, -1] if bad[0, -1] else 1
        broken[2] = bad
        mutated = GeneratorSet(g.sig, tuple(broken), g.reducible, g.basis_note)
        assert not verify_anticommutation(mutated)


class TestFaithfulness:
    @pytest.mark.parametrize(
        "sig,rank", [((2, 0), 4), ((1, 1), 4), ((0, 0), 1), ((0, 2), 4), ((3, 0), 8)]
    )
    def test_examples(self, sig, rank):
        assert faithfulness_rank(build_generators(sig)) == rank

    @pytest.mark.parametrize("sig", all_signatures)
    def test_monomorphism(self, sig):
        assert faithfulness_rank(build_generators(sig)) == 1 << sig.n

    def test_blade_images_multiply(self):
        sig = Signature(2, 1)
        g = build_generators(sig)
        images = blade_images(g)
        for a in all_blades(sig):
            for b in all_blades(sig):
                from cliffrep.algebra import blade_product

                sign, mask = blade_product(a, b, sig)
                assert np.allclose(images[a] @ images[b], sign * images[mask])


class TestVolumeImage:
    @pytest.mark.parametrize("sig", [s for s in all_signatures if s.n >= 1])
    def test_omega_square_sign(self, sig):
        assert check_omega_square(build_generators(sig))

    @pytest.mark.parametrize("sig", [s for s in all_signatures if s.n >= 2 and s.n % 2 == 0])
    def test_omega_conjugation_realizes_grade_involution(self, sig):
        g = build_generators(sig)
        om = omega_image(g)
        om_inv = omega_square_mod8(sig) * om  # omega^{-1} = omega / omega^2
        images = blade_images(g)
        for mask in all_blades(sig):
            x = Multivector.from_mask(sig, mask)
            target = x.grade_involution().coefficient(mask)
            assert np.allclose(om @ images[mask] @ om_inv, target * images[mask])


class TestFactorConsistency:
    @pytest.mark.parametrize("sig", [s for s in all_signatures if s.n % 2 == 0 and s.n > 0])
    def test_dimension_matches_factor_count(self, sig):
        g = build_generators(sig)
        assert g.dim == 1 << len(karoubi_factorize(sig).factors)
