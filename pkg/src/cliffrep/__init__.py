"""Clifford algebra arithmetic, classification and Spin+(1,3) representations.

Subpackage map:

* :mod:`cliffrep.algebra` -- exact multivector arithmetic, automorphisms,
  volume element, center, graded bracket;
* :mod:`cliffrep.tensor` -- graded tensor products and their canonical
  mutually inverse homomorphisms;
* :mod:`cliffrep.classify` -- mod-8 / mod-2 division-ring classification
  and the Brauer-Wall group law;
* :mod:`cliffrep.factorize` -- two-generator tensor factorizations and
  periodicity reductions;
* :mod:`cliffrep.gamma` -- explicit gamma-matrix synthesis;
* :mod:`cliffrep.lorentz` -- finite-dimensional Spin+(1,3) operators in
  the (l0, l1) and paired su(2) ladder bases, plus spintensor actions;
* :mod:`cliffrep.repsys` -- representation-label arithmetic: cycles,
  interlocking chains, periodicity steps;
* :mod:`cliffrep.cli` -- the ``cliffrep`` command-line tool.
"""

from .algebra import (
    GradedBracketResult,
    Multivector,
    Signature,
    blade_product,
    center_blades,
    generators,
    graded_bracket,
    involution_via_omega,
    omega_square,
    omega_square_mod8,
    volume_element,
)
from .classify import (
    AlgebraClass,
    ComplexClass,
    MatrixShape,
    RingType,
    bw_compose,
    classify,
    classify_complex,
    clock_hour,
    even_subalgebra,
    tensor_compose,
)
from .factorize import (
    Factorization,
    complex_factorize,
    factorize,
    factorize_odd,
    karoubi_factorize,
    periodicity_reduce,
)
from .gamma import GeneratorSet, blade_images, build_generators, faithfulness_rank, verify_anticommutation
from .lorentz import (
    GNLabel,
    GNOperators,
    Spintensor,
    VdWOperators,
    build_gn_operators,
    build_vdw_operators,
    gn_coefficients,
    gn_to_vdw,
    reconstruct_AB,
    spintensor_transform,
    verify_com1,
    verify_com2,
)
from .repsys import (
    ComplexRepLabel,
    RealRepClass,
    RealRepLabel,
    bw_complex_step,
    bw_real_step,
    chain_neighbors,
    classify_real_rep,
    interlocking_chain,
    real_period_step,
    tensor_step,
)
from .tensor import GradedTensorProduct, graded_tensor, theta_psi_check

__version__ = "0.1.0"
