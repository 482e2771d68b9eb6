"""Named invariant checks backing the ``verify`` CLI subcommand.

Every check returns (passed, detail).  Budgets are bounded by ``nmax``
(generator count for algebra sweeps) and ``dim_max`` (operator size for
the representation sweeps).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import gamma, lorentz, repsys
from .algebra import (
    Multivector,
    Signature,
    all_blades,
    as_signature,
    blade_product,
    center_blades,
    grade,
    involution_via_omega,
    omega_square,
    omega_square_mod8,
)
from .classify import classify, classify_complex, even_subalgebra
from .factorize import (
    factorize_odd,
    karoubi_factorize,
    replay_flips,
    verify_factorization,
)
from .repsys import ComplexRepLabel, RealRepClass, RealRepLabel
from .table_data import reference_table
from .tensor import theta_psi_check


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _signatures(nmax: int, parity: int | None = None):
    for n in range(nmax + 1):
        if parity is not None and n % 2 != parity:
            continue
        for p in range(n + 1):
            yield Signature(p, n - p)


def brute_force_commutant(sig) -> frozenset[int]:
    """Blades commuting with every generator, by direct multiplication."""
    sig = as_signature(sig)
    out = set()
    for mask in all_blades(sig):
        ok = True
        for i in range(1, sig.n + 1):
            g = 1 << (i - 1)
            s1, m1 = blade_product(mask, g, sig)
            s2, m2 = blade_product(g, mask, sig)
            if (s1, m1) != (s2, m2):
                ok = False
                break
        if ok:
            out.add(mask)
    return frozenset(out)


def check_omega_square(nmax: int = 12) -> CheckResult:
    bad = [s for s in _signatures(nmax) if s.n >= 1 and omega_square(s) != omega_square_mod8(s)]
    return CheckResult("omega-square mod-8 law", not bad, f"{nmax=} mismatches={bad}")


def check_center(nmax: int = 8) -> CheckResult:
    bad = [s for s in _signatures(nmax) if center_blades(s) != brute_force_commutant(s)]
    return CheckResult("center vs brute-force commutant", not bad, f"{nmax=} mismatches={bad}")


def check_automorphism_signs(nmax: int = 8) -> CheckResult:
    for s in _signatures(nmax):
        for mask in all_blades(s):
            x = Multivector.from_mask(s, mask)
            k = grade(mask)
            signs = (
                x.grade_involution().coefficient(mask),
                x.reversion().coefficient(mask),
                x.conjugation().coefficient(mask),
            )
            expected = (
                (-1) ** k,
                (-1) ** (k * (k - 1) // 2),
                (-1) ** (k * (k + 1) // 2),
            )
            if signs != expected:
                return CheckResult("automorphism signs", False, f"{s} blade {mask:#x}")
    return CheckResult("automorphism signs", True, f"{nmax=}")


def check_omega_conjugation(nmax: int = 8) -> CheckResult:
    for s in _signatures(nmax, parity=0):
        for mask in all_blades(s):
            x = Multivector.from_mask(s, mask)
            if involution_via_omega(x) != x.grade_involution():
                return CheckResult("omega conjugation = grade involution", False, f"{s}")
    return CheckResult("omega conjugation = grade involution", True, f"even n <= {nmax}")


def check_theta_psi(nmax: int = 8) -> CheckResult:
    for na in range(nmax + 1):
        for pa in range(na + 1):
            for nb in range(nmax - na + 1):
                for pb in range(nb + 1):
                    if not theta_psi_check((pa, na - pa), (pb, nb - pb)):
                        return CheckResult(
                            "graded tensor isomorphism",
                            False,
                            f"({pa},{na - pa}) x ({pb},{nb - pb})",
                        )
    return CheckResult("graded tensor isomorphism", True, f"combined n <= {nmax}")


def check_table(nmax: int = 7) -> CheckResult:
    bad = []
    for (p, q), (ring, size) in reference_table().items():
        c = classify((p, q))
        if (c.ring, c.matrix_size) != (ring, size):
            bad.append((p, q))
    return CheckResult("periodic table reproduction", not bad, f"64 entries, mismatches={bad}")


def check_periodicity(nmax: int = 4) -> CheckResult:
    for s in _signatures(nmax):
        a, b = classify(s), classify((s.p + 8, s.q))
        if not (a.ring is b.ring and a.simple == b.simple and b.matrix_size == 16 * a.matrix_size):
            return CheckResult("mod-8 periodicity", False, str(s))
    return CheckResult("mod-8 periodicity", True, f"base n <= {nmax}, size ratio 16")


def check_karoubi(nmax: int = 12) -> CheckResult:
    for s in _signatures(min(nmax, 12), parity=0):
        f = karoubi_factorize(s)
        if not verify_factorization(f) or replay_flips(f) != s:
            return CheckResult("factor-list class composition", False, str(s))
    for s in _signatures(min(nmax, 11), parity=1):
        if s.n and not verify_factorization(factorize_odd(s)):
            return CheckResult("factor-list class composition", False, str(s))
    return CheckResult("factor-list class composition", True, f"n <= {nmax}")


def check_even_subalgebra(nmax: int = 8) -> CheckResult:
    for s in _signatures(nmax):
        if s.q >= 1 and classify(even_subalgebra((s.p, s.q))) != classify((s.p, s.q - 1)):
            return CheckResult("even subalgebra", False, str(s))
        if s.n >= 1 and s.q == 0 and classify(even_subalgebra(s)) != classify((0, s.p - 1)):
            return CheckResult("even subalgebra", False, str(s))
    return CheckResult("even subalgebra", True, f"n <= {nmax}")


def check_gamma(nmax: int = 8) -> CheckResult:
    for s in _signatures(min(nmax, 8)):
        gen = gamma.build_generators(s)
        if not gamma.verify_anticommutation(gen):
            return CheckResult("gamma anticommutation", False, str(s))
        if gamma.faithfulness_rank(gen) != 1 << s.n:
            return CheckResult("gamma anticommutation", False, f"rank {s}")
        if s.n >= 1 and not gamma.check_omega_square(gen):
            return CheckResult("gamma anticommutation", False, f"omega {s}")
    return CheckResult("gamma anticommutation", True, f"n <= {min(nmax, 8)}, faithful")


def gn_labels(dim_max: int = 64) -> list[lorentz.GNLabel]:
    labels = []
    l0 = Fraction(0)
    while l0 <= 3:
        for d in range(1, 5):
            lab = lorentz.GNLabel(l0, l0 + d)
            if lab.dim <= dim_max:
                labels.append(lab)
        l0 += Fraction(1, 2)
    return labels


def vdw_labels(dim_max: int = 64) -> list[tuple[Fraction, Fraction]]:
    out = []
    l = Fraction(0)
    while (2 * l + 1) <= dim_max:
        ld = Fraction(0)
        while (2 * l + 1) * (2 * ld + 1) <= dim_max:
            out.append((l, ld))
            ld += Fraction(1, 2)
        l += Fraction(1, 2)
    return out


def check_gn_com1(dim_max: int = 64, tol: float = 1e-10) -> CheckResult:
    worst = 0.0
    for lab in gn_labels(dim_max):
        ab = lorentz.reconstruct_AB(lorentz.build_gn_operators(lab))
        worst = max(worst, lorentz.com1_residual(ab))
    return CheckResult(
        "rotation/boost commutators", worst <= tol, f"dim <= {dim_max}, residual {worst:.2e}"
    )


def check_vdw_com2(dim_max: int = 64, tol: float = 1e-12) -> CheckResult:
    worst = 0.0
    for l, ld in vdw_labels(dim_max):
        worst = max(worst, lorentz.com2_residual(lorentz.build_vdw_operators(l, ld)))
    return CheckResult(
        "paired su(2) commutators", worst <= tol, f"dim <= {dim_max}, residual {worst:.2e}"
    )


def check_gn_vdw(dim_max: int = 64, tol: float = 1e-12) -> CheckResult:
    import numpy as np

    for lab in gn_labels(dim_max):
        ops = lorentz.build_gn_operators(lab)
        v = lorentz.gn_to_vdw(ops)
        if lorentz.com2_residual(v) > tol:
            return CheckResult("basis conversion", False, f"{lab} su(2) relations")
        expected = sorted(
            float(m)
            for m in [-v.l + j for j in range(int(2 * v.l) + 1)]
            for _ in range(int(2 * v.ldot) + 1)
        )
        got = sorted(np.linalg.eigvals(v.x3).real)
        if max(abs(a - b) for a, b in zip(expected, got)) > 1e-8:
            return CheckResult("basis conversion", False, f"{lab} X3 spectrum")
        xs_ys = lorentz.sl25_operators(lorentz.reconstruct_AB(ops))
        x1 = (v.xplus + v.xminus) / 2
        x2 = (v.xplus - v.xminus) / 2j
        y1 = (v.yplus + v.yminus) / 2
        y2 = (v.yplus - v.yminus) / 2j
        for got_m, ref_m in zip((x1, x2, v.x3, y1, y2, v.y3), xs_ys):
            if abs(got_m - ref_m).max() > tol:
                return CheckResult("basis conversion", False, f"{lab} operator reconstruction")
    return CheckResult("basis conversion", True, f"dim <= {dim_max}")


def check_complex_cycle(_: int = 0) -> CheckResult:
    seq = [ComplexRepLabel(0)]
    for _step in range(5):
        seq.append(repsys.bw_complex_step(seq[-1]))
    expected = [
        ComplexRepLabel(0),
        ComplexRepLabel(1),
        ComplexRepLabel(1, doubled=True),
        ComplexRepLabel(2),
        ComplexRepLabel(2, doubled=True),
        ComplexRepLabel(3),
    ]
    return CheckResult("mod-2 cycle walk", seq == expected, " -> ".join(map(str, seq)))


def check_real_cycle(_: int = 0) -> CheckResult:
    start = RealRepLabel(RealRepClass.R02_DOUBLE, Fraction(0))
    states = repsys.run_real_cycle(start, 9)
    expected = [
        start,
        RealRepLabel(RealRepClass.R0, Fraction(1, 2)),
        RealRepLabel(RealRepClass.R02_DOUBLE, Fraction(1, 2)),
        RealRepLabel(RealRepClass.H6, Fraction(1)),
        RealRepLabel(RealRepClass.H46_DOUBLE, Fraction(1)),
        RealRepLabel(RealRepClass.H4, Fraction(3, 2)),
        RealRepLabel(RealRepClass.H46_DOUBLE, Fraction(3, 2)),
        RealRepLabel(RealRepClass.R2, Fraction(2)),
        RealRepLabel(RealRepClass.R02_DOUBLE, Fraction(2)),
        RealRepLabel(RealRepClass.R0, Fraction(5, 2)),
    ]
    return CheckResult("mod-8 cycle walk", states == expected, " -> ".join(map(str, states[:4])) + " ...")


def check_complex_parity(nmax: int = 12) -> CheckResult:
    for n in range(nmax - 1):
        a, b = classify_complex(n), classify_complex(n + 2)
        if b.matrix_size != 2 * a.matrix_size or a.simple != b.simple:
            return CheckResult("mod-2 periodicity", False, f"n={n}")
    return CheckResult("mod-2 periodicity", True, f"n <= {nmax}")


ALL_CHECKS: list[tuple[str, Callable[..., CheckResult]]] = [
    ("omega-square", check_omega_square),
    ("center", check_center),
    ("automorphisms", check_automorphism_signs),
    ("omega-conjugation", check_omega_conjugation),
    ("graded-tensor", check_theta_psi),
    ("table", check_table),
    ("periodicity", check_periodicity),
    ("complex-parity", check_complex_parity),
    ("even-subalgebra", check_even_subalgebra),
    ("karoubi", check_karoubi),
    ("gamma", check_gamma),
    ("gn-com1", check_gn_com1),
    ("vdw-com2", check_vdw_com2),
    ("gn-vdw", check_gn_vdw),
    ("complex-cycle", check_complex_cycle),
    ("real-cycle", check_real_cycle),
]


def run_all(nmax: int = 8, dim_max: int = 64) -> list[CheckResult]:
    results = []
    for name, fn in ALL_CHECKS:
        if name in ("gn-com1", "vdw-com2", "gn-vdw"):
            results.append(fn(dim_max))
        elif name in ("complex-cycle", "real-cycle", "table"):
            results.append(fn())
        else:
            results.append(fn(nmax))
    return results
