"""Finite-dimensional representation operators of Spin+(1,3).

Two operator bases are built:

* the (l0, l1)-labelled basis with ladder operators H3, H+, H- (rotation
  sector) and F3, F+, F- (boost sector) acting on vectors xi_{k,nu},
  k = l0 .. l1-1, nu = -k .. k, with coefficients

      A_k = i l0 l1 / (k (k+1)),
      C_k = (i/k) sqrt((k^2 - l0^2)(k^2 - l1^2) / (4k^2 - 1)),

  finite-dimensional exactly when l1 = l0 + p for a natural p;

* the paired su(2) ladder basis X3, X+, X- / Y3, Y+, Y- on |l,m;ldot,mdot>,
  exhibiting the local isomorphism with SU(2) x SU(2).

The conversion between the two normalizes X = (H + iF)/2, Y = (H - iF)/2,
which is the unique scaling under which both triples close into su(2)
([X1, X2] = i X3) and X3 has the real spectrum -l .. l.

All matrices are dense complex numpy arrays over fixed lexicographic
basis orders, so outputs are deterministic.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np


def as_half_integer(x) -> Fraction:
    f = Fraction(x)
    if (2 * f).denominator != 1:
        raise ValueError(f"{x!r} is not a half-integer")
    return f


@dataclass(frozen=True)
class GNLabel:
    """Representation label (l0, l1) with l1 = l0 + p, natural p >= 1."""

    l0: Fraction
    l1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l0", as_half_integer(self.l0))
        object.__setattr__(self, "l1", as_half_integer(self.l1))
        if self.l0 < 0:
            raise ValueError("l0 must be non-negative")
        step = self.l1 - self.l0
        if step.denominator != 1 or step < 1:
            raise ValueError("finite dimension requires l1 = l0 + p, natural p >= 1")

    @property
    def dim(self) -> int:
        return int(self.l1 ** 2 - self.l0 ** 2)

    def levels(self) -> list[Fraction]:
        return [self.l0 + j for j in range(int(self.l1 - self.l0))]

    def basis(self) -> list[tuple[Fraction, Fraction]]:
        """(k, nu) pairs, k ascending, nu ascending within each level."""
        out = []
        for k in self.levels():
            nu = -k
            while nu <= k:
                out.append((k, nu))
                nu += 1
        return out


def gn_coefficients(label: GNLabel, k) -> tuple[complex, complex]:
    """(A_k, C_k) for l0 <= k <= l1.

    C at the bottom level multiplies the nonexistent k-1 level and is
    defined as 0 (this also covers the 0/0 at k = 1/2);  C at k = l1
    vanishes through the k^2 - l1^2 factor, closing the ladder.
    """
    k = as_half_integer(k)
    l0, l1 = label.l0, label.l1
    if not l0 <= k <= l1:
        raise ValueError(f"k = {k} outside [{l0}, {l1}]")
    if l0 == 0:
        a = 0j
    else:
        a = 1j * float(l0 * l1) / float(k * (k + 1))
    if k == l0:
        c = 0j
    else:
        radicand = float((k * k - l0 * l0) * (k * k - l1 * l1)) / float(4 * k * k - 1)
        c = (1j / float(k)) * cmath.sqrt(radicand)
    return a, c


@dataclass(frozen=True)
class GNOperators:
    label: GNLabel
    h3: np.ndarray
    hplus: np.ndarray
    hminus: np.ndarray
    f3: np.ndarray
    fplus: np.ndarray
    fminus: np.ndarray
    basis_note: str

    @property
    def dim(self) -> int:
        return self.h3.shape[0]

    def operators(self) -> dict[str, np.ndarray]:
        return {
            "H3": self.h3,
            "H+": self.hplus,
            "H-": self.hminus,
            "F3": self.f3,
            "F+": self.fplus,
            "F-": self.fminus,
        }


def _sqrt(x: Fraction) -> float:
    return float(x) ** 0.5


def build_gn_operators(label: GNLabel) -> GNOperators:
    """Ladder matrices over the lexicographic (k, nu) basis."""
    basis = label.basis()
    index = {kv: i for i, kv in enumerate(basis)}
    dim = len(basis)
    assert dim == label.dim
    h3, hp, hm, f3, fp, fm = (np.zeros((dim, dim), dtype=complex) for _ in range(6))
    coeff = {k: gn_coefficients(label, k) for k in label.levels()}
    coeff[label.l1] = (0j, 0j)

    for (k, nu), col in index.items():
        a_k, c_k = coeff[k]
        c_up = coeff[k + 1][1]
        h3[col, col] = float(nu)
        if (k, nu + 1) in index:
            hp[index[(k, nu + 1)], col] = _sqrt((k + nu + 1) * (k - nu))
        if (k, nu - 1) in index:
            hm[index[(k, nu - 1)], col] = _sqrt((k + nu) * (k - nu + 1))

        f3[col, col] = -a_k * float(nu)
        if (k - 1, nu) in index:
            f3[index[(k - 1, nu)], col] = c_k * _sqrt(k * k - nu * nu)
        if (k + 1, nu) in index:
            f3[index[(k + 1, nu)], col] = -c_up * _sqrt((k + 1) ** 2 - nu * nu)

        if (k, nu + 1) in index:
            fp[index[(k, nu + 1)], col] = -a_k * _sqrt((k - nu) * (k + nu + 1))
        if (k - 1, nu + 1) in index:
            fp[index[(k - 1, nu + 1)], col] = c_k * _sqrt((k - nu) * (k - nu - 1))
        if (k + 1, nu + 1) in index:
            fp[index[(k + 1, nu + 1)], col] = c_up * _sqrt((k + nu + 1) * (k + nu + 2))

        if (k, nu - 1) in index:
            fm[index[(k, nu - 1)], col] = -a_k * _sqrt((k + nu) * (k - nu + 1))
        if (k - 1, nu - 1) in index:
            fm[index[(k - 1, nu - 1)], col] = -c_k * _sqrt((k + nu) * (k + nu - 1))
        if (k + 1, nu - 1) in index:
            fm[index[(k + 1, nu - 1)], col] = -c_up * _sqrt((k - nu + 1) * (k - nu + 2))

    note = f"xi_(k,nu), k = {label.l0}..{label.l1 - 1}, nu = -k..k, lexicographic"
    return GNOperators(label, h3, hp, hm, f3, fp, fm, note)


class ABOperators(NamedTuple):
    """Rotation (a1..a3) and boost (b1..b3) infinitesimal operators."""

    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    b3: np.ndarray


def reconstruct_AB(ops: GNOperators) -> ABOperators:
    """Invert H+ = iA1 - A2, H- = iA1 + A2, H3 = iA3 (same pattern for F/B)."""
    a1 = (ops.hplus + ops.hminus) / 2j
    a2 = (ops.hminus - ops.hplus) / 2
    a3 = ops.h3 / 1j
    b1 = (ops.fplus + ops.fminus) / 2j
    b2 = (ops.fminus - ops.fplus) / 2
    b3 = ops.f3 / 1j
    return ABOperators(a1, a2, a3, b1, b2, b3)


def _comm(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def com1_residual(ab: ABOperators) -> float:
    """Largest entrywise deviation over the 15 rotation/boost relations."""
    a1, a2, a3, b1, b2, b3 = ab
    deviations = [
        _comm(a1, a2) - a3,
        _comm(a2, a3) - a1,
        _comm(a3, a1) - a2,
        _comm(b1, b2) + a3,
        _comm(b2, b3) + a1,
        _comm(b3, b1) + a2,
        _comm(a1, b1),
        _comm(a2, b2),
        _comm(a3, b3),
        _comm(a1, b2) - b3,
        _comm(a1, b3) + b2,
        _comm(a2, b3) - b1,
        _comm(a2, b1) + b3,
        _comm(a3, b1) - b2,
        _comm(a3, b2) + b1,
    ]
    return max(float(np.abs(d).max()) for d in deviations)


def verify_com1(ab: ABOperators, tol: float = 1e-10) -> bool:
    return com1_residual(ab) <= tol


@dataclass(frozen=True)
class VdWOperators:
    l: Fraction
    ldot: Fraction
    x3: np.ndarray
    xplus: np.ndarray
    xminus: np.ndarray
    y3: np.ndarray
    yplus: np.ndarray
    yminus: np.ndarray
    basis_note: str

    @property
    def dim(self) -> int:
        return self.x3.shape[0]

    def operators(self) -> dict[str, np.ndarray]:
        return {
            "X3": self.x3,
            "X+": self.xplus,
            "X-": self.xminus,
            "Y3": self.y3,
            "Y+": self.yplus,
            "Y-": self.yminus,
        }


def su2_ladder(j) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(j3, j+, j-) on the basis m = -j .. j, ascending."""
    j = as_half_integer(j)
    if j < 0:
        raise ValueError("spin must be non-negative")
    size = int(2 * j) + 1
    j3 = np.zeros((size, size), dtype=complex)
    jp = np.zeros((size, size), dtype=complex)
    jm = np.zeros((size, size), dtype=complex)
    for col in range(size):
        m = -j + col
        j3[col, col] = float(m)
        if col + 1 < size:
            jp[col + 1, col] = _sqrt((j - m) * (j + m + 1))
        if col - 1 >= 0:
            jm[col - 1, col] = _sqrt((j + m) * (j - m + 1))
    return j3, jp, jm


def build_vdw_operators(l, ldot) -> VdWOperators:
    """Commuting su(2) ladder pairs on |l,m;ldot,mdot>, (m, mdot) lexicographic."""
    l = as_half_integer(l)
    ldot = as_half_integer(ldot)
    x3, xp, xm = su2_ladder(l)
    y3, yp, ym = su2_ladder(ldot)
    left = np.eye(int(2 * l) + 1, dtype=complex)
    right = np.eye(int(2 * ldot) + 1, dtype=complex)
    note = f"|l,m;ldot,mdot>, l = {l}, ldot = {ldot}, (m, mdot) lexicographic"
    return VdWOperators(
        l,
        ldot,
        np.kron(x3, right),
        np.kron(xp, right),
        np.kron(xm, right),
        np.kron(left, y3),
        np.kron(left, yp),
        np.kron(left, ym),
        note,
    )


def com2_residual(ops: VdWOperators) -> float:
    """Deviation from two commuting su(2) triples ([X1,X2] = iX3 etc.)."""
    x1 = (ops.xplus + ops.xminus) / 2
    x2 = (ops.xplus - ops.xminus) / 2j
    y1 = (ops.yplus + ops.yminus) / 2
    y2 = (ops.yplus - ops.yminus) / 2j
    xs = (x1, x2, ops.x3)
    ys = (y1, y2, ops.y3)
    deviations = []
    for triple in (xs, ys):
        for a in range(3):
            b, c = (a + 1) % 3, (a + 2) % 3
            deviations.append(_comm(triple[a], triple[b]) - 1j * triple[c])
    for xi in xs:
        for yi in ys:
            deviations.append(_comm(xi, yi))
    return max(float(np.abs(d).max()) for d in deviations)


def verify_com2(ops: VdWOperators, tol: float = 1e-12) -> bool:
    return com2_residual(ops) <= tol


def gn_to_vdw(ops: GNOperators) -> VdWOperators:
    """Convert (l0, l1) ladder operators to the paired su(2) form.

    X = (H + iF)/2 and Y = (H - iF)/2; the labels follow
    l = (l0 + l1 - 1)/2 and ldot = (l1 - l0 - 1)/2 (the conjugate-pair
    value reported non-negative).
    """
    label = ops.label
    l = (label.l0 + label.l1 - 1) / 2
    ldot = (label.l1 - label.l0 - 1) / 2
    note = ops.basis_note + " (converted)"
    return VdWOperators(
        l,
        ldot,
        (ops.h3 + 1j * ops.f3) / 2,
        (ops.hplus + 1j * ops.fplus) / 2,
        (ops.hminus + 1j * ops.fminus) / 2,
        (ops.h3 - 1j * ops.f3) / 2,
        (ops.hplus - 1j * ops.fplus) / 2,
        (ops.hminus - 1j * ops.fminus) / 2,
        note,
    )


def sl25_operators(ab: ABOperators) -> tuple[np.ndarray, ...]:
    """X_l = i(A_l + iB_l)/2 and Y_l = i(A_l - iB_l)/2, l = 1, 2, 3."""
    xs = tuple(0.5j * (a + 1j * b) for a, b in zip(ab[:3], ab[3:]))
    ys = tuple(0.5j * (a - 1j * b) for a, b in zip(ab[:3], ab[3:]))
    return xs + ys


@dataclass(frozen=True)
class Spintensor:
    """Rank (k, r) spinor tensor: k undotted and r dotted 2-valued slots."""

    k: int
    r: int
    components: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.components, dtype=complex)
        if arr.size != 1 << (self.k + self.r):
            raise ValueError(
                f"rank ({self.k},{self.r}) needs {1 << (self.k + self.r)} components, got {arr.size}"
            )
        object.__setattr__(self, "components", arr.reshape((2,) * (self.k + self.r)))

    @property
    def flat(self) -> np.ndarray:
        return self.components.reshape(-1)


def spintensor_transform(g: np.ndarray, t: Spintensor) -> Spintensor:
    """Apply g on every undotted slot and conj(g) on every dotted slot."""
    g = np.asarray(g, dtype=complex)
    if g.shape != (2, 2):
        raise ValueError("transformation must be a 2x2 matrix")
    op = np.eye(1, dtype=complex)
    for _ in range(t.k):
        op = np.kron(op, g)
    for _ in range(t.r):
        op = np.kron(op, g.conj())
    return Spintensor(t.k, t.r, op @ t.flat)
