"""Label arithmetic on the representation systems of Spin+(1,3).

Complex labels C^{a,b} (a = l0+l1-1, b = l0-l1+1) carry spinspace
dimension 2^{a+|b|}; the two-step mod-2 cycle alternately doubles a
label and undoubles it into the next spin.  Real labels pair one of the
eight mod-8 classes with a spin index l0; the eight-hour cycle advances
l0 by 1/2 on every even hour and doubles on every odd hour.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction

from .algebra import as_signature


@dataclass(frozen=True)
class ComplexRepLabel:
    """The label C^{a,b}, optionally doubled (C u C)."""

    a: int
    b: int = 0
    doubled: bool = False

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("first superscript must be non-negative")

    @property
    def dim(self) -> int:
        d = 1 << (self.a + abs(self.b))
        return 2 * d if self.doubled else d

    @property
    def spin(self) -> Fraction | None:
        return Fraction(self.a, 2) if self.b == 0 else None

    def __str__(self) -> str:
        one = f"C^{{{self.a},{self.b}}}"
        return f"{one} u {one}" if self.doubled else one


def bw_complex_step(rep: ComplexRepLabel) -> ComplexRepLabel:
    """One tick of the mod-2 cycle on the C^{a,0} ladder.

    A doubled label undoubles into the next spin (hour 1); a plain label
    doubles in place (hour 0).  The scalar label C^{0,0} starts the walk
    at the odd slot, so its tick is the hour-1 step to C^{1,0}.
    """
    if rep.b != 0:
        raise ValueError("the cycle is defined on the C^{a,0} ladder")
    if rep.doubled:
        return ComplexRepLabel(rep.a + 1)
    if rep.a == 0:
        return ComplexRepLabel(1)
    return replace(rep, doubled=True)


def complex_step_hour(rep: ComplexRepLabel) -> int:
    """Hour label of the tick leaving ``rep``: 1 when it undoubles, else 0."""
    if rep.b != 0:
        raise ValueError("the cycle is defined on the C^{a,0} ladder")
    return 1 if (rep.doubled or rep.a == 0) else 0


class RealRepClass(enum.Enum):
    R0 = "R0"
    R2 = "R2"
    H4 = "H4"
    H6 = "H6"
    C3 = "C3"
    C7 = "C7"
    R02_DOUBLE = "R02uR02"
    H46_DOUBLE = "H46uH46"

    @property
    def is_double(self) -> bool:
        return self in (RealRepClass.R02_DOUBLE, RealRepClass.H46_DOUBLE)


_CLASS_BY_TYPE = {
    0: RealRepClass.R0,
    1: RealRepClass.R02_DOUBLE,
    2: RealRepClass.R2,
    3: RealRepClass.C3,
    4: RealRepClass.H4,
    5: RealRepClass.H46_DOUBLE,
    6: RealRepClass.H6,
    7: RealRepClass.C7,
}


@dataclass(frozen=True)
class RealRepLabel:
    cls: RealRepClass
    l0: Fraction

    def __str__(self) -> str:
        v = self.cls.value
        if self.cls.is_double:
            half = v.split("u")[0]
            return f"{half}^{self.l0} u {half}^{self.l0}"
        return f"{v[0]}{v[1:]}^{self.l0}"


def classify_real_rep(sig) -> RealRepLabel:
    """Class from (p-q) mod 8 with spin index l0 = r/2, r the factor count.

    r two-generator factors cover p+q generators for even p+q and
    p+q-1 for odd (the doubled/complex series), so l0 = (p+q)/4,
    rounded down to the nearest quarter-integer step.
    """
    sig = as_signature(sig)
    cls = _CLASS_BY_TYPE[(sig.p - sig.q) % 8]
    gens = sig.n if sig.n % 2 == 0 else sig.n - 1
    return RealRepLabel(cls, Fraction(gens, 4))


#: state of the eight-hour cycle reached after the transition at each hour
_CYCLE_STATE = {
    0: RealRepClass.R0,
    1: RealRepClass.R02_DOUBLE,
    2: RealRepClass.H6,
    3: RealRepClass.H46_DOUBLE,
    4: RealRepClass.H4,
    5: RealRepClass.H46_DOUBLE,
    6: RealRepClass.R2,
    7: RealRepClass.R02_DOUBLE,
}


def bw_real_step(rep: RealRepLabel, h: int) -> RealRepLabel:
    """One tick of the mod-8 cycle at hour ``h``.

    Even hours undouble into the next class and advance the spin by 1/2;
    odd hours double in place.  The input must sit at the state reached
    by hour h-1, otherwise the hour is inconsistent with the label.
    """
    if not 0 <= h <= 7:
        raise ValueError("hour must lie in 0..7")
    expected = _CYCLE_STATE[(h - 1) % 8]
    if rep.cls is not expected:
        raise ValueError(f"hour {h} expects a {expected.value} label, got {rep.cls.value}")
    if h % 2 == 0:
        return RealRepLabel(_CYCLE_STATE[h], rep.l0 + Fraction(1, 2))
    return RealRepLabel(_CYCLE_STATE[h], rep.l0)


def run_real_cycle(start: RealRepLabel, hours: int = 8) -> list[RealRepLabel]:
    """States visited by ``hours`` consecutive ticks starting at hour 0."""
    states = [start]
    for h in range(hours):
        states.append(bw_real_step(states[-1], h % 8))
    return states


def interlocking_chain(two_s: int) -> list[ComplexRepLabel]:
    """The bottom chain C^{n,0} <-> C^{n-1,-1} <-> ... <-> C^{0,-n}, n = 2s."""
    if two_s < 0:
        raise ValueError("spin doubling 2s must be non-negative")
    return [ComplexRepLabel(two_s - j, -j) for j in range(two_s + 1)]


def chain_neighbors(rep: ComplexRepLabel) -> list[ComplexRepLabel]:
    """Interlocking neighbours: both superscripts shift by +/-1, staying
    inside the admissible wedge a >= 0 >= b."""
    out = []
    for da in (-1, 1):
        for db in (-1, 1):
            a, b = rep.a + da, rep.b + db
            if a >= 0 >= b:
                out.append(ComplexRepLabel(a, b, rep.doubled))
    return out


def is_interlocking(x: ComplexRepLabel, y: ComplexRepLabel) -> bool:
    return abs(x.a - y.a) == 1 and abs(x.b - y.b) == 1


def tensor_step(rep: ComplexRepLabel, step: tuple[int, int] = (1, 0)) -> ComplexRepLabel:
    """Tensor with a fundamental label: C^{1,0}, C^{0,-1} or C^{1,-1}.

    The superscripts add and the spinspace dimension multiplies by
    2^{da+|db|}.
    """
    if step not in ((1, 0), (0, -1), (1, -1)):
        raise ValueError("step must be one of (1,0), (0,-1), (1,-1)")
    return ComplexRepLabel(rep.a + step[0], rep.b + step[1], rep.doubled)


def real_period_step(rep: RealRepLabel) -> RealRepLabel:
    """Mod-8 period: same class, spin index l0 + 2 (signature gains 8 generators)."""
    return RealRepLabel(rep.cls, rep.l0 + 2)
