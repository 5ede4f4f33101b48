"""Cyclic-group representation data and their closed-form motivic invariants.

Two kinds of representation are supported: a diagonal representation of a
cyclic group of order m prime to the residue characteristic, given by its
generator weights, and a unipotent representation of a group of prime order p
equal to the characteristic, given by its Jordan block sizes.  For both, the
motivic mass (the L-weighted count of covers of the formal disk) has a closed
form, and this module evaluates it exactly along with the supporting ages,
weight functions, the block invariant D_V, the integral Jordan lift and its
tame mass, a uniformity check across characteristics, and the necessary
conditions for the quotient singularity to admit a crepant resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PoleError, ReflectionError
from .motivic import (
    INFINITY,
    L,
    ONE,
    ExtendedMotivic,
    MotivicElement,
    MotivicRational,
    euler_realize,
    l_power,
    poincare_realize,
)
from .util import is_prime


def _parse_rep_string(text: str, what: str):
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"{what} spec must look like 'n:a,b,...', got {text!r}")
    try:
        order = int(head)
        parts = tuple(int(x) for x in tail.split(","))
    except ValueError as exc:
        raise ValueError(f"bad {what} spec {text!r}: {exc}") from None
    return order, parts


@dataclass(frozen=True)
class TameCyclicRep:
    """Diagonal action of a cyclic group of order m via weights (a_1, ..., a_d).

    The generator acts with eigenvalues zeta^(a_i) for a primitive m-th root
    of unity zeta; faithfulness requires gcd(a_1, ..., a_d, m) = 1.
    """

    m: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        if self.m < 1:
            raise ValueError("group order m must be positive")
        if not self.weights:
            raise ValueError("at least one weight is required")
        if any(a < 0 or a >= self.m for a in self.weights):
            raise ValueError(f"weights must lie in [0, {self.m})")
        if math.gcd(self.m, *self.weights) != 1:
            raise ValueError("not faithful: gcd(weights, m) != 1")

    @classmethod
    def from_string(cls, text: str) -> "TameCyclicRep":
        m, weights = _parse_rep_string(text, "tame rep")
        return cls(m, weights)

    @property
    def d(self) -> int:
        return len(self.weights)

    def age(self, s: int) -> Fraction:
        """Age of the s-th power of the generator: (1/m) * sum of s*a_i mod m."""
        if not 0 <= s < self.m:
            raise ValueError(f"power s must lie in [0, {self.m})")
        return Fraction(sum((s * a) % self.m for a in self.weights), self.m)

    def mass(self) -> MotivicElement:
        """Sum of L^(age g) over the m group elements."""
        acc: dict[Fraction, int] = {}
        for s in range(self.m):
            e = self.age(s)
            acc[e] = acc.get(e, 0) + 1
        return MotivicElement(acc)

    def weight(self, s: int) -> Fraction:
        """Weight of the cover sector s: d - (1/m) * sum a_i'(s), 0 < a_i' <= m."""
        if not 1 <= s < self.m:
            raise ValueError(f"sector s must lie in [1, {self.m})")
        total = sum(((s * a - 1) % self.m) + 1 for a in self.weights)
        return self.d - Fraction(total, self.m)

    @property
    def has_reflection(self) -> bool:
        """Detects a nontrivial power fixing a hyperplane (exactly one moved index)."""
        for s in range(1, self.m):
            moved = sum(1 for a in self.weights if (s * a) % self.m != 0)
            if moved == 1:
                return True
        return False

    def euler_mass(self) -> Fraction:
        """Closed form of the Euler realization of the mass: the group order."""
        return Fraction(self.m)


@dataclass(frozen=True)
class WildCyclicRep:
    """Unipotent action of a group of prime order p with Jordan blocks (d_1, ..., d_l).

    Block sizes satisfy 1 <= d_i <= p; the representation is trivial exactly
    when all blocks have size 1.
    """

    p: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if not self.blocks:
            raise ValueError("at least one block is required")
        if any(b < 1 or b > self.p for b in self.blocks):
            raise ValueError(f"block sizes must lie in [1, {self.p}]")

    @classmethod
    def from_string(cls, text: str) -> "WildCyclicRep":
        p, blocks = _parse_rep_string(text, "wild rep")
        return cls(p, blocks)

    @property
    def d(self) -> int:
        return sum(self.blocks)

    @property
    def l(self) -> int:
        return len(self.blocks)

    @property
    def d_invariant(self) -> int:
        """D_V = sum of d_i (d_i - 1) / 2 over the blocks."""
        return sum(b * (b - 1) // 2 for b in self.blocks)

    @property
    def is_trivial(self) -> bool:
        return all(b == 1 for b in self.blocks)

    @property
    def has_reflection(self) -> bool:
        """The generator (hence every nontrivial power) fixes a hyperplane iff d - l = 1."""
        return self.d - self.l == 1

    def weight(self, j: int) -> int:
        """Weight of the cover sector with ramification jump j."""
        if not 1 <= j <= self.p - 1:
            raise ValueError(f"jump j must lie in [1, {self.p - 1}]")
        return -sum((t * j) // self.p for b in self.blocks for t in range(1, b))

    def mass(self) -> ExtendedMotivic:
        """Motivic mass; infinite exactly when D_V < p.

        For D_V >= p this is 1 + (L - 1) * (sum over s of L^(s + w(s))) divided
        by L - L^(p - D_V), in canonical reduced form; at D_V = p the L - 1
        denominator cancels and the mass is a Laurent polynomial.
        """
        if self.has_reflection:
            raise ReflectionError("mass formula requires a representation without reflections")
        dv = self.d_invariant
        if dv < self.p:
            return INFINITY
        acc: dict[Fraction, int] = {}
        for s in range(1, self.p):
            e = Fraction(s + self.weight(s))
            acc[e] = acc.get(e, 0) + 1
        sector_sum = MotivicElement(acc)
        tail = MotivicRational((L - 1) * sector_sum, L - l_power(self.p - dv))
        return ExtendedMotivic.finite(ONE + tail)

    def euler_mass(self) -> Union[Fraction, float]:
        """Closed form of the Euler realization: 1 + (p-1)/(D_V - p + 1), or inf."""
        if self.has_reflection:
            raise ReflectionError("mass formula requires a representation without reflections")
        dv = self.d_invariant
        if dv < self.p:
            return math.inf
        return 1 + Fraction(self.p - 1, dv - self.p + 1)

    def lift(self) -> "LiftedRep":
        """Jordan lift over the group ring of the cyclic group of order p.

        Each block of size d_i lifts to an upper triangular matrix with
        diagonal 1, x, ..., x^(d_i - 1); its eigenvalue exponents modulo p are
        therefore {0, 1, ..., d_i - 1}, which is all the lift data the tame
        mass needs.
        """
        return LiftedRep(self.p, tuple(tuple(range(b)) for b in self.blocks))


@dataclass(frozen=True)
class LiftedRep:
    """Eigenvalue exponents, per block, of the integral lift of a wild rep."""

    p: int
    block_weights: tuple[tuple[int, ...], ...]

    def alpha(self, s: int) -> Fraction:
        """Sum of the fractional parts {w s / p} over all lifted weights."""
        if not 1 <= s <= self.p - 1:
            raise ValueError(f"sector s must lie in [1, {self.p - 1}]")
        total = sum((w * s) % self.p for ws in self.block_weights for w in ws)
        return Fraction(total, self.p)

    def tame_mass(self) -> MotivicElement:
        """Mass of any reduction of the lift away from p: 1 + sum of L^alpha(s)."""
        acc: dict[Fraction, int] = {Fraction(0): 1}
        for s in range(1, self.p):
            e = self.alpha(s)
            acc[e] = acc.get(e, 0) + 1
        return MotivicElement(acc)


# ---------------------------------------------------------------------------
# Derived checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniformityResult:
    """Outcome of the uniformity check, with a witness for the first failure."""

    uniform: bool
    reason: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.uniform


def uniformity_check(rep: WildCyclicRep) -> UniformityResult:
    """Check that the mass is independent of the characteristic after lifting.

    Requires D_V = p, the exponent identity alpha(s) = s + w(s) for every
    sector, and equality of the wild mass with the lifted tame mass as
    canonical values.  The first violated condition is reported.
    """
    if rep.has_reflection:
        raise ReflectionError("uniformity is defined for representations without reflections")
    dv = rep.d_invariant
    if dv != rep.p:
        return UniformityResult(False, f"D_V = {dv} differs from p = {rep.p}", dv)
    lifted = rep.lift()
    for s in range(1, rep.p):
        expected = s + rep.weight(s)
        if lifted.alpha(s) != expected:
            return UniformityResult(
                False, f"alpha({s}) = {lifted.alpha(s)} differs from s + w(s) = {expected}", s
            )
    wild = rep.mass()
    tame = lifted.tame_mass()
    if wild != ExtendedMotivic.finite(MotivicRational(tame)):
        return UniformityResult(False, "wild and lifted masses differ", (wild, tame))
    return UniformityResult(True)


@dataclass(frozen=True)
class CrepantReport:
    """Necessary conditions for a crepant resolution of the quotient singularity.

    euler_char is a Fraction, math.inf for a divergent mass, or None if the
    Euler evaluation hit a pole (which does not happen for mass values).
    """

    d_v: int
    d_v_equals_p: bool
    euler_char: Union[Fraction, float, None]
    euler_is_integer: bool
    pst_is_integral_polynomial: bool
    verdict: str
    reason: str

    @property
    def admissible(self) -> bool:
        return self.verdict == "admissible"


def crepant_conditions(rep: WildCyclicRep) -> CrepantReport:
    """Evaluate the crepant-resolution obstructions for a no-reflection wild rep.

    Checks D_V = p, integrality of the Euler characteristic of the mass, and
    that the Poincare function of the mass is a polynomial in T.  Any failure
    makes the verdict "obstructed", with the failing conditions named.
    """
    if rep.has_reflection:
        raise ReflectionError("crepant conditions are stated for representations without reflections")
    dv = rep.d_invariant
    dv_ok = dv == rep.p
    failures = []
    if not dv_ok:
        failures.append(f"D_V = {dv} != p = {rep.p}")
    mass = rep.mass()
    if mass.is_infinite:
        euler: Union[Fraction, float, None] = math.inf
        euler_ok = False
        pst_ok = False
        failures.append("mass diverges, Euler characteristic is infinite")
    else:
        try:
            euler = euler_realize(mass)
        except PoleError:
            euler = None
        euler_ok = isinstance(euler, Fraction) and euler.denominator == 1
        pst_ok = poincare_realize(mass.value).is_integral_polynomial()
        if not euler_ok:
            shown = "pole" if euler is None else euler
            failures.append(f"Euler characteristic {shown} is not an integer")
        if not pst_ok:
            failures.append("Poincare function is not a polynomial in T")
    verdict = "admissible" if not failures else "obstructed"
    reason = "all necessary conditions hold" if not failures else "; ".join(failures)
    return CrepantReport(
        d_v=dv,
        d_v_equals_p=dv_ok,
        euler_char=euler,
        euler_is_integer=euler_ok,
        pst_is_integral_polynomial=pst_ok,
        verdict=verdict,
        reason=reason,
    )


def weight_from_valuation_data(
    dim: int, group_order: int, det_valuation: int, fixed_dim: int
) -> Fraction:
    """Weight of a cover from its numerical data.

    dim - det_valuation / group_order - fixed_dim, where det_valuation is the
    valuation of the determinant of a basis matrix of the equivariant module
    of the cover and fixed_dim the dimension of the fixed space downstairs.
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    if det_valuation < 0:
        raise ValueError("determinant valuation must be nonnegative")
    if not 0 <= fixed_dim <= dim:
        raise ValueError("fixed dimension must lie in [0, dim]")
    return dim - Fraction(det_valuation, group_order) - fixed_dim


def block_decompositions(p: int, max_dim: int):
    """Yield all block tuples (d_1 >= ... >= d_l), 1 <= d_i <= p, with total <= max_dim.

    Ordered by total dimension, then reverse-lexicographically; the order is
    deterministic so sweep output is reproducible.
    """

    def parts(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    for total in range(1, max_dim + 1):
        yield from parts(total, min(p, total))
