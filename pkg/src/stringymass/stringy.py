"""Stringy motifs from simple-normal-crossing resolution data.

The input is combinatorial: a list of exceptional divisors with rational
discrepancies a_i > -1, and for each subset J of divisor indices the motivic
class of the locally closed stratum (intersection of the divisors in J, minus
the others, cut down to the fiber over the chosen center).  The stringy motif
is the exact sum over subsets of the stratum class times the product of the
factors (L - 1)/(L^(a_j + 1) - 1).

Strata classes are caller-supplied Laurent polynomials in L, not computed from
geometry; this module is a formula engine.  Connected-component counts of the
closed strata may be supplied separately so that the Euler characteristic of
the dual complex can be computed by two independent routes: from the Poincare
function at T = 0, and by inclusion-exclusion over the counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import InvalidDiscrepancy, MissingPi0, NotCrepant, PoleError, TooManyDivisors
from .motivic import (
    L,
    ZERO,
    MotivicElement,
    MotivicRational,
    PoincareFunction,
    l_power,
    poincare_realize,
)
from .util import as_fraction, as_int

MAX_DIVISORS = 20


def _as_subset(key) -> frozenset:
    if isinstance(key, str):
        return frozenset([key])
    return frozenset(key)


def _as_class(value) -> MotivicElement:
    if isinstance(value, MotivicElement):
        return value
    if isinstance(value, int):
        return MotivicElement.constant(value)
    raise TypeError(f"stratum class must be a MotivicElement or integer, got {value!r}")


class SncStrataData:
    """Discrepancies and stratum classes of a simple-normal-crossing resolution.

    ``divisors`` is an id -> discrepancy list, ``strata`` maps subsets of ids
    (including the empty set) to the class of the open stratum over the chosen
    center; absent subsets contribute zero.  ``pi0`` optionally counts the
    connected components of the closed strata and must cover every nonempty
    subset whose closed stratum class is nonzero.
    """

    __slots__ = ("dimension", "divisors", "strata", "pi0")

    def __init__(self, dimension, divisors, strata, pi0=None):
        self.dimension = as_int(dimension)
        if self.dimension < 0:
            raise ValueError("dimension must be nonnegative")

        seen: dict[str, Fraction] = {}
        for div_id, disc in divisors:
            div_id = str(div_id)
            if div_id in seen:
                raise ValueError(f"duplicate divisor id {div_id!r}")
            disc = as_fraction(disc)
            if disc <= -1:
                raise InvalidDiscrepancy(
                    f"divisor {div_id!r} has discrepancy {disc} <= -1 (not log terminal)"
                )
            seen[div_id] = disc
        if len(seen) > MAX_DIVISORS:
            raise TooManyDivisors(f"at most {MAX_DIVISORS} divisors are supported")
        self.divisors = seen

        cleaned: dict[frozenset, MotivicElement] = {}
        for key, value in (strata.items() if hasattr(strata, "items") else strata):
            subset = _as_subset(key)
            if not subset <= seen.keys():
                unknown = sorted(subset - seen.keys())
                raise ValueError(f"stratum subset uses undeclared divisor ids {unknown}")
            cls = _as_class(value)
            if subset in cleaned:
                raise ValueError(f"duplicate stratum subset {sorted(subset)}")
            if not cls.is_zero:
                cleaned[subset] = cls
        self.strata = cleaned

        if pi0 is None:
            self.pi0 = None
        else:
            counts: dict[frozenset, int] = {}
            for key, value in (pi0.items() if hasattr(pi0, "items") else pi0):
                subset = _as_subset(key)
                if not subset:
                    raise ValueError("pi0 entries are indexed by nonempty subsets")
                if not subset <= seen.keys():
                    unknown = sorted(subset - seen.keys())
                    raise ValueError(f"pi0 subset uses undeclared divisor ids {unknown}")
                value = as_int(value)
                if value < 0:
                    raise ValueError("component counts must be nonnegative")
                counts[subset] = value
            for subset in closed_from_open(self):
                if subset and subset not in counts:
                    raise ValueError(
                        f"pi0 must cover subset {sorted(subset)}: its closed stratum is nonzero"
                    )
            self.pi0 = counts

    def open_class(self, subset) -> MotivicElement:
        return self.strata.get(_as_subset(subset), ZERO)

    def discrepancy(self, div_id: str) -> Fraction:
        return self.divisors[div_id]

    @property
    def is_crepant(self) -> bool:
        return all(a == 0 for a in self.divisors.values())

    # -- JSON interface -----------------------------------------------------

    @classmethod
    def from_dict(cls, payload: dict) -> "SncStrataData":
        divisors = [
            (entry["id"], Fraction(int(entry["a"][0]), int(entry["a"][1])))
            for entry in payload["divisors"]
        ]
        strata = [
            (frozenset(entry["J"]), MotivicElement.from_triples(entry["class"]))
            for entry in payload["strata"]
        ]
        pi0 = None
        if payload.get("pi0") is not None:
            pi0 = [(frozenset(entry["J"]), int(entry["count"])) for entry in payload["pi0"]]
        return cls(payload["dimension"], divisors, strata, pi0)

    @classmethod
    def from_json(cls, path) -> "SncStrataData":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def batyrev_factor(discrepancy) -> MotivicRational:
    """(L - 1) / (L^(a + 1) - 1) for a single divisor of discrepancy a > -1."""
    a = as_fraction(discrepancy)
    if a <= -1:
        raise InvalidDiscrepancy(f"discrepancy {a} <= -1 (not log terminal)")
    return MotivicRational(L - 1, l_power(a + 1) - 1)


def stringy_motif(data: SncStrataData) -> MotivicRational:
    """Sum over subsets of the open-stratum class times the divisor factors."""
    total = MotivicRational(ZERO)
    for subset in sorted(data.strata, key=lambda J: (len(J), sorted(J))):
        term = MotivicRational(data.strata[subset])
        for div_id in sorted(subset):
            term = term * batyrev_factor(data.divisors[div_id])
        total = total + term
    return total


def crepant_total_class(data: SncStrataData) -> MotivicElement:
    """Sum of all open-stratum classes; equals the stringy motif when crepant."""
    if not data.is_crepant:
        nonzero = sorted(i for i, a in data.divisors.items() if a != 0)
        raise NotCrepant(f"divisors {nonzero} have nonzero discrepancy")
    total = ZERO
    for cls in data.strata.values():
        total = total + cls
    return total


def closed_from_open(data: SncStrataData) -> dict[frozenset, MotivicElement]:
    """Classes of the closed strata: closed(J) = sum of open(J') over J' >= J.

    Inverts the alternating-sum relation expressing open strata through closed
    ones; applying that alternating sum to the output recovers the input.
    Zero entries are dropped.
    """
    closed: dict[frozenset, MotivicElement] = {}
    for subset, cls in data.strata.items():
        members = sorted(subset)
        for size in range(len(members) + 1):
            for combo in combinations(members, size):
                key = frozenset(combo)
                closed[key] = closed.get(key, ZERO) + cls
    return {key: cls for key, cls in closed.items() if not cls.is_zero}


def stringy_poincare(data: SncStrataData) -> PoincareFunction:
    """The Poincare realization of the stringy motif."""
    return poincare_realize(stringy_motif(data))


def dual_complex_euler_from_pst(data: SncStrataData) -> Fraction:
    """Euler characteristic of the dual complex, read off the Poincare function at T = 0."""
    return stringy_poincare(data).eval_at_zero()


def dual_complex_euler_direct(data: SncStrataData) -> int:
    """Euler characteristic by inclusion-exclusion over connected-component counts."""
    if data.pi0 is None:
        raise MissingPi0("connected-component counts were not supplied")
    return sum((-1) ** (len(subset) - 1) * count for subset, count in data.pi0.items())


def duality_report(data: SncStrataData) -> bool:
    """Check the d-dimensional duality of the Poincare function, d the input dimension.

    Meaningful when the resolved space is proper and the center is everything;
    that hypothesis is the caller's responsibility.
    """
    return stringy_poincare(data).satisfies_duality(data.dimension)


@dataclass(frozen=True)
class StringyResult:
    """Bundle of the invariants computed from one strata input."""

    motif: MotivicRational
    poincare: PoincareFunction
    crepant: bool
    duality_dim: Optional[int] = None
    duality_holds: Optional[bool] = None
    chi_from_pst: Optional[Fraction] = None
    chi_pole: bool = False
    chi_direct: Optional[int] = None


def stringy_result(data: SncStrataData, duality_dim: Optional[int] = None) -> StringyResult:
    """Compute the motif, its realizations, and the optional duality check."""
    motif = stringy_motif(data)
    poincare = poincare_realize(motif)
    duality_holds = None
    if duality_dim is not None:
        duality_holds = poincare.satisfies_duality(duality_dim)
    chi_pole = False
    try:
        chi: Optional[Fraction] = poincare.eval_at_zero()
    except PoleError:
        chi = None
        chi_pole = True
    chi_direct = None
    if data.pi0 is not None:
        chi_direct = dual_complex_euler_direct(data)
    return StringyResult(
        motif=motif,
        poincare=poincare,
        crepant=data.is_crepant,
        duality_dim=duality_dim,
        duality_holds=duality_holds,
        chi_from_pst=chi,
        chi_pole=chi_pole,
        chi_direct=chi_direct,
    )
