"""Exact arithmetic in Laurent polynomials and rational functions of L^(1/r).

Every value handled by this package is a finite integer-coefficient Laurent
polynomial in fractional powers of the Lefschetz class L, or a quotient of two
such polynomials.  The ramification index r of a value is the least common
multiple of the exponent denominators, so a value always lives in the Laurent
ring Z[L^(1/r), L^(-1/r)] for some finite r.

``MotivicRational`` keeps quotients in a canonical reduced form: writing both
parts as a monomial times a polynomial in u = L^(1/r), the polynomial gcd over
the rationals is divided out, the pair is scaled to integer coefficients with
joint content 1, and the denominator gets a positive leading coefficient and
lowest exponent 0 (its monomial part is pushed into the numerator).  Equality
of values is then plain structural equality.

Two realizations are provided: the virtual Poincare realization L -> T^2
(``poincare_realize``) and evaluation at L = 1 (``euler_realize``).  Geometric
series with non-decaying exponents are represented by a distinguished infinite
value instead of raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PoleError, UndefinedProduct
from .util import as_fraction, as_int


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class MotivicElement:
    """Sparse Laurent polynomial in L^(1/r) with integer coefficients.

    Invariants: no stored coefficient is zero, exponents are Fractions in
    lowest terms.  Instances are immutable values; all operations return new
    objects.  Equality is equality of term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict[Fraction, int] = {}
        if terms is not None:
            items = terms.items() if hasattr(terms, "items") else terms
            for exp, coeff in items:
                coeff = as_int(coeff)
                if coeff == 0:
                    continue
                exp = as_fraction(exp)
                acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in acc.items() if c != 0}

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Fraction, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def ramification_index(self) -> int:
        if not self._terms:
            return 1
        return math.lcm(*(e.denominator for e in self._terms))

    @property
    def min_exponent(self) -> Fraction:
        if not self._terms:
            raise ValueError("the zero element has no exponents")
        return min(self._terms)

    @property
    def max_exponent(self) -> Fraction:
        if not self._terms:
            raise ValueError("the zero element has no exponents")
        return max(self._terms)

    @property
    def constant_term(self) -> int:
        return self._terms.get(Fraction(0), 0)

    def coefficient(self, exp) -> int:
        return self._terms.get(as_fraction(exp), 0)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def is_integral_polynomial(self) -> bool:
        """True when all exponents are nonnegative integers."""
        return all(e.denominator == 1 and e >= 0 for e in self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce_element(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, 0) + c
        return MotivicElement(merged)

    __radd__ = __add__

    def __neg__(self):
        return MotivicElement({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_element(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_element(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_element(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Fraction, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return MotivicElement(acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = as_int(n)
        if n < 0:
            raise ValueError("negative powers of a general element are rational functions")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _coerce_element(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- exponent transforms ------------------------------------------------

    def shift(self, exp) -> "MotivicElement":
        """Multiply by the monomial L^exp."""
        exp = as_fraction(exp)
        return MotivicElement({e + exp: c for e, c in self._terms.items()})

    def scale_exponents(self, factor) -> "MotivicElement":
        """Substitute L^e -> L^(factor * e); factor must be nonzero."""
        factor = as_fraction(factor)
        if factor == 0:
            raise ValueError("exponent scaling by zero collapses the grading")
        return MotivicElement({e * factor: c for e, c in self._terms.items()})

    # -- serialization ------------------------------------------------------

    def to_triples(self) -> list[list[int]]:
        """Terms as [exponent numerator, exponent denominator, coefficient], descending."""
        return [
            [e.numerator, e.denominator, self._terms[e]]
            for e in sorted(self._terms, reverse=True)
        ]

    @classmethod
    def from_triples(cls, triples) -> "MotivicElement":
        return cls([(Fraction(int(n), int(d)), int(c)) for n, d, c in triples])

    @classmethod
    def constant(cls, n) -> "MotivicElement":
        return cls({Fraction(0): as_int(n)})

    def render(self, var: str = "L") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                body = str(abs(c))
            else:
                head = _render_power(var, e)
                body = head if abs(c) == 1 else f"{abs(c)}{head}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"MotivicElement({self.render()})"


def _render_power(var: str, e: Fraction) -> str:
    if e == 1:
        return var
    if e.denominator == 1:
        return f"{var}^{e.numerator}" if e > 0 else f"{var}^({e.numerator})"
    return f"{var}^({e.numerator}/{e.denominator})"


def _coerce_element(x):
    if isinstance(x, MotivicElement):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, int):
        return MotivicElement({Fraction(0): x})
    if isinstance(x, Fraction) and x.denominator == 1:
        return MotivicElement({Fraction(0): x.numerator})
    return NotImplemented


ZERO = MotivicElement()
ONE = MotivicElement({Fraction(0): 1})
L = MotivicElement({Fraction(1): 1})


def l_power(exp) -> MotivicElement:
    """The monomial L^exp for an exact rational exponent."""
    return MotivicElement({as_fraction(exp): 1})


# ---------------------------------------------------------------------------
# Polynomial helpers over Q, used only for canonical reduction
# ---------------------------------------------------------------------------

def _u_coefficients(elem: MotivicElement, r: int):
    """Split elem as L^shift * sum coeffs[k] L^(k/r) with coeffs[0] nonzero."""
    shift = elem.min_exponent
    by_degree = {}
    for e, c in elem._terms.items():
        k = (e - shift) * r
        by_degree[int(k)] = c
    top = max(by_degree)
    return shift, [by_degree.get(k, 0) for k in range(top + 1)]


def _element_from_u(coeffs, r: int, shift: Fraction) -> MotivicElement:
    return MotivicElement({shift + Fraction(k, r): c for k, c in enumerate(coeffs) if c})


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(num, den):
    """Quotient and remainder over Q; den must be nonzero."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    if len(num) < len(den):
        return [], _poly_trim(num)
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    lead_inv = 1 / den[-1]
    for k in range(len(num) - len(den), -1, -1):
        coeff = num[k + len(den) - 1] * lead_inv
        quot[k] = coeff
        if coeff:
            for j in range(len(den)):
                num[k + j] -= coeff * den[j]
    return _poly_trim(quot), _poly_trim(num)


def _poly_content(a) -> int:
    return math.gcd(*(abs(c) for c in a))


def _poly_primitive(a):
    if not a:
        return a
    content = _poly_content(a)
    return [c // content for c in a]


def _poly_pseudo_rem(a, b):
    """Pseudo-remainder over Z: eliminate top terms after scaling by lc(b)."""
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        top = r[-1]
        r = [c * lead for c in r[:-1]]
        shift = len(r) - (len(b) - 1)
        for j in range(len(b) - 1):
            r[shift + j] -= top * b[j]
        _poly_trim(r)
        if not r:
            break
    return r


def _poly_gcd(a, b):
    """Primitive gcd over Z (positive leading coefficient) via the primitive
    pseudo-remainder sequence; content is stripped at every step to keep
    coefficient growth in check."""
    a = _poly_primitive(_poly_trim([as_int(c) for c in a]))
    b = _poly_primitive(_poly_trim([as_int(c) for c in b]))
    while b:
        rem = _poly_pseudo_rem(a, b)
        a, b = b, _poly_primitive(rem)
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _normalize_pair(pn, pd):
    """Scale a numerator/denominator pair to primitive integers, den lead > 0."""
    pn = [Fraction(c) for c in pn]
    pd = [Fraction(c) for c in pd]
    scale = math.lcm(*(c.denominator for c in pn + pd))
    n = [(c * scale).numerator for c in pn]
    d = [(c * scale).numerator for c in pd]
    content = math.gcd(*(abs(c) for c in n + d))
    n = [c // content for c in n]
    d = [c // content for c in d]
    if d[-1] < 0:
        n = [-c for c in n]
        d = [-c for c in d]
    return n, d


def _reduce(num: MotivicElement, den: MotivicElement):
    if den.is_zero:
        raise ZeroDivisionError("denominator is the zero element")
    if num.is_zero:
        return ZERO, ONE
    r = math.lcm(num.ramification_index, den.ramification_index)
    sn, pn = _u_coefficients(num, r)
    sd, pd = _u_coefficients(den, r)
    g = _poly_gcd(pn, pd)
    if len(g) > 1:
        pn, rem = _poly_divmod(pn, g)
        assert not rem
        pd, rem = _poly_divmod(pd, g)
        assert not rem
    pn, pd = _normalize_pair(pn, pd)
    return _element_from_u(pn, r, sn - sd), _element_from_u(pd, r, Fraction(0))


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

class MotivicRational:
    """Quotient of two MotivicElements kept in canonical reduced form.

    Equality of values is decidable by structural comparison of the reduced
    numerator and denominator; the reduction is idempotent by construction.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=ONE):
        n = _coerce_element(num)
        d = _coerce_element(den)
        if n is NotImplemented or d is NotImplemented:
            raise TypeError("MotivicElement or integer expected")
        self._num, self._den = _reduce(n, d)

    @property
    def numerator(self) -> MotivicElement:
        return self._num

    @property
    def denominator(self) -> MotivicElement:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self._den == ONE

    def as_element(self) -> MotivicElement:
        if not self.is_polynomial:
            raise ValueError(f"{self.render()} is not a Laurent polynomial")
        return self._num

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return MotivicRational(
            self._num * other._den + other._num * self._den,
            self._den * other._den,
        )

    __radd__ = __add__

    def __neg__(self):
        return MotivicRational(-self._num, self._den)

    def __sub__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return MotivicRational(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero value")
        return MotivicRational(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        n = as_int(n)
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return MotivicRational(self._den, self._num) ** (-n)
        return MotivicRational(self._num**n, self._den**n)

    def __eq__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    # -- evaluation ---------------------------------------------------------

    def evaluate_at_one(self) -> Fraction:
        """Value at L = 1; raises PoleError for a genuine pole."""
        den = self._den.evaluate_at_one()
        if den == 0:
            raise PoleError(f"{self.render()} has a pole at L = 1")
        return Fraction(self._num.evaluate_at_one(), den)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self._num.to_triples(), "den": self._den.to_triples()}

    @classmethod
    def from_json(cls, payload) -> "MotivicRational":
        return cls(
            MotivicElement.from_triples(payload["num"]),
            MotivicElement.from_triples(payload["den"]),
        )

    def render(self, var: str = "L") -> str:
        if self._den == ONE:
            return self._num.render(var)
        return f"({self._num.render(var)})/({self._den.render(var)})"

    def __repr__(self):
        return f"MotivicRational({self.render()})"


def _coerce_rational(x):
    if isinstance(x, MotivicRational):
        return x
    elem = _coerce_element(x)
    if elem is NotImplemented:
        return NotImplemented
    return MotivicRational(elem)


# ---------------------------------------------------------------------------
# Extension by a distinguished infinite value
# ---------------------------------------------------------------------------

class ExtendedMotivic:
    """A MotivicRational or the infinite value of a divergent sum.

    Infinity absorbs addition and multiplication by nonzero finite values;
    multiplying it by zero raises UndefinedProduct.
    """

    __slots__ = ("_value",)

    def __init__(self, value):
        if value is not None and not isinstance(value, MotivicRational):
            value = MotivicRational(value)
        self._value = value

    @classmethod
    def finite(cls, x) -> "ExtendedMotivic":
        if x is None:
            raise TypeError("finite value expected")
        return cls(x)

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> MotivicRational:
        if self._value is None:
            raise ValueError("the infinite value has no finite part")
        return self._value

    def __add__(self, other):
        other = _coerce_extended(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return INFINITY
        return ExtendedMotivic(self._value + other._value)

    __radd__ = __add__

    def __mul__(self, other):
        other = _coerce_extended(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            for side in (self, other):
                if not side.is_infinite and side._value.is_zero:
                    raise UndefinedProduct("infinity times zero is undefined")
            return INFINITY
        return ExtendedMotivic(self._value * other._value)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce_extended(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return self._value == other._value

    def __hash__(self):
        return hash(self._value)

    def render(self, var: str = "L") -> str:
        return "infinity" if self.is_infinite else self._value.render(var)

    def __repr__(self):
        return f"ExtendedMotivic({self.render()})"


def _coerce_extended(x):
    if isinstance(x, ExtendedMotivic):
        return x
    rat = _coerce_rational(x)
    if rat is NotImplemented:
        return NotImplemented
    return ExtendedMotivic(rat)


INFINITY = ExtendedMotivic(None)


# ---------------------------------------------------------------------------
# Poincare functions
# ---------------------------------------------------------------------------

class PoincareFunction:
    """A canonical rational function read in the variable T^(1/r).

    Same representation as MotivicRational, distinct semantics: exponents are
    powers of T, and the ramification index r is tracked for evaluation and
    duality checks.
    """

    __slots__ = ("_fn",)

    def __init__(self, fn):
        if not isinstance(fn, MotivicRational):
            fn = MotivicRational(fn)
        self._fn = fn

    @property
    def rational(self) -> MotivicRational:
        return self._fn

    @property
    def numerator(self) -> MotivicElement:
        return self._fn.numerator

    @property
    def denominator(self) -> MotivicElement:
        return self._fn.denominator

    @property
    def ramification_index(self) -> int:
        return math.lcm(
            self._fn.numerator.ramification_index,
            self._fn.denominator.ramification_index,
        )

    def __add__(self, other):
        if isinstance(other, PoincareFunction):
            other = other._fn
        return PoincareFunction(self._fn + other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, PoincareFunction):
            other = other._fn
        return PoincareFunction(self._fn * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, PoincareFunction):
            return self._fn == other._fn
        return self._fn == other

    def __hash__(self):
        return hash(self._fn)

    def eval_at_zero(self) -> Fraction:
        """Value of the reduced function at T = 0.

        Equivalent to clearing negative exponents with the minimal power of T
        and taking the ratio of constant terms: the canonical denominator has
        lowest exponent 0, so a pole occurs exactly when the numerator still
        carries negative exponents.
        """
        num, den = self._fn.numerator, self._fn.denominator
        if num.is_zero:
            return Fraction(0)
        low = num.min_exponent
        if low > 0:
            return Fraction(0)
        if low == 0:
            return Fraction(num.constant_term, den.constant_term)
        raise PoleError(f"{self.render()} has a pole at T = 0")

    def satisfies_duality(self, d: int) -> bool:
        """True when T^(2d) * f(1/T) and f(T) agree as canonical functions."""
        d = as_int(d)
        if d < 0:
            raise ValueError("duality dimension must be nonnegative")
        num = self._fn.numerator.scale_exponents(-1).shift(2 * d)
        den = self._fn.denominator.scale_exponents(-1)
        return MotivicRational(num, den) == self._fn

    def is_integral_polynomial(self) -> bool:
        """True when the canonical form is a polynomial in T (not in T^(1/r))."""
        return self._fn.is_polynomial and self._fn.numerator.is_integral_polynomial()

    def to_json(self) -> dict:
        return self._fn.to_json()

    def render(self, var: str = "T") -> str:
        return self._fn.render(var)

    def __repr__(self):
        return f"PoincareFunction({self.render()})"


def poincare_realize(x) -> PoincareFunction:
    """Apply the ring homomorphism L^q -> T^(2q)."""
    if isinstance(x, ExtendedMotivic):
        x = x.value
    rat = _coerce_rational(x)
    if rat is NotImplemented:
        raise TypeError("finite motivic value expected")
    return PoincareFunction(
        MotivicRational(
            rat.numerator.scale_exponents(2),
            rat.denominator.scale_exponents(2),
        )
    )


def euler_realize(x):
    """Evaluate at L = 1; infinity maps to math.inf, genuine poles raise."""
    if isinstance(x, ExtendedMotivic):
        if x.is_infinite:
            return math.inf
        x = x.value
    rat = _coerce_rational(x)
    if rat is NotImplemented:
        raise TypeError("motivic value expected")
    return rat.evaluate_at_one()


# ---------------------------------------------------------------------------
# Geometric series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeometricStrand:
    """The formal sum of class_factor * L^(initial_exponent - i * step) over i >= 0.

    dimension_bound records the dimension of the class carried by each term;
    it does not affect convergence, which depends only on the step sign.
    """

    initial_exponent: Fraction
    step: Fraction
    class_factor: MotivicElement = field(default_factory=lambda: ONE)
    dimension_bound: int = 0

    def __post_init__(self):
        object.__setattr__(self, "initial_exponent", as_fraction(self.initial_exponent))
        object.__setattr__(self, "step", as_fraction(self.step))
        factor = _coerce_element(self.class_factor)
        if factor is NotImplemented:
            raise TypeError("class_factor must be a MotivicElement or integer")
        object.__setattr__(self, "class_factor", factor)

    def partial_sum(self, count: int) -> MotivicElement:
        """Sum of the first `count` terms, for series/closed-form comparisons."""
        total = ZERO
        for i in range(count):
            total = total + self.class_factor.shift(
                self.initial_exponent - i * self.step
            )
        return total


def geometric_sum(strand: GeometricStrand) -> ExtendedMotivic:
    """Closed form of the strand, or infinity when the terms do not decay."""
    if strand.class_factor.is_zero:
        return ExtendedMotivic.finite(MotivicRational(ZERO))
    if strand.step <= 0:
        return INFINITY
    num = strand.class_factor.shift(strand.initial_exponent)
    den = ONE - l_power(-strand.step)
    return ExtendedMotivic.finite(MotivicRational(num, den))
